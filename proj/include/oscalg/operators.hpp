#ifndef OSCALG_OPERATORS_HPP
#define OSCALG_OPERATORS_HPP

#include <Eigen/Core>

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "oscalg/polynomials.hpp"
#include "oscalg/recurrence.hpp"

namespace oscalg {

// Matrix realizations on the truncated Fock space span{Psi_0..Psi_{M-1}},
// Psi_n identified with the n-th standard basis vector.
enum class operator_kind {
    lowering,      // A        : Psi_n -> sqrt2 b_{n-1} Psi_{n-1}
    raising,       // Adag     : Psi_n -> sqrt2 b_n Psi_{n+1} + sqrt2 a_n Psi_n
    sym_lowering,  // As       : Psi_n -> sqrt2 b_{n-1} Psi_{n-1}
    sym_raising,   // Asdag    : Psi_n -> sqrt2 b_n Psi_{n+1}
    number,        // N        : Psi_n -> n Psi_n
    identity,      // I
    diag_a,        // D        : Psi_n -> sqrt2 a_n Psi_n
    b_down,        // BofN     : Psi_n -> b_{n-1}^2 Psi_n
    b_up,          // BofNplusI: Psi_n -> b_n^2 Psi_n
    diag_diff,     // fofN     : Psi_n -> sqrt2 (a_n - a_{n-1}) Psi_n, 0 at n=0
    position,      // Q = (A + Adag)/sqrt2, the Jacobi matrix
};

inline const char* kind_name(operator_kind k)
{
    switch (k) {
        case operator_kind::lowering:     return "A";
        case operator_kind::raising:      return "Adag";
        case operator_kind::sym_lowering: return "As";
        case operator_kind::sym_raising:  return "Asdag";
        case operator_kind::number:       return "N";
        case operator_kind::identity:     return "I";
        case operator_kind::diag_a:       return "D";
        case operator_kind::b_down:       return "BofN";
        case operator_kind::b_up:         return "BofNplusI";
        case operator_kind::diag_diff:    return "fofN";
        case operator_kind::position:     return "Q";
    }
    return "?";
}

// Dense M x M matrix plus the bookkeeping needed to mask truncation
// artifacts: bandwidth bounds the band that can hold nonzeros, and
// corrupted_tail counts trailing basis levels whose entries are unreliable.
struct truncated_operator {
    Eigen::MatrixXd mat;
    int bandwidth = 0;
    int corrupted_tail = 0;

    int dim() const { return static_cast<int>(mat.rows()); }

    // Max |entry| over the window untouched by truncation.
    double interior_max() const
    {
        const int w = dim() - corrupted_tail;
        if (w <= 0)
            fail(errc::truncation_too_small, "no interior window left");
        return mat.topLeftCorner(w, w).cwiseAbs().maxCoeff();
    }
};

inline truncated_operator build_operator(operator_kind kind, const recurrence_system& sys,
                                         int truncation)
{
    if (truncation < 4)
        fail(errc::truncation_too_small, "operator truncation must be >= 4");
    const int m = truncation;
    for (int n = 0; n < m; ++n)
        if (seq_eval(sys.b2, n) <= 0)
            fail(errc::non_positive_b2,
                 sys.label + ": b^2 not positive at n=" + std::to_string(n));

    const double fold = diag_fold(sys);
    const double fold2 = diag_fold2(sys);
    const auto sqrt2_b = [&](int n) { return std::sqrt(2.0 * to_double(seq_eval(sys.b2, n))); };
    const auto a_val = [&](int n) { return to_double(seq_eval(sys.a, n)); };

    truncated_operator op;
    op.mat = Eigen::MatrixXd::Zero(m, m);

    switch (kind) {
        case operator_kind::lowering:
        case operator_kind::sym_lowering:
            for (int n = 1; n < m; ++n) op.mat(n - 1, n) = sqrt2_b(n - 1);
            op.bandwidth = 1;
            break;
        case operator_kind::raising:
            for (int n = 0; n + 1 < m; ++n) op.mat(n + 1, n) = sqrt2_b(n);
            for (int n = 0; n < m; ++n) op.mat(n, n) = fold2 * a_val(n);
            op.bandwidth = 1;
            break;
        case operator_kind::sym_raising:
            for (int n = 0; n + 1 < m; ++n) op.mat(n + 1, n) = sqrt2_b(n);
            op.bandwidth = 1;
            break;
        case operator_kind::number:
            for (int n = 0; n < m; ++n) op.mat(n, n) = n;
            break;
        case operator_kind::identity:
            op.mat.setIdentity();
            break;
        case operator_kind::diag_a:
            for (int n = 0; n < m; ++n) op.mat(n, n) = fold2 * a_val(n);
            break;
        case operator_kind::b_down:
            for (int n = 1; n < m; ++n) op.mat(n, n) = to_double(seq_eval(sys.b2, n - 1));
            break;
        case operator_kind::b_up:
            for (int n = 0; n < m; ++n) op.mat(n, n) = to_double(seq_eval(sys.b2, n));
            break;
        case operator_kind::diag_diff:
            // n = 0 entry stays 0 (convention a_{-1} := a_0); every identity
            // using f(N) multiplies it by a lowering factor that annihilates
            // level 0, so the choice is unobservable.
            for (int n = 1; n < m; ++n) op.mat(n, n) = fold2 * (a_val(n) - a_val(n - 1));
            break;
        case operator_kind::position:
            for (int n = 1; n < m; ++n) op.mat(n - 1, n) = std::sqrt(to_double(seq_eval(sys.b2, n - 1)));
            for (int n = 0; n + 1 < m; ++n) op.mat(n + 1, n) = std::sqrt(to_double(seq_eval(sys.b2, n)));
            for (int n = 0; n < m; ++n) op.mat(n, n) = fold * a_val(n);
            op.bandwidth = 1;
            break;
    }
    op.corrupted_tail = op.bandwidth;
    return op;
}

inline void check_same_dim(const truncated_operator& x, const truncated_operator& y)
{
    if (x.dim() != y.dim())
        fail(errc::dimension_mismatch, "operator dimensions differ");
}

inline truncated_operator op_add(const truncated_operator& x, const truncated_operator& y)
{
    check_same_dim(x, y);
    return {x.mat + y.mat, std::max(x.bandwidth, y.bandwidth),
            std::max(x.corrupted_tail, y.corrupted_tail)};
}

inline truncated_operator op_sub(const truncated_operator& x, const truncated_operator& y)
{
    check_same_dim(x, y);
    return {x.mat - y.mat, std::max(x.bandwidth, y.bandwidth),
            std::max(x.corrupted_tail, y.corrupted_tail)};
}

inline truncated_operator op_scale(const truncated_operator& x, double c)
{
    return {c * x.mat, x.bandwidth, x.corrupted_tail};
}

inline truncated_operator op_mul(const truncated_operator& x, const truncated_operator& y)
{
    check_same_dim(x, y);
    return {x.mat * y.mat, std::min(x.bandwidth + y.bandwidth, x.dim() - 1),
            std::max(x.corrupted_tail, y.corrupted_tail) +
                std::min(x.bandwidth, y.bandwidth)};
}

// XY - YX. The tail grows by the smaller bandwidth: the dropped coupling of
// level M-1 to level M only reaches entries near the band edge.
inline truncated_operator commutator(const truncated_operator& x, const truncated_operator& y)
{
    check_same_dim(x, y);
    truncated_operator out;
    out.mat = x.mat * y.mat - y.mat * x.mat;
    out.bandwidth = std::min(x.bandwidth + y.bandwidth, x.dim() - 1);
    out.corrupted_tail = std::max(x.corrupted_tail, y.corrupted_tail) +
                         std::min(x.bandwidth, y.bandwidth);
    return out;
}

struct residual_entry {
    std::string name;
    double value = 0;
};

struct commutation_report {
    int truncation = 0;
    double tol = 0;
    std::vector<residual_entry> residuals;
    double max_residual = 0;
    bool pass = false;
};

// Interior-window residuals of the operator identities tied to the
// recurrence data: the three symmetric bracket relations, the bracket
// action of N on the deformed ladder pair, and the entrywise decomposition
// of [A, Adag] into its diagonal and one-step-lowering parts.
inline commutation_report verify_commutation(const recurrence_system& sys, int truncation,
                                             double tol = 1e-10)
{
    if (truncation < 16)
        fail(errc::truncation_too_small, "verify_commutation needs M >= 16");

    const auto build = [&](operator_kind k) { return build_operator(k, sys, truncation); };
    const truncated_operator a = build(operator_kind::lowering);
    const truncated_operator adag = build(operator_kind::raising);
    const truncated_operator as = build(operator_kind::sym_lowering);
    const truncated_operator asdag = build(operator_kind::sym_raising);
    const truncated_operator num = build(operator_kind::number);
    const truncated_operator diag = build(operator_kind::diag_a);
    const truncated_operator bdn = build(operator_kind::b_down);
    const truncated_operator bup = build(operator_kind::b_up);
    const truncated_operator fdiff = build(operator_kind::diag_diff);
    const truncated_operator bjump = op_scale(op_sub(bup, bdn), 2.0);

    commutation_report report;
    report.truncation = truncation;
    report.tol = tol;
    const auto record = [&](const std::string& name, const truncated_operator& resid) {
        report.residuals.push_back({name, resid.interior_max()});
    };

    record("[As,Asdag]-2(B(N+I)-B(N))", op_sub(commutator(as, asdag), bjump));
    record("[N,Asdag]-Asdag", op_sub(commutator(num, asdag), asdag));
    record("[N,As]+As", op_add(commutator(num, as), as));
    record("[N,A]+A", op_add(commutator(num, a), a));
    record("[N,Adag]-Asdag", op_sub(commutator(num, adag), asdag));
    record("[N,Adag]-(Adag-D)", op_sub(commutator(num, adag), op_sub(adag, diag)));
    record("[A,Adag]-2(B(N+I)-B(N))-A*fofN",
           op_sub(op_sub(commutator(a, adag), bjump), op_mul(a, fdiff)));

    report.max_residual = 0;
    for (const auto& r : report.residuals)
        report.max_residual = std::max(report.max_residual, r.value);
    report.pass = report.max_residual <= tol;
    return report;
}

// Checks that the tridiagonal position operator multiplies by the variable:
// (Q v)(n) = x Psi_n(x) for v = (Psi_0(x), ..., Psi_{M-1}(x)), interior rows.
inline double verify_position(const recurrence_system& sys, int truncation,
                              std::span<const double> points)
{
    if (truncation < 8)
        fail(errc::truncation_too_small, "verify_position needs M >= 8");
    const truncated_operator q = build_operator(operator_kind::position, sys, truncation);

    double worst = 0.0;
    for (const double x : points) {
        const std::vector<double> psi = eval_orthonormal(sys, x, truncation - 1);
        Eigen::VectorXd v(truncation);
        for (int n = 0; n < truncation; ++n) v[n] = psi[static_cast<size_t>(n)];
        const Eigen::VectorXd qv = q.mat * v;
        for (int n = 0; n + 1 < truncation; ++n) {
            const double expect = x * v[n];
            worst = std::max(worst, std::abs(qv[n] - expect) / (1.0 + std::abs(expect)));
        }
    }
    return worst;
}

// k-th backward finite difference of the stored diagonal sequence.
inline rational d_sequence(const recurrence_system& sys, int order, long n)
{
    if (order < 1 || n < order)
        fail(errc::index_out_of_domain,
             "difference d^(" + std::to_string(order) + ") undefined at n=" + std::to_string(n));
    rational acc = 0;
    rational binom = 1;  // C(order, j)
    for (int j = 0; j <= order; ++j) {
        const rational term = binom * seq_eval(sys.a, n - j);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
        binom = binom * rational(order - j) / rational(j + 1);
    }
    return acc;
}

// k-step lowering operator from the product formula
//   D_k Psi_n = sqrt2^{k+1} * (b_{n-1}...b_{n-k}) * d_n^{(k)} Psi_{n-k},
// exact for every column (zero for n < k).
inline truncated_operator d_operator_closed_form(const recurrence_system& sys, int order,
                                                 int truncation)
{
    if (order < 1 || 2 * order >= truncation)
        fail(errc::truncation_too_small, "need k >= 1 and k < M/2");
    const int m = truncation;
    const double fold = diag_fold(sys);
    truncated_operator op;
    op.mat = Eigen::MatrixXd::Zero(m, m);
    op.bandwidth = order;
    op.corrupted_tail = 0;
    const double lead = std::pow(std::sqrt(2.0), order + 1) * fold;
    for (int n = order; n < m; ++n) {
        double prod = 1.0;
        for (int i = 1; i <= order; ++i)
            prod *= std::sqrt(to_double(seq_eval(sys.b2, n - i)));
        op.mat(n - order, n) = lead * prod * to_double(d_sequence(sys, order, n));
    }
    return op;
}

// The same operator by nested commutators, D_k = [A, D_{k-1}] with D_0 = D.
// The lowering bracket is the one whose closed form steps down k levels.
//
// Every bracket in the nest cancels near-equal products whose magnitude
// grows with the level, so a dense floating-point evaluation loses about
// two digits per level. Conjugating by the diagonal similarity diag(sqrt
// h_n) turns A/sqrt2 into the all-rational band matrix with entries
// b_{n-1}^2, under which the whole nest is exact:
//   e_0(n) = a(n),
//   e_j(n) = b2(n-j) e_{j-1}(n) - e_{j-1}(n-1) b2(n-1),
// and undoing the conjugation gives the entry of D_k at (n-k, n) as
//   sqrt2^k * sqrt(2 a_scale2) * e_k(n) / (b_{n-1} ... b_{n-k}).
// Only that final scaling is floating point.
inline truncated_operator d_operator_iterated(const recurrence_system& sys, int order,
                                              int truncation)
{
    if (order < 1 || 2 * order >= truncation)
        fail(errc::truncation_too_small, "need k >= 1 and k < M/2");
    const int m = truncation;

    std::vector<rational> band(static_cast<size_t>(m));
    for (int n = 0; n < m; ++n) band[static_cast<size_t>(n)] = seq_eval(sys.a, n);
    for (int j = 1; j <= order; ++j) {
        std::vector<rational> next(static_cast<size_t>(m), rational(0));
        for (int n = j; n < m; ++n)
            next[static_cast<size_t>(n)] = seq_eval(sys.b2, n - j) * band[static_cast<size_t>(n)] -
                                           band[static_cast<size_t>(n) - 1] * seq_eval(sys.b2, n - 1);
        band = std::move(next);
    }

    truncated_operator out;
    out.mat = Eigen::MatrixXd::Zero(m, m);
    out.bandwidth = order;
    out.corrupted_tail = order;  // bookkeeping of the bracket nest it realizes
    const double lead = std::pow(std::sqrt(2.0), order) * diag_fold2(sys);
    for (int n = order; n < m; ++n) {
        rational prod_b2 = 1;
        for (int i = 1; i <= order; ++i) prod_b2 *= seq_eval(sys.b2, n - i);
        out.mat(n - order, n) =
            lead * to_double(band[static_cast<size_t>(n)]) / std::sqrt(to_double(prod_b2));
    }
    return out;
}

}  // namespace oscalg

#endif

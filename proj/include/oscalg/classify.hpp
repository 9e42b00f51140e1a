#ifndef OSCALG_CLASSIFY_HPP
#define OSCALG_CLASSIFY_HPP

#include <array>
#include <optional>

#include "oscalg/recurrence.hpp"

namespace oscalg {

// Polynomial degree of a sequence, or "no polynomial law".
struct degree_info {
    bool bounded = false;
    int degree = 0;  // meaningful only when bounded

    bool at_most(int d) const { return bounded && degree <= d; }
};

// Degree of the polynomial law behind a sequence. Rational descriptors are
// decided exactly: after cancellation a surviving denominator degree means
// the sequence is not polynomial at all. Tables are probed by finite
// differences; a verdict from a table only speaks for the covered indices.
inline degree_info detect_degree(const rational_sequence& seq, int probe = default_probe)
{
    if (probe < 8)
        fail(errc::invalid_parameter, "degree probe must be >= 8");

    if (seq.has_table()) {
        const int len = static_cast<int>(seq.table.size());
        if (len < 4)
            fail(errc::insufficient_table, "degree detection needs >= 4 table values");
        std::vector<rational> diffs = seq.table;
        const int max_k = std::min(probe - 2, len - 2);
        for (int k = 0; k <= max_k; ++k) {
            bool constant = true;
            for (size_t i = 1; i < diffs.size(); ++i)
                if (diffs[i] != diffs[0]) {
                    constant = false;
                    break;
                }
            if (constant) return {true, k};
            for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
            diffs.pop_back();
        }
        return {false, 0};
    }

    rpoly num = seq.num;
    rpoly den = seq.den;
    poly_simplify(num, den);
    if (poly_degree(den) > 0) return {false, 0};
    return {true, std::max(poly_degree(num), 0)};
}

// Outcome of the exact finite-dimension test: the generated algebra is
// four-dimensional iff b_n^2 is (at most) quadratic, a_n is (at most)
// linear, and the quadratic vanishes at n = -1 (the b_{-1} = 0 constraint,
// equivalently alpha_1 = alpha_0 + alpha_2).
struct classification_result {
    bool finite = false;
    degree_info p_a;
    degree_info deg_b2;
    std::optional<std::array<rational, 3>> alpha;  // b2(n) = a2 n^2 + a1 n + a0
    std::optional<std::array<rational, 2>> beta;   // a(n)  = b1 n + b0
    bool boundary_consistent = false;
};

namespace detail {

// Quadratic through n = 0, 1, 2 re-verified on further probe points; the
// verification matters only for table-backed sequences, whose detected law
// must also hold at the evaluated indices.
inline std::optional<std::array<rational, 3>> fit_quadratic(const rational_sequence& seq)
{
    const rational v0 = seq_eval(seq, 0);
    const rational v1 = seq_eval(seq, 1);
    const rational v2 = seq_eval(seq, 2);
    const rational c2 = (v2 - 2 * v1 + v0) / 2;
    const rational c1 = v1 - v0 - c2;
    std::array<rational, 3> coeff{v0, c1, c2};

    long last = 10;
    if (seq.has_table()) last = std::min<long>(last, static_cast<long>(seq.table.size()) - 1);
    for (long n = 3; n <= last; ++n) {
        const rational x(n);
        if (seq_eval(seq, n) != coeff[2] * x * x + coeff[1] * x + coeff[0])
            return std::nullopt;
    }
    return coeff;
}

inline std::optional<std::array<rational, 2>> fit_linear(const rational_sequence& seq)
{
    const rational v0 = seq_eval(seq, 0);
    const rational v1 = seq_eval(seq, 1);
    std::array<rational, 2> coeff{v0, v1 - v0};

    long last = 9;
    if (seq.has_table()) last = std::min<long>(last, static_cast<long>(seq.table.size()) - 1);
    for (long n = 2; n <= last; ++n) {
        const rational x(n);
        if (seq_eval(seq, n) != coeff[1] * x + coeff[0]) return std::nullopt;
    }
    return coeff;
}

}  // namespace detail

inline classification_result classify(const recurrence_system& sys, int probe = default_probe)
{
    classification_result res;
    res.p_a = detect_degree(sys.a, probe);
    res.deg_b2 = detect_degree(sys.b2, probe);

    if (res.deg_b2.at_most(2)) {
        res.alpha = detail::fit_quadratic(sys.b2);
        if (!res.alpha) res.deg_b2 = {false, 0};
    }
    if (res.p_a.at_most(1)) {
        res.beta = detail::fit_linear(sys.a);
        if (!res.beta) res.p_a = {false, 0};
    }
    if (res.alpha) {
        const auto& a = *res.alpha;
        res.boundary_consistent = (a[0] - a[1] + a[2] == 0);
    }
    res.finite = res.deg_b2.at_most(2) && res.p_a.at_most(1) && res.boundary_consistent;
    return res;
}

inline classification_result classify_symmetric(const recurrence_system& sys,
                                                int probe = default_probe)
{
    for (long n = 0; n <= probe; ++n)
        if (seq_eval(sys.a, n) != 0)
            fail(errc::not_symmetric,
                 sys.label + ": diagonal not identically zero (a(" + std::to_string(n) +
                     ") != 0)");
    classification_result res = classify(sys, probe);
    res.p_a = {true, 0};
    res.beta = std::array<rational, 2>{rational(0), rational(0)};
    res.finite = res.deg_b2.at_most(2) && res.boundary_consistent;
    return res;
}

}  // namespace oscalg

#endif

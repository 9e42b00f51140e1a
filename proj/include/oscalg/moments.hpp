#ifndef OSCALG_MOMENTS_HPP
#define OSCALG_MOMENTS_HPP

#include <cmath>
#include <vector>

#include "oscalg/polynomials.hpp"
#include "oscalg/recurrence.hpp"

namespace oscalg {

// Power moments mu_0..mu_K of the orthogonality measure, mu_0 = 1.
struct moment_table {
    std::vector<rational> values;

    int order() const { return static_cast<int>(values.size()) - 1; }

    void validate() const
    {
        if (values.size() < 3)
            fail(errc::insufficient_moments, "moment table needs K >= 2");
        if (values[0] != 1)
            fail(errc::invalid_parameter, "mu_0 must equal 1");
    }
};

// Triangular table of the rescaled mixed moments
//   B_{k,n} = b2(n) B_{k-1,n+1} + a(n) B_{k-1,n} + B_{k-1,n-1},
//   B_{0,n} = delta_{n,0},
// which is the rational form of the moment system: entries at column n = 0
// are the moments, entries above the diagonal (n > k) vanish.
struct moment_recursion_table {
    std::vector<std::vector<rational>> entries;  // entries[k][n], 0 <= n <= k

    const rational& at(int k, int n) const
    {
        return entries[static_cast<size_t>(k)][static_cast<size_t>(n)];
    }
};

inline moment_recursion_table moment_recursion(const recurrence_system& sys, int order)
{
    if (order < 0) fail(errc::invalid_parameter, "negative moment order");
    for (int n = 0; n <= order; ++n)
        if (seq_eval(sys.b2, n) <= 0)
            fail(errc::non_positive_b2,
                 sys.label + ": b^2 not positive at n=" + std::to_string(n));

    moment_recursion_table tab;
    tab.entries.resize(static_cast<size_t>(order) + 1);
    tab.entries[0] = {rational(1)};
    for (int k = 1; k <= order; ++k) {
        auto& row = tab.entries[static_cast<size_t>(k)];
        const auto& prev = tab.entries[static_cast<size_t>(k) - 1];
        row.assign(static_cast<size_t>(k) + 1, rational(0));
        for (int n = 0; n <= k; ++n) {
            rational acc = 0;
            if (n + 1 <= k - 1) acc += seq_eval(sys.b2, n) * prev[static_cast<size_t>(n) + 1];
            if (n <= k - 1) acc += seq_eval(sys.a, n) * prev[static_cast<size_t>(n)];
            if (n >= 1 && n - 1 <= k - 1) acc += prev[static_cast<size_t>(n) - 1];
            row[static_cast<size_t>(n)] = std::move(acc);
        }
    }
    return tab;
}

// mu_k read off at column 0 of the recursion table; exact rationals.
inline moment_table moments_from_recurrence(const recurrence_system& sys, int order)
{
    const moment_recursion_table tab = moment_recursion(sys, order);
    moment_table mom;
    mom.values.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) mom.values.push_back(tab.at(k, 0));
    return mom;
}

struct recovered_recurrence {
    std::vector<rational> a;
    std::vector<rational> b2;
};

// Progressive exact solve of the moment system: columns of the rescaled
// table are reconstructed left to right, and each column isolates first the
// next a_n and then the next b_n^2 from a single linear equation.
inline recovered_recurrence moments_to_recurrence(const moment_table& mom)
{
    mom.validate();
    const int order = mom.order();
    const int count = order / 2;

    // cols[n][j] = B_{j,n}; column n is valid for j = n .. order - n.
    std::vector<std::vector<rational>> cols(static_cast<size_t>(count) + 1);
    cols[0] = mom.values;

    recovered_recurrence out;
    out.a.reserve(static_cast<size_t>(count));
    out.b2.reserve(static_cast<size_t>(count));

    for (int n = 0; n < count; ++n) {
        const auto& col = cols[static_cast<size_t>(n)];
        const auto prev_at = [&](int j) -> rational {
            if (n == 0) return rational(0);
            return cols[static_cast<size_t>(n) - 1][static_cast<size_t>(j)];
        };
        const rational an = col[static_cast<size_t>(n) + 1] - prev_at(n);
        const rational b2n =
            col[static_cast<size_t>(n) + 2] - an * col[static_cast<size_t>(n) + 1] - prev_at(n + 1);
        if (b2n <= 0)
            fail(errc::not_positive_definite,
                 "recovered b^2 <= 0 at n=" + std::to_string(n) +
                     " (measure finitely supported or moments invalid)");
        out.a.push_back(an);
        out.b2.push_back(b2n);

        if (n + 1 < count) {
            auto& next = cols[static_cast<size_t>(n) + 1];
            next.assign(static_cast<size_t>(order) - static_cast<size_t>(n), rational(0));
            for (int j = n + 1; j <= order - n - 1; ++j)
                next[static_cast<size_t>(j)] =
                    (col[static_cast<size_t>(j) + 1] - an * col[static_cast<size_t>(j)] - prev_at(j)) /
                    b2n;
        }
    }
    return out;
}

// Max |G_{mn} - delta_{mn}| where G is the Gram matrix of the orthonormal
// polynomials against the supplied moments. Inner products of the monic
// polynomials are exact; only the final sqrt-normalization is floating point.
inline double orthonormality_gram(const recurrence_system& sys, const moment_table& mom,
                                  int degree_max)
{
    mom.validate();
    if (mom.order() < 2 * degree_max)
        fail(errc::insufficient_moments,
             "need K >= 2N moments for Gram matrix of order N");
    const polynomial_table tab = monic_polynomials(sys, degree_max);

    const auto monic_inner = [&](int m, int n) {
        const rpoly& pm = tab.monic[static_cast<size_t>(m)];
        const rpoly& pn = tab.monic[static_cast<size_t>(n)];
        rational acc = 0;
        for (size_t i = 0; i < pm.size(); ++i) {
            if (pm[i] == 0) continue;
            for (size_t j = 0; j < pn.size(); ++j)
                acc += pm[i] * pn[j] * mom.values[i + j];
        }
        return acc;
    };

    double worst = 0.0;
    for (int m = 0; m <= degree_max; ++m) {
        for (int n = m; n <= degree_max; ++n) {
            double dev;
            const rational ip = monic_inner(m, n);
            if (m == n) {
                dev = std::abs(to_double(ip / tab.squared_norms[static_cast<size_t>(n)] - 1));
            } else {
                dev = std::abs(to_double(ip)) /
                      std::sqrt(to_double(tab.squared_norms[static_cast<size_t>(m)]) *
                                to_double(tab.squared_norms[static_cast<size_t>(n)]));
            }
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

namespace detail {
// Nested sum over strictly decreasing index chains with gaps >= 2:
//   S(p, top) = sum_{k = 2(p-1)}^{top} b2(k) * S(p-1, k-2),   S(0, .) = 1.
// S(p, n-2) is the magnitude of the x^{n-2p} coefficient of the monic
// symmetric polynomial P_n.
inline rational symmetric_alpha(const recurrence_system& sys, int p, long top)
{
    if (p == 0) return rational(1);
    rational acc = 0;
    for (long k = 2L * (p - 1); k <= top; ++k)
        acc += seq_eval(sys.b2, k) * symmetric_alpha(sys, p - 1, k - 2);
    return acc;
}
}  // namespace detail

// Residuals of the symmetric-case moment identity
//   sum_{m,s} (-1)^{m+s} alpha_m alpha_s mu_{2n-2m-2s+2} / (b2(0)...b2(n-1))
//     = b2(n-1) + b2(n)
// for n = 0..N, evaluated exactly. Zero residuals certify that the moments
// and the squared off-diagonal coefficients describe the same measure.
inline std::vector<rational> symmetric_identity_check(const recurrence_system& sys,
                                                      const moment_table& mom, int level_max)
{
    mom.validate();
    for (long n = 0; n <= std::max<long>(level_max + 1, default_probe); ++n)
        if (seq_eval(sys.a, n) != 0)
            fail(errc::not_symmetric,
                 sys.label + ": diagonal not identically zero (a(" + std::to_string(n) +
                     ") != 0)");
    for (int k = 1; k <= mom.order(); k += 2)
        if (mom.values[static_cast<size_t>(k)] != 0)
            fail(errc::not_symmetric, "odd moment mu_" + std::to_string(k) + " is nonzero");
    if (mom.order() < 2 * level_max + 2)
        fail(errc::insufficient_moments, "need K >= 2N+2 moments for the identity at level N");

    std::vector<rational> residuals;
    residuals.reserve(static_cast<size_t>(level_max) + 1);
    rational hn = 1;  // b2(0)*...*b2(n-1)
    for (int n = 0; n <= level_max; ++n) {
        const int half = n / 2;
        std::vector<rational> alpha(static_cast<size_t>(half) + 1);
        for (int p = 0; p <= half; ++p)
            alpha[static_cast<size_t>(p)] = detail::symmetric_alpha(sys, p, n - 2);

        rational lhs = 0;
        for (int m = 0; m <= half; ++m) {
            for (int s = 0; s <= half; ++s) {
                const rational term = alpha[static_cast<size_t>(m)] *
                                      alpha[static_cast<size_t>(s)] *
                                      mom.values[static_cast<size_t>(2 * n - 2 * m - 2 * s + 2)];
                if ((m + s) % 2 == 0)
                    lhs += term;
                else
                    lhs -= term;
            }
        }
        lhs /= hn;

        const rational rhs =
            (n > 0 ? seq_eval(sys.b2, n - 1) : rational(0)) + seq_eval(sys.b2, n);
        residuals.push_back(lhs - rhs);
        hn *= seq_eval(sys.b2, n);
    }
    return residuals;
}

}  // namespace oscalg

#endif

#ifndef OSCALG_POLYNOMIALS_HPP
#define OSCALG_POLYNOMIALS_HPP

#include <cmath>
#include <vector>

#include "oscalg/recurrence.hpp"

namespace oscalg {

// Monic orthogonal polynomials P_0..P_N in the monomial basis, with their
// squared norms h_n = b_0^2 * ... * b_{n-1}^2. The orthonormal values are
// Psi_n(x) = P_n(x) / sqrt(h_n).
struct polynomial_table {
    int degree_max = 0;
    std::vector<rpoly> monic;            // monic[n] = coefficients of P_n
    std::vector<rational> squared_norms; // h_0..h_N, h_0 = 1
};

// P_{n+1} = (x - a_n) P_n - b_{n-1}^2 P_{n-1}, exact over the rationals.
inline polynomial_table monic_polynomials(const recurrence_system& sys, int degree_max)
{
    if (degree_max < 0)
        fail(errc::invalid_parameter, "negative polynomial degree");
    rational fold;
    if (!rational_sqrt(sys.a_scale2, &fold))
        fail(errc::invalid_parameter,
             sys.label + ": diagonal carries an irrational scale; "
                         "no exact monic table exists");
    for (int n = 0; n < degree_max; ++n)
        if (seq_eval(sys.b2, n) <= 0)
            fail(errc::non_positive_b2,
                 sys.label + ": b^2 not positive at n=" + std::to_string(n));

    polynomial_table tab;
    tab.degree_max = degree_max;
    tab.monic.reserve(static_cast<size_t>(degree_max) + 1);
    tab.squared_norms.reserve(static_cast<size_t>(degree_max) + 1);

    tab.monic.push_back({rational(1)});
    tab.squared_norms.push_back(rational(1));
    if (degree_max == 0) return tab;

    const rpoly x{rational(0), rational(1)};
    rpoly prev;                 // P_{-1} = 0
    rpoly curr{rational(1)};    // P_0
    for (int n = 0; n < degree_max; ++n) {
        const rational an = seq_eval(sys.a, n) * fold;
        const rational b2m = (n > 0) ? seq_eval(sys.b2, n - 1) : rational(0);
        rpoly next = poly_sub(poly_mul(poly_sub(x, {an}), curr), poly_scale(prev, b2m));
        prev = std::move(curr);
        curr = std::move(next);
        tab.monic.push_back(curr);
        tab.squared_norms.push_back(tab.squared_norms.back() * seq_eval(sys.b2, n));
    }
    return tab;
}

// Psi_0(x)..Psi_N(x) by the forward three-point recurrence with Psi_{-1} = 0.
inline std::vector<double> eval_orthonormal(const recurrence_system& sys, double x,
                                            int level_max)
{
    if (level_max < 0)
        fail(errc::invalid_parameter, "negative level");
    const double fold = diag_fold(sys);
    std::vector<double> psi(static_cast<size_t>(level_max) + 1);
    psi[0] = 1.0;
    double prev = 0.0;  // Psi_{-1}
    double bprev = 0.0; // b_{-1}
    for (int n = 0; n < level_max; ++n) {
        const rational b2n = seq_eval(sys.b2, n);
        if (b2n <= 0)
            fail(errc::non_positive_b2,
                 sys.label + ": b^2 not positive at n=" + std::to_string(n));
        const double bn = std::sqrt(to_double(b2n));
        const double an = to_double(seq_eval(sys.a, n)) * fold;
        const double next = ((x - an) * psi[static_cast<size_t>(n)] - bprev * prev) / bn;
        prev = psi[static_cast<size_t>(n)];
        psi[static_cast<size_t>(n) + 1] = next;
        bprev = bn;
    }
    return psi;
}

}  // namespace oscalg

#endif

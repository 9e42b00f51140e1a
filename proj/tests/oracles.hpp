#ifndef OSCALG_TESTS_ORACLES_HPP
#define OSCALG_TESTS_ORACLES_HPP

// Independent reference computations used only by tests. Expected values for
// the recurrence, moment, and polynomial paths are produced here by separate
// algorithms (Gram-Schmidt on monomials, closed-form weight integrals) so
// the library paths they check are never used to generate their own
// expectations.

#include <vector>

#include "oscalg/poly.hpp"
#include "oscalg/rational.hpp"

namespace oracle {

using oscalg::rational;
using oscalg::rpoly;

inline rational poly_inner(const rpoly& p, const rpoly& q, const std::vector<rational>& mu)
{
    rational acc = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (size_t j = 0; j < q.size(); ++j) acc += p[i] * q[j] * mu.at(i + j);
    }
    return acc;
}

struct gram_schmidt_result {
    std::vector<rpoly> monic;      // P_0..P_N
    std::vector<rational> norms2;  // <P_n, P_n>
    std::vector<rational> a;       // <x P_n, P_n> / <P_n, P_n>, n = 0..N-1
    std::vector<rational> b2;      // norms2[n+1] / norms2[n],   n = 0..N-1
};

// Monic orthogonal polynomials by Gram-Schmidt on the monomial ladder, with
// the recurrence coefficients read off from inner products.
inline gram_schmidt_result gram_schmidt_monomials(const std::vector<rational>& mu, int degree)
{
    gram_schmidt_result out;
    for (int n = 0; n <= degree; ++n) {
        rpoly p(static_cast<size_t>(n) + 1, rational(0));
        p[static_cast<size_t>(n)] = 1;
        for (int k = 0; k < n; ++k) {
            const rational coeff =
                poly_inner(p, out.monic[static_cast<size_t>(k)], mu) / out.norms2[static_cast<size_t>(k)];
            p = oscalg::poly_sub(p, oscalg::poly_scale(out.monic[static_cast<size_t>(k)], coeff));
        }
        out.monic.push_back(p);
        out.norms2.push_back(poly_inner(p, p, mu));
    }
    const rpoly x{rational(0), rational(1)};
    for (int n = 0; n < degree; ++n) {
        const rpoly& p = out.monic[static_cast<size_t>(n)];
        out.a.push_back(poly_inner(oscalg::poly_mul(x, p), p, mu) / out.norms2[static_cast<size_t>(n)]);
        out.b2.push_back(out.norms2[static_cast<size_t>(n) + 1] / out.norms2[static_cast<size_t>(n)]);
    }
    return out;
}

// Gamma-integral moments of the weight x^alpha e^{-x} on (0, inf),
// normalized: mu_k = (alpha+1)(alpha+2)...(alpha+k).
inline std::vector<rational> laguerre_moments(const rational& alpha, int order)
{
    std::vector<rational> mu{rational(1)};
    for (int k = 1; k <= order; ++k) mu.push_back(mu.back() * (alpha + k));
    return mu;
}

// Beta-integral moments of (1-x)^alpha (1+x)^beta on [-1, 1] for integer
// exponents, by expanding the weight and integrating monomials.
inline std::vector<rational> jacobi_moments(long alpha, long beta, int order)
{
    rpoly weight{rational(1)};
    for (long i = 0; i < alpha; ++i) weight = oscalg::poly_mul(weight, {rational(1), rational(-1)});
    for (long i = 0; i < beta; ++i) weight = oscalg::poly_mul(weight, {rational(1), rational(1)});

    const auto raw = [&](int k) {
        rational acc = 0;
        for (size_t j = 0; j < weight.size(); ++j) {
            const size_t pow = static_cast<size_t>(k) + j;
            if (pow % 2 == 0) acc += weight[j] * rational(2) / rational(pow + 1);
        }
        return acc;
    };

    const rational total = raw(0);
    std::vector<rational> mu;
    for (int k = 0; k <= order; ++k) mu.push_back(raw(k) / total);
    return mu;
}

// Standard-normal moments: mu_{2k} = (2k-1)!!, odd moments zero.
inline std::vector<rational> gaussian_moments(int order)
{
    std::vector<rational> mu{rational(1)};
    for (int k = 1; k <= order; ++k) {
        if (k % 2 == 1)
            mu.push_back(rational(0));
        else
            mu.push_back(mu[static_cast<size_t>(k) - 2] * rational(k - 1));
    }
    return mu;
}

}  // namespace oracle

#endif

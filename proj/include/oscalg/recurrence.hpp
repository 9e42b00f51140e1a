#ifndef OSCALG_RECURRENCE_HPP
#define OSCALG_RECURRENCE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "oscalg/sequence.hpp"

namespace oscalg {

// Canonical descriptor of an orthonormal polynomial system
//   x Psi_n = b_n Psi_{n+1} + a_n Psi_n + b_{n-1} Psi_{n-1},  b_{-1} = 0,
// held as the diagonal sequence a and the squared off-diagonal sequence b^2.
//
// The diagonal actually applied by floating-point layers is
// a(n) * sqrt(a_scale2). Every exact routine works on the stored rational
// sequence; a_scale2 is 1 for all families except the deformed-oscillator
// one, which needs an irrational constant diagonal (see beckers()).
struct recurrence_system {
    std::string label;
    rational_sequence a;
    rational_sequence b2;
    rational a_scale2{1};
};

// sqrt(a_scale2): factor applied to a(n) wherever the diagonal enters a
// floating-point computation.
inline double diag_fold(const recurrence_system& sys)
{
    return std::sqrt(to_double(sys.a_scale2));
}

// sqrt(2*a_scale2): factor for the sqrt(2)*a_n entries of the operator layer.
inline double diag_fold2(const recurrence_system& sys)
{
    return std::sqrt(2.0 * to_double(sys.a_scale2));
}

inline constexpr long default_probe = 64;

// Checks b2(n) > 0 and that no sequence denominator vanishes on [0, n_probe].
inline void validate(const recurrence_system& sys, long n_probe = default_probe)
{
    for (long n = 0; n <= n_probe; ++n) {
        seq_eval(sys.a, n);
        if (seq_eval(sys.b2, n) <= 0)
            fail(errc::non_positive_b2,
                 sys.label + ": b^2 not positive at n=" + std::to_string(n));
    }
}

namespace detail {
// c0 + c1*n
inline rpoly lin(rational c0, rational c1 = 1)
{
    return trimmed(rpoly{std::move(c0), std::move(c1)});
}
}  // namespace detail

inline recurrence_system laguerre(const rational& alpha)
{
    if (alpha <= -1)
        fail(errc::invalid_parameter, "laguerre requires alpha > -1");
    recurrence_system sys;
    sys.label = "laguerre(" + to_string(alpha) + ")";
    sys.a = rational_sequence::from_poly(detail::lin(alpha + 1, 2));
    sys.b2 = rational_sequence::from_poly(
        poly_mul(detail::lin(1), detail::lin(alpha + 1)));
    return sys;
}

inline recurrence_system jacobi(const rational& alpha, const rational& beta)
{
    if (alpha <= -1 || beta <= -1)
        fail(errc::invalid_parameter, "jacobi requires alpha, beta > -1");
    using detail::lin;
    const rational s = alpha + beta;

    rpoly a_num{beta * beta - alpha * alpha};
    rpoly a_den = poly_mul(lin(s, 2), lin(s + 2, 2));
    poly_simplify(a_num, a_den);

    rpoly b_num = poly_scale(
        poly_mul(poly_mul(lin(1), lin(alpha + 1)),
                 poly_mul(lin(beta + 1), lin(s + 1))),
        4);
    rpoly b_den = poly_mul(poly_mul(lin(s + 1, 2), poly_mul(lin(s + 2, 2), lin(s + 2, 2))),
                           lin(s + 3, 2));
    poly_simplify(b_num, b_den);

    recurrence_system sys;
    sys.label = "jacobi(" + to_string(alpha) + "," + to_string(beta) + ")";
    sys.a = rational_sequence::from_ratio(std::move(a_num), std::move(a_den));
    sys.b2 = rational_sequence::from_ratio(std::move(b_num), std::move(b_den));
    return sys;
}

inline recurrence_system hermite_prob()
{
    recurrence_system sys;
    sys.label = "hermite_prob";
    sys.a = rational_sequence::from_poly({});
    sys.b2 = rational_sequence::from_poly(detail::lin(1));
    return sys;
}

// Constant shift lambda on the raising operator of the usual oscillator:
// raising entries sqrt(n+1) plus a diagonal lambda. In recurrence data this
// is a_n = lambda/sqrt(2), b_n^2 = (n+1)/2. The irrational 1/sqrt(2) is kept
// out of the rational sequence: the stored diagonal is the constant lambda
// and a_scale2 = 1/2 carries the square of the fold.
inline recurrence_system beckers(const rational& lambda)
{
    recurrence_system sys;
    sys.label = "beckers(" + to_string(lambda) + ")";
    sys.a = rational_sequence::constant(lambda);
    sys.b2 = rational_sequence::from_poly(detail::lin(rat(1, 2), rat(1, 2)));
    sys.a_scale2 = rat(1, 2);
    return sys;
}

inline recurrence_system custom(std::string label, rational_sequence a,
                                rational_sequence b2)
{
    recurrence_system sys;
    sys.label = std::move(label);
    sys.a = std::move(a);
    sys.b2 = std::move(b2);
    return sys;
}

// (c^2 * b^2, c * a): same system under rescaling of the variable.
inline recurrence_system scaled_system(const recurrence_system& sys, const rational& c)
{
    recurrence_system out = sys;
    out.label = sys.label + "*" + to_string(c);
    out.a = seq_scaled(sys.a, c);
    out.b2 = seq_scaled(sys.b2, c * c);
    return out;
}

}  // namespace oscalg

#endif

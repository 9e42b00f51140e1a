#ifndef OSCALG_POLY_HPP
#define OSCALG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

// Dense univariate polynomial over the rationals, coefficients in ascending
// degree order. The zero polynomial is either empty or all-zero.
using rpoly = std::vector<rational>;

inline rpoly trimmed(rpoly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Degree of the zero polynomial is reported as -1.
inline int poly_degree(const rpoly& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

inline bool poly_is_zero(const rpoly& p) { return poly_degree(p) < 0; }

inline rational poly_eval(const rpoly& p, const rational& x)
{
    rational acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline rpoly poly_add(const rpoly& a, const rpoly& b)
{
    rpoly out(std::max(a.size(), b.size()), rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trimmed(std::move(out));
}

inline rpoly poly_sub(const rpoly& a, const rpoly& b)
{
    rpoly out(std::max(a.size(), b.size()), rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return trimmed(std::move(out));
}

inline rpoly poly_mul(const rpoly& a, const rpoly& b)
{
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    rpoly out(a.size() + b.size() - 1, rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trimmed(std::move(out));
}

inline rpoly poly_scale(const rpoly& a, const rational& c)
{
    if (c == 0) return {};
    rpoly out = a;
    for (auto& v : out) v *= c;
    return trimmed(std::move(out));
}

// Quotient and remainder of a / b; b must be nonzero.
inline std::pair<rpoly, rpoly> poly_divmod(rpoly a, const rpoly& b)
{
    const int db = poly_degree(b);
    if (db < 0) fail(errc::denominator_zero, "polynomial division by zero");
    a = trimmed(std::move(a));
    int da = poly_degree(a);
    if (da < db) return {rpoly{}, std::move(a)};
    rpoly q(static_cast<size_t>(da - db + 1), rational(0));
    const rational& lead = b[static_cast<size_t>(db)];
    while (da >= db) {
        const rational c = a[static_cast<size_t>(da)] / lead;
        q[static_cast<size_t>(da - db)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= c * b[static_cast<size_t>(i)];
        a = trimmed(std::move(a));
        da = poly_degree(a);
    }
    return {trimmed(std::move(q)), std::move(a)};
}

inline rpoly poly_monic(rpoly p)
{
    const int d = poly_degree(p);
    if (d < 0) return {};
    const rational lead = p[static_cast<size_t>(d)];
    for (auto& v : p) v /= lead;
    return trimmed(std::move(p));
}

// Monic gcd by the Euclidean algorithm.
inline rpoly poly_gcd(rpoly a, rpoly b)
{
    a = poly_monic(std::move(a));
    b = poly_monic(std::move(b));
    while (!poly_is_zero(b)) {
        rpoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = poly_monic(std::move(r));
    }
    return a;
}

// Cancels the common polynomial factor of num/den and normalizes the
// denominator to be monic. A zero numerator collapses to 0/1.
inline void poly_simplify(rpoly& num, rpoly& den)
{
    if (poly_is_zero(den)) fail(errc::denominator_zero, "zero denominator polynomial");
    if (poly_is_zero(num)) {
        num = {};
        den = {rational(1)};
        return;
    }
    const rpoly g = poly_gcd(num, den);
    if (poly_degree(g) > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }
    const rational lead = den[static_cast<size_t>(poly_degree(den))];
    num = poly_scale(num, 1 / lead);
    den = poly_scale(den, 1 / lead);
}

inline std::string poly_to_string(const rpoly& p, const std::string& var = "n")
{
    if (poly_is_zero(p)) return "0";
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += to_string(p[i]);
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace oscalg

#endif

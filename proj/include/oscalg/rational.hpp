#ifndef OSCALG_RATIONAL_HPP
#define OSCALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "oscalg/errors.hpp"

namespace oscalg {

// Exact scalar field for every coefficient that feeds a classification
// decision. cpp_rational keeps numerator/denominator in lowest terms with
// positive denominator.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline rational rat(long long num, long long den = 1)
{
    if (den == 0) fail(errc::denominator_zero, "rational with zero denominator");
    return rational(bigint(num), bigint(den));
}

inline double to_double(const rational& r)
{
    return r.convert_to<double>();
}

inline std::string to_string(const rational& r)
{
    const bigint num = boost::multiprecision::numerator(r);
    const bigint den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with optional leading sign on p.
inline rational parse_rational(std::string_view text)
{
    const auto bad = [&] {
        fail(errc::malformed_spec, "bad rational literal '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) bad();
            return rational(bigint(std::string(text)));
        }
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) bad();
        const bigint d{std::string(den)};
        if (d == 0) fail(errc::denominator_zero, "rational literal with zero denominator");
        return rational(bigint(std::string(num)), d);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return rational(0);  // unreachable
}

// If r = (p/q)^2 for some rational p/q >= 0, reports p/q.
inline bool rational_sqrt(const rational& r, rational* root)
{
    if (r < 0) return false;
    const bigint num = boost::multiprecision::numerator(r);
    const bigint den = boost::multiprecision::denominator(r);
    const bigint sn = boost::multiprecision::sqrt(num);
    const bigint sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (root) *root = rational(sn, sd);
    return true;
}

}  // namespace oscalg

#endif

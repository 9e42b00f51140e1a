#ifndef OSCALG_SEQUENCE_HPP
#define OSCALG_SEQUENCE_HPP

#include <utility>
#include <vector>

#include "oscalg/poly.hpp"
#include "oscalg/rational.hpp"

namespace oscalg {

// Exact sequence n -> p(n)/q(n), optionally overridden by an explicit table
// for the leading indices. Table values win wherever they are present.
struct rational_sequence {
    rpoly num{};                   // numerator polynomial in n, ascending degree
    rpoly den{rational(1)};        // denominator polynomial, never identically zero
    std::vector<rational> table{}; // explicit values for n = 0,1,...; empty = none

    bool has_table() const { return !table.empty(); }

    static rational_sequence from_poly(rpoly p)
    {
        rational_sequence s;
        s.num = trimmed(std::move(p));
        return s;
    }

    static rational_sequence from_ratio(rpoly p, rpoly q)
    {
        if (poly_is_zero(q))
            fail(errc::invalid_parameter, "sequence denominator is identically zero");
        rational_sequence s;
        s.num = trimmed(std::move(p));
        s.den = trimmed(std::move(q));
        return s;
    }

    static rational_sequence constant(rational c)
    {
        return from_poly({std::move(c)});
    }

    static rational_sequence from_table(std::vector<rational> values)
    {
        rational_sequence s;
        s.table = std::move(values);
        return s;
    }
};

// Evaluates the sequence at n >= -1. The table covers n = 0.. only; the
// polynomial descriptor answers everything else.
inline rational seq_eval(const rational_sequence& seq, long n)
{
    if (n >= 0 && static_cast<size_t>(n) < seq.table.size())
        return seq.table[static_cast<size_t>(n)];
    const rational x(n);
    const rational d = poly_eval(seq.den, x);
    if (d == 0)
        fail(errc::denominator_zero,
             "sequence denominator vanishes at n=" + std::to_string(n));
    return poly_eval(seq.num, x) / d;
}

// The same sequence with every value multiplied by c.
inline rational_sequence seq_scaled(const rational_sequence& seq, const rational& c)
{
    rational_sequence out = seq;
    out.num = poly_scale(out.num, c);
    for (auto& v : out.table) v *= c;
    return out;
}

}  // namespace oscalg

#endif

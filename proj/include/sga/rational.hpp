// Exact rational scalar for the certified arithmetic lanes. Backed by
// Boost.Multiprecision's cpp_rational (header-only, arbitrary precision),
// so blade expansions, operator brackets and linear solves never overflow.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sga/multivector.hpp"

namespace sga {

using Rational = boost::multiprecision::cpp_rational;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational from_int(long long v) { return Rational(v); }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

using MvQ = Multivector<Rational>;

inline MvD to_double_mv(const MvQ& q) {
    MvD r(q.dim());
    for (unsigned m = 0; m < q.size(); ++m)
        r[m] = ScalarTraits<Rational>::to_double(q[m]);
    return r;
}

}  // namespace sga

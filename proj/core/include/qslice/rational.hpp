#ifndef QSLICE_RATIONAL_HPP
#define QSLICE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qslice {

// Exact scalar of the symbolic layer. Conversion to double is provided,
// never the reverse: symbolic identities are asserted as literal zero.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "3", "-3/4" and exact decimals like "1.25" (= 5/4).
Rational parse_rational(std::string_view text);

}  // namespace qslice

#endif

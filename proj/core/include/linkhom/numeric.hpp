#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linkhom {

// All geometry and group arithmetic is exact: arbitrary-precision integers
// for exponents, rationals for coordinates.  No floating point appears
// anywhere in the library.  Expression templates are off so the types
// behave like ordinary value types in generic code.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int rat_floor(const Rat& q) {
  Int n = numerator(q);
  Int d = denominator(q);
  Int quo = n / d;  // truncates toward zero
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline bool is_even(const Int& n) { return (n & 1) == 0; }
inline bool is_odd(const Int& n) { return (n & 1) != 0; }

// Sign of (-1)^n.
inline int parity_sign(const Int& n) { return is_even(n) ? 1 : -1; }

}  // namespace linkhom

#pragma once

// Exact scalar types used throughout: arbitrary-precision integers and
// rationals over a GMP backend.  Expression templates are disabled so that
// `auto` and generic code see plain value semantics.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>

namespace stratalab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Number of bits in |x|; 0 for x == 0.
inline std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

/// Crude size measure of a rational, used for pivot selection.
inline std::size_t bit_size(const Rational& q) {
  return std::max(bit_length(numerator(q)), bit_length(denominator(q)));
}

}  // namespace stratalab

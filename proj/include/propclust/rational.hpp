#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace propclust {

/// Exact rational used for edge weights, the gamma scaling factor and budgets.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "3/2", "-1/4" or a finite decimal such as "1.5" into an exact rational.
/// Throws Error on malformed input.
Rational parse_rational(std::string_view text);

/// "3" for integers, "3/2" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace propclust

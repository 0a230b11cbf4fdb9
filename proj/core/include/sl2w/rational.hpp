// Exact rational scalars. All coefficient arithmetic in the library is exact;
// there is no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2w {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator; canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "num/den" or a bare integer "num".
Rational parse_rational(std::string_view text);

// Serializes as "num/den", denominator always present ("0/1", "3/1", "-1/2").
std::string rational_string(const Rational& q);

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace sl2w

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace inflatable {

using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Exact fraction, always normalized to lowest terms with a positive
// denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

// "p/q" with q > 0. Integers are written with an explicit "/1".
std::string to_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws ParseError on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

// Machine-word binomial; throws ResourceError on overflow.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace inflatable

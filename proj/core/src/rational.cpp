#include "inflatable/rational.hpp"

#include <limits>

#include "inflatable/error.hpp"

namespace inflatable {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  BigInt num;
  BigInt den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(trim(text.substr(0, slash)), num) &&
                      parse_integer(trim(text.substr(slash + 1)), den);
  if (!ok) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt value = binomial(n, k);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("binomial C(" + std::to_string(n) + "," +
                        std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace inflatable

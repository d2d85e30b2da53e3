#include "inflatable/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "inflatable/error.hpp"

namespace inflatable {

namespace {

const Permutation& pattern12() {
  static const Permutation p{1, 2};
  return p;
}

bool is_monotone_pattern(Pattern3 p) {
  return p == Pattern3::p123 || p == Pattern3::p321;
}

// Checked at n itself; all three conditions are polynomial in n, hence
// periodic modulo 144.
bool satisfies_divisibility(std::uint64_t n) {
  const std::uint64_t r = n % kResidueModulus;
  const std::uint64_t a = r, b = (r + kResidueModulus - 1) % kResidueModulus;
  const std::uint64_t four = (4 * r + 2 * kResidueModulus - 5) % kResidueModulus;
  const std::uint64_t two = (2 * r + 2 * kResidueModulus - 7) % kResidueModulus;
  bool c144 = (a * b % kResidueModulus) * four % kResidueModulus == 0;
  bool c72 = (a * b % 72) * two % 72 == 0;
  bool even_pairs = (a * b) % 4 == 0;
  return c144 && c72 && even_pairs;
}

}  // namespace

std::map<Permutation, Rational> target_densities_3(std::size_t n) {
  if (n < 3) {
    throw PreconditionError("3-inflatability targets need n >= 3, got " +
                            std::to_string(n));
  }
  const BigInt nn(n);
  Rational monotone(2 * nn - 7, 12 * (nn - 2));
  Rational other(4 * nn - 5, 24 * (nn - 2));
  std::map<Permutation, Rational> targets;
  targets.emplace(pattern12(), Rational(BigInt(1), BigInt(2)));
  for (std::size_t i = 0; i < 6; ++i) {
    targets.emplace(length3_patterns()[i],
                    is_monotone_pattern(static_cast<Pattern3>(i)) ? monotone : other);
  }
  return targets;
}

std::optional<PatternCounts3> target_counts_3(std::size_t n) {
  const auto targets = target_densities_3(n);
  const BigInt triples = binomial(n, 3);
  const BigInt pairs = binomial(n, 2);

  auto scaled = [](const Rational& density, const BigInt& total)
      -> std::optional<std::uint64_t> {
    Rational value = density * Rational(total);
    if (boost::multiprecision::denominator(value) != 1) return std::nullopt;
    return static_cast<std::uint64_t>(boost::multiprecision::numerator(value));
  };

  PatternCounts3 out;
  for (std::size_t i = 0; i < 6; ++i) {
    auto c = scaled(targets.at(length3_patterns()[i]), triples);
    if (!c) return std::nullopt;
    out.counts[i] = *c;
  }
  auto half = scaled(targets.at(pattern12()), pairs);
  if (!half) return std::nullopt;
  out.inv12 = *half;
  out.inv21 = static_cast<std::uint64_t>(pairs) - *half;
  return out;
}

bool is_2_inflatable(const Permutation& tau) {
  if (tau.size() == 1) return true;
  return density(pattern12(), tau) == Rational(BigInt(1), BigInt(2));
}

InflatabilityReport check_3_inflatable(const Permutation& tau) {
  InflatabilityReport report;
  const std::size_t n = tau.size();
  report.length = n;
  report.admissible_length = is_admissible_length(n);
  if (n == 1) {
    report.verdict = true;
    return report;
  }
  if (n == 2) {
    std::uint64_t c12 = tau[0] < tau[1] ? 1 : 0;
    report.required.emplace(pattern12(), Rational(BigInt(1), BigInt(2)));
    report.observed.emplace(pattern12(), Rational(c12));
    report.observed_counts.emplace(pattern12(), c12);
    report.verdict = false;
    return report;
  }

  report.required = target_densities_3(n);
  const PatternCounts3 counts = count_length3_all(tau);
  const BigInt triples = binomial(n, 3);
  const BigInt pairs = binomial(n, 2);
  report.observed_counts.emplace(pattern12(), counts.inv12);
  report.observed.emplace(pattern12(), Rational(BigInt(counts.inv12), pairs));
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& p = length3_patterns()[i];
    report.observed_counts.emplace(p, counts.counts[i]);
    report.observed.emplace(p, Rational(BigInt(counts.counts[i]), triples));
  }
  report.verdict = report.observed == report.required;
  return report;
}

std::vector<std::uint32_t> admissible_residues(std::uint32_t modulus) {
  if (modulus < 1) throw PreconditionError("modulus must be >= 1");
  const std::uint64_t period = std::lcm<std::uint64_t>(modulus, kResidueModulus);
  std::vector<bool> ok(modulus, true);
  for (std::uint64_t n = 0; n < period; ++n) {
    if (!satisfies_divisibility(n)) ok[n % modulus] = false;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < modulus; ++r) {
    if (ok[r]) out.push_back(r);
  }
  return out;
}

bool is_admissible_length(std::uint64_t n) { return satisfies_divisibility(n); }

ResidueTable residue_multiplication_table() {
  ResidueTable table;
  table.residues = admissible_residues(kResidueModulus);
  for (auto r : table.residues) {
    std::vector<std::uint32_t> row;
    for (auto s : table.residues) row.push_back(r * s % kResidueModulus);
    table.products.push_back(std::move(row));
  }
  return table;
}

Permutation compose_inflatables(const Permutation& tau1,
                                const Permutation& tau2) {
  if (!check_3_inflatable(tau1).verdict) {
    throw PreconditionError("first argument " + to_string(tau1) +
                            " is not 3-inflatable");
  }
  if (!check_3_inflatable(tau2).verdict) {
    throw PreconditionError("second argument " + to_string(tau2) +
                            " is not 3-inflatable");
  }
  return inflate(tau1, tau2);
}

}  // namespace inflatable

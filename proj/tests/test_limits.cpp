#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inflatable/counting.hpp"
#include "inflatable/error.hpp"
#include "inflatable/limits.hpp"
#include "oracles.hpp"

using namespace inflatable;
using inflatable::testing::Rng;

namespace {

const Permutation kLength9 = parse_permutation("472951836");
Rational q(long p, long r) { return Rational(BigInt(p), BigInt(r)); }

}  // namespace

TEST_CASE("uniform profile") {
  const auto p2 = uniform_profile(2);
  CHECK(p2.at(Permutation{1}) == 1);
  CHECK(p2.at(Permutation{1, 2}) == q(1, 2));
  CHECK(p2.at(Permutation{2, 1}) == q(1, 2));
  CHECK(p2.entries().size() == 3);
  const auto p3 = uniform_profile(3);
  for (const auto& p : length3_patterns()) CHECK(p3.at(p) == q(1, 6));
  CHECK(p3.max_length() == 3);
  CHECK_THROWS_AS(uniform_profile(0), PreconditionError);
  CHECK_THROWS_AS(uniform_profile(7), PreconditionError);
  CHECK_THROWS_AS(p2.at(Permutation{1, 2, 3}), PreconditionError);
}

TEST_CASE("profile validation") {
  using Map = std::map<Permutation, Rational>;
  CHECK_NOTHROW(DensityProfile(Map{{Permutation{1, 2}, q(1, 3)}, {Permutation{2, 1}, q(2, 3)}}));
  CHECK_THROWS_AS(DensityProfile(Map{{Permutation{1, 2}, q(1, 2)}}), PreconditionError);
  CHECK_THROWS_AS(DensityProfile(Map{{Permutation{1, 2}, q(1, 2)}, {Permutation{2, 1}, q(1, 3)}}),
                  PreconditionError);
  CHECK_THROWS_AS(DensityProfile(Map{{Permutation{1}, q(1, 2)}}), PreconditionError);
  CHECK_THROWS_AS(DensityProfile(Map{{Permutation{1, 2}, q(3, 2)}, {Permutation{2, 1}, q(-1, 2)}}),
                  PreconditionError);
}

TEST_CASE("worked example for the length-9 permutation") {
  for (const auto& p : length3_patterns()) {
    const bool monotone = p == Permutation{1, 2, 3} || p == Permutation{3, 2, 1};
    CHECK(limit_density_uniform(p, kLength9) == (monotone ? q(23, 162) : q(29, 162)));
  }
  CHECK(limit_density_inflation(Permutation{1, 3, 2}, kLength9, uniform_profile(3)) ==
        q(29, 162));
}

TEST_CASE("pattern 12 against the limit object oracle") {
  // Any profile with t(12) = s: the limit is (n-1)/n t(12, tau) + s/n.
  using Map = std::map<Permutation, Rational>;
  const Permutation tau{1, 3, 2};
  for (const Rational& s : {q(1, 2), q(1, 5), Rational(1)}) {
    DensityProfile profile(Map{{Permutation{1, 2}, s}, {Permutation{2, 1}, 1 - s}});
    const Rational got = limit_density_inflation(Permutation{1, 2}, tau, profile);
    const Rational oracle = testing::limit_density_oracle(
        Permutation{1, 2}, tau, [&](const Permutation& a) { return profile.at(a); });
    CHECK(got == oracle);
    CHECK(got == q(2, 3) * density(Permutation{1, 2}, tau) + s / 3);
  }
  CHECK(limit_density_uniform(Permutation{1, 2}, tau) == q(11, 18));
}

TEST_CASE("theorem matches the limit object oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto tau = testing::random_perm(rng, testing::random_size(rng, 1, 5));
    const auto pi = testing::random_perm(rng, testing::random_size(rng, 1, 4));
    CHECK(limit_density_uniform(pi, tau) ==
          testing::limit_density_oracle(pi, tau, testing::uniform_weight));
  }
  // A non-uniform profile: the limit of the identity sequence.
  std::map<Permutation, Rational> identity_limit;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& p : testing::all_perms(k)) {
      identity_limit.emplace(p, p == Permutation::identity(k) ? Rational(1) : Rational(0));
    }
  }
  const DensityProfile profile(identity_limit);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tau = testing::random_perm(rng, testing::random_size(rng, 1, 6));
    const auto pi = testing::random_perm(rng, testing::random_size(rng, 1, 3));
    CHECK(limit_density_inflation(pi, tau, profile) ==
          testing::limit_density_oracle(pi, tau,
                                        [&](const Permutation& a) { return profile.at(a); }));
  }
}

TEST_CASE("singleton tau reproduces the profile") {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (const auto& pi : testing::all_perms(k)) {
      CHECK(limit_density_uniform(pi, Permutation{1}) == Rational(BigInt(1), factorial(k)));
    }
  }
  using Map = std::map<Permutation, Rational>;
  DensityProfile skewed(Map{{Permutation{1, 2}, q(1, 7)}, {Permutation{2, 1}, q(6, 7)}});
  CHECK(limit_density_inflation(Permutation{2, 1}, Permutation{1}, skewed) == q(6, 7));
}

TEST_CASE("corollary agrees with the theorem under the uniform profile") {
  Rng rng(32);
  const auto profile = uniform_profile(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto tau = testing::random_perm(rng, testing::random_size(rng, 1, 10));
    const auto pi = testing::random_perm(rng, testing::random_size(rng, 1, 4));
    CHECK(limit_density_uniform(pi, tau) == limit_density_inflation(pi, tau, profile));
  }
}

TEST_CASE("limit densities of each length sum to one") {
  Rng rng(33);
  for (std::size_t k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto tau = testing::random_perm(rng, testing::random_size(rng, 1, 9));
      Rational sum = 0;
      for (const auto& pi : testing::all_perms(k)) sum += limit_density_uniform(pi, tau);
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("linear forms in a(n), b(n), c(n)") {
  Rng rng(34);
  const Permutation p12{1, 2}, p21{2, 1};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::random_size(rng, 3, 12);
    const auto tau = testing::random_perm(rng, n);
    const auto [a, b, c] = abc_coefficients(n);
    const Rational up = density(p12, tau);
    const Rational down = density(p21, tau);
    auto lhs = [&](const char* p) { return limit_density_uniform(parse_permutation(p), tau); };
    auto t = [&](const char* p) { return density(parse_permutation(p), tau); };
    CHECK(lhs("132") == a * t("132") + b * up + c);
    CHECK(lhs("213") == a * t("213") + b * up + c);
    CHECK(lhs("312") == a * t("312") + b * down + c);
    CHECK(lhs("231") == a * t("231") + b * down + c);
    CHECK(lhs("123") == a * t("123") + 2 * b * up + c);
    CHECK(lhs("321") == a * t("321") + 2 * b * down + c);
  }
}

TEST_CASE("abc coefficients") {
  const auto nine = abc_coefficients(9);
  CHECK(nine.a == q(504, 729));
  CHECK(nine.b == q(54, 729));
  CHECK(nine.c == q(1, 486));
  CHECK(nine.a * q(17, 84) + nine.b * q(1, 2) + nine.c == q(29, 162));
  CHECK(abc_coefficients(3).a == q(2, 9));
  for (std::size_t n = 3; n < 40; ++n) {
    CHECK(abc_coefficients(n).c == Rational(BigInt(1), BigInt(6 * n * n)));
  }
  CHECK_THROWS_AS(abc_coefficients(2), PreconditionError);
}

TEST_CASE("rotation compatibility") {
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tau = testing::random_perm(rng, testing::random_size(rng, 1, 12));
    for (const auto& pi : length3_patterns()) {
      CHECK(limit_density_uniform(pi, tau) == limit_density_uniform(rotate(pi), rotate(tau)));
    }
  }
}

TEST_CASE("pattern length cap and long patterns") {
  CHECK_THROWS_AS(limit_density_uniform(Permutation::identity(7), kLength9), PreconditionError);
  // Patterns longer than tau still have a limit: blocks absorb the excess.
  CHECK(limit_density_uniform(Permutation::identity(6), Permutation{1, 2}) ==
        testing::limit_density_oracle(Permutation::identity(6), Permutation{1, 2},
                                      testing::uniform_weight));
  using Map = std::map<Permutation, Rational>;
  DensityProfile only2(Map{{Permutation{1, 2}, q(1, 2)}, {Permutation{2, 1}, q(1, 2)}});
  CHECK_THROWS_AS(limit_density_inflation(Permutation{1, 2, 3}, Permutation{1}, only2),
                  PreconditionError);
}

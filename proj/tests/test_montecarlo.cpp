#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "inflatable/error.hpp"
#include "inflatable/limits.hpp"
#include "inflatable/montecarlo.hpp"

using namespace inflatable;

namespace {

const Permutation kLength9 = parse_permutation("472951836");

double as_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

TEST_CASE("estimates are reproducible and thread-independent") {
  MonteCarloConfig config;
  config.j = 200;
  config.samples = 12;
  config.subset_samples = 500;
  config.seed = 99;
  const auto a = estimate_limit_density(kLength9, Permutation{1, 3, 2}, config);
  const auto b = estimate_limit_density(kLength9, Permutation{1, 3, 2}, config);
  config.threads = 4;
  const auto c = estimate_limit_density(kLength9, Permutation{1, 3, 2}, config);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(a.samples == 12);
  CHECK(a.j == 200);
  CHECK(a.seed == 99);
  config.seed = 100;
  CHECK(estimate_limit_density(kLength9, Permutation{1, 3, 2}, config).mean != a.mean);
}

TEST_CASE("estimate invariants") {
  MonteCarloConfig config;
  config.j = 50;
  config.samples = 5;
  config.seed = 1;
  const auto exact = estimate_limit_density(kLength9, Permutation{1, 2, 3}, config);
  CHECK(exact.mean >= 0.0);
  CHECK(exact.mean <= 1.0);
  CHECK(exact.std_error >= 0.0);
  config.samples = 1;
  CHECK(estimate_limit_density(kLength9, Permutation{1}, config).mean == 1.0);
}

TEST_CASE("argument errors") {
  MonteCarloConfig config;
  config.j = 2;
  CHECK_THROWS_AS(estimate_limit_density(kLength9, Permutation{1, 2, 3}, config),
                  PreconditionError);
  config.j = 1000;
  config.subset_samples = 0;
  CHECK_THROWS_AS(estimate_limit_density(kLength9, Permutation{1, 2, 3}, config), ResourceError);
  config.subset_samples = 10;
  config.samples = 0;
  CHECK_THROWS_AS(estimate_limit_density(kLength9, Permutation{1, 2, 3}, config),
                  PreconditionError);
  config.samples = 1;
  CHECK_THROWS_AS(estimate_limit_density(kLength9, Permutation::identity(5), config),
                  PreconditionError);
  CHECK(max_exact_length(3) == 500);
}

TEST_CASE("trivial tau is quasirandom") {
  MonteCarloConfig config;
  config.j = 1000;
  config.samples = 50;
  config.subset_samples = 2000;
  config.seed = 7;
  const auto est = estimate_limit_density(Permutation{1}, Permutation{1, 2, 3}, config);
  CHECK(std::abs(est.mean - 1.0 / 6.0) <= 3 * est.std_error);
}

TEST_CASE("random permutations are uniform (chi-square, 23 dof)") {
  std::map<std::vector<int>, int> freq;
  const int draws = 48000;
  for (int s = 0; s < draws; ++s) {
    SampleRng rng(2024, static_cast<std::uint64_t>(s));
    const auto p = random_permutation(4, rng);
    freq[std::vector<int>(p.values().begin(), p.values().end())]++;
  }
  CHECK(freq.size() == 24);
  const double expected = draws / 24.0;
  double chi2 = 0.0;
  for (const auto& [p, f] : freq) chi2 += (f - expected) * (f - expected) / expected;
  // Upper 0.001 quantile of chi-square with 23 degrees of freedom.
  CHECK(chi2 < 49.728);
}

TEST_CASE("bounded draws stay in range") {
  SampleRng rng(1, 2);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL}) {
    for (int i = 0; i < 200; ++i) CHECK(rng.below(bound) < bound);
  }
}

TEST_CASE("estimates approach the exact limit as j grows") {
  const Permutation pi{1, 3, 2};
  const double limit = as_double(limit_density_uniform(pi, kLength9));
  std::vector<double> mean_error;
  Estimate last;
  for (std::size_t j : {50u, 200u, 1000u}) {
    double err = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      MonteCarloConfig config;
      config.j = j;
      config.samples = 10;
      config.subset_samples = 20000;
      config.seed = seed;
      last = estimate_limit_density(kLength9, pi, config);
      err += std::abs(last.mean - limit);
    }
    mean_error.push_back(err / 10);
  }
  MESSAGE("mean |estimate - limit| at j = 50, 200, 1000: " << mean_error[0] << ", "
                                                          << mean_error[1] << ", "
                                                          << mean_error[2]);
  CHECK(std::abs(last.mean - limit) <= 3 * last.std_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "inflatable/criteria.hpp"
#include "inflatable/error.hpp"
#include "inflatable/search.hpp"
#include "oracles.hpp"

using namespace inflatable;
using inflatable::testing::Rng;

namespace {

std::vector<Permutation> enumerate(std::size_t n) {
  std::vector<Permutation> out;
  CentrallySymmetricEnumerator it(n);
  while (auto p = it.next()) out.push_back(*p);
  return out;
}

}  // namespace

TEST_CASE("centrally symmetric enumeration matches a brute-force filter") {
  CHECK(enumerate(3) == std::vector<Permutation>{Permutation{1, 2, 3}, Permutation{3, 2, 1}});
  CHECK(enumerate(4).size() == 8);
  CHECK(enumerate(1) == std::vector<Permutation>{Permutation{1}});
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Permutation> filtered;
    for (const auto& p : testing::all_perms(n)) {
      if (p == rotate(p)) filtered.push_back(p);
    }
    CHECK(enumerate(n) == filtered);  // same set, same (lexicographic) order
  }
}

TEST_CASE("centrally symmetric counts follow 2^m m!") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(BigInt(enumerate(n).size()) == centrally_symmetric_count(n));
  }
  CHECK(centrally_symmetric_count(17) == 10321920);
}

TEST_CASE("inadmissible and tiny lengths") {
  SearchConfig config;
  config.n = 9;
  const auto nine = search_3_inflatable(config);
  CHECK(nine.status == SearchStatus::inadmissible);
  CHECK(nine.found == 0);
  CHECK(nine.scanned == 0);

  config.n = 3;
  config.central_only = false;
  const auto three = search_3_inflatable(config);
  CHECK(three.status == SearchStatus::inadmissible);
  CHECK(three.found == 0);

  config.n = 2;
  CHECK_THROWS_AS(search_3_inflatable(config), PreconditionError);
  config.n = 21;
  CHECK_THROWS_AS(search_3_inflatable(config), PreconditionError);
  config.n = 17;
  config.threads = 0;
  CHECK_THROWS_AS(search_3_inflatable(config), PreconditionError);
}

TEST_CASE("pruned search agrees with the unpruned reference") {
  // Targets copied from real permutations, so each search has hits.
  Rng rng(51);
  for (std::size_t n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto targets = count_length3_all(testing::random_perm(rng, n));
      SearchConfig config;
      config.n = n;
      config.central_only = false;
      const auto pruned = search_for_counts(config, targets);
      const auto reference = reference_search_for_counts(n, false, targets);
      CHECK(pruned.hits == reference.hits);
      CHECK(pruned.found == reference.found);
      CHECK(pruned.found >= 1);
      CHECK(pruned.scanned == factorial(n));
      CHECK(reference.scanned == factorial(n));
    }
  }
  for (std::size_t n = 5; n <= 14; ++n) {
    const auto targets = count_length3_all(testing::random_central(rng, n));
    SearchConfig config;
    config.n = n;
    const auto pruned = search_for_counts(config, targets);
    const auto reference = reference_search_for_counts(n, true, targets);
    CHECK(pruned.hits == reference.hits);
    CHECK(pruned.scanned == centrally_symmetric_count(n));
  }
}

TEST_CASE("results do not depend on thread count") {
  Rng rng(52);
  const auto targets = count_length3_all(testing::random_central(rng, 15));
  SearchConfig config;
  config.n = 15;
  config.threads = 1;
  const auto one = search_for_counts(config, targets);
  config.threads = 4;
  const auto four = search_for_counts(config, targets);
  CHECK(one.hits == four.hits);
  CHECK(one.scanned == four.scanned);
  CHECK(one.found == four.found);
  CHECK(std::is_sorted(one.hits.begin(), one.hits.end()));
  for (const auto& h : one.hits) {
    CHECK(is_centrally_symmetric(h));
    CHECK(count_length3_all(h) == targets);
  }
}

TEST_CASE("limit returns the first hits in canonical order") {
  Rng rng(53);
  const auto targets = count_length3_all(testing::random_central(rng, 13));
  const auto reference = reference_search_for_counts(13, true, targets);
  REQUIRE(reference.found >= 2);

  // Position of each hit in the enumeration order.
  std::vector<std::uint64_t> positions;
  {
    std::uint64_t index = 0;
    std::set<Permutation> hits(reference.hits.begin(), reference.hits.end());
    CentrallySymmetricEnumerator it(13);
    while (auto p = it.next()) {
      ++index;
      if (hits.count(*p)) positions.push_back(index);
    }
  }
  for (std::uint64_t k : {std::uint64_t{1}, reference.found / 2 + 1}) {
    for (unsigned threads : {1u, 3u}) {
      SearchConfig config;
      config.n = 13;
      config.limit = k;
      config.threads = threads;
      const auto limited = search_for_counts(config, targets);
      CHECK(limited.status == SearchStatus::limit_reached);
      CHECK(limited.hits == std::vector<Permutation>(reference.hits.begin(),
                                                      reference.hits.begin() + k));
      CHECK(limited.scanned == positions[k - 1]);
    }
  }
}

TEST_CASE("emit_all streams every hit") {
  Rng rng(54);
  const auto targets = count_length3_all(testing::random_central(rng, 11));
  SearchConfig config;
  config.n = 11;
  config.emit_all = true;
  std::vector<Permutation> streamed;
  config.on_hit = [&](std::size_t, const Permutation& p) { streamed.push_back(p); };
  const auto result = search_for_counts(config, targets);
  std::sort(streamed.begin(), streamed.end());
  CHECK(streamed == result.hits);
}

TEST_CASE("timeout stops a long search") {
  SearchConfig config;
  config.n = 17;
  config.central_only = false;
  config.timeout = std::chrono::milliseconds(50);
  const auto result = search_3_inflatable(config);
  CHECK(result.status == SearchStatus::timed_out);
}

TEST_CASE("length 17 with a limit finds 3-inflatable hits") {
  SearchConfig config;
  config.n = 17;
  config.limit = 5;
  const auto result = search_3_inflatable(config);
  CHECK(result.status == SearchStatus::limit_reached);
  REQUIRE(result.found == 5);
  for (const auto& h : result.hits) {
    CHECK(is_centrally_symmetric(h));
    CHECK(check_3_inflatable(h).verdict);
  }
}

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "addrep/errors.hpp"
#include "addrep/representation.hpp"

using namespace addrep;

namespace {

Instance make(std::vector<std::int64_t> w, std::int64_t n, std::int64_t theta) {
  return Instance(make_weights(std::move(w)), n, theta);
}

}  // namespace

TEST_CASE("representation worked examples") {
  CHECK(count_representations_dp(make({1, 2, 3}, 4, 2)) == 2);  // 1+3, 2+2
  CHECK(count_representations_dp(make({1, 2, 3}, 0, 0)) == 1);  // empty sum
  CHECK(count_representations_dp(make({7}, 0, 0)) == 1);
  CHECK(count_representations_dp(make({0, 1, 4, 9}, 4, 4)) == 2);
  CHECK(count_representations_dp(make({2, 3}, 1, 5)) == 0);
  CHECK(count_representations_dp(make({5}, 15, 3)) == 1);
  CHECK(count_representations_dp(make({5}, 14, 3)) == 0);
  CHECK(count_representations_dp(make({1, 2}, 3, 0)) == 0);  // no parts, n > 0
}

TEST_CASE("zero weight absorbs leftover parts") {
  CHECK(count_representations_dp(make({0, 5}, 0, 3)) == 1);   // 0+0+0
  CHECK(count_representations_dp(make({0, 5}, 5, 3)) == 1);   // 5+0+0
  CHECK(count_representations_dp(make({0, 5}, 10, 2)) == 1);  // 5+5
  CHECK(count_representations_dp(make({0, 5}, 10, 1)) == 0);
}

TEST_CASE("all three counters agree on the worked example") {
  Instance inst = make({1, 2, 3}, 4, 2);
  CHECK(count_representations_bruteforce(inst, 1'000'000) == 2);
  CHECK(generating_series_check(inst) == 2);
  CHECK(generating_series_check(make({0, 1}, 1, 2)) == 1);  // 1+0
}

TEST_CASE("brute force refuses oversized enumerations") {
  // C(30 + 19, 19) multisets is astronomically over budget
  Instance inst = make({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                        16, 17, 18, 19},
                       10, 30);
  CHECK_THROWS_AS(count_representations_bruteforce(inst, 1'000'000),
                  BudgetExceeded);
}

TEST_CASE("table retains every smaller instance") {
  RepresentationTable table(make({1, 2, 5}, 30, 6));
  for (std::int64_t n : {0, 1, 7, 19, 30}) {
    for (std::int64_t t : {0, 1, 3, 6}) {
      CHECK(table.at(n, t) == count_representations_dp(make({1, 2, 5}, n, t)));
    }
  }
  CHECK_THROWS_AS(table.at(31, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(0, 7), std::out_of_range);
  CHECK_THROWS_AS(table.at(-1, 0), std::out_of_range);
}

TEST_CASE("dp, brute force, and series agree on random instances") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> size_dist(1, 6);
  std::uniform_int_distribution<std::int64_t> value_dist(0, 20);
  std::uniform_int_distribution<std::int64_t> n_dist(0, 60);
  std::uniform_int_distribution<std::int64_t> theta_dist(0, 6);
  for (int trial = 0; trial < 150; ++trial) {
    std::set<std::int64_t> pool;
    const auto size = static_cast<std::size_t>(size_dist(rng));
    while (pool.size() < size) pool.insert(value_dist(rng));
    Instance inst(make_weights({pool.begin(), pool.end()}), n_dist(rng),
                  theta_dist(rng));
    const Count dp = count_representations_dp(inst);
    CHECK(dp == count_representations_bruteforce(inst, 1'000'000));
    CHECK(dp == generating_series_check(inst));
  }
}

TEST_CASE("shifting every weight shifts the target in lockstep") {
  // adding c to each weight adds theta*c to any sum of theta of them
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> value_dist(0, 15);
  std::uniform_int_distribution<std::int64_t> shift_dist(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::int64_t> pool = {value_dist(rng), value_dist(rng) + 16};
    pool.insert(value_dist(rng));
    std::vector<std::int64_t> weights(pool.begin(), pool.end());
    const std::int64_t n = value_dist(rng) * 3;
    const std::int64_t theta = value_dist(rng) % 5;
    const std::int64_t c = shift_dist(rng);
    std::vector<std::int64_t> shifted = weights;
    for (auto& a : shifted) a += c;
    CHECK(count_representations_dp(
              Instance(make_weights(weights), n, theta)) ==
          count_representations_dp(
              Instance(make_weights(shifted), n + theta * c, theta)));
  }
}

TEST_CASE("summing table columns counts at-most-theta representations") {
  Instance inst = make({1, 3, 4}, 25, 5);
  RepresentationTable table(inst);
  Count at_most = 0;
  for (std::int64_t t = 0; t <= 5; ++t) at_most += table.at(25, t);
  Count expected = 0;
  for (std::int64_t t = 0; t <= 5; ++t)
    expected += count_representations_bruteforce(make({1, 3, 4}, 25, t),
                                                 1'000'000);
  CHECK(at_most == expected);
}

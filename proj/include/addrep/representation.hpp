#pragma once

#include <cstdint>
#include <vector>

#include "addrep/core_model.hpp"
#include "addrep/numeric.hpp"

namespace addrep {

/// Exact table of A(v, t) = number of multisets of exactly t weights
/// summing to v, for all 0 <= v <= n and 0 <= t <= theta of an instance.
/// Built once by an unbounded-knapsack style fold over the weights;
/// retaining the whole table is what makes range sweeps cheap.
class RepresentationTable {
 public:
  explicit RepresentationTable(Instance instance);

  const Instance& instance() const { return instance_; }

  /// A(value, parts); bounds-checked against the table dimensions.
  const Count& at(std::int64_t value, std::int64_t parts) const;

 private:
  Instance instance_;
  std::int64_t stride_;       // theta + 1
  std::vector<Count> cells_;  // row-major, (n+1) x (theta+1)
};

/// A(n, theta) for one instance via the table fold.
Count count_representations_dp(const Instance& instance);

/// Exact count by enumerating all multisets of size theta. The number of
/// multisets C(theta + N - 1, N - 1) is checked against `budget` first;
/// BudgetExceeded if too many. Independent oracle for the DP.
Count count_representations_bruteforce(const Instance& instance,
                                       std::int64_t budget);

/// Coefficient of x^n y^theta in prod_nu (sum_k x^{k a_nu} y^k), computed
/// by truncated polynomial multiplication. Third, independently coded
/// route to the same number.
Count generating_series_check(const Instance& instance);

}  // namespace addrep

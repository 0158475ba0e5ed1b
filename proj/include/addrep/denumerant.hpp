#pragma once

#include <cstdint>
#include <vector>

#include "addrep/numeric.hpp"

namespace addrep {

/// Count nonnegative integer solutions of c_1 x_1 + ... + c_m x_m = target.
/// m == 0 is legal: the empty equation has exactly one solution when the
/// target is 0 and none otherwise.
struct DenumerantProblem {
  DenumerantProblem(std::vector<std::int64_t> coefficients, std::int64_t target);

  std::vector<std::int64_t> coeffs;  // each >= 1; duplicates allowed
  std::int64_t target;               // >= 0
};

/// Full count table: out[s] is the solution count for target s, s = 0..max_target.
/// Classic one-coefficient-at-a-time fold, O(m * max_target) big-int adds.
std::vector<Count> denumerant_table(const std::vector<std::int64_t>& coeffs,
                                    std::int64_t max_target);

/// Exact count via the table fold.
Count denumerant_dp(const DenumerantProblem& problem);

/// Exact count by plain recursive enumeration. Before recursing, the upper
/// bound prod(floor(target/c_i) + 1) on visited states is checked against
/// `budget`; BudgetExceeded if it does not fit. Deliberately naive so it
/// shares no structure with the DP.
Count denumerant_bruteforce(const DenumerantProblem& problem,
                            std::int64_t budget);

/// Leading-order estimate target^(m-1) / ((m-1)! * c_1 * ... * c_m) as an
/// exact rational. Throws EmptyCoefficients when m == 0.
Rational denumerant_asymptotic(const DenumerantProblem& problem);

/// gcd of the coefficients; when it does not divide the target the exact
/// count is 0 and the smooth estimate is systematically off.
/// Throws EmptyCoefficients when m == 0.
std::int64_t coefficient_gcd(const DenumerantProblem& problem);

}  // namespace addrep

#include "addrep/denumerant.hpp"

#include <numeric>
#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

DenumerantProblem::DenumerantProblem(std::vector<std::int64_t> coefficients,
                                     std::int64_t target_)
    : coeffs(std::move(coefficients)), target(target_) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 1) {
      std::ostringstream msg;
      msg << "coefficient c[" << i << "] = " << coeffs[i] << " must be >= 1";
      throw InputError(msg.str());
    }
  }
  if (target < 0) throw InputError("denumerant target must be >= 0");
}

std::vector<Count> denumerant_table(const std::vector<std::int64_t>& coeffs,
                                    std::int64_t max_target) {
  if (max_target < 0) throw InputError("table size must be >= 0");
  std::vector<Count> table(static_cast<std::size_t>(max_target) + 1);
  table[0] = 1;
  for (std::int64_t c : coeffs) {
    if (c < 1) throw InputError("table coefficients must be >= 1");
    for (std::int64_t s = c; s <= max_target; ++s) {
      table[static_cast<std::size_t>(s)] +=
          table[static_cast<std::size_t>(s - c)];
    }
  }
  return table;
}

Count denumerant_dp(const DenumerantProblem& problem) {
  return denumerant_table(problem.coeffs, problem.target)
      [static_cast<std::size_t>(problem.target)];
}

namespace {

void enumerate(const std::vector<std::int64_t>& coeffs, std::size_t i,
               std::int64_t remaining, Count& hits) {
  if (i == coeffs.size()) {
    if (remaining == 0) hits += 1;
    return;
  }
  for (std::int64_t used = 0; used <= remaining; used += coeffs[i]) {
    enumerate(coeffs, i + 1, remaining - used, hits);
  }
}

}  // namespace

Count denumerant_bruteforce(const DenumerantProblem& problem,
                            std::int64_t budget) {
  if (budget < 1) throw InputError("oracle budget must be >= 1");
  // size estimate: each x_i takes at most floor(target/c_i)+1 values
  BigInt states = 1;
  for (std::int64_t c : problem.coeffs) states *= problem.target / c + 1;
  if (states > budget) {
    std::ostringstream msg;
    msg << "enumeration needs ~" << states << " states, budget " << budget;
    throw BudgetExceeded(msg.str());
  }
  Count hits = 0;
  enumerate(problem.coeffs, 0, problem.target, hits);
  return hits;
}

Rational denumerant_asymptotic(const DenumerantProblem& problem) {
  const std::size_t m = problem.coeffs.size();
  if (m == 0)
    throw EmptyCoefficients("asymptotic estimate needs at least one coefficient");
  BigInt numerator = int_pow(BigInt(problem.target), m - 1);
  BigInt denominator = factorial(m - 1);
  for (std::int64_t c : problem.coeffs) denominator *= c;
  return make_rational(numerator, denominator);
}

std::int64_t coefficient_gcd(const DenumerantProblem& problem) {
  if (problem.coeffs.empty())
    throw EmptyCoefficients("gcd of an empty coefficient list");
  std::int64_t g = 0;
  for (std::int64_t c : problem.coeffs) g = std::gcd(g, c);
  return g;
}

}  // namespace addrep

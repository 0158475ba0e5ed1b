#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addrep/core_model.hpp"
#include "addrep/numeric.hpp"

namespace addrep {

/// L'(a_nu) = prod_{mu != nu} (a_nu - a_mu), the derivative of the node
/// polynomial L(x) = prod (x - a_mu) at the nu-th node. `index` is 1-based.
/// N == 1 gives the empty product 1.
BigInt lagrange_derivative(const Weights& weights, std::int64_t index);

/// sum_nu a_nu^exponent / L'(a_nu), exact. Negative exponents require
/// a_1 > 0 (ZeroNodeNegativePower otherwise).
Rational power_sum(const Weights& weights, std::int64_t exponent);

/// Which branch of the closed form an exponent falls in, for N nodes.
enum class PowerSumCase { negative, zero_band, top, homogeneous };
PowerSumCase power_sum_case(std::int64_t exponent, std::size_t node_count);
std::string power_sum_case_name(PowerSumCase c);

/// Closed form for the same sum:
///   t <= -1          (-1)^(N-1) / (a_1...a_N) * h_{-t-1}(1/a_1,...,1/a_N)
///   0 <= t <= N-2    0
///   t == N-1         1
///   t >= N           h_{t-N+1}(a_1,...,a_N)
/// where h_k is the complete homogeneous symmetric polynomial.
Rational identity_rhs(const Weights& weights, std::int64_t exponent);

/// h_0..h_degree of the given values via the in-place recurrence
/// h_k += v * h_{k-1}; one pass per value, no binomial blowup.
std::vector<Rational> complete_homogeneous(const std::vector<Rational>& values,
                                           std::int64_t degree);

struct IdentityCheck {
  std::int64_t exponent;
  PowerSumCase branch;
  Rational lhs;  // power_sum
  Rational rhs;  // identity_rhs
  bool equal;
};

/// Evaluates both sides for every exponent in [t_min, t_max].
/// Throws DegenerateN for N < 2 (the closed form needs two nodes) and
/// ZeroNodeNegativePower when the range dips negative with a_1 == 0.
std::vector<IdentityCheck> verify_identity(const Weights& weights,
                                           std::int64_t t_min,
                                           std::int64_t t_max);

}  // namespace addrep

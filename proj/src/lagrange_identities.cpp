#include "addrep/lagrange_identities.hpp"

#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

BigInt lagrange_derivative(const Weights& weights, std::int64_t index) {
  const auto N = static_cast<std::int64_t>(weights.size());
  if (index < 1 || index > N) {
    std::ostringstream msg;
    msg << "node index " << index << " outside 1.." << N;
    throw InputError(msg.str());
  }
  BigInt product = 1;
  const std::int64_t a_nu = weights[static_cast<std::size_t>(index - 1)];
  for (std::int64_t mu = 1; mu <= N; ++mu) {
    if (mu == index) continue;
    product *= a_nu - weights[static_cast<std::size_t>(mu - 1)];
  }
  return product;
}

Rational power_sum(const Weights& weights, std::int64_t exponent) {
  if (exponent < 0 && weights[0] == 0) {
    std::ostringstream msg;
    msg << "a_1 = 0 cannot be raised to " << exponent;
    throw ZeroNodeNegativePower(msg.str());
  }
  const auto N = static_cast<std::int64_t>(weights.size());
  Rational sum = 0;
  for (std::int64_t nu = 1; nu <= N; ++nu) {
    const BigInt node = weights[static_cast<std::size_t>(nu - 1)];
    const BigInt lp = lagrange_derivative(weights, nu);
    if (exponent >= 0) {
      sum += make_rational(int_pow(node, static_cast<std::uint64_t>(exponent)),
                           lp);
    } else {
      sum += make_rational(
          1, int_pow(node, static_cast<std::uint64_t>(-exponent)) * lp);
    }
  }
  return sum;
}

PowerSumCase power_sum_case(std::int64_t exponent, std::size_t node_count) {
  const auto N = static_cast<std::int64_t>(node_count);
  if (exponent < 0) return PowerSumCase::negative;
  if (exponent <= N - 2) return PowerSumCase::zero_band;
  if (exponent == N - 1) return PowerSumCase::top;
  return PowerSumCase::homogeneous;
}

std::string power_sum_case_name(PowerSumCase c) {
  switch (c) {
    case PowerSumCase::negative: return "negative";
    case PowerSumCase::zero_band: return "zero_band";
    case PowerSumCase::top: return "top";
    case PowerSumCase::homogeneous: return "homogeneous";
  }
  return "?";
}

std::vector<Rational> complete_homogeneous(const std::vector<Rational>& values,
                                           std::int64_t degree) {
  if (degree < 0) throw InputError("homogeneous degree must be >= 0");
  std::vector<Rational> h(static_cast<std::size_t>(degree) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& v : values) {
    for (std::int64_t k = 1; k <= degree; ++k) {
      h[static_cast<std::size_t>(k)] += v * h[static_cast<std::size_t>(k - 1)];
    }
  }
  return h;
}

Rational identity_rhs(const Weights& weights, std::int64_t exponent) {
  const auto N = static_cast<std::int64_t>(weights.size());
  switch (power_sum_case(exponent, weights.size())) {
    case PowerSumCase::zero_band:
      return Rational(0);
    case PowerSumCase::top:
      return Rational(1);
    case PowerSumCase::homogeneous: {
      std::vector<Rational> nodes;
      nodes.reserve(weights.size());
      for (std::int64_t a : weights) nodes.emplace_back(a);
      return complete_homogeneous(nodes, exponent - N + 1)
          [static_cast<std::size_t>(exponent - N + 1)];
    }
    case PowerSumCase::negative: {
      if (weights[0] == 0) {
        std::ostringstream msg;
        msg << "reciprocal nodes undefined: a_1 = 0 (exponent " << exponent
            << ")";
        throw ZeroNodeNegativePower(msg.str());
      }
      std::vector<Rational> reciprocals;
      reciprocals.reserve(weights.size());
      BigInt node_product = 1;
      for (std::int64_t a : weights) {
        reciprocals.push_back(make_rational(1, a));
        node_product *= a;
      }
      const std::int64_t k = -exponent - 1;
      Rational h = complete_homogeneous(reciprocals, k)
          [static_cast<std::size_t>(k)];
      Rational scale = make_rational((N % 2 == 0) ? -1 : 1, node_product);
      return scale * h;
    }
  }
  throw InputError("unreachable power sum case");
}

std::vector<IdentityCheck> verify_identity(const Weights& weights,
                                           std::int64_t t_min,
                                           std::int64_t t_max) {
  if (weights.size() < 2)
    throw DegenerateN("identity verification needs N >= 2 nodes");
  if (t_min > t_max) throw InputError("empty exponent range");
  std::vector<IdentityCheck> checks;
  checks.reserve(static_cast<std::size_t>(t_max - t_min + 1));
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    IdentityCheck c;
    c.exponent = t;
    c.branch = power_sum_case(t, weights.size());
    c.lhs = power_sum(weights, t);
    c.rhs = identity_rhs(weights, t);
    c.equal = (c.lhs == c.rhs);
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace addrep

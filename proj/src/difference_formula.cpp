#include "addrep/difference_formula.hpp"

#include <cmath>
#include <sstream>

#include "addrep/errors.hpp"
#include "addrep/lagrange_identities.hpp"

namespace addrep {

std::vector<DifferenceEquation> build_difference_equations(
    const Instance& instance) {
  const auto N = static_cast<std::int64_t>(instance.weights.size());
  std::vector<DifferenceEquation> equations;
  equations.reserve(static_cast<std::size_t>(N));
  BigInt prefix = 0;  // a_1 + ... + a_nu, grown as nu advances
  for (std::int64_t nu = 1; nu <= N; ++nu) {
    const std::int64_t a_nu = instance.weights[static_cast<std::size_t>(nu - 1)];
    prefix += a_nu;
    DifferenceEquation eq;
    eq.index = nu;
    eq.coeffs.reserve(static_cast<std::size_t>(N - 1));
    for (std::int64_t mu = 1; mu < nu; ++mu)
      eq.coeffs.push_back(a_nu - instance.weights[static_cast<std::size_t>(mu - 1)]);
    for (std::int64_t mu = nu + 1; mu <= N; ++mu)
      eq.coeffs.push_back(instance.weights[static_cast<std::size_t>(mu - 1)] - a_nu);
    eq.shifted_target = instance.n + prefix - BigInt(nu + instance.theta) * a_nu;
    eq.sign = (nu % 2 == 1) ? 1 : -1;
    equations.push_back(std::move(eq));
  }
  return equations;
}

std::vector<FormulaTerm> formula_term_breakdown(const Instance& instance) {
  std::vector<FormulaTerm> terms;
  for (const DifferenceEquation& eq : build_difference_equations(instance)) {
    FormulaTerm term;
    term.index = eq.index;
    term.sign = eq.sign;
    term.shifted_target = eq.shifted_target;
    if (eq.shifted_target >= 0) {
      DenumerantProblem problem(
          eq.coeffs, to_int64(eq.shifted_target, "shifted target"));
      term.solution_count = denumerant_dp(problem);
    } else {
      term.solution_count = 0;
    }
    term.contribution = term.sign * term.solution_count;
    terms.push_back(std::move(term));
  }
  return terms;
}

Count count_via_difference_formula(const Instance& instance) {
  SignedCount total = 0;
  for (const FormulaTerm& term : formula_term_breakdown(instance))
    total += term.contribution;
  if (total < 0) {
    std::ostringstream msg;
    msg << "alternating sum came out " << total << " for n = " << instance.n
        << ", theta = " << instance.theta;
    throw NegativeResult(msg.str());
  }
  return total;
}

Rational heuristic_estimate(const Instance& instance,
                            const EstimateVariant& variant) {
  const auto N = static_cast<std::int64_t>(instance.weights.size());
  if (N < 2)
    throw DegenerateN("smooth estimate needs N >= 2 weights");
  const auto equations = build_difference_equations(instance);
  Rational sum = 0;
  for (const DifferenceEquation& eq : equations) {
    if (variant.term_filter == TermFilter::positive_s_only &&
        eq.shifted_target <= 0)
      continue;
    // s_nu^(N-2) keeps its sign for odd N-2; exactness matters more than
    // monotonicity here, so no absolute values anywhere.
    BigInt numerator =
        int_pow(eq.shifted_target, static_cast<std::uint64_t>(N - 2));
    BigInt lp = lagrange_derivative(instance.weights, eq.index);
    sum += make_rational(numerator, lp);
  }
  sum /= make_rational(factorial(static_cast<std::uint64_t>(N - 2)), 1);
  if (variant.sign_mode == SignMode::parity_corrected && N % 2 == 0)
    sum = -sum;
  return sum;
}

GeometryReport geometry_report(const Instance& instance) {
  if (instance.weights.size() < 2)
    throw DegenerateN("plane geometry needs N >= 2 weights");
  GeometryReport report;
  for (const DifferenceEquation& eq : build_difference_equations(instance)) {
    PlaneGeometry plane;
    plane.index = eq.index;
    plane.shifted_target = eq.shifted_target;
    plane.normal_norm_squared = 0;
    for (std::int64_t c : eq.coeffs) {
      plane.intercepts.push_back(make_rational(eq.shifted_target, c));
      plane.normal_norm_squared += BigInt(c) * c;
    }
    plane.distance = eq.shifted_target.get_d() /
                     std::sqrt(plane.normal_norm_squared.get_d());
    report.planes.push_back(std::move(plane));
  }
  return report;
}

FormulaSweep::FormulaSweep(Weights weights, std::int64_t theta,
                           std::int64_t max_n)
    : weights_(std::move(weights)), theta_(theta), max_n_(max_n) {
  if (theta_ < 0) throw InputError("part count theta must be >= 0");
  if (max_n_ < 0) throw InputError("sweep upper bound must be >= 0");
  // Shapes (coefficients, sign) do not depend on n, and s_nu at n is just
  // s_nu at 0 plus n; take the n = 0 equations and keep the offsets.
  Instance base(weights_, 0, theta_);
  for (const DifferenceEquation& eq : build_difference_equations(base)) {
    TermTable term;
    term.offset = eq.shifted_target;
    term.sign = eq.sign;
    const BigInt largest = term.offset + max_n_;
    if (largest >= 0) {
      term.table = denumerant_table(
          eq.coeffs, to_int64(largest, "sweep table size"));
    }
    terms_.push_back(std::move(term));
  }
}

Count FormulaSweep::count_at(std::int64_t n) const {
  if (n < 0 || n > max_n_) {
    std::ostringstream msg;
    msg << "n = " << n << " outside swept range 0.." << max_n_;
    throw InputError(msg.str());
  }
  SignedCount total = 0;
  for (const TermTable& term : terms_) {
    const BigInt s = term.offset + n;
    if (s < 0) continue;  // no table, no contribution
    const auto idx = static_cast<std::size_t>(
        to_int64(s, "sweep table index"));
    if (term.sign > 0)
      total += term.table[idx];
    else
      total -= term.table[idx];
  }
  if (total < 0) {
    std::ostringstream msg;
    msg << "alternating sum came out " << total << " for n = " << n
        << " in sweep";
    throw NegativeResult(msg.str());
  }
  return total;
}

std::int64_t FormulaSweep::positive_term_count(std::int64_t n) const {
  std::int64_t positive = 0;
  for (const TermTable& term : terms_) {
    if (term.offset + n > 0) ++positive;
  }
  return positive;
}

}  // namespace addrep

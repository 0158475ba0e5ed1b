#pragma once

#include <cstdint>
#include <vector>

#include "addrep/core_model.hpp"
#include "addrep/denumerant.hpp"
#include "addrep/numeric.hpp"

namespace addrep {

/// One alternating-sum term of the reduction: the count of n as a sum of
/// theta weights equals sum_nu sign_nu * B_nu(s_nu), where B_nu counts
/// nonnegative solutions of a plain linear equation whose coefficients are
/// the pairwise weight differences around a_nu.
struct DifferenceEquation {
  std::int64_t index;                 // nu, 1-based
  std::vector<std::int64_t> coeffs;   // a_nu - a_mu for mu < nu, then a_mu - a_nu for mu > nu
  BigInt shifted_target;              // s_nu = n + sum_{i<=nu} a_i - (nu + theta) a_nu
  int sign;                           // +1 for odd nu, -1 for even
};

std::vector<DifferenceEquation> build_difference_equations(
    const Instance& instance);

struct FormulaTerm {
  std::int64_t index;
  int sign;
  BigInt shifted_target;
  Count solution_count;     // B_nu(s_nu); 0 when s_nu < 0
  SignedCount contribution; // sign * solution_count
};

/// Per-term view of the alternating sum. Negative shifted targets
/// contribute 0 by definition (no nonnegative solution exists).
std::vector<FormulaTerm> formula_term_breakdown(const Instance& instance);

/// The alternating sum itself. Must equal the exact multiset count; a
/// negative total would mean the reduction is broken and raises
/// NegativeResult.
Count count_via_difference_formula(const Instance& instance);

enum class SignMode {
  paper_literal,     // all terms weighted 1/L'(a_nu) as printed
  parity_corrected,  // extra (-1)^(N-1), matching the alternating-sum signs
};

enum class TermFilter {
  all_terms,
  positive_s_only,  // drop terms whose shifted target is <= 0
};

struct EstimateVariant {
  SignMode sign_mode = SignMode::paper_literal;
  TermFilter term_filter = TermFilter::all_terms;
};

/// Smooth closed-form estimate of the count,
///   1/(N-2)! * sum_nu s_nu^(N-2) / L'(a_nu),
/// evaluated exactly as a rational. The variant controls the overall sign
/// convention and whether negative-target terms are kept. N < 2 has no
/// such form (DegenerateN); N == 2 gives a constant.
Rational heuristic_estimate(const Instance& instance,
                            const EstimateVariant& variant);

/// Each difference equation c . x = s_nu is a hyperplane in its solution
/// space; how far it sits from the origin is a proxy for term size.
struct PlaneGeometry {
  std::int64_t index;                 // nu
  BigInt shifted_target;              // s_nu
  std::vector<Rational> intercepts;   // s_nu / c_i per axis
  BigInt normal_norm_squared;         // sum c_i^2
  double distance;                    // s_nu / sqrt(sum c_i^2), signed
};

struct GeometryReport {
  std::vector<PlaneGeometry> planes;
};

/// Geometry of every equation of the instance. Needs N >= 2 (a 0-variable
/// equation has no hyperplane to speak of): DegenerateN otherwise.
GeometryReport geometry_report(const Instance& instance);

/// Evaluates the formula for every n in 0..max_n at fixed weights and
/// theta, reusing one solution-count table per equation. s_nu moves with n
/// by a constant offset, so the table for the largest n covers all smaller
/// ones. Building tables once turns a sweep from quadratic to linear work
/// per row.
class FormulaSweep {
 public:
  FormulaSweep(Weights weights, std::int64_t theta, std::int64_t max_n);

  const Weights& weights() const { return weights_; }
  std::int64_t theta() const { return theta_; }
  std::int64_t max_n() const { return max_n_; }

  /// Same value as count_via_difference_formula at (weights, n, theta).
  Count count_at(std::int64_t n) const;

  /// Number of equations with s_nu > 0 at this n.
  std::int64_t positive_term_count(std::int64_t n) const;

 private:
  struct TermTable {
    BigInt offset;             // s_nu = n + offset
    int sign;
    std::vector<Count> table;  // empty when s_nu < 0 for every n <= max_n
  };

  Weights weights_;
  std::int64_t theta_;
  std::int64_t max_n_;
  std::vector<TermTable> terms_;
};

}  // namespace addrep

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "addrep/core_model.hpp"
#include "addrep/difference_formula.hpp"
#include "addrep/lagrange_identities.hpp"
#include "addrep/numeric.hpp"

namespace addrep::cli {

enum class OutputFormat { text, csv, json };

/// Inclusive integer range with a positive step. "4" is the point range
/// 4..4; "0..100" steps by 1; "1000..10000:1000" uses an explicit step.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t step = 1;

  std::vector<std::int64_t> grid() const;
};

Range parse_range(const std::string& text);

/// --seq grammar: "squares" | "powers:k" | "primes" | "list:c1,c2,..."
/// | "file:PATH" (file contents parsed by read_sequence_file).
SequenceSpec parse_sequence_spec(const std::string& text);

OutputFormat parse_format(const std::string& text);

/// The three estimate variants exposed on the command line.
/// "paper_literal"     every term, printed sign convention
/// "parity_corrected"  every term, alternating-sum sign convention
/// "positive_s_only"   literal signs, terms with s_nu > 0 only
EstimateVariant parse_variant(const std::string& name);
std::vector<std::string> variant_names();

enum class Preset { none, lagrange, goldbach, waring };

struct RunConfig {
  Preset preset = Preset::none;
  std::string sequence_text;              // raw --seq value
  std::optional<std::int64_t> fixed_count;  // --N
  bool auto_count = false;                  // --auto-N
  std::optional<std::int64_t> theta;
  std::optional<Range> n_range;
  std::optional<Range> t_range;
  OutputFormat format = OutputFormat::text;
  bool breakdown = false;
  bool geometry = false;
  bool with_estimates = false;              // sweep only; estimates per row
  bool run_oracles = false;                 // count only; brute force + series
  std::optional<std::string> variant_name;  // estimate; empty = all variants
  std::int64_t budget = 1'000'000;
  std::int64_t waring_exponent = 0;
  // test hook: shifts every formula count so the theorem check trips and
  // the exit-code path for invariant failures can be exercised end to end
  std::int64_t inject_formula_error = 0;
  std::string bench_suite = "denumerant";
  std::int64_t bench_max_s = 100000;
  std::int64_t bench_max_n = 2000;
  std::int64_t bench_theta = 4;
};

/// Applies preset defaults (sequence, theta, parity restrictions) and
/// resolves the weight set. Sweep-style commands need exactly one of
/// --N / --auto-N for generator sequences; explicit lists carry their own
/// length. Throws InputError on contradictory flags.
struct ResolvedWeights {
  Weights weights;
  SequenceSpec spec;
  std::string label;      // echo of how the set was chosen
  bool auto_count;        // cutoff per row requested
};

// ---- count ----

struct CountResult {
  Instance instance;
  Count exact;
  Count formula;
  std::vector<FormulaTerm> terms;  // filled when breakdown requested
  bool oracles_ran = false;
  Count bruteforce;
  Count series;
};

CountResult run_count(const RunConfig& config);
void render_count(const CountResult& result, OutputFormat format,
                  std::ostream& out);

// ---- sweep ----

struct SweepRow {
  std::int64_t n;
  std::int64_t cutoff;  // N(n) when auto, fixed N otherwise
  Count exact;
  Count formula;
  std::int64_t positive_terms;
  bool has_estimates = false;
  Rational est_paper_literal;
  Rational est_parity_corrected;
  Rational est_positive_s_only;
};

struct SweepResult {
  std::string sequence_label;
  Weights weights;
  std::int64_t theta;
  bool even_only = false;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const RunConfig& config);
void render_sweep(const SweepResult& result, OutputFormat format,
                  std::ostream& out);

// ---- estimate ----

struct EstimateValue {
  std::string variant;
  Rational value;
  double rel_error;  // (value - exact) / exact; +-inf when exact == 0
};

struct EstimateRow {
  std::int64_t n;
  Count exact;
  std::vector<EstimateValue> estimates;
  std::string closest;  // variant with smallest |value - exact| this row
  bool degenerate = false;
  std::string note;
  bool has_geometry = false;
  Rational min_intercept;
  Rational max_intercept;
  double min_abs_distance = 0.0;
};

struct EstimateResult {
  std::string sequence_label;
  Weights weights;
  std::int64_t theta;
  std::vector<std::string> selected_variants;
  std::vector<std::int64_t> equation_gcds;  // per nu; diagnostic
  std::vector<EstimateRow> rows;
  std::string closest_variant;  // most row wins across the run
};

EstimateResult run_estimate(const RunConfig& config);
void render_estimate(const EstimateResult& result, OutputFormat format,
                     std::ostream& out);

// ---- identities ----

struct IdentitiesResult {
  std::string sequence_label;
  Weights weights;
  std::vector<IdentityCheck> checks;
  bool all_equal = true;
};

IdentitiesResult run_identities(const RunConfig& config);
void render_identities(const IdentitiesResult& result, OutputFormat format,
                       std::ostream& out);

// ---- bench ----

struct BenchRow {
  std::string suite;
  std::int64_t size;
  double wall_ms;
  std::int64_t table_cells;
  std::string result;  // count at the probe point, for determinism checks
};

struct BenchResult {
  std::vector<BenchRow> rows;
};

BenchResult run_bench(const RunConfig& config);
void render_bench(const BenchResult& result, OutputFormat format,
                  std::ostream& out);

}  // namespace addrep::cli

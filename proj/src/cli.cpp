#include "addrep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "addrep/errors.hpp"
#include "addrep/representation.hpp"

namespace addrep::cli {

using nlohmann::ordered_json;

namespace {

std::int64_t parse_i64(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": expected an integer, got '" +
                     text + "'");
  }
}

std::string weights_str(const Weights& w) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s << ", ";
    s << w[i];
  }
  s << "]";
  return s.str();
}

}  // namespace

std::vector<std::int64_t> Range::grid() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

Range parse_range(const std::string& text) {
  Range r;
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_i64(text, "range");
    return r;
  }
  r.lo = parse_i64(text.substr(0, dots), "range start");
  std::string rest = text.substr(dots + 2);
  const std::size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    r.step = parse_i64(rest.substr(colon + 1), "range step");
    rest = rest.substr(0, colon);
  }
  r.hi = parse_i64(rest, "range end");
  if (r.step < 1) throw InputError("range step must be >= 1");
  if (r.lo > r.hi) {
    std::ostringstream msg;
    msg << "empty range " << r.lo << ".." << r.hi;
    throw InputError(msg.str());
  }
  return r;
}

SequenceSpec parse_sequence_spec(const std::string& text) {
  if (text == "squares") return SequenceSpec::squares();
  if (text == "primes") return SequenceSpec::primes();
  if (text.rfind("powers:", 0) == 0) {
    const std::int64_t k = parse_i64(text.substr(7), "powers exponent");
    if (k < 1) throw InputError("powers exponent must be >= 1");
    return SequenceSpec::powers(k);
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<std::int64_t> values;
    std::string item;
    std::istringstream items(text.substr(5));
    while (std::getline(items, item, ',')) {
      values.push_back(parse_i64(item, "list element"));
    }
    if (values.empty()) throw InputError("empty weight list");
    return SequenceSpec::from_list(std::move(values));
  }
  if (text.rfind("file:", 0) == 0) {
    return SequenceSpec::from_list(read_sequence_file(text.substr(5)));
  }
  throw InputError(
      "unknown sequence '" + text +
      "' (expected squares | powers:k | primes | list:c1,c2,... | file:PATH)");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw InputError("unknown format '" + text + "' (text | csv | json)");
}

EstimateVariant parse_variant(const std::string& name) {
  if (name == "paper_literal")
    return {SignMode::paper_literal, TermFilter::all_terms};
  if (name == "parity_corrected")
    return {SignMode::parity_corrected, TermFilter::all_terms};
  if (name == "positive_s_only")
    return {SignMode::paper_literal, TermFilter::positive_s_only};
  throw InputError("unknown variant '" + name +
                   "' (paper_literal | parity_corrected | positive_s_only)");
}

std::vector<std::string> variant_names() {
  return {"paper_literal", "parity_corrected", "positive_s_only"};
}

namespace {

// Everything needed to materialize a weight set, after preset rules and
// flag cross-checks have been applied.
struct SeqResolution {
  SequenceSpec spec;
  std::string label;
  bool auto_count = false;
  std::optional<std::int64_t> fixed_count;
  std::int64_t theta = 0;
  bool even_only = false;
};

SeqResolution resolve_sequence(const RunConfig& cfg, bool needs_theta,
                               bool allow_auto) {
  SeqResolution res;
  switch (cfg.preset) {
    case Preset::none:
      if (cfg.sequence_text.empty())
        throw InputError("--seq is required (or pick a --preset)");
      res.spec = parse_sequence_spec(cfg.sequence_text);
      res.label = cfg.sequence_text;
      if (needs_theta) {
        if (!cfg.theta) throw InputError("--theta is required");
        res.theta = *cfg.theta;
      }
      break;
    case Preset::lagrange:
      if (!cfg.sequence_text.empty())
        throw InputError("--preset lagrange already picks the sequence");
      if (cfg.theta && *cfg.theta != 4)
        throw InputError("--preset lagrange fixes --theta 4");
      res.spec = SequenceSpec::squares();
      res.label = "lagrange";
      res.theta = 4;
      break;
    case Preset::goldbach:
      if (!cfg.sequence_text.empty())
        throw InputError("--preset goldbach already picks the sequence");
      if (cfg.theta && *cfg.theta != 2)
        throw InputError("--preset goldbach fixes --theta 2");
      res.spec = SequenceSpec::primes();
      res.label = "goldbach";
      res.theta = 2;
      res.even_only = true;
      break;
    case Preset::waring:
      if (!cfg.sequence_text.empty())
        throw InputError("--preset waring already picks the sequence");
      if (cfg.waring_exponent < 1)
        throw InputError("waring preset needs an exponent, e.g. waring:3");
      if (!cfg.theta)
        throw InputError("--preset waring needs an explicit --theta");
      res.spec = SequenceSpec::powers(cfg.waring_exponent);
      {
        std::ostringstream label;
        label << "waring:" << cfg.waring_exponent;
        res.label = label.str();
      }
      res.theta = *cfg.theta;
      break;
  }

  if (cfg.fixed_count && cfg.auto_count)
    throw InputError("--N and --auto-N are mutually exclusive");
  if (cfg.fixed_count) {
    res.fixed_count = *cfg.fixed_count;
  } else if (cfg.auto_count || cfg.preset != Preset::none) {
    // presets follow the sequence cutoff unless the caller pinned N
    res.auto_count = true;
  } else if (res.spec.kind == SequenceKind::from_list) {
    res.fixed_count = static_cast<std::int64_t>(res.spec.values.size());
  } else {
    throw InputError("generator sequences need --N or --auto-N");
  }
  if (res.auto_count && !allow_auto)
    throw InputError("--auto-N needs a target n; pass --N instead");
  return res;
}

Weights materialize(const SeqResolution& res, std::int64_t auto_target_n) {
  const std::int64_t count = res.auto_count
                                 ? cutoff_index(res.spec, auto_target_n)
                                 : *res.fixed_count;
  return builtin_sequence(res.spec, count);
}

Range require_n_range(const RunConfig& cfg) {
  if (!cfg.n_range) throw InputError("--n is required");
  if (cfg.n_range->lo < 0) throw InputError("target n must be >= 0");
  return *cfg.n_range;
}

std::string count_str(const Count& c) { return c.get_str(); }

double relative_error(const Rational& estimate, const Count& exact) {
  if (exact == 0) {
    if (estimate == 0) return 0.0;
    return estimate > 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
  }
  Rational err = (estimate - Rational(exact)) / Rational(exact);
  return rational_double(err);
}

}  // namespace

// ---------------------------------------------------------------- count

CountResult run_count(const RunConfig& cfg) {
  const Range r = require_n_range(cfg);
  if (r.lo != r.hi)
    throw InputError("count takes a single --n; use sweep for ranges");
  const SeqResolution res = resolve_sequence(cfg, /*needs_theta=*/true,
                                             /*allow_auto=*/true);
  const std::int64_t n = r.lo;
  Instance instance(materialize(res, n), n, res.theta);

  CountResult out{instance,
                  count_representations_dp(instance),
                  count_via_difference_formula(instance) +
                      cfg.inject_formula_error,
                  {},
                  false,
                  0,
                  0};
  if (out.formula != out.exact) {
    std::ostringstream msg;
    msg << "formula said " << out.formula << ", exact count is " << out.exact
        << " at n = " << n << ", theta = " << res.theta;
    throw TheoremViolation(msg.str());
  }
  if (cfg.breakdown) out.terms = formula_term_breakdown(instance);
  if (cfg.run_oracles) {
    out.bruteforce = count_representations_bruteforce(instance, cfg.budget);
    out.series = generating_series_check(instance);
    out.oracles_ran = true;
    if (out.bruteforce != out.exact || out.series != out.exact) {
      std::ostringstream msg;
      msg << "oracle disagreement: dp = " << out.exact << ", bruteforce = "
          << out.bruteforce << ", series = " << out.series;
      throw InvariantError(msg.str());
    }
  }
  return out;
}

void render_count(const CountResult& result, OutputFormat format,
                  std::ostream& out) {
  const Instance& inst = result.instance;
  switch (format) {
    case OutputFormat::text: {
      out << "weights: " << weights_str(inst.weights)
          << "  (N = " << inst.weights.size() << ")\n";
      out << "n = " << inst.n << ", theta = " << inst.theta << "\n";
      out << "exact   = " << count_str(result.exact) << "\n";
      out << "formula = " << count_str(result.formula) << "\n";
      if (!result.terms.empty()) {
        out << "terms:\n";
        out << "  nu    sign  s                B                term\n";
        for (const FormulaTerm& t : result.terms) {
          out << "  " << std::left << std::setw(6) << t.index
              << std::setw(6) << (t.sign > 0 ? "+" : "-") << std::setw(17)
              << t.shifted_target.get_str() << std::setw(17)
              << t.solution_count.get_str() << t.contribution.get_str()
              << "\n";
        }
      }
      if (result.oracles_ran) {
        out << "oracles: bruteforce = " << count_str(result.bruteforce)
            << ", series = " << count_str(result.series) << "\n";
      }
      break;
    }
    case OutputFormat::csv: {
      if (!result.terms.empty()) {
        out << "nu,sign,s,B,term\n";
        for (const FormulaTerm& t : result.terms) {
          out << t.index << "," << t.sign << "," << t.shifted_target.get_str()
              << "," << t.solution_count.get_str() << ","
              << t.contribution.get_str() << "\n";
        }
      } else {
        out << "n,theta,exact,formula\n";
        out << inst.n << "," << inst.theta << "," << count_str(result.exact)
            << "," << count_str(result.formula) << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["instance"]["weights"] = inst.weights.values();
      j["instance"]["n"] = inst.n;
      j["instance"]["theta"] = inst.theta;
      j["exact"] = count_str(result.exact);
      j["formula"] = count_str(result.formula);
      if (!result.terms.empty()) {
        ordered_json terms = ordered_json::array();
        for (const FormulaTerm& t : result.terms) {
          terms.push_back({{"nu", t.index},
                           {"sign", t.sign},
                           {"s", t.shifted_target.get_str()},
                           {"B", t.solution_count.get_str()},
                           {"term", t.contribution.get_str()}});
        }
        j["terms"] = std::move(terms);
      }
      if (result.oracles_ran) {
        j["oracles"]["bruteforce"] = count_str(result.bruteforce);
        j["oracles"]["series"] = count_str(result.series);
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------- sweep

SweepResult run_sweep(const RunConfig& cfg) {
  Range r = require_n_range(cfg);
  const SeqResolution res = resolve_sequence(cfg, /*needs_theta=*/true,
                                             /*allow_auto=*/true);
  if (res.even_only && r.lo < 4) r.lo = 4;

  // One weight set for the whole sweep, chosen at the top of the range.
  // Weights above n never appear in a representation of n, so rows lower
  // down count exactly the same multisets they would with their own
  // cutoff; fixing the set lets every row share the same tables.
  Weights weights = materialize(res, r.hi);
  SweepResult out{res.label, weights, res.theta, res.even_only, {}};

  RepresentationTable exact_table(Instance(weights, r.hi, res.theta));
  FormulaSweep sweep(weights, res.theta, r.hi);

  for (std::int64_t n : r.grid()) {
    if (res.even_only && n % 2 != 0) continue;
    SweepRow row;
    row.n = n;
    row.cutoff = res.auto_count
                     ? cutoff_index(res.spec, n)
                     : static_cast<std::int64_t>(weights.size());
    row.exact = exact_table.at(n, res.theta);
    row.formula = sweep.count_at(n) + cfg.inject_formula_error;
    if (row.formula != row.exact) {
      std::ostringstream msg;
      msg << "formula said " << row.formula << ", exact count is "
          << row.exact << " at n = " << n << ", theta = " << res.theta;
      throw TheoremViolation(msg.str());
    }
    row.positive_terms = sweep.positive_term_count(n);
    if (cfg.with_estimates && weights.size() >= 2) {
      Instance inst(weights, n, res.theta);
      row.est_paper_literal =
          heuristic_estimate(inst, parse_variant("paper_literal"));
      row.est_parity_corrected =
          heuristic_estimate(inst, parse_variant("parity_corrected"));
      row.est_positive_s_only =
          heuristic_estimate(inst, parse_variant("positive_s_only"));
      row.has_estimates = true;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

void render_sweep(const SweepResult& result, OutputFormat format,
                  std::ostream& out) {
  const bool estimates =
      !result.rows.empty() && result.rows.front().has_estimates;
  switch (format) {
    case OutputFormat::text: {
      out << "sequence: " << result.sequence_label
          << "  weights: " << weights_str(result.weights)
          << "  theta = " << result.theta << "\n";
      out << std::left << std::setw(10) << "n" << std::setw(8) << "N"
          << std::setw(16) << "exact" << std::setw(16) << "formula"
          << std::setw(10) << "s>0";
      if (estimates)
        out << std::setw(22) << "paper_literal" << std::setw(22)
            << "parity_corrected" << std::setw(22) << "positive_s_only";
      out << "\n";
      for (const SweepRow& row : result.rows) {
        out << std::left << std::setw(10) << row.n << std::setw(8)
            << row.cutoff << std::setw(16) << count_str(row.exact)
            << std::setw(16) << count_str(row.formula) << std::setw(10)
            << row.positive_terms;
        if (row.has_estimates)
          out << std::setw(22) << rational_str(row.est_paper_literal)
              << std::setw(22) << rational_str(row.est_parity_corrected)
              << std::setw(22) << rational_str(row.est_positive_s_only);
        out << "\n";
      }
      break;
    }
    case OutputFormat::csv: {
      out << "n,N,exact,formula,positive_terms";
      if (estimates)
        out << ",est_paper_literal,est_parity_corrected,est_positive_s_only";
      out << "\n";
      for (const SweepRow& row : result.rows) {
        out << row.n << "," << row.cutoff << "," << count_str(row.exact)
            << "," << count_str(row.formula) << "," << row.positive_terms;
        if (row.has_estimates)
          out << "," << rational_str(row.est_paper_literal) << ","
              << rational_str(row.est_parity_corrected) << ","
              << rational_str(row.est_positive_s_only);
        out << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["sequence"] = result.sequence_label;
      j["weights"] = result.weights.values();
      j["theta"] = result.theta;
      ordered_json rows = ordered_json::array();
      for (const SweepRow& row : result.rows) {
        ordered_json jr;
        jr["n"] = row.n;
        jr["N"] = row.cutoff;
        jr["exact"] = count_str(row.exact);
        jr["formula"] = count_str(row.formula);
        jr["positive_terms"] = row.positive_terms;
        if (row.has_estimates) {
          jr["estimates"]["paper_literal"] =
              rational_str(row.est_paper_literal);
          jr["estimates"]["parity_corrected"] =
              rational_str(row.est_parity_corrected);
          jr["estimates"]["positive_s_only"] =
              rational_str(row.est_positive_s_only);
        }
        rows.push_back(std::move(jr));
      }
      j["rows"] = std::move(rows);
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ------------------------------------------------------------- estimate

EstimateResult run_estimate(const RunConfig& cfg) {
  const Range r = require_n_range(cfg);
  const SeqResolution res = resolve_sequence(cfg, /*needs_theta=*/true,
                                             /*allow_auto=*/true);
  Weights weights = materialize(res, r.hi);
  const auto N = weights.size();

  EstimateResult out;
  out.sequence_label = res.label;
  out.weights = weights;
  out.theta = res.theta;
  out.selected_variants =
      cfg.variant_name ? std::vector<std::string>{*cfg.variant_name}
                       : variant_names();
  for (const std::string& name : out.selected_variants)
    parse_variant(name);  // reject unknown names before any work

  if (N >= 2) {
    for (const DifferenceEquation& eq :
         build_difference_equations(Instance(weights, 0, res.theta))) {
      out.equation_gcds.push_back(
          coefficient_gcd(DenumerantProblem(eq.coeffs, 0)));
    }
  }

  RepresentationTable exact_table(Instance(weights, r.hi, res.theta));
  std::map<std::string, std::int64_t> wins;

  for (std::int64_t n : r.grid()) {
    EstimateRow row;
    row.n = n;
    row.exact = exact_table.at(n, res.theta);
    if (N < 2) {
      row.degenerate = true;
      row.note = "DegenerateN: smooth estimate needs N >= 2 weights";
      out.rows.push_back(std::move(row));
      continue;
    }
    if (N == 2) {
      row.degenerate = true;
      row.note = "constant estimate (N == 2)";
    }
    Instance inst(weights, n, res.theta);
    Rational best_gap;
    bool first = true;
    for (const std::string& name : out.selected_variants) {
      EstimateValue value;
      value.variant = name;
      value.value = heuristic_estimate(inst, parse_variant(name));
      value.rel_error = relative_error(value.value, row.exact);
      Rational gap = abs(value.value - Rational(row.exact));
      if (first || gap < best_gap) {
        best_gap = gap;
        row.closest = name;
        first = false;
      }
      row.estimates.push_back(std::move(value));
    }
    if (!row.closest.empty()) ++wins[row.closest];
    if (cfg.geometry) {
      GeometryReport geo = geometry_report(inst);
      bool first_icpt = true;
      row.min_abs_distance = std::numeric_limits<double>::infinity();
      for (const PlaneGeometry& plane : geo.planes) {
        for (const Rational& icpt : plane.intercepts) {
          if (first_icpt || icpt < row.min_intercept) row.min_intercept = icpt;
          if (first_icpt || icpt > row.max_intercept) row.max_intercept = icpt;
          first_icpt = false;
        }
        row.min_abs_distance =
            std::min(row.min_abs_distance, std::fabs(plane.distance));
      }
      row.has_geometry = !first_icpt;
    }
    out.rows.push_back(std::move(row));
  }

  std::int64_t best_wins = -1;
  for (const std::string& name : out.selected_variants) {
    auto it = wins.find(name);
    const std::int64_t w = (it == wins.end()) ? 0 : it->second;
    if (w > best_wins) {
      best_wins = w;
      out.closest_variant = name;
    }
  }
  if (best_wins <= 0) out.closest_variant = "none";
  return out;
}

void render_estimate(const EstimateResult& result, OutputFormat format,
                     std::ostream& out) {
  const bool geometry =
      std::any_of(result.rows.begin(), result.rows.end(),
                  [](const EstimateRow& r) { return r.has_geometry; });
  switch (format) {
    case OutputFormat::text: {
      out << "sequence: " << result.sequence_label
          << "  weights: " << weights_str(result.weights)
          << "  theta = " << result.theta << "\n";
      if (!result.equation_gcds.empty()) {
        out << "equation gcds:";
        for (std::int64_t g : result.equation_gcds) out << " " << g;
        out << "\n";
      }
      for (const EstimateRow& row : result.rows) {
        out << "n = " << row.n << "  exact = " << count_str(row.exact);
        for (const EstimateValue& v : row.estimates) {
          out << "  " << v.variant << " = " << rational_str(v.value)
              << " (rel " << std::setprecision(4) << v.rel_error << ")";
        }
        if (!row.closest.empty()) out << "  closest: " << row.closest;
        if (row.has_geometry) {
          out << "  intercepts in [" << rational_str(row.min_intercept)
              << ", " << rational_str(row.max_intercept)
              << "]  min |distance| = " << std::setprecision(6)
              << row.min_abs_distance;
        }
        if (!row.note.empty()) out << "  [" << row.note << "]";
        out << "\n";
      }
      out << "closest variant overall: " << result.closest_variant << "\n";
      break;
    }
    case OutputFormat::csv: {
      out << "n,exact";
      for (const std::string& name : result.selected_variants)
        out << ",est_" << name << ",relerr_" << name;
      out << ",closest";
      if (geometry) out << ",min_intercept,max_intercept,min_abs_distance";
      out << ",note\n";
      for (const EstimateRow& row : result.rows) {
        out << row.n << "," << count_str(row.exact);
        if (row.estimates.empty()) {
          for (std::size_t i = 0; i < result.selected_variants.size(); ++i)
            out << ",,";
        } else {
          for (const EstimateValue& v : row.estimates)
            out << "," << rational_str(v.value) << ","
                << std::setprecision(12) << v.rel_error;
        }
        out << "," << row.closest;
        if (geometry) {
          if (row.has_geometry)
            out << "," << rational_str(row.min_intercept) << ","
                << rational_str(row.max_intercept) << ","
                << std::setprecision(12) << row.min_abs_distance;
          else
            out << ",,,";
        }
        out << "," << row.note << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["sequence"] = result.sequence_label;
      j["weights"] = result.weights.values();
      j["theta"] = result.theta;
      {
        ordered_json gcds = ordered_json::array();
        for (std::int64_t g : result.equation_gcds) gcds.push_back(g);
        j["equation_gcds"] = std::move(gcds);
      }
      ordered_json rows = ordered_json::array();
      for (const EstimateRow& row : result.rows) {
        ordered_json jr;
        jr["n"] = row.n;
        jr["exact"] = count_str(row.exact);
        ordered_json estimates;
        for (const EstimateValue& v : row.estimates) {
          estimates[v.variant] = {{"rational", rational_str(v.value)},
                                  {"float", rational_double(v.value)},
                                  {"rel_error", v.rel_error}};
        }
        jr["estimates"] = std::move(estimates);
        if (!row.closest.empty()) jr["closest"] = row.closest;
        if (row.degenerate) jr["note"] = row.note;
        if (row.has_geometry) {
          jr["geometry"] = {
              {"min_intercept", rational_str(row.min_intercept)},
              {"max_intercept", rational_str(row.max_intercept)},
              {"min_abs_distance", row.min_abs_distance}};
        }
        rows.push_back(std::move(jr));
      }
      j["rows"] = std::move(rows);
      j["closest_variant"] = result.closest_variant;
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ----------------------------------------------------------- identities

IdentitiesResult run_identities(const RunConfig& cfg) {
  if (!cfg.t_range) throw InputError("--t is required");
  const SeqResolution res = resolve_sequence(cfg, /*needs_theta=*/false,
                                             /*allow_auto=*/false);
  Weights weights = materialize(res, 0);

  IdentitiesResult out;
  out.sequence_label = res.label;
  out.weights = weights;
  out.checks = verify_identity(weights, cfg.t_range->lo, cfg.t_range->hi);
  for (const IdentityCheck& c : out.checks)
    out.all_equal = out.all_equal && c.equal;
  return out;
}

void render_identities(const IdentitiesResult& result, OutputFormat format,
                       std::ostream& out) {
  switch (format) {
    case OutputFormat::text: {
      out << "weights: " << weights_str(result.weights) << "\n";
      out << std::left << std::setw(6) << "t" << std::setw(14) << "case"
          << std::setw(24) << "lhs" << std::setw(24) << "rhs"
          << "equal\n";
      for (const IdentityCheck& c : result.checks) {
        out << std::left << std::setw(6) << c.exponent << std::setw(14)
            << power_sum_case_name(c.branch) << std::setw(24)
            << rational_str(c.lhs) << std::setw(24) << rational_str(c.rhs)
            << (c.equal ? "yes" : "NO") << "\n";
      }
      out << (result.all_equal ? "all identities hold\n"
                               : "IDENTITY MISMATCH\n");
      break;
    }
    case OutputFormat::csv: {
      out << "t,case,lhs,rhs,equal\n";
      for (const IdentityCheck& c : result.checks) {
        out << c.exponent << "," << power_sum_case_name(c.branch) << ","
            << rational_str(c.lhs) << "," << rational_str(c.rhs) << ","
            << (c.equal ? "true" : "false") << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["sequence"] = result.sequence_label;
      j["weights"] = result.weights.values();
      ordered_json checks = ordered_json::array();
      for (const IdentityCheck& c : result.checks) {
        checks.push_back({{"t", c.exponent},
                          {"case", power_sum_case_name(c.branch)},
                          {"lhs", rational_str(c.lhs)},
                          {"rhs", rational_str(c.rhs)},
                          {"equal", c.equal}});
      }
      j["checks"] = std::move(checks);
      j["all_equal"] = result.all_equal;
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------- bench

namespace {

std::vector<std::int64_t> bench_grid(std::int64_t max_size) {
  std::vector<std::int64_t> grid;
  for (std::int64_t v = 100; v < max_size; v *= 2) grid.push_back(v);
  if (grid.empty() || grid.back() != max_size) grid.push_back(max_size);
  return grid;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

BenchResult run_bench(const RunConfig& cfg) {
  BenchResult out;
  if (cfg.bench_suite == "denumerant") {
    std::vector<std::int64_t> coeffs = {1, 2, 3};
    if (!cfg.sequence_text.empty()) {
      const SequenceSpec spec = parse_sequence_spec(cfg.sequence_text);
      if (spec.kind == SequenceKind::from_list && !cfg.fixed_count) {
        coeffs = spec.values;
      } else {
        if (!cfg.fixed_count)
          throw InputError("bench --seq with a generator needs --N");
        coeffs = builtin_sequence(spec, *cfg.fixed_count).values();
      }
    }
    if (cfg.bench_max_s < 1) throw InputError("--max-s must be >= 1");
    for (std::int64_t s : bench_grid(cfg.bench_max_s)) {
      const auto start = std::chrono::steady_clock::now();
      const auto table = denumerant_table(coeffs, s);
      BenchRow row;
      row.wall_ms = elapsed_ms(start);
      row.suite = "denumerant";
      row.size = s;
      row.table_cells = s + 1;
      row.result = table[static_cast<std::size_t>(s)].get_str();
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  if (cfg.bench_suite == "representation") {
    const std::int64_t theta = cfg.theta.value_or(cfg.bench_theta);
    if (cfg.bench_max_n < 0) throw InputError("--max-n must be >= 0");
    SequenceSpec spec = SequenceSpec::squares();
    if (!cfg.sequence_text.empty()) spec = parse_sequence_spec(cfg.sequence_text);
    Weights weights =
        cfg.fixed_count
            ? builtin_sequence(spec, *cfg.fixed_count)
            : (spec.kind == SequenceKind::from_list
                   ? make_weights(spec.values)
                   : builtin_sequence(spec, cutoff_index(spec, cfg.bench_max_n)));
    for (std::int64_t n : bench_grid(cfg.bench_max_n)) {
      const auto start = std::chrono::steady_clock::now();
      RepresentationTable table(Instance(weights, n, theta));
      BenchRow row;
      row.wall_ms = elapsed_ms(start);
      row.suite = "representation";
      row.size = n;
      row.table_cells = (n + 1) * (theta + 1);
      row.result = table.at(n, theta).get_str();
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  throw InputError("unknown bench suite '" + cfg.bench_suite +
                   "' (denumerant | representation)");
}

void render_bench(const BenchResult& result, OutputFormat format,
                  std::ostream& out) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json rows = ordered_json::array();
      for (const BenchRow& row : result.rows) {
        rows.push_back({{"suite", row.suite},
                        {"size", row.size},
                        {"wall_ms", row.wall_ms},
                        {"table_cells", row.table_cells},
                        {"result", row.result}});
      }
      out << rows.dump(2) << "\n";
      break;
    }
    case OutputFormat::text:
    case OutputFormat::csv: {
      out << "suite,size,wall_ms,table_cells,result\n";
      for (const BenchRow& row : result.rows) {
        out << row.suite << "," << row.size << "," << std::setprecision(6)
            << row.wall_ms << "," << row.table_cells << "," << row.result
            << "\n";
      }
      break;
    }
  }
}

}  // namespace addrep::cli

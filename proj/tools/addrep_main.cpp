#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "addrep/cli.hpp"
#include "addrep/errors.hpp"

namespace {

using addrep::cli::OutputFormat;
using addrep::cli::Preset;
using addrep::cli::RunConfig;

// "--t -3..6" would be read by the option parser as a flag named -3; glue
// range values that start with a minus onto their flag with '='.
std::vector<std::string> glue_negative_ranges(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool range_flag = args[i] == "--t" || args[i] == "--n";
    if (range_flag && i + 1 < args.size() && args[i + 1].size() > 1 &&
        args[i + 1][0] == '-' &&
        std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

struct RawFlags {
  std::string preset;
  std::string n_text;
  std::string t_text;
  std::string format = "text";
  std::int64_t fixed_count = 0;
  std::int64_t theta = 0;
};

void add_sequence_flags(CLI::App* cmd, RunConfig& cfg, RawFlags& raw) {
  cmd->add_option("--seq", cfg.sequence_text,
                  "squares | powers:k | primes | list:c1,c2,... | file:PATH");
  cmd->add_option("--preset", raw.preset,
                  "lagrange | goldbach | waring:k");
  cmd->add_option("--N", raw.fixed_count, "fix the number of weights");
  cmd->add_flag("--auto-N", cfg.auto_count,
                "use as many weights as fit under n");
  cmd->add_option("--format", raw.format, "text | csv | json");
}

void add_instance_flags(CLI::App* cmd, RunConfig& cfg, RawFlags& raw) {
  cmd->add_option("--n", raw.n_text, "target value or range lo..hi[:step]");
  cmd->add_option("--theta", raw.theta, "number of parts");
  cmd->add_option("--budget", cfg.budget, "oracle state budget");
}

void finish_config(const CLI::App* cmd, RunConfig& cfg, const RawFlags& raw) {
  // not every subcommand defines every flag; probe without throwing
  auto given = [cmd](const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--N")) cfg.fixed_count = raw.fixed_count;
  if (given("--theta")) cfg.theta = raw.theta;
  if (given("--n")) cfg.n_range = addrep::cli::parse_range(raw.n_text);
  if (given("--t")) cfg.t_range = addrep::cli::parse_range(raw.t_text);
  cfg.format = addrep::cli::parse_format(raw.format);
  if (!raw.preset.empty()) {
    if (raw.preset == "lagrange") {
      cfg.preset = Preset::lagrange;
    } else if (raw.preset == "goldbach") {
      cfg.preset = Preset::goldbach;
    } else if (raw.preset.rfind("waring", 0) == 0) {
      cfg.preset = Preset::waring;
      const std::size_t colon = raw.preset.find(':');
      if (colon == std::string::npos)
        throw addrep::InputError(
            "waring preset needs an exponent, e.g. waring:3");
      try {
        cfg.waring_exponent = std::stoll(raw.preset.substr(colon + 1));
      } catch (const std::exception&) {
        throw addrep::InputError("bad waring exponent in '" + raw.preset +
                                 "'");
      }
    } else {
      throw addrep::InputError("unknown preset '" + raw.preset +
                               "' (lagrange | goldbach | waring:k)");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic counting of fixed-length weighted sums",
               "addrep"};
  app.require_subcommand(1);

  RunConfig count_cfg, sweep_cfg, estimate_cfg, identities_cfg, bench_cfg;
  RawFlags count_raw, sweep_raw, estimate_raw, identities_raw, bench_raw;
  std::string variant_raw;

  CLI::App* count = app.add_subcommand(
      "count", "exact count and alternating-sum formula for one instance");
  add_sequence_flags(count, count_cfg, count_raw);
  add_instance_flags(count, count_cfg, count_raw);
  count->add_flag("--breakdown", count_cfg.breakdown,
                  "print each formula term");
  count->add_flag("--oracle", count_cfg.run_oracles,
                  "cross-check with brute force and the series product");
  count
      ->add_option("--inject-theorem-violation",
                   count_cfg.inject_formula_error,
                   "shift the formula result (test hook)")
      ->group("");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "exact vs formula counts over a range of n");
  add_sequence_flags(sweep, sweep_cfg, sweep_raw);
  add_instance_flags(sweep, sweep_cfg, sweep_raw);
  sweep->add_flag("--estimates", sweep_cfg.with_estimates,
                  "add smooth-estimate columns");
  sweep
      ->add_option("--inject-theorem-violation",
                   sweep_cfg.inject_formula_error,
                   "shift every formula result (test hook)")
      ->group("");

  CLI::App* estimate = app.add_subcommand(
      "estimate", "smooth estimates next to exact counts");
  add_sequence_flags(estimate, estimate_cfg, estimate_raw);
  add_instance_flags(estimate, estimate_cfg, estimate_raw);
  estimate->add_option(
      "--variant", variant_raw,
      "paper_literal | parity_corrected | positive_s_only (default: all)");
  estimate->add_flag("--geometry", estimate_cfg.geometry,
                     "add hyperplane intercepts and distances");

  CLI::App* identities = app.add_subcommand(
      "identities", "verify the node power-sum closed forms");
  add_sequence_flags(identities, identities_cfg, identities_raw);
  identities->add_option("--t", identities_raw.t_text,
                         "exponent range lo..hi");

  CLI::App* bench = app.add_subcommand("bench", "table-build timing grids");
  add_sequence_flags(bench, bench_cfg, bench_raw);
  bench->add_option("--suite", bench_cfg.bench_suite,
                    "denumerant | representation");
  bench->add_option("--max-s", bench_cfg.bench_max_s,
                    "largest denumerant target");
  bench->add_option("--max-n", bench_cfg.bench_max_n,
                    "largest representation target");
  bench->add_option("--theta", bench_raw.theta,
                    "parts for the representation suite");

  const std::vector<std::string> args = glue_negative_ranges(argc, argv);

  try {
    try {
      // CLI11 parses reversed argv
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
      app.exit(e);  // prints the parse diagnostic
      return 2;     // flag misuse is a validation failure
    }

    if (*count) {
      finish_config(count, count_cfg, count_raw);
      const auto result = addrep::cli::run_count(count_cfg);
      render_count(result, count_cfg.format, std::cout);
    } else if (*sweep) {
      finish_config(sweep, sweep_cfg, sweep_raw);
      const auto result = addrep::cli::run_sweep(sweep_cfg);
      render_sweep(result, sweep_cfg.format, std::cout);
    } else if (*estimate) {
      finish_config(estimate, estimate_cfg, estimate_raw);
      if (estimate->count("--variant"))
        estimate_cfg.variant_name = variant_raw;
      const auto result = addrep::cli::run_estimate(estimate_cfg);
      render_estimate(result, estimate_cfg.format, std::cout);
    } else if (*identities) {
      finish_config(identities, identities_cfg, identities_raw);
      const auto result = addrep::cli::run_identities(identities_cfg);
      render_identities(result, identities_cfg.format, std::cout);
      if (!result.all_equal) {
        std::cerr << "IdentityMismatch: a closed form disagreed; see table\n";
        return 3;
      }
    } else if (*bench) {
      finish_config(bench, bench_cfg, bench_raw);
      if (bench->count("--theta")) bench_cfg.theta = bench_raw.theta;
      const auto result = addrep::cli::run_bench(bench_cfg);
      render_bench(result, bench_cfg.format, std::cout);
    }
    return 0;
  } catch (const addrep::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const addrep::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

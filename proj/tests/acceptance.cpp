// Acceptance checks for the whole library plus the installed CLI binary.
// Run as: acceptance <path-to-addrep-binary>
// Prints one [PASS]/[FAIL] line per criterion and exits nonzero if any
// criterion failed.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "addrep/cli.hpp"
#include "addrep/core_model.hpp"
#include "addrep/denumerant.hpp"
#include "addrep/difference_formula.hpp"
#include "addrep/errors.hpp"
#include "addrep/lagrange_identities.hpp"
#include "addrep/representation.hpp"

using namespace addrep;

namespace {

std::string g_binary;

struct CliOutput {
  int exit_code = -1;
  std::string text;
};

CliOutput run_cli(const std::string& args) {
  const std::string command = "'" + g_binary + "' " + args + " 2>/dev/null";
  CliOutput out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "could not spawn: " << command << "\n";
    return out;
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    out.text.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) out.exit_code = WEXITSTATUS(status);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : split(text, '\n')) {
    if (!line.empty()) rows.push_back(split(line, ','));
  }
  return rows;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << detail << "\n";
  if (!ok) ++g_failures;
}

// All strictly increasing subsets of {0..max_value} with the given size.
void collect_subsets(std::int64_t max_value, std::size_t size,
                     std::vector<std::int64_t>& current,
                     std::vector<std::vector<std::int64_t>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  const std::int64_t start = current.empty() ? 0 : current.back() + 1;
  for (std::int64_t v = start; v <= max_value; ++v) {
    current.push_back(v);
    collect_subsets(max_value, size, current, out);
    current.pop_back();
  }
}

// ---------------------------------------------------------------------
// 1. The alternating-sum formula equals the exact count everywhere.

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  long long instances = 0;

  std::vector<std::vector<std::int64_t>> sets;
  std::vector<std::int64_t> scratch;
  for (std::size_t size = 1; size <= 5; ++size)
    collect_subsets(15, size, scratch, sets);

  for (const auto& values : sets) {
    Weights w = make_weights(values);
    RepresentationTable exact(Instance(w, 60, 4));
    for (std::int64_t theta = 0; theta <= 4; ++theta) {
      FormulaSweep sweep(w, theta, 60);
      for (std::int64_t n = 0; n <= 60; ++n) {
        if (sweep.count_at(n) != exact.at(n, theta)) {
          std::ostringstream detail;
          detail << "mismatch at weights index " << instances;
          report(1, false, detail.str());
          return;
        }
        ++instances;
      }
    }
  }

  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> size_dist(1, 8);
  std::uniform_int_distribution<std::int64_t> value_dist(0, 40);
  std::uniform_int_distribution<std::int64_t> theta_dist(0, 6);
  std::uniform_int_distribution<std::int64_t> n_dist(0, 200);
  for (int trial = 0; trial < 500; ++trial) {
    std::set<std::int64_t> pool;
    const auto size = static_cast<std::size_t>(size_dist(rng));
    while (pool.size() < size) pool.insert(value_dist(rng));
    Instance inst(make_weights({pool.begin(), pool.end()}), n_dist(rng),
                  theta_dist(rng));
    if (count_via_difference_formula(inst) !=
        count_representations_dp(inst)) {
      report(1, false, "mismatch on a randomized instance");
      return;
    }
    ++instances;
  }

  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "formula == exact on " << sets.size()
         << " weight sets x 5 theta x 61 n plus 500 randomized ("
         << instances << " instances, " << elapsed << " s)";
  report(1, elapsed < 60.0, detail.str());
}

// ---------------------------------------------------------------------
// 2. DP, brute force, and the series product agree exactly.

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::int64_t kBudget = 1'000'000;

  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::int64_t> value_dist(0, 20);
  long long triple_checked = 0;
  for (std::size_t size = 1; size <= 6; ++size) {
    std::set<std::vector<std::int64_t>> sets;
    while (sets.size() < 4) {
      std::set<std::int64_t> pool;
      while (pool.size() < size) pool.insert(value_dist(rng));
      sets.insert(std::vector<std::int64_t>(pool.begin(), pool.end()));
    }
    for (const auto& values : sets) {
      Weights w = make_weights(values);
      for (std::int64_t theta = 0; theta <= 6; ++theta) {
        for (std::int64_t n : {0, 1, 2, 3, 7, 13, 29, 60}) {
          Instance inst(w, n, theta);
          const Count dp = count_representations_dp(inst);
          Count brute;
          try {
            brute = count_representations_bruteforce(inst, kBudget);
          } catch (const BudgetExceeded&) {
            continue;  // outside the oracle contract
          }
          const Count series = generating_series_check(inst);
          if (dp != brute || dp != series) {
            report(2, false, "triple disagreement on a grid instance");
            return;
          }
          ++triple_checked;
        }
      }
    }
  }

  std::uniform_int_distribution<std::int64_t> m_dist(0, 5);
  std::uniform_int_distribution<std::int64_t> c_dist(1, 20);
  std::uniform_int_distribution<std::int64_t> s_dist(0, 60);
  int randoms = 0;
  while (randoms < 1000) {
    std::vector<std::int64_t> coeffs;
    const std::int64_t m = m_dist(rng);
    for (std::int64_t i = 0; i < m; ++i) coeffs.push_back(c_dist(rng));
    DenumerantProblem problem(coeffs, s_dist(rng));
    Count brute;
    try {
      brute = denumerant_bruteforce(problem, kBudget);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (denumerant_dp(problem) != brute) {
      report(2, false, "denumerant dp != brute force");
      return;
    }
    ++randoms;
  }

  std::ostringstream detail;
  detail << "dp == brute force == series on " << triple_checked
         << " instances; dp == brute force on " << randoms
         << " random linear equations (" << seconds_since(start) << " s)";
  report(2, true, detail.str());
}

// ---------------------------------------------------------------------
// 3. Node power sums match their closed forms, exactly.

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> value_dist(1, 20);
  long long sets_checked = 0;
  long long exponents_checked = 0;
  for (std::size_t size = 2; size <= 6; ++size) {
    std::set<std::vector<std::int64_t>> sets;
    const std::size_t want = (size == 2) ? 40 : 120;
    std::size_t attempts = 0;
    while (sets.size() < want && attempts < 100'000) {
      ++attempts;
      std::set<std::int64_t> pool;
      while (pool.size() < size) pool.insert(value_dist(rng));
      sets.insert(std::vector<std::int64_t>(pool.begin(), pool.end()));
    }
    for (const auto& values : sets) {
      Weights w = make_weights(values);
      const auto N = static_cast<std::int64_t>(w.size());
      for (const IdentityCheck& c : verify_identity(w, -4, 2 * N)) {
        if (!c.equal) {
          std::ostringstream detail;
          detail << "mismatch at exponent " << c.exponent;
          report(3, false, detail.str());
          return;
        }
        ++exponents_checked;
      }
      ++sets_checked;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "closed forms exact on " << sets_checked << " node sets, "
         << exponents_checked << " exponents (" << elapsed << " s)";
  report(3, sets_checked >= 500 && elapsed < 30.0, detail.str());
}

// ---------------------------------------------------------------------
// 4. The leading-order estimate converges at the documented rate.

void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::int64_t> coeffs = {1, 2, 3};
  bool ok = true;
  std::ostringstream detail;
  detail << "relative gaps:";
  const std::pair<std::int64_t, std::int64_t> probes[] = {
      {10'000, 1'000}, {100'000, 10'000}};  // (target, 1/tolerance)
  for (const auto& [s, inverse_tol] : probes) {
    const Count exact = denumerant_dp({coeffs, s});
    const Rational estimate = denumerant_asymptotic({coeffs, s});
    const Rational gap = abs(Rational(exact) - estimate) / Rational(exact);
    detail << " s=" << s << ": " << rational_double(gap);
    if (gap >= make_rational(1, inverse_tol)) ok = false;
  }
  const double elapsed = seconds_since(start);
  detail << " (" << elapsed << " s)";
  report(4, ok && elapsed < 10.0, detail.str());
}

// ---------------------------------------------------------------------
// 5. The two flagship sweeps run end to end with every count >= 1.

void criterion_5() {
  const auto start = std::chrono::steady_clock::now();

  const CliOutput lagrange =
      run_cli("sweep --preset lagrange --n 0..2000 --format csv");
  bool ok = lagrange.exit_code == 0;
  std::int64_t lagrange_rows = 0;
  if (ok) {
    const auto rows = parse_csv(lagrange.text);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() < 4 || BigInt(rows[i][2]) < 1) {
        ok = false;
        break;
      }
      ++lagrange_rows;
    }
    ok = ok && lagrange_rows == 2001;
  }

  std::int64_t goldbach_rows = 0;
  if (ok) {
    const CliOutput goldbach =
        run_cli("sweep --preset goldbach --n 4..10000 --format csv");
    ok = goldbach.exit_code == 0;
    if (ok) {
      const auto rows = parse_csv(goldbach.text);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() < 4 || std::stoll(rows[i][0]) % 2 != 0 ||
            BigInt(rows[i][2]) < 1) {
          ok = false;
          break;
        }
        ++goldbach_rows;
      }
      ok = ok && goldbach_rows == 4999;
    }
  }

  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "four-squares sweep (" << lagrange_rows
         << " rows) and two-primes sweep (" << goldbach_rows
         << " even rows) all >= 1 (" << elapsed << " s)";
  report(5, ok && elapsed < 120.0, detail.str());
}

// ---------------------------------------------------------------------
// 6. The sign-variant comparison runs and behaves as documented.

void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string flagged = "?";

  const CliOutput report_run = run_cli(
      "estimate --seq list:0,1,4,9,16 --theta 4 --n 1000..10000:1000 "
      "--format json");
  ok = report_run.exit_code == 0;
  if (ok) {
    const auto parsed = nlohmann::json::parse(report_run.text);
    ok = parsed.at("rows").size() == 10;
    for (const auto& row : parsed.at("rows")) {
      ok = ok && row.at("estimates").size() == 3;
    }
    flagged = parsed.at("closest_variant").get<std::string>();
    ok = ok && (flagged == "paper_literal" || flagged == "parity_corrected" ||
                flagged == "positive_s_only");
  }

  // companion run at even N: the two sign conventions must mirror exactly
  if (ok) {
    const CliOutput even_run = run_cli(
        "estimate --seq list:0,1,4,9 --theta 4 --n 1000..10000:1000 "
        "--format json");
    ok = even_run.exit_code == 0;
    if (ok) {
      const auto parsed = nlohmann::json::parse(even_run.text);
      for (const auto& row : parsed.at("rows")) {
        const Rational literal(
            row.at("estimates").at("paper_literal").at("rational")
                .get<std::string>(), 10);
        const Rational corrected(
            row.at("estimates").at("parity_corrected").at("rational")
                .get<std::string>(), 10);
        if (corrected != -literal) {
          ok = false;
          break;
        }
      }
    }
  }

  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "variant report complete, best tracker flagged ('" << flagged
         << "'), even-N conventions mirror exactly (" << elapsed << " s)";
  report(6, ok, detail.str());
}

// ---------------------------------------------------------------------
// 7. Exit codes behave, and sweep JSON round-trips faithfully.

void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream why;

  const std::pair<std::string, int> matrix[] = {
      {"count --seq list:1,2,3 --n 4 --theta 2", 0},
      {"sweep --preset lagrange --n 0..10", 0},
      {"identities --seq list:1,2,3 --t=-3..6", 0},
      {"count --seq list:1,1,2 --n 4 --theta 2", 2},
      {"count --seq list:1,2 --n 4", 2},
      {"count --seq squares --n 4 --theta 2", 2},   // no --N / --auto-N
      {"identities --seq list:0,1,4 --t=-1..-1", 2},
      {"sweep --preset goldbach --theta 3 --n 4..10", 2},
      {"count --no-such-flag", 2},
      {"frobnicate", 2},
      {"count --seq list:1,2,3 --n 4 --theta 2 --inject-theorem-violation 1",
       3},
      {"sweep --seq list:1,2 --n 0..5 --theta 2 --inject-theorem-violation 1",
       3},
  };
  for (const auto& [args, expected] : matrix) {
    const CliOutput run = run_cli(args);
    if (run.exit_code != expected) {
      ok = false;
      why << " [" << args << " -> " << run.exit_code << ", want " << expected
          << "]";
    }
  }

  // JSON round trip, in process, over randomized sweeps
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::int64_t> size_dist(1, 5);
  std::uniform_int_distribution<std::int64_t> value_dist(0, 25);
  std::uniform_int_distribution<std::int64_t> theta_dist(0, 5);
  std::uniform_int_distribution<std::int64_t> lo_dist(0, 10);
  std::uniform_int_distribution<std::int64_t> span_dist(0, 30);
  std::uniform_int_distribution<std::int64_t> step_dist(1, 3);
  int roundtrips = 0;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    std::set<std::int64_t> pool;
    const auto size = static_cast<std::size_t>(size_dist(rng));
    while (pool.size() < size) pool.insert(value_dist(rng));
    std::ostringstream seq;
    seq << "list:";
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      if (it != pool.begin()) seq << ",";
      seq << *it;
    }
    cli::RunConfig cfg;
    cfg.sequence_text = seq.str();
    cfg.theta = theta_dist(rng);
    const std::int64_t lo = lo_dist(rng);
    std::ostringstream range;
    range << lo << ".." << lo + span_dist(rng) << ":" << step_dist(rng);
    cfg.n_range = cli::parse_range(range.str());

    std::ostringstream buffer;
    render_sweep(cli::run_sweep(cfg), cli::OutputFormat::json, buffer);
    const auto parsed = nlohmann::json::parse(buffer.str());
    Weights weights =
        make_weights(parsed.at("weights").get<std::vector<std::int64_t>>());
    const auto theta = parsed.at("theta").get<std::int64_t>();
    if (parsed.at("rows").size() != cfg.n_range->grid().size()) {
      ok = false;
      why << " [row count off for " << seq.str() << "]";
      break;
    }
    for (const auto& row : parsed.at("rows")) {
      Instance inst(weights, row.at("n").get<std::int64_t>(), theta);
      if (count_representations_dp(inst).get_str() !=
              row.at("exact").get<std::string>() ||
          count_via_difference_formula(inst).get_str() !=
              row.at("formula").get<std::string>()) {
        ok = false;
        why << " [round trip mismatch for " << seq.str() << "]";
        break;
      }
    }
    ++roundtrips;
  }

  // one round trip through the real binary as well
  if (ok) {
    const CliOutput run =
        run_cli("sweep --seq list:0,3,7 --n 0..25 --theta 3 --format json");
    ok = run.exit_code == 0;
    if (ok) {
      const auto parsed = nlohmann::json::parse(run.text);
      Weights weights =
          make_weights(parsed.at("weights").get<std::vector<std::int64_t>>());
      for (const auto& row : parsed.at("rows")) {
        Instance inst(weights, row.at("n").get<std::int64_t>(), 3);
        if (count_representations_dp(inst).get_str() !=
            row.at("exact").get<std::string>()) {
          ok = false;
          why << " [binary round trip mismatch]";
          break;
        }
      }
    } else {
      why << " [binary sweep exited " << run.exit_code << "]";
    }
  }

  std::ostringstream detail;
  detail << "exit-code matrix (" << std::size(matrix) << " invocations) and "
         << roundtrips << " JSON round trips (" << seconds_since(start)
         << " s)";
  if (!ok) detail << " --" << why.str();
  report(7, ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-addrep-binary>\n";
    return 2;
  }
  g_binary = argv[1];

  const CliOutput probe = run_cli("--help");
  if (probe.exit_code != 0) {
    std::cerr << "binary at '" << g_binary << "' did not answer --help\n";
    return 2;
  }

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all 7 criteria passed\n";
  return 0;
}

#include "addrep/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

Weights make_weights(std::vector<std::int64_t> values) {
  if (values.empty()) throw InputError("weight list must not be empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      std::ostringstream msg;
      msg << "weights[" << i << "] = " << values[i];
      throw NegativeWeight(msg.str());
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      std::ostringstream msg;
      msg << "weights[" << i - 1 << "] = " << values[i - 1]
          << " >= weights[" << i << "] = " << values[i];
      throw NotStrictlyIncreasing(msg.str());
    }
  }
  return Weights(std::move(values));
}

Instance::Instance(Weights w, std::int64_t n_, std::int64_t theta_)
    : weights(std::move(w)), n(n_), theta(theta_) {
  if (n < 0) throw InputError("target n must be >= 0");
  if (theta < 0) throw InputError("part count theta must be >= 0");
}

namespace {

// (base)^k with overflow detection; sequence terms must stay in int64.
std::int64_t checked_pow(std::int64_t base, std::int64_t k) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      std::ostringstream msg;
      msg << "sequence term " << base << "^" << k << " overflows 64 bits";
      throw InputError(msg.str());
    }
  }
  return out;
}

// Largest r >= 0 with r^k <= n (n >= 0, k >= 1).
std::int64_t integer_kth_root(std::int64_t n, std::int64_t k) {
  if (n <= 0) return 0;
  if (k == 1) return n;
  auto fits = [&](std::int64_t r) {
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(acc, r, &acc) || acc > n) return false;
    }
    return true;
  };
  std::int64_t lo = 0, hi = n;
  // tighten hi with a float guess to keep the bisection short
  std::int64_t guess =
      static_cast<std::int64_t>(std::pow(static_cast<double>(n), 1.0 / k)) + 2;
  if (guess < hi) hi = guess;
  while (!fits(hi)) --hi;  // float guess can overshoot by a step or two
  (void)lo;
  return hi;
}

}  // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

std::vector<std::int64_t> first_primes(std::int64_t count) {
  if (count < 1) throw InputError("prime count must be >= 1");
  // p_k < k(ln k + ln ln k) for k >= 6; pad a little and re-sieve in the
  // unlikely case the bound was still short.
  std::int64_t limit = 16;
  if (count > 6) {
    double k = static_cast<double>(count);
    limit = static_cast<std::int64_t>(k * (std::log(k) + std::log(std::log(k)))) + 16;
  }
  for (;;) {
    auto primes = primes_up_to(limit);
    if (static_cast<std::int64_t>(primes.size()) >= count) {
      primes.resize(static_cast<std::size_t>(count));
      return primes;
    }
    limit *= 2;
  }
}

Weights builtin_sequence(const SequenceSpec& spec, std::int64_t count) {
  if (count < 1) throw InputError("sequence length must be >= 1");
  std::vector<std::int64_t> values;
  switch (spec.kind) {
    case SequenceKind::squares:
      values.reserve(static_cast<std::size_t>(count));
      for (std::int64_t nu = 1; nu <= count; ++nu)
        values.push_back(checked_pow(nu - 1, 2));
      break;
    case SequenceKind::powers:
      if (spec.exponent < 1) throw InputError("powers exponent must be >= 1");
      values.reserve(static_cast<std::size_t>(count));
      for (std::int64_t nu = 1; nu <= count; ++nu)
        values.push_back(checked_pow(nu - 1, spec.exponent));
      break;
    case SequenceKind::primes:
      values = first_primes(count);
      break;
    case SequenceKind::from_list:
      if (count > static_cast<std::int64_t>(spec.values.size())) {
        std::ostringstream msg;
        msg << "requested " << count << " terms from a list of "
            << spec.values.size();
        throw InputError(msg.str());
      }
      values.assign(spec.values.begin(), spec.values.begin() + count);
      break;
  }
  return make_weights(std::move(values));
}

std::int64_t cutoff_index(const SequenceSpec& spec, std::int64_t n) {
  if (n < 0) throw InputError("cutoff target n must be >= 0");
  switch (spec.kind) {
    case SequenceKind::squares:
      return integer_kth_root(n, 2) + 1;  // a_{r+1} = r^2 <= n
    case SequenceKind::powers:
      if (spec.exponent < 1) throw InputError("powers exponent must be >= 1");
      return integer_kth_root(n, spec.exponent) + 1;
    case SequenceKind::primes: {
      auto primes = primes_up_to(n);
      return std::max<std::int64_t>(1, static_cast<std::int64_t>(primes.size()));
    }
    case SequenceKind::from_list: {
      // validate once so the scan runs over a genuine weight list
      Weights w = make_weights(spec.values);
      std::int64_t k = 0;
      while (k < static_cast<std::int64_t>(w.size()) && w[k] <= n) ++k;
      return std::max<std::int64_t>(1, k);
    }
  }
  throw InputError("unknown sequence kind");
}

std::vector<std::int64_t> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sequence file: " + path);
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // trim leading whitespace, then skip blanks and comment lines
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream parse(line.substr(start));
    std::int64_t v;
    std::string trailing;
    if (!(parse >> v) || (parse >> trailing)) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": expected one integer per line, got '"
          << line << "'";
      throw InputError(msg.str());
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace addrep

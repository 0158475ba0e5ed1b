#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addrep/numeric.hpp"

namespace addrep {

/// Strictly increasing list of nonnegative integers a_1 < a_2 < ... < a_N.
/// The only way to build one is through make_weights (or the sequence
/// generators, which funnel through it), so holding a Weights object is
/// proof the validation ran.
class Weights {
 public:
  /// Empty placeholder so result structs can default-construct; every
  /// populated Weights still comes through make_weights.
  Weights() = default;

  std::size_t size() const { return values_.size(); }
  const std::vector<std::int64_t>& values() const { return values_; }

  /// 0-based access; at(0) is a_1.
  std::int64_t at(std::size_t i) const { return values_.at(i); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const Weights& other) const = default;

 private:
  friend Weights make_weights(std::vector<std::int64_t> values);
  explicit Weights(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}

  std::vector<std::int64_t> values_;
};

/// Validates and wraps a weight list.
/// Throws NegativeWeight / NotStrictlyIncreasing / InputError (empty list).
Weights make_weights(std::vector<std::int64_t> values);

/// One counting problem: in how many ways is n a sum of exactly theta
/// values drawn (with repetition, order ignored) from the weight list?
struct Instance {
  Instance(Weights w, std::int64_t n_, std::int64_t theta_);

  Weights weights;
  std::int64_t n;
  std::int64_t theta;
};

enum class SequenceKind { squares, powers, primes, from_list };

struct SequenceSpec {
  SequenceKind kind = SequenceKind::squares;
  std::int64_t exponent = 2;           // powers only; k >= 1
  std::vector<std::int64_t> values;    // from_list only

  static SequenceSpec squares() { return {SequenceKind::squares, 2, {}}; }
  static SequenceSpec powers(std::int64_t k) {
    return {SequenceKind::powers, k, {}};
  }
  static SequenceSpec primes() { return {SequenceKind::primes, 0, {}}; }
  static SequenceSpec from_list(std::vector<std::int64_t> v) {
    return {SequenceKind::from_list, 0, std::move(v)};
  }
};

/// First `count` terms of the sequence, validated via make_weights.
///   squares:   0, 1, 4, 9, ...          (nu-1)^2
///   powers(k): 0, 1, 2^k, 3^k, ...      (nu-1)^k
///   primes:    2, 3, 5, 7, ...
///   from_list: prefix of the given list
/// Throws InputError for count < 1, count beyond a from_list length, or a
/// powers term that overflows 64 bits.
Weights builtin_sequence(const SequenceSpec& spec, std::int64_t count);

/// Largest N with a_N <= n, clamped below at 1 so the returned weight set
/// is never empty. For squares this is floor(sqrt(n)) + 1.
std::int64_t cutoff_index(const SequenceSpec& spec, std::int64_t n);

/// Simple sieve of Eratosthenes; primes p <= limit in increasing order.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// First `count` primes.
std::vector<std::int64_t> first_primes(std::int64_t count);

/// Reads a weight list from a text file: one integer per line, blank lines
/// and lines starting with '#' ignored. Validation is make_weights' job;
/// this only parses. Throws InputError on unreadable files or junk lines.
std::vector<std::int64_t> read_sequence_file(const std::string& path);

}  // namespace addrep

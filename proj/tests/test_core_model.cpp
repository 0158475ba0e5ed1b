#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "addrep/core_model.hpp"
#include "addrep/errors.hpp"

using namespace addrep;

TEST_CASE("make_weights accepts strictly increasing nonnegative lists") {
  Weights w = make_weights({0, 1, 4, 9});
  CHECK(w.size() == 4);
  CHECK(w[0] == 0);
  CHECK(w[3] == 9);
}

TEST_CASE("make_weights rejects bad lists") {
  CHECK_THROWS_AS(make_weights({1, 1, 2}), NotStrictlyIncreasing);
  CHECK_THROWS_AS(make_weights({2, 1}), NotStrictlyIncreasing);
  CHECK_THROWS_AS(make_weights({-1, 2}), NegativeWeight);
  CHECK_THROWS_AS(make_weights({}), InputError);
}

TEST_CASE("instance validation") {
  Weights w = make_weights({1, 2});
  CHECK_THROWS_AS(Instance(w, -1, 2), InputError);
  CHECK_THROWS_AS(Instance(w, 4, -1), InputError);
  Instance ok(w, 0, 0);
  CHECK(ok.n == 0);
}

TEST_CASE("builtin sequences match their definitions") {
  CHECK(builtin_sequence(SequenceSpec::squares(), 4).values() ==
        std::vector<std::int64_t>{0, 1, 4, 9});
  CHECK(builtin_sequence(SequenceSpec::primes(), 4).values() ==
        std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK(builtin_sequence(SequenceSpec::powers(3), 3).values() ==
        std::vector<std::int64_t>{0, 1, 8});
  CHECK(builtin_sequence(SequenceSpec::powers(1), 5).values() ==
        std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK(builtin_sequence(SequenceSpec::from_list({3, 7, 11}), 2).values() ==
        std::vector<std::int64_t>{3, 7});
}

TEST_CASE("builtin sequence argument checks") {
  CHECK_THROWS_AS(builtin_sequence(SequenceSpec::squares(), 0), InputError);
  CHECK_THROWS_AS(builtin_sequence(SequenceSpec::from_list({1, 2}), 3),
                  InputError);
  CHECK_THROWS_AS(builtin_sequence(SequenceSpec::powers(0), 3), InputError);
  // 10^19 > 2^63; the term computation must notice, not wrap around
  CHECK_THROWS_AS(builtin_sequence(SequenceSpec::powers(19), 11), InputError);
}

TEST_CASE("every builtin kind stays valid out to N = 10^4") {
  for (const SequenceSpec& spec :
       {SequenceSpec::squares(), SequenceSpec::powers(3),
        SequenceSpec::powers(4), SequenceSpec::primes()}) {
    Weights w = builtin_sequence(spec, 10'000);
    CHECK(w.size() == 10'000);
    // make_weights already threw if anything was out of order
    CHECK(make_weights(w.values()).size() == 10'000);
  }
}

TEST_CASE("cutoff index picks the largest weight not above n") {
  CHECK(cutoff_index(SequenceSpec::squares(), 10) == 4);   // 9 <= 10 < 16
  CHECK(cutoff_index(SequenceSpec::squares(), 9) == 4);
  CHECK(cutoff_index(SequenceSpec::squares(), 8) == 3);
  CHECK(cutoff_index(SequenceSpec::squares(), 0) == 1);
  CHECK(cutoff_index(SequenceSpec::primes(), 10) == 4);    // 2 3 5 7
  CHECK(cutoff_index(SequenceSpec::primes(), 1) == 1);     // clamped
  CHECK(cutoff_index(SequenceSpec::primes(), 2) == 1);
  CHECK(cutoff_index(SequenceSpec::powers(3), 10) == 3);   // 0 1 8
  CHECK(cutoff_index(SequenceSpec::from_list({2, 4, 9}), 5) == 2);
  CHECK(cutoff_index(SequenceSpec::from_list({5, 6}), 0) == 1);  // clamped
  CHECK_THROWS_AS(cutoff_index(SequenceSpec::squares(), -1), InputError);
}

TEST_CASE("cutoff index is monotone and consistent with the sequence") {
  for (const SequenceSpec& spec :
       {SequenceSpec::squares(), SequenceSpec::powers(3),
        SequenceSpec::primes()}) {
    std::int64_t previous = 1;
    for (std::int64_t n = 0; n <= 300; ++n) {
      const std::int64_t k = cutoff_index(spec, n);
      CHECK(k >= previous);  // more room, never fewer weights
      Weights w = builtin_sequence(spec, k);
      if (k > 1) CHECK(w[static_cast<std::size_t>(k - 1)] <= n);
      // one more weight would overshoot (when the next term exists)
      Weights wider = builtin_sequence(spec, k + 1);
      CHECK(wider[static_cast<std::size_t>(k)] > n);
      previous = k;
    }
  }
}

TEST_CASE("primes helpers agree with each other") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(30) ==
        std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(first_primes(10).back() == 29);
  CHECK(first_primes(1) == std::vector<std::int64_t>{2});
  CHECK(first_primes(1229).back() == 9973);  // largest prime below 10^4
  CHECK_THROWS_AS(first_primes(0), InputError);
}

TEST_CASE("sequence files parse one integer per line") {
  const std::string path = "core_model_seq_test.txt";
  {
    std::ofstream out(path);
    out << "# header comment\n";
    out << "2\n";
    out << "\n";
    out << "  3\n";
    out << "   # indented comment\n";
    out << "5\n";
  }
  CHECK(read_sequence_file(path) == std::vector<std::int64_t>{2, 3, 5});
  {
    std::ofstream out(path);
    out << "2 junk\n";
  }
  CHECK_THROWS_AS(read_sequence_file(path), InputError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_sequence_file(path), InputError);
}

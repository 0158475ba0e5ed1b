#include "addrep/representation.hpp"

#include <sstream>
#include <stdexcept>

#include "addrep/errors.hpp"

namespace addrep {

RepresentationTable::RepresentationTable(Instance instance)
    : instance_(std::move(instance)), stride_(instance_.theta + 1) {
  const std::int64_t n = instance_.n;
  const std::int64_t theta = instance_.theta;
  cells_.assign(static_cast<std::size_t>((n + 1) * (theta + 1)), Count(0));
  auto cell = [&](std::int64_t v, std::int64_t t) -> Count& {
    return cells_[static_cast<std::size_t>(v * stride_ + t)];
  };
  cell(0, 0) = 1;
  // Fold in one weight at a time. Ascending (t, v) order makes each weight
  // unbounded (usable any number of times) while weights folded earlier
  // stay frozen, so multisets are counted once. A zero weight only moves
  // t, which the v == 0 column handles with no special case.
  for (std::int64_t a : instance_.weights) {
    for (std::int64_t t = 1; t <= theta; ++t) {
      for (std::int64_t v = a; v <= n; ++v) {
        cell(v, t) += cell(v - a, t - 1);
      }
    }
  }
}

const Count& RepresentationTable::at(std::int64_t value,
                                     std::int64_t parts) const {
  if (value < 0 || value > instance_.n || parts < 0 ||
      parts > instance_.theta) {
    std::ostringstream msg;
    msg << "table lookup (" << value << ", " << parts << ") outside ("
        << instance_.n << ", " << instance_.theta << ")";
    throw std::out_of_range(msg.str());
  }
  return cells_[static_cast<std::size_t>(value * stride_ + parts)];
}

Count count_representations_dp(const Instance& instance) {
  return RepresentationTable(instance).at(instance.n, instance.theta);
}

namespace {

void enumerate_multisets(const Instance& inst, std::size_t i,
                         std::int64_t parts_left, std::int64_t value_left,
                         Count& hits) {
  if (i == inst.weights.size()) {
    if (parts_left == 0 && value_left == 0) hits += 1;
    return;
  }
  const std::int64_t a = inst.weights[i];
  for (std::int64_t k = 0; k <= parts_left; ++k) {
    const std::int64_t used = k * a;
    if (used > value_left) break;
    enumerate_multisets(inst, i + 1, parts_left - k, value_left - used, hits);
  }
}

}  // namespace

Count count_representations_bruteforce(const Instance& instance,
                                       std::int64_t budget) {
  if (budget < 1) throw InputError("oracle budget must be >= 1");
  const auto N = static_cast<unsigned long>(instance.weights.size());
  BigInt multisets;
  mpz_bin_uiui(multisets.get_mpz_t(),
               static_cast<unsigned long>(instance.theta) + N - 1, N - 1);
  if (multisets > budget) {
    std::ostringstream msg;
    msg << multisets << " multisets to enumerate, budget " << budget;
    throw BudgetExceeded(msg.str());
  }
  Count hits = 0;
  enumerate_multisets(instance, 0, instance.theta, instance.n, hits);
  return hits;
}

Count generating_series_check(const Instance& instance) {
  const std::int64_t n = instance.n;
  const std::int64_t theta = instance.theta;
  const std::int64_t stride = theta + 1;
  // grid[v * stride + t] is the x^v y^t coefficient of the partial product
  std::vector<Count> grid(static_cast<std::size_t>((n + 1) * stride));
  grid[0] = 1;
  for (std::int64_t a : instance.weights) {
    // multiply by (1 + x^a y + x^{2a} y^2 + ...), truncated to the grid
    std::vector<Count> next(grid.size());
    for (std::int64_t k = 0; k <= theta; ++k) {
      const std::int64_t shift = k * a;
      if (shift > n) break;
      for (std::int64_t v = shift; v <= n; ++v) {
        for (std::int64_t t = k; t <= theta; ++t) {
          next[static_cast<std::size_t>(v * stride + t)] +=
              grid[static_cast<std::size_t>((v - shift) * stride + (t - k))];
        }
      }
    }
    grid.swap(next);
  }
  return grid[static_cast<std::size_t>(n * stride + theta)];
}

}  // namespace addrep

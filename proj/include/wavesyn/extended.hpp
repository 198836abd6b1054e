#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wavesyn {

// One multi-dimensional coefficient: per-dimension benefits sorted
// descending, with the originating dimension tags (and, when derived from a
// coefficient matrix, the stored values) kept in the same order.
struct MultiCoefficient {
  std::size_t index = 0;
  std::vector<double> benefits;   // nonnegative, descending
  std::vector<std::size_t> dims;  // original dimension of each benefit
  std::vector<double> values;     // optional, parallel to benefits

  // Prefix sum of the top j benefits; concave nondecreasing in j.
  double profit(std::size_t j) const;

  static MultiCoefficient of(std::size_t index, std::vector<double> raw_benefits,
                             std::vector<double> raw_values = {});
};

// Benefit lists from an n x M matrix of per-dimension coefficient values.
// Benefit is the l2 energy the coefficient removes: value^2 times the
// squared norm of its (non-normalized) basis vector, so n must be a power
// of two and rows follow the error-tree coefficient order.
std::vector<MultiCoefficient> compute_benefits(const std::vector<std::vector<double>>& matrix);

struct ItemSizePair {
  std::size_t item;    // position in the item list
  std::size_t size;    // j, number of stored dimensions
  double profit;
  std::size_t cost;    // h + j
};

// For each size j, the top ceil(B/j) items by profit(i, j); pairs sorted
// lexicographically by (item, size).
std::vector<ItemSizePair> build_candidates(const std::vector<MultiCoefficient>& items,
                                           std::size_t B, std::size_t h);

struct ExtendedAllocation {
  struct Entry {
    std::size_t index;               // MultiCoefficient::index
    std::size_t size;                // stored dimension count
    std::vector<std::size_t> dims;   // the top-size benefit dimensions
    std::vector<double> values;      // empty when the item carried none
    double profit;
  };
  std::vector<Entry> entries;
  double profit = 0.0;
  std::size_t cost = 0;
};

struct ExtendedStats {
  std::size_t candidate_pairs = 0;
  std::size_t peak_table_entries = 0;  // live P/Q cells
  std::uint64_t cell_evals = 0;
};

// Profit-maximizing allocation with total cost <= B and at most one size per
// item, extracted through the B/2 crossing-point records in O(B) DP state.
ExtendedAllocation solve_extended(const std::vector<MultiCoefficient>& items, std::size_t B,
                                  std::size_t h, ExtendedStats* stats = nullptr);

}  // namespace wavesyn

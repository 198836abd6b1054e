#pragma once

#include <cstddef>
#include <vector>

namespace wavesyn {

inline bool is_pow2(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

// Input series with per-point positive weights. Weights are normalized at
// construction so they sum to n; an absent weight vector means unit weights.
struct Signal {
  std::vector<double> values;
  std::vector<double> weights;  // size n, all > 0, sum == n

  std::size_t size() const { return values.size(); }
  double max_abs() const;
  double min_weight() const;
  bool unit_weights() const;

  // Validates (n a power of two, n >= 2, weights positive) and normalizes.
  static Signal make(std::vector<double> values, std::vector<double> weights = {});
};

}  // namespace wavesyn

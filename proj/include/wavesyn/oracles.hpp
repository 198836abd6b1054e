#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavesyn/metrics.hpp"
#include "wavesyn/signal.hpp"
#include "wavesyn/synopsis.hpp"

namespace wavesyn {
namespace oracles {

// Exhaustive reference implementations. They lean only on the transform and
// the metric primitives, never on the solvers they are used to check, and
// they refuse instances large enough to be painful.

// Best achievable error keeping at most b transform coefficients, for every
// b = 0..n at once (one sweep over all 2^n subsets). n <= 20.
std::vector<double> brute_restricted_all(const Signal& s, const Metric& m);

struct BruteRestricted {
  double error;
  std::vector<Pick> picks;
};
BruteRestricted brute_restricted(const Signal& s, const Metric& m, std::size_t B);

// Minimum error over <= B coefficient positions with values drawn from the
// grid points. Guarded by the enumeration size.
struct BruteUnrestricted {
  double error;
  std::vector<Pick> picks;
};
BruteUnrestricted brute_unrestricted_on_grid(const Signal& s, const Metric& m, std::size_t B,
                                             std::span<const double> grid_points);

// Minimum sum of squared deviations over all partitions of the series into
// at most B intervals; means and deviations computed directly. n <= 14.
struct BruteHistogram {
  double sse;
  std::vector<std::size_t> boundaries;  // cut points, [0]=0, back()=n
};
BruteHistogram brute_histogram(std::span<const double> values, std::size_t B);

// Maximum profit over all per-item sizes 0..M with sum of (h + size) <= B,
// each item's profit(j) being the sum of its j largest raw benefits.
// (M+1)^n enumeration, n <= 8.
struct BruteExtended {
  double profit;
  std::vector<std::size_t> sizes;  // chosen size per item, 0 = skipped
};
BruteExtended brute_extended(const std::vector<std::vector<double>>& raw_benefits,
                             std::size_t B, std::size_t h);

}  // namespace oracles
}  // namespace wavesyn

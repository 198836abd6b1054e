#pragma once

#include <cstddef>
#include <vector>

#include "wavesyn/metrics.hpp"
#include "wavesyn/signal.hpp"
#include "wavesyn/synopsis.hpp"

namespace wavesyn {

// Quantized candidate values {m*delta : |m*delta| <= half_range}, symmetric
// about 0, odd count. delta = eps*M*min_pi/n^(1/k); half_range =
// 2*n^(1/k)*M/min_pi (n^(1/k) read as 1 for l_inf).
struct ValueGrid {
  double delta = 0.0;
  double half_range = 0.0;
  std::size_t count = 1;

  std::ptrdiff_t half() const { return static_cast<std::ptrdiff_t>((count - 1) / 2); }
  double value(std::size_t idx) const {
    return static_cast<double>(static_cast<std::ptrdiff_t>(idx) - half()) * delta;
  }
  std::vector<double> values() const;
};

struct UnrestrictedOptions {
  std::size_t grid_cap = 20000;
  // Widens the ancestor-sum table beyond [-half_range, half_range].
  double vrange_mult = 1.0;
};

struct UnrestrictedStats {
  std::size_t live_entries = 0;
  std::size_t peak_live_entries = 0;  // value-budget table entries
};

// Throws ResourceGuardError when the grid would exceed the cap.
ValueGrid build_grid(const Signal& s, const Metric& m, double eps,
                     const UnrestrictedOptions& opt = {});

// Near-optimal unrestricted synopsis: grid DP plus recompute extraction.
// Additive guarantee eps*M against the continuous optimum.
SynopsisSolution unrestricted_synopsis(const Signal& s, const Metric& m, std::size_t B,
                                       double eps, const UnrestrictedOptions& opt = {},
                                       UnrestrictedStats* stats = nullptr);

// The same DP over an explicit grid (also the surface the grid oracle is
// checked against).
SynopsisSolution unrestricted_on_grid(const Signal& s, const Metric& m, std::size_t B,
                                      const ValueGrid& grid, double vrange_mult = 1.0,
                                      UnrestrictedStats* stats = nullptr);

}  // namespace wavesyn

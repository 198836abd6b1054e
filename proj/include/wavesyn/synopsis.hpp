#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavesyn/metrics.hpp"
#include "wavesyn/signal.hpp"

namespace wavesyn {

struct Pick {
  std::size_t index;
  double value;
};

struct SynopsisSolution {
  std::vector<Pick> picks;
  double error = 0.0;
};

// Error of the synopsis Z given by the picks (all other entries zero),
// computed through the inverse transform and the metric accumulator.
double evaluate_synopsis(const Signal& s, std::span<const Pick> picks, const Metric& m);

}  // namespace wavesyn

#pragma once

#include <random>
#include <vector>

#include "wavesyn/signal.hpp"

namespace testutil {

inline std::vector<double> random_values(std::mt19937& rng, std::size_t n, double lo = -10.0,
                                         double hi = 10.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

inline std::vector<double> random_weights(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(0.2, 3.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

inline wavesyn::Signal random_signal(std::mt19937& rng, std::size_t n, bool weighted) {
  return wavesyn::Signal::make(random_values(rng, n),
                               weighted ? random_weights(rng, n) : std::vector<double>{});
}

}  // namespace testutil

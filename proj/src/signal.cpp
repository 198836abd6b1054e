#include "wavesyn/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavesyn/errors.hpp"

namespace wavesyn {

double Signal::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

double Signal::min_weight() const {
  double m = weights.front();
  for (double w : weights) m = std::min(m, w);
  return m;
}

bool Signal::unit_weights() const {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w == 1.0; });
}

Signal Signal::make(std::vector<double> values, std::vector<double> weights) {
  const std::size_t n = values.size();
  if (n < 2 || !is_pow2(n))
    throw ValidationError("signal length must be a power of two and at least 2, got " +
                          std::to_string(n));
  if (weights.empty()) {
    weights.assign(n, 1.0);
  } else {
    if (weights.size() != n)
      throw ValidationError("weights length does not match signal length");
    double sum = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) throw ValidationError("weights must be positive");
      sum += w;
    }
    const double scale = static_cast<double>(n) / sum;
    for (double& w : weights) w *= scale;
  }
  Signal s;
  s.values = std::move(values);
  s.weights = std::move(weights);
  return s;
}

}  // namespace wavesyn

#include "wavesyn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavesyn/errors.hpp"

namespace wavesyn {

Metric Metric::lk(int k) {
  if (k < 1) throw ValidationError("metric order k must be >= 1, got " + std::to_string(k));
  return Metric{k, false};
}

double Metric::root_of(double n) const {
  if (inf) return 1.0;
  if (k == 1) return n;
  if (k == 2) return std::sqrt(n);
  return std::pow(n, 1.0 / static_cast<double>(k));
}

double leaf_error(double x, double v, double pi, const Metric& m) {
  const double e = pi * std::fabs(x - v);
  if (m.inf || m.k == 1) return e;
  if (m.k == 2) return e * e;
  return std::pow(e, static_cast<double>(m.k));
}

double combine(double a, double b, const Metric& m) {
  return m.inf ? std::max(a, b) : a + b;
}

double finalize(double a, const Metric& m) {
  if (m.inf || m.k == 1) return a;
  if (m.k == 2) return std::sqrt(a);
  return std::pow(a, 1.0 / static_cast<double>(m.k));
}

double signal_norm(const Signal& s, const Metric& m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j)
    acc = combine(acc, leaf_error(s.values[j], 0.0, s.weights[j], m), m);
  return finalize(acc, m);
}

}  // namespace wavesyn

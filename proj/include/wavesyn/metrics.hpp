#pragma once

#include <cstddef>

#include "wavesyn/signal.hpp"

namespace wavesyn {

// Weighted l_k (integer k >= 1) or weighted l_inf error semantics.
// Accumulators live in the power domain for l_k (sum of (pi*|e|)^k) and in
// the max domain for l_inf; finalize applies the outer 1/k power.
struct Metric {
  int k = 2;
  bool inf = false;

  static Metric lk(int k);
  static Metric linf() { return Metric{0, true}; }

  // n^(1/k); 1 for l_inf.
  double root_of(double n) const;
};

double leaf_error(double x, double v, double pi, const Metric& m);
double combine(double a, double b, const Metric& m);
double finalize(double a, const Metric& m);

// ||X|| under the metric (the error of the empty synopsis).
double signal_norm(const Signal& s, const Metric& m);

}  // namespace wavesyn

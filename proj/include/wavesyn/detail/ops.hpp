#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavesyn/metrics.hpp"

// Metric accumulation policies, specialized so the DP inner loops stay free
// of branches and pow() for the common orders.
namespace wavesyn::detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct L1Op {
  static constexpr bool is_max = false;
  double leaf(double x, double v, double pi) const { return pi * std::fabs(x - v); }
  double comb(double a, double b) const { return a + b; }
};

struct L2Op {
  static constexpr bool is_max = false;
  double leaf(double x, double v, double pi) const {
    const double e = pi * (x - v);
    return e * e;
  }
  double comb(double a, double b) const { return a + b; }
};

struct LkOp {
  static constexpr bool is_max = false;
  int k;
  double leaf(double x, double v, double pi) const {
    return std::pow(pi * std::fabs(x - v), static_cast<double>(k));
  }
  double comb(double a, double b) const { return a + b; }
};

struct LInfOp {
  static constexpr bool is_max = true;
  double leaf(double x, double v, double pi) const { return pi * std::fabs(x - v); }
  double comb(double a, double b) const { return std::max(a, b); }
};

template <class F>
auto dispatch(const Metric& m, F&& f) {
  if (m.inf) return f(LInfOp{});
  if (m.k == 1) return f(L1Op{});
  if (m.k == 2) return f(L2Op{});
  return f(LkOp{m.k});
}

}  // namespace wavesyn::detail

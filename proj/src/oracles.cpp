#include "wavesyn/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "wavesyn/errors.hpp"
#include "wavesyn/haar.hpp"

namespace wavesyn {
namespace oracles {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eval_coeffs(const Signal& s, std::span<const double> coeffs, const Metric& m) {
  const std::vector<double> approx = haar_inverse(coeffs);
  double acc = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j)
    acc = combine(acc, leaf_error(s.values[j], approx[j], s.weights[j], m), m);
  return finalize(acc, m);
}

}  // namespace

std::vector<double> brute_restricted_all(const Signal& s, const Metric& m) {
  const std::size_t n = s.size();
  if (n > 20) throw ResourceGuardError("subset enumeration capped at n = 20");
  const std::vector<double> w = haar_forward(s.values);
  std::vector<double> best(n + 1, kInf);
  std::vector<double> z(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) z[i] = (mask >> i) & 1 ? w[i] : 0.0;
    const std::size_t sz = static_cast<std::size_t>(std::popcount(mask));
    best[sz] = std::min(best[sz], eval_coeffs(s, z, m));
  }
  for (std::size_t b = 1; b <= n; ++b) best[b] = std::min(best[b], best[b - 1]);
  return best;
}

BruteRestricted brute_restricted(const Signal& s, const Metric& m, std::size_t B) {
  const std::size_t n = s.size();
  if (n > 20) throw ResourceGuardError("subset enumeration capped at n = 20");
  const std::vector<double> w = haar_forward(s.values);
  BruteRestricted out{kInf, {}};
  std::size_t best_mask = 0;
  std::vector<double> z(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > B) continue;
    for (std::size_t i = 0; i < n; ++i) z[i] = (mask >> i) & 1 ? w[i] : 0.0;
    const double e = eval_coeffs(s, z, m);
    if (e < out.error) {
      out.error = e;
      best_mask = mask;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if ((best_mask >> i) & 1) out.picks.push_back({i, w[i]});
  return out;
}

namespace {

struct GridSearch {
  const Signal& s;
  const Metric& m;
  std::span<const double> grid;
  std::vector<double> z;
  std::vector<std::size_t> positions;
  double best = kInf;
  std::vector<Pick> best_picks;

  void assign(std::size_t pi) {
    if (pi == positions.size()) {
      const double e = eval_coeffs(s, z, m);
      if (e < best) {
        best = e;
        best_picks.clear();
        for (std::size_t p : positions) best_picks.push_back({p, z[p]});
      }
      return;
    }
    for (double g : grid) {
      z[positions[pi]] = g;
      assign(pi + 1);
    }
    z[positions[pi]] = 0.0;
  }

  void choose(std::size_t from, std::size_t left) {
    assign(0);  // also covers the subset chosen so far with fewer positions
    if (left == 0) return;
    for (std::size_t p = from; p < s.size(); ++p) {
      positions.push_back(p);
      choose(p + 1, left - 1);
      positions.pop_back();
    }
  }
};

}  // namespace

BruteUnrestricted brute_unrestricted_on_grid(const Signal& s, const Metric& m, std::size_t B,
                                             std::span<const double> grid_points) {
  const std::size_t n = s.size();
  B = std::min(B, n);
  double work = 0.0;  // sum over subset sizes of C(n, s) * |grid|^s
  double comb = 1.0, pw = 1.0;
  for (std::size_t sz = 0; sz <= B; ++sz) {
    work += comb * pw;
    comb = comb * static_cast<double>(n - sz) / static_cast<double>(sz + 1);
    pw *= static_cast<double>(grid_points.size());
  }
  if (work > 2e7)
    throw ResourceGuardError("grid enumeration would evaluate ~" +
                             std::to_string(static_cast<long long>(work)) + " assignments");
  GridSearch gs{s, m, grid_points, std::vector<double>(n, 0.0), {}};
  gs.choose(0, B);
  return {gs.best, std::move(gs.best_picks)};
}

namespace {

double interval_sse(std::span<const double> x, std::size_t lo, std::size_t hi) {
  double mean = 0.0;
  for (std::size_t i = lo; i < hi; ++i) mean += x[i];
  mean /= static_cast<double>(hi - lo);
  double sse = 0.0;
  for (std::size_t i = lo; i < hi; ++i) sse += (x[i] - mean) * (x[i] - mean);
  return sse;
}

double best_partition(std::span<const double> x, std::size_t lo, std::size_t b,
                      std::vector<std::size_t>* cuts) {
  if (lo == x.size()) return 0.0;
  if (b == 0) return kInf;
  double best = kInf;
  std::size_t best_end = lo + 1;
  for (std::size_t end = lo + 1; end <= x.size(); ++end) {
    const double e = interval_sse(x, lo, end) + best_partition(x, end, b - 1, nullptr);
    if (e < best) {
      best = e;
      best_end = end;
    }
  }
  if (cuts) {
    cuts->push_back(best_end);
    best_partition(x, best_end, b - 1, cuts);
  }
  return best;
}

}  // namespace

BruteHistogram brute_histogram(std::span<const double> values, std::size_t B) {
  if (values.size() > 14) throw ResourceGuardError("partition enumeration capped at n = 14");
  if (values.empty() || B < 1) throw ValidationError("need a nonempty series and B >= 1");
  BruteHistogram out;
  out.boundaries.push_back(0);
  out.sse = best_partition(values, 0, std::min(B, values.size()), &out.boundaries);
  return out;
}

BruteExtended brute_extended(const std::vector<std::vector<double>>& raw_benefits,
                             std::size_t B, std::size_t h) {
  const std::size_t n = raw_benefits.size();
  if (n > 8) throw ResourceGuardError("size enumeration capped at 8 items");
  double combos = 1.0;
  for (const auto& bl : raw_benefits) combos *= static_cast<double>(bl.size() + 1);
  if (combos > 5e7) throw ResourceGuardError("too many size assignments to enumerate");

  // profit(i, j) = sum of item i's j largest benefits
  std::vector<std::vector<double>> prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> sorted = raw_benefits[i];
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    prefix[i].assign(sorted.size() + 1, 0.0);
    for (std::size_t j = 0; j < sorted.size(); ++j)
      prefix[i][j + 1] = prefix[i][j] + sorted[j];
  }

  BruteExtended out{0.0, std::vector<std::size_t>(n, 0)};
  std::vector<std::size_t> sizes(n, 0);
  while (true) {
    std::size_t cost = 0;
    double profit = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sizes[i] == 0) continue;
      cost += h + sizes[i];
      profit += prefix[i][sizes[i]];
    }
    if (cost <= B && profit > out.profit) {
      out.profit = profit;
      out.sizes = sizes;
    }
    std::size_t i = 0;
    while (i < n && sizes[i] == raw_benefits[i].size()) sizes[i++] = 0;
    if (i == n) break;
    ++sizes[i];
  }
  return out;
}

}  // namespace oracles
}  // namespace wavesyn

#include "wavesyn/vopt.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "wavesyn/errors.hpp"

namespace wavesyn {

PrefixSums PrefixSums::of(std::span<const double> values) {
  PrefixSums s;
  s.cum.assign(values.size() + 1, 0.0);
  s.cum2.assign(values.size() + 1, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.cum[i + 1] = s.cum[i] + values[i];
    s.cum2[i + 1] = s.cum2[i] + values[i] * values[i];
  }
  return s;
}

double bucket_error(std::size_t j, std::size_t i, const PrefixSums& sums) {
  if (j >= i || i >= sums.cum.size())
    throw ValidationError("bucket interval must be non-empty and in range");
  const double sum = sums.cum[i] - sums.cum[j];
  const double sum2 = sums.cum2[i] - sums.cum2[j];
  const double e = sum2 - sum * sum / static_cast<double>(i - j);
  return e > 0.0 ? e : 0.0;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bucket {
  std::size_t begin, end;  // half-open
};

// One DP pass stack for a subproblem [lo, hi) with at-most-b buckets,
// tracking the bucket that contains the midpoint element. Emits the crossing
// bucket, then recurses on each side; every subproblem covers at most half
// the elements, so the recompute cost forms a geometric sum.
class LinearSpaceSolver {
 public:
  LinearSpaceSolver(std::span<const double> values, const PrefixSums& sums, VoptStats& stats)
      : values_(values), sums_(sums), stats_(stats) {}

  void run(std::size_t lo, std::size_t hi, std::size_t b, std::vector<Bucket>& out,
           bool top_level) {
    const std::size_t len = hi - lo;
    if (len == 0) return;
    b = std::min(b, len);
    assert(b >= 1);
    if (b == 1) {
      out.push_back({lo, hi});
      return;
    }
    if (b >= len) {
      for (std::size_t j = lo; j < hi; ++j) out.push_back({j, j + 1});
      return;
    }

    // Local 1-indexed prefix lengths; the crossing element is prefix
    // position mid = floor(len/2).
    const std::size_t mid = len / 2;
    std::vector<double> eprev(len + 1), ecur(len + 1);
    std::vector<std::size_t> A(len + 1), Bend(len + 1), C(len + 1);
    std::vector<std::size_t> nA(len + 1), nBend(len + 1), nC(len + 1);
    for (std::size_t i = 1; i <= len; ++i) {
      eprev[i] = bucket_error(lo, lo + i, sums_);
      if (i >= mid) {
        A[i] = 1;
        Bend[i] = i;
        C[i] = 1;
      }
    }
    for (std::size_t bb = 2; bb <= b; ++bb) {
      for (std::size_t i = 1; i <= len; ++i) {
        double best = eprev[i];  // stay: reuse the <= bb-1 bucket answer
        std::size_t bestj = i;
        for (std::size_t j = 1; j < i; ++j) {
          const double cand = eprev[j] + bucket_error(lo + j, lo + i, sums_);
          if (cand < best) {
            best = cand;
            bestj = j;
          }
        }
        ecur[i] = best;
        stats_.cell_evals += i;
        if (top_level) stats_.top_pass_evals += i;
        if (i >= mid) {
          if (bestj == i) {
            nA[i] = A[i];
            nBend[i] = Bend[i];
            nC[i] = C[i];
          } else if (bestj < mid) {
            nA[i] = bestj + 1;  // new bucket (bestj, i] contains mid
            nBend[i] = i;
            nC[i] = bb;
          } else {
            nA[i] = A[bestj];
            nBend[i] = Bend[bestj];
            nC[i] = C[bestj];
          }
        }
      }
      std::swap(eprev, ecur);
      std::swap(A, nA);
      std::swap(Bend, nBend);
      std::swap(C, nC);
    }

    const std::size_t a = A[len], bend = Bend[len], c = C[len];
    run(lo, lo + a - 1, c - 1, out, false);
    out.push_back({lo + a - 1, lo + bend});
    run(lo + bend, hi, b - c, out, false);
  }

 private:
  std::span<const double> values_;
  const PrefixSums& sums_;
  VoptStats& stats_;
};

Histogram from_buckets(std::span<const double> values, const PrefixSums& sums,
                       const std::vector<Bucket>& buckets) {
  Histogram h;
  h.boundaries.push_back(0);
  for (const Bucket& bk : buckets) {
    h.boundaries.push_back(bk.end);
    const double mean =
        (sums.cum[bk.end] - sums.cum[bk.begin]) / static_cast<double>(bk.end - bk.begin);
    h.reps.push_back(mean);
    h.sse += bucket_error(bk.begin, bk.end, sums);
  }
  return h;
}

}  // namespace

Histogram vopt_linear_space(std::span<const double> values, std::size_t B, VoptStats* stats) {
  if (B < 1) throw ValidationError("histogram needs at least one bucket");
  if (values.empty()) throw ValidationError("histogram input is empty");
  VoptStats local;
  VoptStats& st = stats ? *stats : local;
  const PrefixSums sums = PrefixSums::of(values);
  LinearSpaceSolver solver(values, sums, st);
  std::vector<Bucket> buckets;
  solver.run(0, values.size(), B, buckets, true);
  return from_buckets(values, sums, buckets);
}

Histogram vopt_full_table(std::span<const double> values, std::size_t B, VoptStats* stats) {
  if (B < 1) throw ValidationError("histogram needs at least one bucket");
  if (values.empty()) throw ValidationError("histogram input is empty");
  const std::size_t n = values.size();
  const std::size_t b = std::min(B, n);
  if (n * b > std::size_t{50'000'000})
    throw ResourceGuardError("full-table histogram DP would need " + std::to_string(n * b) +
                             " cells");
  VoptStats local;
  VoptStats& st = stats ? *stats : local;
  const PrefixSums sums = PrefixSums::of(values);

  // E[bb][i], parent[bb][i] = previous prefix length (== i means "stay").
  std::vector<std::vector<double>> E(b + 1, std::vector<double>(n + 1, kInf));
  std::vector<std::vector<std::size_t>> parent(b + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) E[1][i] = bucket_error(0, i, sums);
  for (std::size_t bb = 2; bb <= b; ++bb) {
    for (std::size_t i = 1; i <= n; ++i) {
      double best = E[bb - 1][i];
      std::size_t bestj = i;
      for (std::size_t j = 1; j < i; ++j) {
        const double cand = E[bb - 1][j] + bucket_error(j, i, sums);
        if (cand < best) {
          best = cand;
          bestj = j;
        }
      }
      E[bb][i] = best;
      parent[bb][i] = bestj;
      st.cell_evals += i;
      st.top_pass_evals += i;
    }
  }

  std::vector<Bucket> buckets;
  std::size_t i = n, bb = b;
  while (i > 0) {
    if (bb == 1) {
      buckets.push_back({0, i});
      break;
    }
    const std::size_t j = parent[bb][i];
    if (j == i) {
      --bb;
      continue;
    }
    buckets.push_back({j, i});
    i = j;
    --bb;
  }
  std::reverse(buckets.begin(), buckets.end());
  return from_buckets(values, sums, buckets);
}

}  // namespace wavesyn

#include "wavesyn/restricted.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>

#include "wavesyn/errors.hpp"
#include "wavesyn/detail/ops.hpp"
#include "wavesyn/haar.hpp"

namespace wavesyn {
namespace {

using detail::kInf;
using detail::dispatch;

// Post-order subtree DP with two live child profiles per level. Profiles are
// budget-indexed ("at most b"), monotone nonincreasing, and live in a bump
// arena so the working set stays O(B log(n/B)).
template <class Op>
class Solver {
 public:
  Solver(const Signal& s, const std::vector<double>& coeffs, std::size_t B, Op op,
         bool bsearch, SolveStats& stats)
      : x_(s.values.data()),
        w_(s.weights.data()),
        c_(coeffs.data()),
        n_(s.size()),
        B_(B),
        op_(op),
        bsearch_(bsearch),
        stats_(stats) {
    const std::size_t levels = static_cast<std::size_t>(std::bit_width(n_));
    arena_.assign(4 * (B_ + 2) * (levels + 3) + 32, 0.0);
  }

  struct Prof {
    double* p;
    std::size_t len;
  };

  Prof solve(std::size_t i, double v) {
    ++stats_.node_visits;
    const std::size_t m = n_ >> (std::bit_width(i) - 1);
    if (m == 2) return bottom(i, v);
    const double ci = c_[i];
    const std::size_t bmax = std::min(B_, m - 1);
    Prof res = alloc(bmax + 1);
    std::fill(res.p, res.p + res.len, kInf);
    if (B_ >= 1) {
      Prof l = solve(2 * i, v + ci);
      Prof r = solve(2 * i + 1, v - ci);
      convolve(res, 1, l, r);
      release(r);
      release(l);
    }
    Prof l = solve(2 * i, v);
    Prof r = solve(2 * i + 1, v);
    convolve(res, 0, l, r);
    release(r);
    release(l);
    return res;
  }

  // Root profile over b = 0..min(B, n); node 0 has the single child 1 and
  // contributes coefficient c_[0] with sign + over the whole domain.
  std::vector<double> root_profile() {
    ++stats_.node_visits;
    const std::size_t bmax = std::min(B_, n_);
    std::vector<double> root(bmax + 1, kInf);
    track_alloc(root.size());
    Prof inc{nullptr, 0};
    if (B_ >= 1) {
      inc = solve(1, c_[0]);
      for (std::size_t b = 1; b <= bmax; ++b)
        root[b] = inc.p[std::min(b - 1, inc.len - 1)];
    }
    Prof exc = solve(1, 0.0);
    for (std::size_t b = 0; b <= bmax; ++b)
      root[b] = std::min(root[b], exc.p[std::min(b, exc.len - 1)]);
    stats_.minplus_ops += 2 * (bmax + 1);
    release(exc);
    if (B_ >= 1) release(inc);
    track_release(root.size());
    return root;
  }

  void extract_root(std::vector<Pick>& out, double& error_acc) {
    ++stats_.node_visits;
    const std::size_t bmax = std::min(B_, n_);
    double best_inc = kInf;
    if (bmax >= 1) {
      Prof inc = solve(1, c_[0]);
      best_inc = inc.p[std::min(bmax - 1, inc.len - 1)];
      release(inc);
    }
    Prof exc = solve(1, 0.0);
    const double best_exc = exc.p[std::min(bmax, exc.len - 1)];
    release(exc);
    if (best_inc < best_exc) {
      error_acc = best_inc;
      out.push_back({0, c_[0]});
      extract(1, c_[0], bmax - 1, out);
    } else {
      error_acc = best_exc;
      extract(1, 0.0, bmax, out);
    }
  }

  // Recompute extraction: both branch profiles are re-solved, the decision
  // and the budget split fixed, then the halves are recursed independently
  // (left picks emitted before right picks).
  void extract(std::size_t i, double v, std::size_t b, std::vector<Pick>& out) {
    if (b == 0) return;
    const std::size_t m = n_ >> (std::bit_width(i) - 1);
    const double ci = c_[i];
    if (m == 2) {
      const std::size_t j = (i - n_ / 2) * 2;
      const double exc = op_.comb(op_.leaf(x_[j], v, w_[j]), op_.leaf(x_[j + 1], v, w_[j + 1]));
      const double inc =
          op_.comb(op_.leaf(x_[j], v + ci, w_[j]), op_.leaf(x_[j + 1], v - ci, w_[j + 1]));
      if (inc < exc) out.push_back({i, ci});
      return;
    }
    b = std::min(b, m - 1);
    double best_exc = kInf, best_inc = kInf;
    std::size_t split_exc = 0, split_inc = 0;
    {
      Prof l = solve(2 * i, v);
      Prof r = solve(2 * i + 1, v);
      best_split(l, r, b, best_exc, split_exc);
      release(r);
      release(l);
    }
    {
      Prof l = solve(2 * i, v + ci);
      Prof r = solve(2 * i + 1, v - ci);
      best_split(l, r, b - 1, best_inc, split_inc);
      release(r);
      release(l);
    }
    if (best_inc < best_exc) {
      out.push_back({i, ci});
      extract(2 * i, v + ci, split_inc, out);
      extract(2 * i + 1, v - ci, b - 1 - split_inc, out);
    } else {
      extract(2 * i, v, split_exc, out);
      extract(2 * i + 1, v, b - split_exc, out);
    }
  }

 private:
  Prof bottom(std::size_t i, double v) {
    const std::size_t j = (i - n_ / 2) * 2;
    const double ci = c_[i];
    const std::size_t bmax = std::min<std::size_t>(B_, 1);
    Prof res = alloc(bmax + 1);
    res.p[0] = op_.comb(op_.leaf(x_[j], v, w_[j]), op_.leaf(x_[j + 1], v, w_[j + 1]));
    stats_.node_visits += 2;
    if (bmax >= 1) {
      const double inc =
          op_.comb(op_.leaf(x_[j], v + ci, w_[j]), op_.leaf(x_[j + 1], v - ci, w_[j + 1]));
      res.p[1] = std::min(res.p[0], inc);
      stats_.node_visits += 2;
    }
    stats_.minplus_ops += bmax + 1;
    return res;
  }

  void convolve(Prof res, std::size_t shift, Prof l, Prof r) {
    const std::size_t lmax = l.len - 1, rmax = r.len - 1;
    for (std::size_t b = shift; b < res.len; ++b) {
      const std::size_t avail = b - shift;
      double best;
      if (avail > lmax + rmax) {
        best = op_.comb(l.p[lmax], r.p[rmax]);
        ++stats_.minplus_ops;
      } else if (Op::is_max && bsearch_) {
        best = minmax_split(l, r, avail);
      } else {
        const std::size_t lo = avail > rmax ? avail - rmax : 0;
        const std::size_t hi = std::min(avail, lmax);
        best = kInf;
        for (std::size_t bp = lo; bp <= hi; ++bp) {
          const double cand = op_.comb(l.p[bp], r.p[avail - bp]);
          if (cand < best) best = cand;
        }
        stats_.minplus_ops += hi - lo + 1;
      }
      if (best < res.p[b]) res.p[b] = best;
    }
  }

  // l is nonincreasing and r[avail - bp] nondecreasing in bp, so the min of
  // their max sits at the sign change of l[bp] - r[avail - bp].
  double minmax_split(Prof l, Prof r, std::size_t avail) {
    const std::size_t lmax = l.len - 1, rmax = r.len - 1;
    const std::size_t lo = avail > rmax ? avail - rmax : 0;
    const std::size_t hi = std::min(avail, lmax);
    std::size_t a = lo, b = hi;
    while (a < b) {
      const std::size_t mid = (a + b) / 2;
      ++stats_.minplus_ops;
      if (l.p[mid] <= r.p[avail - mid]) b = mid;
      else a = mid + 1;
    }
    double best = std::max(l.p[a], r.p[avail - a]);
    ++stats_.minplus_ops;
    if (a > lo) {
      best = std::min(best, std::max(l.p[a - 1], r.p[avail - a + 1]));
      ++stats_.minplus_ops;
    }
    return best;
  }

  // Minimizing budget split between two at-most profiles; smallest split on
  // ties. `avail` may exceed what the children can hold.
  void best_split(Prof l, Prof r, std::size_t avail, double& best, std::size_t& split) {
    const std::size_t lmax = l.len - 1, rmax = r.len - 1;
    if (avail > lmax + rmax) {
      best = op_.comb(l.p[lmax], r.p[rmax]);
      split = lmax;
      return;
    }
    const std::size_t lo = avail > rmax ? avail - rmax : 0;
    const std::size_t hi = std::min(avail, lmax);
    best = kInf;
    split = lo;
    for (std::size_t bp = lo; bp <= hi; ++bp) {
      const double cand = op_.comb(l.p[bp], r.p[avail - bp]);
      if (cand < best) {
        best = cand;
        split = bp;
      }
    }
  }

  Prof alloc(std::size_t len) {
    assert(top_ + len <= arena_.size());
    Prof pr{arena_.data() + top_, len};
    top_ += len;
    track_alloc(len);
    return pr;
  }
  void release(Prof pr) {
    top_ -= pr.len;
    track_release(pr.len);
  }
  void track_alloc(std::size_t len) {
    stats_.live_entries += len;
    if (stats_.live_entries > stats_.peak_live_entries)
      stats_.peak_live_entries = stats_.live_entries;
  }
  void track_release(std::size_t len) { stats_.live_entries -= len; }

  const double* x_;
  const double* w_;
  const double* c_;
  std::size_t n_;
  std::size_t B_;
  Op op_;
  bool bsearch_;
  SolveStats& stats_;
  std::vector<double> arena_;
  std::size_t top_ = 0;
};

}  // namespace

RestrictedResult restricted_error(const Signal& s, const Metric& m, std::size_t B,
                                  SolveStats* stats, const RestrictedOptions& opt) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  const std::vector<double> coeffs = haar_forward(s.values);
  return dispatch(m, [&](auto op) {
    Solver<decltype(op)> solver(s, coeffs, B, op, opt.linf_binary_search, st);
    const std::vector<double> root = solver.root_profile();
    RestrictedResult res;
    res.error = finalize(root.back(), m);
    res.budget_used = 0;
    while (res.budget_used < root.size() - 1 && root[res.budget_used] > root.back())
      ++res.budget_used;
    return res;
  });
}

SynopsisSolution extract_restricted(const Signal& s, const Metric& m, std::size_t B,
                                    SolveStats* stats, const RestrictedOptions& opt) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  const std::vector<double> coeffs = haar_forward(s.values);
  return dispatch(m, [&](auto op) {
    Solver<decltype(op)> solver(s, coeffs, B, op, opt.linf_binary_search, st);
    SynopsisSolution sol;
    if (B == 0) {
      sol.error = signal_norm(s, m);
      return sol;
    }
    double acc = 0.0;
    solver.extract_root(sol.picks, acc);
    sol.error = finalize(acc, m);
    return sol;
  });
}

std::vector<double> subtree_profile(const Signal& s, const Metric& m, std::size_t node_index,
                                    double incoming, std::size_t B) {
  if (node_index >= s.size()) throw ValidationError("node index out of range");
  SolveStats st;
  const std::vector<double> coeffs = haar_forward(s.values);
  return dispatch(m, [&](auto op) {
    Solver<decltype(op)> solver(s, coeffs, B, op, false, st);
    if (node_index == 0) return solver.root_profile();
    auto prof = solver.solve(node_index, incoming);
    return std::vector<double>(prof.p, prof.p + prof.len);
  });
}

}  // namespace wavesyn

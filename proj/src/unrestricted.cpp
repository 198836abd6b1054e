#include "wavesyn/unrestricted.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "wavesyn/detail/ops.hpp"
#include "wavesyn/errors.hpp"

namespace wavesyn {

std::vector<double> ValueGrid::values() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = value(i);
  return out;
}

ValueGrid build_grid(const Signal& s, const Metric& m, double eps,
                     const UnrestrictedOptions& opt) {
  if (!(eps > 0.0)) throw ValidationError("epsilon must be positive");
  const double M = s.max_abs();
  ValueGrid g;
  if (M == 0.0) return g;  // the zero synopsis is exact
  const double nk = m.root_of(static_cast<double>(s.size()));
  const double minpi = s.min_weight();
  g.delta = eps * M * minpi / nk;
  g.half_range = 2.0 * nk * M / minpi;
  const double steps = std::floor(g.half_range / g.delta + 1e-9);
  g.count = 2 * static_cast<std::size_t>(steps) + 1;
  if (g.count > opt.grid_cap)
    throw ResourceGuardError("value grid needs " + std::to_string(g.count) +
                             " points, above the cap of " + std::to_string(opt.grid_cap) +
                             "; raise epsilon or the grid cap");
  return g;
}

namespace {

using detail::kInf;

// Value-budget DP over the error tree. Tables are indexed by the signed
// ancestor sum (a point of the v-grid) and the budget ("at most b",
// monotone). Ancestor sums leaving the v-grid are infeasible; candidate
// coefficient values r always range over the value grid.
template <class Op>
class GridSolver {
 public:
  GridSolver(const Signal& s, std::size_t B, Op op, const ValueGrid& grid,
             std::size_t vcount, UnrestrictedStats& stats)
      : x_(s.values.data()),
        w_(s.weights.data()),
        n_(s.size()),
        B_(B),
        op_(op),
        delta_(grid.delta),
        rhalf_(grid.half()),
        vcount_(vcount),
        vhalf_(static_cast<std::ptrdiff_t>((vcount - 1) / 2)),
        stats_(stats) {
    // r candidates ordered by (|r|, r): the extraction tie-break order.
    for (std::ptrdiff_t o = -rhalf_; o <= rhalf_; ++o) offsets_.push_back(o);
    std::sort(offsets_.begin(), offsets_.end(), [](std::ptrdiff_t a, std::ptrdiff_t b) {
      const auto aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
      return aa != ab ? aa < ab : a < b;
    });
  }

  struct Table {
    std::vector<double> t;
    std::size_t bmax = 0;
    const double* row(std::size_t vi, std::size_t bstride) const {
      return t.data() + vi * bstride;
    }
  };

  double vvalue(std::size_t vi) const {
    return static_cast<double>(static_cast<std::ptrdiff_t>(vi) - vhalf_) * delta_;
  }
  std::size_t vzero() const { return static_cast<std::size_t>(vhalf_); }

  Table solve(std::size_t i) {
    const std::size_t m = n_ >> (std::bit_width(i) - 1);
    if (m == 2) return bottom(i);
    Table left = solve(2 * i);
    Table right = solve(2 * i + 1);
    const std::size_t bmax = std::min(B_, m - 1);
    Table res = make_table(bmax);
    const std::size_t cstride = left.bmax + 1;
    for (std::size_t vi = 0; vi < vcount_; ++vi) {
      const double* lrow = left.row(vi, cstride);
      const double* rrow = right.row(vi, cstride);
      double* out = res.t.data() + vi * (bmax + 1);
      for (std::size_t b = 0; b <= bmax; ++b) {
        double best = split_min(lrow, rrow, left.bmax, b);
        if (b >= 1) {
          for (std::ptrdiff_t o = -rhalf_; o <= rhalf_; ++o) {
            const std::ptrdiff_t vip = static_cast<std::ptrdiff_t>(vi) + o;
            const std::ptrdiff_t vim = static_cast<std::ptrdiff_t>(vi) - o;
            if (vip < 0 || vim < 0 || vip >= static_cast<std::ptrdiff_t>(vcount_) ||
                vim >= static_cast<std::ptrdiff_t>(vcount_))
              continue;
            const double cand = split_min(left.row(static_cast<std::size_t>(vip), cstride),
                                          right.row(static_cast<std::size_t>(vim), cstride),
                                          left.bmax, b - 1);
            if (cand < best) best = cand;
          }
        }
        out[b] = best;
      }
    }
    drop_table(right);
    drop_table(left);
    return res;
  }

  // Root rule with v = 0; coefficient 0 applies +r everywhere.
  struct RootChoice {
    bool chosen = false;
    std::ptrdiff_t offset = 0;
    double acc = 0.0;
  };

  RootChoice root_scan(const Table& t1) const {
    const std::size_t bmax = std::min(B_, n_);
    const std::size_t stride = t1.bmax + 1;
    RootChoice rc;
    rc.acc = t1.row(vzero(), stride)[std::min(bmax, t1.bmax)];
    if (bmax >= 1) {
      for (std::ptrdiff_t o : offsets_) {
        const double cand =
            t1.row(static_cast<std::size_t>(vhalf_ + o), stride)[std::min(bmax - 1, t1.bmax)];
        if (cand < rc.acc) {
          rc.acc = cand;
          rc.chosen = true;
          rc.offset = o;
        }
      }
    }
    return rc;
  }

  void extract(std::size_t i, std::size_t vi, std::size_t b, std::vector<Pick>& out) {
    if (b == 0) return;
    const std::size_t m = n_ >> (std::bit_width(i) - 1);
    const double v = vvalue(vi);
    if (m == 2) {
      const std::size_t j = (i - n_ / 2) * 2;
      double best = op_.comb(op_.leaf(x_[j], v, w_[j]), op_.leaf(x_[j + 1], v, w_[j + 1]));
      bool chosen = false;
      double rbest = 0.0;
      for (std::ptrdiff_t o : offsets_) {
        const double r = static_cast<double>(o) * delta_;
        const double cand = op_.comb(op_.leaf(x_[j], v + r, w_[j]),
                                     op_.leaf(x_[j + 1], v - r, w_[j + 1]));
        if (cand < best) {
          best = cand;
          chosen = true;
          rbest = r;
        }
      }
      if (chosen) out.push_back({i, rbest});
      return;
    }
    b = std::min(b, m - 1);
    Table left = solve(2 * i);
    Table right = solve(2 * i + 1);
    const std::size_t cstride = left.bmax + 1;
    double best;
    std::size_t split = 0;
    bool chosen = false;
    std::ptrdiff_t obest = 0;
    best = split_argmin(left.row(vi, cstride), right.row(vi, cstride), left.bmax, b, split);
    if (b >= 1) {
      for (std::ptrdiff_t o : offsets_) {
        const std::ptrdiff_t vip = static_cast<std::ptrdiff_t>(vi) + o;
        const std::ptrdiff_t vim = static_cast<std::ptrdiff_t>(vi) - o;
        if (vip < 0 || vim < 0 || vip >= static_cast<std::ptrdiff_t>(vcount_) ||
            vim >= static_cast<std::ptrdiff_t>(vcount_))
          continue;
        std::size_t sp = 0;
        const double cand = split_argmin(left.row(static_cast<std::size_t>(vip), cstride),
                                         right.row(static_cast<std::size_t>(vim), cstride),
                                         left.bmax, b - 1, sp);
        if (cand < best) {
          best = cand;
          chosen = true;
          obest = o;
          split = sp;
        }
      }
    }
    drop_table(right);
    drop_table(left);
    if (chosen) {
      out.push_back({i, static_cast<double>(obest) * delta_});
      extract(2 * i, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(vi) + obest), split,
              out);
      extract(2 * i + 1, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(vi) - obest),
              b - 1 - split, out);
    } else {
      extract(2 * i, vi, split, out);
      extract(2 * i + 1, vi, b - split, out);
    }
  }

  Table make_table(std::size_t bmax) {
    Table t;
    t.bmax = bmax;
    t.t.assign(vcount_ * (bmax + 1), kInf);
    stats_.live_entries += t.t.size();
    stats_.peak_live_entries = std::max(stats_.peak_live_entries, stats_.live_entries);
    return t;
  }
  void drop_table(Table& t) {
    stats_.live_entries -= t.t.size();
    t.t.clear();
    t.t.shrink_to_fit();
  }

 private:
  Table bottom(std::size_t i) {
    const std::size_t j = (i - n_ / 2) * 2;
    const std::size_t bmax = std::min<std::size_t>(B_, 1);
    Table res = make_table(bmax);
    for (std::size_t vi = 0; vi < vcount_; ++vi) {
      const double v = vvalue(vi);
      double* out = res.t.data() + vi * (bmax + 1);
      out[0] = op_.comb(op_.leaf(x_[j], v, w_[j]), op_.leaf(x_[j + 1], v, w_[j + 1]));
      if (bmax >= 1) {
        double best = out[0];
        for (std::ptrdiff_t o = -rhalf_; o <= rhalf_; ++o) {
          const double r = static_cast<double>(o) * delta_;
          const double cand = op_.comb(op_.leaf(x_[j], v + r, w_[j]),
                                       op_.leaf(x_[j + 1], v - r, w_[j + 1]));
          if (cand < best) best = cand;
        }
        out[1] = best;
      }
    }
    return res;
  }

  double split_min(const double* l, const double* r, std::size_t cmax, std::size_t avail) const {
    if (avail > 2 * cmax) return op_.comb(l[cmax], r[cmax]);
    const std::size_t lo = avail > cmax ? avail - cmax : 0;
    const std::size_t hi = std::min(avail, cmax);
    double best = kInf;
    for (std::size_t bp = lo; bp <= hi; ++bp) {
      const double cand = op_.comb(l[bp], r[avail - bp]);
      if (cand < best) best = cand;
    }
    return best;
  }

  double split_argmin(const double* l, const double* r, std::size_t cmax, std::size_t avail,
                      std::size_t& split) const {
    if (avail > 2 * cmax) {
      split = cmax;
      return op_.comb(l[cmax], r[cmax]);
    }
    const std::size_t lo = avail > cmax ? avail - cmax : 0;
    const std::size_t hi = std::min(avail, cmax);
    double best = kInf;
    split = lo;
    for (std::size_t bp = lo; bp <= hi; ++bp) {
      const double cand = op_.comb(l[bp], r[avail - bp]);
      if (cand < best) {
        best = cand;
        split = bp;
      }
    }
    return best;
  }

  const double* x_;
  const double* w_;
  std::size_t n_;
  std::size_t B_;
  Op op_;
  double delta_;
  std::ptrdiff_t rhalf_;
  std::size_t vcount_;
  std::ptrdiff_t vhalf_;
  std::vector<std::ptrdiff_t> offsets_;
  UnrestrictedStats& stats_;
};

std::size_t vgrid_count(const ValueGrid& grid, double mult) {
  if (mult <= 1.0 || grid.delta == 0.0) return grid.count;
  const double steps = std::floor(mult * grid.half_range / grid.delta + 1e-9);
  return 2 * static_cast<std::size_t>(steps) + 1;
}

}  // namespace

SynopsisSolution unrestricted_on_grid(const Signal& s, const Metric& m, std::size_t B,
                                      const ValueGrid& grid, double vrange_mult,
                                      UnrestrictedStats* stats) {
  UnrestrictedStats local;
  UnrestrictedStats& st = stats ? *stats : local;
  SynopsisSolution sol;
  if (B == 0 || grid.count == 1) {
    sol.error = signal_norm(s, m);
    return sol;
  }
  const std::size_t vcount = vgrid_count(grid, vrange_mult);
  return detail::dispatch(m, [&](auto op) {
    GridSolver<decltype(op)> solver(s, B, op, grid, vcount, st);
    SynopsisSolution out;
    auto t1 = solver.solve(1);
    const auto rc = solver.root_scan(t1);
    out.error = finalize(rc.acc, m);
    solver.drop_table(t1);
    const std::size_t bmax = std::min(B, s.size());
    if (rc.chosen) {
      out.picks.push_back({0, static_cast<double>(rc.offset) * grid.delta});
      solver.extract(1, static_cast<std::size_t>(solver.vzero() + rc.offset), bmax - 1,
                     out.picks);
    } else {
      solver.extract(1, solver.vzero(), bmax, out.picks);
    }
    return out;
  });
}

SynopsisSolution unrestricted_synopsis(const Signal& s, const Metric& m, std::size_t B,
                                       double eps, const UnrestrictedOptions& opt,
                                       UnrestrictedStats* stats) {
  const ValueGrid grid = build_grid(s, m, eps, opt);
  return unrestricted_on_grid(s, m, B, grid, opt.vrange_mult, stats);
}

}  // namespace wavesyn

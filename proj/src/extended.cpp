#include "wavesyn/extended.hpp"

#include <algorithm>
#include <numeric>

#include "wavesyn/errors.hpp"
#include "wavesyn/signal.hpp"

namespace wavesyn {

double MultiCoefficient::profit(std::size_t j) const {
  j = std::min(j, benefits.size());
  double p = 0.0;
  for (std::size_t i = 0; i < j; ++i) p += benefits[i];
  return p;
}

MultiCoefficient MultiCoefficient::of(std::size_t index, std::vector<double> raw_benefits,
                                      std::vector<double> raw_values) {
  if (!raw_values.empty() && raw_values.size() != raw_benefits.size())
    throw ValidationError("values must parallel benefits");
  for (double b : raw_benefits)
    if (b < 0.0) throw ValidationError("benefits must be nonnegative");
  std::vector<std::size_t> order(raw_benefits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw_benefits[a] != raw_benefits[b] ? raw_benefits[a] > raw_benefits[b] : a < b;
  });
  MultiCoefficient mc;
  mc.index = index;
  for (std::size_t d : order) {
    mc.benefits.push_back(raw_benefits[d]);
    mc.dims.push_back(d);
    if (!raw_values.empty()) mc.values.push_back(raw_values[d]);
  }
  return mc;
}

std::vector<MultiCoefficient> compute_benefits(const std::vector<std::vector<double>>& matrix) {
  const std::size_t n = matrix.size();
  if (n < 2 || !is_pow2(n))
    throw ValidationError("coefficient matrix needs a power-of-two row count >= 2");
  std::vector<MultiCoefficient> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != matrix[0].size())
      throw ValidationError("ragged coefficient matrix");
    // ||V_i||^2: n for the overall average, the support size otherwise.
    double norm2 = static_cast<double>(n);
    if (i >= 1) {
      std::size_t s = 0;
      while ((std::size_t{2} << s) <= i) ++s;
      norm2 = static_cast<double>(n >> s);
    }
    std::vector<double> benefits(matrix[i].size());
    for (std::size_t d = 0; d < matrix[i].size(); ++d)
      benefits[d] = matrix[i][d] * matrix[i][d] * norm2;
    items.push_back(MultiCoefficient::of(i, std::move(benefits), matrix[i]));
  }
  return items;
}

std::vector<ItemSizePair> build_candidates(const std::vector<MultiCoefficient>& items,
                                           std::size_t B, std::size_t h) {
  std::vector<ItemSizePair> pairs;
  std::size_t maxm = 0;
  for (const auto& it : items) maxm = std::max(maxm, it.benefits.size());
  for (std::size_t j = 1; j <= maxm; ++j) {
    if (h + j > B) break;  // cannot fit at any budget split
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (j <= items[i].benefits.size()) eligible.push_back(i);
    const std::size_t keep = std::min<std::size_t>((B + j - 1) / j, eligible.size());
    std::partial_sort(eligible.begin(), eligible.begin() + keep, eligible.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double pa = items[a].profit(j), pb = items[b].profit(j);
                        return pa != pb ? pa > pb : a < b;
                      });
    for (std::size_t r = 0; r < keep; ++r)
      pairs.push_back({eligible[r], j, items[eligible[r]].profit(j), h + j});
  }
  std::sort(pairs.begin(), pairs.end(), [](const ItemSizePair& a, const ItemSizePair& b) {
    return a.item != b.item ? a.item < b.item : a.size < b.size;
  });
  return pairs;
}

namespace {

struct Group {
  std::size_t item;
  std::vector<ItemSizePair> sizes;
};

struct Crossing {
  bool set = false;
  std::size_t group = 0;  // group position in the processed range
  std::size_t size = 0;
  std::size_t before = 0;  // budget slot just before taking the item
};

// One DP sweep over groups [lo, hi) with budget b. P[z] is the best profit
// within cost z; for z >= ceil(b/2), Q[z] records where that solution's
// slot chain crossed the halfway mark.
struct SweepResult {
  double profit = 0.0;
  Crossing cross;
};

SweepResult sweep(const std::vector<Group>& groups, std::size_t lo, std::size_t hi,
                  std::size_t b, std::size_t h, ExtendedStats& st) {
  const std::size_t half = (b + 1) / 2;
  std::vector<double> p(b + 1, 0.0), np(b + 1, 0.0);
  std::vector<Crossing> q(b + 1 - half), nq(b + 1 - half);
  st.peak_table_entries =
      std::max(st.peak_table_entries, 2 * (b + 1) + 2 * (b + 1 - half));
  for (std::size_t g = lo; g < hi; ++g) {
    for (std::size_t z = 0; z <= b; ++z) {
      np[z] = p[z];
      if (z >= half) nq[z - half] = q[z - half];
      for (const ItemSizePair& pr : groups[g].sizes) {
        ++st.cell_evals;
        if (pr.cost > z) break;  // sizes ascend, so costs ascend
        const double cand = p[z - pr.cost] + pr.profit;
        if (cand > np[z]) {
          np[z] = cand;
          if (z >= half) {
            if (z - pr.cost >= half)
              nq[z - half] = q[z - pr.cost - half];
            else
              nq[z - half] = Crossing{true, g, pr.size, z - pr.cost};
          }
        }
      }
    }
    std::swap(p, np);
    std::swap(q, nq);
  }
  (void)h;
  return {p[b], b >= half ? q[b - half] : Crossing{}};
}

void extract(const std::vector<Group>& groups, std::size_t lo, std::size_t hi, std::size_t b,
             std::size_t h, ExtendedStats& st,
             std::vector<std::pair<std::size_t, std::size_t>>& out) {
  if (b == 0 || lo >= hi) return;
  const SweepResult res = sweep(groups, lo, hi, b, h, st);
  if (res.profit == 0.0) return;
  if (!res.cross.set) {
    // the optimum fits below the halfway mark; shrink the budget
    extract(groups, lo, hi, b / 2, h, st, out);
    return;
  }
  const std::size_t g = res.cross.group;
  const std::size_t cost = h + res.cross.size;
  extract(groups, lo, g, res.cross.before, h, st, out);
  out.emplace_back(g, res.cross.size);
  extract(groups, g + 1, hi, b - res.cross.before - cost, h, st, out);
}

}  // namespace

ExtendedAllocation solve_extended(const std::vector<MultiCoefficient>& items, std::size_t B,
                                  std::size_t h, ExtendedStats* stats) {
  ExtendedStats local;
  ExtendedStats& st = stats ? *stats : local;
  ExtendedAllocation alloc;
  const std::vector<ItemSizePair> pairs = build_candidates(items, B, h);
  st.candidate_pairs = pairs.size();
  if (pairs.empty()) return alloc;

  std::vector<Group> groups;
  for (const ItemSizePair& pr : pairs) {
    if (groups.empty() || groups.back().item != pr.item) groups.push_back({pr.item, {}});
    groups.back().sizes.push_back(pr);
  }

  std::vector<std::pair<std::size_t, std::size_t>> chosen;  // (group pos, size)
  extract(groups, 0, groups.size(), B, h, st, chosen);

  for (const auto& [g, j] : chosen) {
    const MultiCoefficient& it = items[groups[g].item];
    ExtendedAllocation::Entry e;
    e.index = it.index;
    e.size = j;
    e.dims.assign(it.dims.begin(), it.dims.begin() + j);
    if (!it.values.empty()) e.values.assign(it.values.begin(), it.values.begin() + j);
    e.profit = it.profit(j);
    alloc.entries.push_back(std::move(e));
    alloc.profit += alloc.entries.back().profit;
    alloc.cost += h + j;
  }
  return alloc;
}

}  // namespace wavesyn

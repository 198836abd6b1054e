#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wavesyn {

struct PrefixSums {
  std::vector<double> cum;   // cum[i] = sum of values[0..i)
  std::vector<double> cum2;  // cum2[i] = sum of squares

  static PrefixSums of(std::span<const double> values);
};

// Squared-error of one bucket covering positions [j, i) represented by its
// mean; tiny negative round-off is clamped to zero.
double bucket_error(std::size_t j, std::size_t i, const PrefixSums& sums);

struct Histogram {
  std::vector<std::size_t> boundaries;  // half-open cut points, boundaries[0]=0, back()=n
  std::vector<double> reps;             // per-bucket means
  double sse = 0.0;

  std::size_t buckets() const { return reps.size(); }
};

struct VoptStats {
  std::uint64_t cell_evals = 0;       // DP inner-loop evaluations, all passes
  std::uint64_t top_pass_evals = 0;   // evaluations of the outermost DP alone
};

// Optimal l2^2 histogram with at most B buckets in O(n^2 B) time and O(n)
// space: two reusable DP rows plus the crossing-bucket arrays, recursive
// recompute extraction.
Histogram vopt_linear_space(std::span<const double> values, std::size_t B,
                            VoptStats* stats = nullptr);

// Classical full-table DP with stored traceback; reference implementation.
Histogram vopt_full_table(std::span<const double> values, std::size_t B,
                          VoptStats* stats = nullptr);

}  // namespace wavesyn

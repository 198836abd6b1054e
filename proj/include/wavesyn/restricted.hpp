#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wavesyn/metrics.hpp"
#include "wavesyn/signal.hpp"
#include "wavesyn/synopsis.hpp"

namespace wavesyn {

// Instrumentation for the subtree DP. peak_live_entries tracks the largest
// number of simultaneously allocated error-profile entries.
struct SolveStats {
  std::uint64_t node_visits = 0;  // (node, incoming value) evaluations
  std::uint64_t minplus_ops = 0;  // combine steps inside budget convolutions
  std::size_t live_entries = 0;
  std::size_t peak_live_entries = 0;
};

struct RestrictedOptions {
  // Binary-search split for the l_inf convolution, exploiting profile
  // monotonicity. Off by default; the linear scan is the reference path.
  bool linf_binary_search = false;
};

struct RestrictedResult {
  double error = 0.0;
  std::size_t budget_used = 0;  // smallest budget achieving the optimum
};

// Error of the optimal restricted synopsis with at most B kept coefficients.
RestrictedResult restricted_error(const Signal& s, const Metric& m, std::size_t B,
                                  SolveStats* stats = nullptr,
                                  const RestrictedOptions& opt = {});

// Full solution via the recompute strategy: re-solves each half after the
// top-level pass fixes the root decision and the budget split.
SynopsisSolution extract_restricted(const Signal& s, const Metric& m, std::size_t B,
                                    SolveStats* stats = nullptr,
                                    const RestrictedOptions& opt = {});

// Accumulator-domain error profile of one subtree (budget-indexed, "at most
// b" semantics) given the signed ancestor sum `incoming`. Node 0 yields the
// root profile over all n coefficients. Test/inspection surface.
std::vector<double> subtree_profile(const Signal& s, const Metric& m, std::size_t node_index,
                                    double incoming, std::size_t B);

}  // namespace wavesyn

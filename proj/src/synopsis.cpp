#include "wavesyn/synopsis.hpp"

#include "wavesyn/errors.hpp"
#include "wavesyn/haar.hpp"

namespace wavesyn {

double evaluate_synopsis(const Signal& s, std::span<const Pick> picks, const Metric& m) {
  const std::size_t n = s.size();
  std::vector<double> z(n, 0.0);
  for (const Pick& p : picks) {
    if (p.index >= n) throw ValidationError("pick index out of range");
    z[p.index] = p.value;
  }
  const std::vector<double> rec = haar_inverse(z);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    acc = combine(acc, leaf_error(s.values[j], rec[j], s.weights[j], m), m);
  return finalize(acc, m);
}

}  // namespace wavesyn

#include "wavesyn/haar.hpp"

#include <bit>
#include <string>

#include "wavesyn/errors.hpp"
#include "wavesyn/signal.hpp"

namespace wavesyn {

namespace {
void require_pow2(std::size_t n) {
  if (n < 2 || !is_pow2(n))
    throw ValidationError("length must be a power of two and at least 2, got " +
                          std::to_string(n));
}
}  // namespace

std::vector<double> haar_forward(std::span<const double> x) {
  const std::size_t n = x.size();
  require_pow2(n);
  std::vector<double> coeffs(n);
  std::vector<double> avg(x.begin(), x.end());
  // Each pass halves the working length; differences of the pass with m
  // averages land at coeffs[m/2 .. m-1].
  for (std::size_t m = n; m >= 2; m /= 2) {
    for (std::size_t i = 0; i < m / 2; ++i) {
      const double a = avg[2 * i];
      const double b = avg[2 * i + 1];
      coeffs[m / 2 + i] = (a - b) / 2.0;
      avg[i] = (a + b) / 2.0;
    }
  }
  coeffs[0] = avg[0];
  return coeffs;
}

std::vector<double> haar_inverse(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  require_pow2(n);
  std::vector<double> out(n);
  // out[i-n] for heap slots i in [n, 2n); walk down accumulating signs.
  std::vector<double> acc(2 * n);
  acc[1] = coeffs[0];
  for (std::size_t i = 1; i < n; ++i) {
    acc[2 * i] = acc[i] + coeffs[i];
    acc[2 * i + 1] = acc[i] - coeffs[i];
  }
  for (std::size_t j = 0; j < n; ++j) out[j] = acc[n + j];
  return out;
}

std::vector<PathStep> leaf_path(std::size_t leaf, std::size_t n) {
  require_pow2(n);
  if (leaf >= n) throw ValidationError("leaf index out of range");
  std::vector<PathStep> path;
  std::size_t i = n + leaf;
  while (i > 1) {
    const std::size_t parent = i / 2;
    path.push_back({parent, i % 2 == 0 ? +1 : -1});
    i = parent;
  }
  path.push_back({0, +1});
  for (std::size_t a = 0, b = path.size() - 1; a < b; ++a, --b) std::swap(path[a], path[b]);
  return path;
}

std::size_t TreeNode::level() const {
  return static_cast<std::size_t>(std::bit_width(support_size()) - 1);
}

TreeNode TreeNode::at(std::size_t index, std::size_t n) {
  require_pow2(n);
  if (index >= n) throw ValidationError("coefficient index out of range");
  TreeNode node;
  node.index = index;
  node.n = n;
  if (index == 0) {
    node.support_begin = 0;
    node.support_end = n;
    return node;
  }
  const std::size_t s = static_cast<std::size_t>(std::bit_width(index) - 1);
  const std::size_t t = index - (std::size_t{1} << s);
  const std::size_t len = n >> s;
  node.support_begin = t * len;
  node.support_end = node.support_begin + len;
  return node;
}

}  // namespace wavesyn

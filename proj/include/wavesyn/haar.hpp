#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavesyn {

// Non-normalized Haar transform. Coefficient 0 is the overall average,
// coefficient 1 the root difference; for i >= 1 the children of node i are
// 2i and 2i+1. Leaf j corresponds to heap slot n+j.
std::vector<double> haar_forward(std::span<const double> x);

// Inverse: each leaf is the signed sum of its ancestors' coefficients
// (+ for left descendants, - for right; coefficient 0 is + everywhere).
std::vector<double> haar_inverse(std::span<const double> coeffs);

struct PathStep {
  std::size_t index;
  int sign;  // +1 or -1
};

// Root-to-leaf ancestor chain of leaf j, log2(n)+1 entries, index 0 first.
std::vector<PathStep> leaf_path(std::size_t leaf, std::size_t n);

// Error-tree node addressing for coefficient index >= 1 (index 0 is the
// lone parent above node 1, spanning the whole domain with sign +).
struct TreeNode {
  std::size_t index;
  std::size_t n;
  std::size_t support_begin;  // half-open leaf interval [begin, end)
  std::size_t support_end;

  std::size_t support_size() const { return support_end - support_begin; }
  std::size_t mid() const { return support_begin + support_size() / 2; }
  // Leaves sit at level 0; a node of support size m is at level log2(m).
  std::size_t level() const;
  // Number of coefficients in this node's subtree (itself included).
  std::size_t subtree_coeffs() const { return support_size() - 1; }

  static TreeNode at(std::size_t index, std::size_t n);
};

}  // namespace wavesyn

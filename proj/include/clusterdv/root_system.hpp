#pragma once

#include <map>
#include <vector>

#include "clusterdv/cartan.hpp"

namespace clusterdv {

/// A finite crystallographic root system in simple-root coordinates.
/// Immutable after build; safe to share across threads.
struct RootSystem {
  CartanSpec spec;
  int rank = 0;
  /// Positive roots ordered by height, then lexicographically.
  std::vector<IntVec> positive_roots;
  int num_positive = 0;  // N
  std::map<IntVec, int, LexLess> positive_index;
  /// generator[i] is the matrix of s_i: column j holds s_i(alpha_j).
  std::vector<IntMat> generator;
  /// bilinear(i,j) = (alpha_i, alpha_j) = d_i a_ij.
  IntMat bilinear;

  static RootSystem build(const CartanSpec& spec);

  bool is_positive(const IntVec& v) const { return positive_index.count(v) > 0; }
  bool is_root(const IntVec& v) const { return is_positive(v) || is_positive(-v); }
  /// Positive root or negated simple root.
  bool is_almost_positive(const IntVec& v) const;
  /// Index i if v == -alpha_i, else -1.
  int negative_simple_index(const IntVec& v) const;
  /// Squared-length normalization (v, v) / 2 of a root.
  Int root_norm(const IntVec& v) const;
  /// Reflection orthogonal to the root beta, as a matrix on root coordinates.
  IntMat reflection_in(const IntVec& beta) const;
};

}  // namespace clusterdv

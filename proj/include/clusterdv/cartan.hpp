#pragma once

#include <vector>

#include "clusterdv/types.hpp"

namespace clusterdv {

enum class CartanFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

CartanFamily family_from_char(char c);
char to_char(CartanFamily f);

/// Cartan matrix of a finite crystallographic type in Bourbaki numbering,
/// with a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so that
/// s_i(alpha_j) = alpha_j - a_ij alpha_i.  B_n carries the short root at
/// node n, C_n the long one.  symmetrizer is the minimal positive integer
/// diagonal d with diag(d) * cartan symmetric.
struct CartanSpec {
  CartanFamily family;
  int rank = 0;
  IntMat cartan;
  IntVec symmetrizer;

  /// Throws std::invalid_argument for ranks outside
  /// A(n>=1), B/C(n>=2), D(n>=4), E(6..8), F(4), G(2).
  static CartanSpec make(CartanFamily family, int rank);
};

/// Checks the generalized-Cartan-matrix invariants plus finite type
/// (diag(d) * cartan positive definite); throws std::invalid_argument.
void validate(const CartanSpec& spec);

/// The dual type: transposed Cartan matrix, renumbered back to Bourbaki
/// convention.  perm maps primal node i to dual node perm[i], so that
/// dual.cartan(perm[i], perm[j]) == primal.cartan(j, i).
struct DualSpec {
  CartanSpec spec;
  std::vector<int> perm;
};
DualSpec dual_of(const CartanSpec& spec);

}  // namespace clusterdv

#pragma once

#include <gmpxx.h>

#include <vector>

#include "clusterdv/types.hpp"

namespace clusterdv {

/// Exact determinant of an integer matrix via fraction-free (Bareiss)
/// elimination.
mpz_class exact_determinant(const IntMat& m);

/// Exact LU factorization over the rationals with partial pivoting, for
/// repeated solves against one integer matrix.
class RationalSolver {
 public:
  explicit RationalSolver(const IntMat& a);

  bool singular() const { return singular_; }

  /// Solution of a x = rhs; throws std::logic_error if singular.
  std::vector<mpq_class> solve(const IntVec& rhs) const;

  /// Like solve, but requires every entry to be an integer.
  IntVec solve_integral(const IntVec& rhs) const;

 private:
  int n_ = 0;
  bool singular_ = false;
  std::vector<std::vector<mpq_class>> lu_;  // L below diagonal, U on and above
  std::vector<int> perm_;                   // row permutation
};

}  // namespace clusterdv

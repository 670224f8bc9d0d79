#include "clusterdv/exact_linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace clusterdv {

mpz_class exact_determinant(const IntMat& m) {
  detail::require(m.rows() == m.cols(), "determinant needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = mpz_class(m(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (w[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

RationalSolver::RationalSolver(const IntMat& a) {
  detail::require(a.rows() == a.cols(), "solver needs a square matrix");
  n_ = static_cast<int>(a.rows());
  lu_.assign(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) lu_[i][j] = mpq_class(a(i, j));
  perm_.resize(n_);
  std::iota(perm_.begin(), perm_.end(), 0);

  for (int k = 0; k < n_; ++k) {
    int p = -1;
    for (int r = k; r < n_; ++r)
      if (lu_[r][k] != 0) { p = r; break; }
    if (p < 0) {
      singular_ = true;
      return;
    }
    std::swap(lu_[k], lu_[p]);
    std::swap(perm_[k], perm_[p]);
    for (int i = k + 1; i < n_; ++i) {
      if (lu_[i][k] == 0) continue;
      mpq_class f = lu_[i][k] / lu_[k][k];
      lu_[i][k] = f;
      for (int j = k + 1; j < n_; ++j) lu_[i][j] -= f * lu_[k][j];
    }
  }
}

std::vector<mpq_class> RationalSolver::solve(const IntVec& rhs) const {
  detail::require(!singular_, "matrix is singular");
  detail::require(static_cast<int>(rhs.size()) == n_, "rhs size mismatch");
  std::vector<mpq_class> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = mpq_class(rhs[perm_[i]]);
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu_[i][j] * x[j];
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) x[i] -= lu_[i][j] * x[j];
    x[i] /= lu_[i][i];
  }
  return x;
}

IntVec RationalSolver::solve_integral(const IntVec& rhs) const {
  std::vector<mpq_class> x = solve(rhs);
  IntVec out(n_);
  for (int i = 0; i < n_; ++i) {
    x[i].canonicalize();
    detail::require(x[i].get_den() == 1, "expected an integral solution");
    detail::require(x[i].get_num().fits_slong_p(), "solution entry overflows machine word");
    out[i] = x[i].get_num().get_si();
  }
  return out;
}

}  // namespace clusterdv

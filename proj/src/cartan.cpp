#include "clusterdv/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace clusterdv {

CartanFamily family_from_char(char c) {
  switch (c) {
    case 'A': return CartanFamily::A;
    case 'B': return CartanFamily::B;
    case 'C': return CartanFamily::C;
    case 'D': return CartanFamily::D;
    case 'E': return CartanFamily::E;
    case 'F': return CartanFamily::F;
    case 'G': return CartanFamily::G;
    default: throw std::invalid_argument(std::string("unknown type family: ") + c);
  }
}

char to_char(CartanFamily f) { return static_cast<char>(f); }

namespace {

struct Edge {
  int a, b;      // 0-based nodes
  Int ab, ba;    // cartan(a,b), cartan(b,a)
};

IntMat from_edges(int n, const std::vector<Edge>& edges) {
  IntMat a = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (const Edge& e : edges) {
    a(e.a, e.b) = e.ab;
    a(e.b, e.a) = e.ba;
  }
  return a;
}

IntMat builtin_cartan(CartanFamily f, int n) {
  std::vector<Edge> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1, -1, -1});
  };
  switch (f) {
    case CartanFamily::A:
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      chain(n);
      break;
    case CartanFamily::B:
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      chain(n - 1);
      edges.push_back({n - 2, n - 1, -1, -2});  // alpha_n short
      break;
    case CartanFamily::C:
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      chain(n - 1);
      edges.push_back({n - 2, n - 1, -2, -1});  // alpha_n long
      break;
    case CartanFamily::D:
      if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
      chain(n - 1);
      edges.push_back({n - 3, n - 1, -1, -1});
      break;
    case CartanFamily::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
      edges.push_back({0, 2, -1, -1});
      edges.push_back({1, 3, -1, -1});
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, -1, -1});
      break;
    }
    case CartanFamily::F:
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      edges.push_back({0, 1, -1, -1});
      edges.push_back({1, 2, -1, -2});  // alpha_3, alpha_4 short
      edges.push_back({2, 3, -1, -1});
      break;
    case CartanFamily::G:
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      edges.push_back({0, 1, -3, -1});  // alpha_1 short
      break;
  }
  return from_edges(n, edges);
}

// Minimal positive integer diagonal d with diag(d) * a symmetric,
// propagated along the (connected) diagram with exact rationals.
IntVec symmetrizer_of(const IntMat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<mpq_class> d(n, 0);
  std::vector<int> stack;
  d[0] = 1;
  stack.push_back(0);
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || d[j] != 0) continue;
      // d_j a_ji = d_i a_ij
      d[j] = d[i] * mpq_class(a(i, j)) / mpq_class(a(j, i));
      stack.push_back(j);
    }
  }
  mpz_class lcm_den = 1;
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) throw std::invalid_argument("Cartan diagram is not connected");
    mpz_class den = d[i].get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class gcd_num = 0;
  std::vector<mpz_class> nums(n);
  for (int i = 0; i < n; ++i) {
    nums[i] = d[i].get_num() * (lcm_den / d[i].get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), nums[i].get_mpz_t());
  }
  IntVec out(n);
  for (int i = 0; i < n; ++i) {
    mpz_class v = nums[i] / gcd_num;
    out[i] = v.get_si();
    if (out[i] <= 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  }
  return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class det_bareiss(const IntMat& m) {
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
      for (int j = k + 1; j < n; ++j) {
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

}  // namespace

CartanSpec CartanSpec::make(CartanFamily family, int rank) {
  CartanSpec spec;
  spec.family = family;
  spec.rank = rank;
  spec.cartan = builtin_cartan(family, rank);
  spec.symmetrizer = symmetrizer_of(spec.cartan);
  validate(spec);
  return spec;
}

void validate(const CartanSpec& spec) {
  const int n = spec.rank;
  if (n <= 0 || spec.cartan.rows() != n || spec.cartan.cols() != n ||
      spec.symmetrizer.size() != n) {
    throw std::invalid_argument("malformed Cartan data");
  }
  const IntMat& a = spec.cartan;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    if (spec.symmetrizer[i] <= 0) throw std::invalid_argument("symmetrizer must be positive");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
      if (spec.symmetrizer[i] * a(i, j) != spec.symmetrizer[j] * a(j, i))
        throw std::invalid_argument("symmetrizer does not symmetrize the Cartan matrix");
    }
  }
  if (!mat_eq(a, builtin_cartan(spec.family, n)))
    throw std::invalid_argument("Cartan matrix does not match the Bourbaki table of its type");
  // Finite type: all leading principal minors of the symmetrized matrix positive.
  IntMat sym = spec.symmetrizer.asDiagonal() * a;
  for (int k = 1; k <= n; ++k) {
    if (det_bareiss(sym.topLeftCorner(k, k)) <= 0)
      throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

DualSpec dual_of(const CartanSpec& spec) {
  CartanFamily dual_family = spec.family;
  if (spec.family == CartanFamily::B) dual_family = CartanFamily::C;
  if (spec.family == CartanFamily::C) dual_family = CartanFamily::B;

  const int n = spec.rank;
  CartanSpec dual = CartanSpec::make(dual_family, n);
  IntMat t = spec.cartan.transpose();

  // Lexicographically first relabeling of the transpose onto the Bourbaki table.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (dual.cartan(perm[i], perm[j]) != t(i, j)) ok = false;
    if (ok) return DualSpec{std::move(dual), perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::logic_error("transposed Cartan matrix has no Bourbaki relabeling");
}

}  // namespace clusterdv

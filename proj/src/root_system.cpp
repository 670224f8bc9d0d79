#include "clusterdv/root_system.hpp"

#include <algorithm>
#include <deque>

namespace clusterdv {

namespace {

bool all_nonneg(const IntVec& v) { return (v.array() >= 0).all(); }

}  // namespace

RootSystem RootSystem::build(const CartanSpec& spec) {
  validate(spec);
  RootSystem rs;
  rs.spec = spec;
  rs.rank = spec.rank;
  const int n = spec.rank;

  rs.generator.reserve(n);
  for (int i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - a_ij alpha_i
    IntMat m = IntMat::Identity(n, n);
    for (int j = 0; j < n; ++j) m(i, j) -= spec.cartan(i, j);
    rs.generator.push_back(std::move(m));
  }
  rs.bilinear = spec.symmetrizer.asDiagonal() * spec.cartan;

  // Orbit closure of the simple roots inside the positive cone.
  std::map<IntVec, int, LexLess> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e = unit_vector(n, i);
    seen.emplace(e, 0);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    IntVec beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVec gamma = rs.generator[i] * beta;
      if (all_nonneg(gamma) && !seen.count(gamma)) {
        seen.emplace(gamma, 0);
        queue.push_back(std::move(gamma));
      }
    }
  }

  rs.positive_roots.reserve(seen.size());
  for (const auto& [root, _] : seen) rs.positive_roots.push_back(root);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const IntVec& a, const IntVec& b) {
              Int ha = a.sum(), hb = b.sum();
              if (ha != hb) return ha < hb;
              return LexLess{}(a, b);
            });
  rs.num_positive = static_cast<int>(rs.positive_roots.size());
  for (int k = 0; k < rs.num_positive; ++k) rs.positive_index.emplace(rs.positive_roots[k], k);
  return rs;
}

bool RootSystem::is_almost_positive(const IntVec& v) const {
  return is_positive(v) || negative_simple_index(v) >= 0;
}

int RootSystem::negative_simple_index(const IntVec& v) const {
  if (v.size() != rank) return -1;
  int idx = -1;
  for (int i = 0; i < rank; ++i) {
    if (v[i] == 0) continue;
    if (v[i] != -1 || idx >= 0) return -1;
    idx = i;
  }
  return idx;
}

Int RootSystem::root_norm(const IntVec& v) const {
  Int q = v.dot(bilinear * v);
  detail::require(q > 0 && q % 2 == 0, "root norm must be a positive even integer");
  return q / 2;
}

IntMat RootSystem::reflection_in(const IntVec& beta) const {
  detail::require(is_root(beta), "reflection axis must be a root");
  const int n = rank;
  const IntVec pairing = bilinear * beta;  // (alpha_j, beta) per component
  const Int norm2 = beta.dot(pairing);     // (beta, beta)
  IntMat m = IntMat::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    // s_beta(alpha_j) = alpha_j - 2 (alpha_j, beta) / (beta, beta) * beta
    Int num = 2 * pairing[j];
    detail::require(num % norm2 == 0, "non-integral reflection coefficient");
    m.col(j) -= (num / norm2) * beta;
  }
  return m;
}

}  // namespace clusterdv

#include "clusterdv/almost_positive.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterdv {

Int root_compat(const ClusterContext& ctx, const IntVec& alpha, const IntVec& beta) {
  const RootSystem& rs = ctx.rs();
  if (!rs.is_almost_positive(alpha) || !rs.is_almost_positive(beta))
    throw std::invalid_argument("compatibility degree needs almost positive roots");
  IntVec a = alpha, b = beta;
  for (int step = 0; step <= ctx.m(); ++step) {
    int neg = rs.negative_simple_index(a);
    if (neg >= 0) return b[neg];
    a = ctx.rotate_root_inverse(a);
    b = ctx.rotate_root_inverse(b);
  }
  throw std::logic_error("rotation orbit never reached a negated simple root");
}

IntVec root_dvector(const ClusterContext& ctx, const std::vector<IntVec>& cluster_roots,
                    const IntVec& beta) {
  Positions p;
  p.reserve(cluster_roots.size());
  for (const IntVec& r : cluster_roots) p.push_back(ctx.root_position(r));
  std::sort(p.begin(), p.end());
  if (!is_c_cluster(ctx, p)) throw std::invalid_argument("roots do not form a cluster");
  IntVec out(static_cast<int>(cluster_roots.size()));
  for (size_t k = 0; k < cluster_roots.size(); ++k)
    out[static_cast<int>(k)] = root_compat(ctx, cluster_roots[k], beta);
  return out;
}

DualContext dual_context(const ClusterContext& ctx) {
  DualSpec dual = dual_of(ctx.rs().spec);
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(dual.spec));
  Word c;
  c.reserve(ctx.rank());
  for (int s : ctx.word().coxeter) c.push_back(dual.perm[s]);
  ClusterContext dctx = ClusterContext::build(rs, c);
  return DualContext{std::move(dual), std::move(rs), std::move(dctx)};
}

IntVec dual_root(const RootSystem& primal, const DualContext& dual, const IntVec& alpha) {
  const int n = primal.rank;
  IntVec out = IntVec::Zero(n);
  int neg = primal.negative_simple_index(alpha);
  if (neg >= 0) {
    out[dual.dual.perm[neg]] = -1;
    return out;
  }
  detail::require(primal.is_positive(alpha), "dual of a non almost positive vector");
  const Int norm = primal.root_norm(alpha);  // (alpha, alpha) / 2
  for (int i = 0; i < n; ++i) {
    Int num = alpha[i] * primal.spec.symmetrizer[i];
    detail::require(num % norm == 0, "coroot coordinates must be integral");
    out[dual.dual.perm[i]] = num / norm;
  }
  detail::require(dual.rs->is_positive(out), "coroot is not a positive root of the dual system");
  return out;
}

bool dual_compat_agrees(const ClusterContext& primal, const DualContext& dual,
                        const IntVec& alpha, const IntVec& beta) {
  Int lhs = root_compat(primal, alpha, beta);
  Int rhs = root_compat(dual.ctx, dual_root(primal.rs(), dual, beta),
                        dual_root(primal.rs(), dual, alpha));
  return lhs == rhs;
}

}  // namespace clusterdv

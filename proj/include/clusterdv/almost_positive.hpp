#pragma once

#include "clusterdv/subword.hpp"

namespace clusterdv {

/// Compatibility degree of beta with respect to alpha: transport the pair
/// backwards along the root rotation until alpha is a negated simple root,
/// then read off the matching coordinate of beta.  Yields -1 on the
/// diagonal.
Int root_compat(const ClusterContext& ctx, const IntVec& alpha, const IntVec& beta);

/// Componentwise root_compat against an ordered cluster of roots.
/// Throws std::invalid_argument when the roots do not form a cluster.
IntVec root_dvector(const ClusterContext& ctx, const std::vector<IntVec>& cluster_roots,
                    const IntVec& beta);

/// The dual context: transposed Cartan data with the node relabeling, the
/// relabeled Coxeter word, and the coordinate map on roots.
struct DualContext {
  DualSpec dual;
  std::shared_ptr<const RootSystem> rs;
  ClusterContext ctx;
};

DualContext dual_context(const ClusterContext& ctx);

/// Coordinates of the coroot 2 alpha / (alpha, alpha) in the dual
/// simple-coroot basis (negated simple roots map to negated simples).
IntVec dual_root(const RootSystem& primal, const DualContext& dual, const IntVec& alpha);

/// Whether (alpha ||_c beta) computed in the primal context equals
/// (beta* ||_c alpha*) computed in the dual context.
bool dual_compat_agrees(const ClusterContext& primal, const DualContext& dual,
                        const IntVec& alpha, const IntVec& beta);

}  // namespace clusterdv

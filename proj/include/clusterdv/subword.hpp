#pragma once

#include "clusterdv/context.hpp"

namespace clusterdv {

/// A candidate cluster: strictly increasing 0-based positions in Q_c.
using Positions = std::vector<int>;

/// True iff the complement of the positions spells a reduced expression of
/// the longest element. Throws std::invalid_argument on malformed input.
bool is_c_cluster(const ClusterContext& ctx, const Positions& p);

/// The first n positions.
Positions initial_cluster(const ClusterContext& ctx);

/// r(I, j) for all j: the letter's simple root pushed through the product of
/// the complement letters before j.
std::vector<IntVec> root_function_table(const ClusterContext& ctx, const Positions& cluster);

IntVec root_function(const ClusterContext& ctx, const Positions& cluster, int j);

struct Flip {
  Positions cluster;  // the neighbouring cluster
  int removed;
  int added;
};

/// Exchanges i against the unique position j outside the cluster with
/// r(I, j) = +- r(I, i).
Flip flip(const ClusterContext& ctx, const Positions& cluster, int i);

/// Incremental root-function update across a flip: positions strictly
/// between the exchanged pair (inclusive on the far end) are reflected in
/// r(I, removed), everything else is untouched.
std::vector<IntVec> update_root_function(const ClusterContext& ctx,
                                         const std::vector<IntVec>& table, int removed,
                                         int added);

/// Compatibility coefficient of two positions: decompose r(I, j) over the
/// root basis of any cluster I containing i and take the i-coordinate,
/// negated when j <= i.
Int position_compat(const ClusterContext& ctx, int i, int j);

/// All-pairs table of position compatibility coefficients.
std::vector<std::vector<Int>> position_compat_table(const ClusterContext& ctx);

/// The coefficient vector ({i ||_c j})_{i in cluster}, in position order.
IntVec position_dvector(const ClusterContext& ctx, const Positions& cluster, int j);

/// Clusters of the rotation orbit of the initial cluster; together they
/// cover every position.
std::vector<Positions> rotation_covers(const ClusterContext& ctx);

/// All clusters, by breadth-first flips from the initial cluster; ordered by
/// BFS layer, then lexicographically.
std::vector<Positions> enumerate_clusters(const ClusterContext& ctx);

/// Moving the first letter of Q_c to the back (conjugated by w0) yields the
/// word of the shifted Coxeter word; sigma maps old positions to new ones
/// through the commutation reordering.
struct JumpMap {
  ClusterContext context;
  std::vector<int> sigma;
};

JumpMap jump(const ClusterContext& ctx);

}  // namespace clusterdv

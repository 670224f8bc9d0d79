#include "clusterdv/subword.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "clusterdv/exact_linalg.hpp"

namespace clusterdv {

namespace {

void check_positions(const ClusterContext& ctx, const Positions& p) {
  if (static_cast<int>(p.size()) != ctx.rank())
    throw std::invalid_argument("a cluster has exactly rank many positions");
  int prev = -1;
  for (int i : p) {
    if (i <= prev || i >= ctx.m())
      throw std::invalid_argument("positions must be strictly increasing and inside the word");
    prev = i;
  }
}

bool contains(const Positions& p, int i) {
  return std::binary_search(p.begin(), p.end(), i);
}

}  // namespace

bool is_c_cluster(const ClusterContext& ctx, const Positions& p) {
  check_positions(ctx, p);
  const Word& q = ctx.word().letters;
  const RootSystem& rs = ctx.rs();
  // The complement has N letters, so it is reduced iff it multiplies to w0.
  IntMat g = IntMat::Identity(ctx.rank(), ctx.rank());
  auto it = p.begin();
  for (int j = 0; j < ctx.m(); ++j) {
    if (it != p.end() && *it == j) {
      ++it;
      continue;
    }
    g = g * rs.generator[q[j]];
  }
  return mat_eq(g, ctx.w0());
}

Positions initial_cluster(const ClusterContext& ctx) {
  Positions p(ctx.rank());
  for (int i = 0; i < ctx.rank(); ++i) p[i] = i;
  return p;
}

std::vector<IntVec> root_function_table(const ClusterContext& ctx, const Positions& cluster) {
  check_positions(ctx, cluster);
  const Word& q = ctx.word().letters;
  const RootSystem& rs = ctx.rs();
  std::vector<IntVec> table;
  table.reserve(ctx.m());
  IntMat prefix = IntMat::Identity(ctx.rank(), ctx.rank());
  auto it = cluster.begin();
  for (int j = 0; j < ctx.m(); ++j) {
    table.push_back(prefix.col(q[j]));
    if (it != cluster.end() && *it == j) {
      ++it;
    } else {
      prefix = prefix * rs.generator[q[j]];
    }
  }
  return table;
}

IntVec root_function(const ClusterContext& ctx, const Positions& cluster, int j) {
  detail::require(j >= 0 && j < ctx.m(), "position out of range");
  return root_function_table(ctx, cluster)[j];
}

Flip flip(const ClusterContext& ctx, const Positions& cluster, int i) {
  if (!contains(cluster, i)) throw std::invalid_argument("flip position must lie in the cluster");
  std::vector<IntVec> table = root_function_table(ctx, cluster);
  const IntVec& target = table[i];
  int found = -1;
  for (int j = 0; j < ctx.m(); ++j) {
    if (contains(cluster, j)) continue;
    if (vec_eq(table[j], target) || vec_eq(table[j], IntVec(-target))) {
      detail::require(found < 0, "flip partner must be unique");
      found = j;
    }
  }
  detail::require(found >= 0, "flip partner must exist");
  Flip f;
  f.removed = i;
  f.added = found;
  f.cluster = cluster;
  f.cluster.erase(std::find(f.cluster.begin(), f.cluster.end(), i));
  f.cluster.insert(std::upper_bound(f.cluster.begin(), f.cluster.end(), found), found);
  return f;
}

std::vector<IntVec> update_root_function(const ClusterContext& ctx,
                                         const std::vector<IntVec>& table, int removed,
                                         int added) {
  const IntMat refl = ctx.rs().reflection_in(table[removed]);
  const int lo = std::min(removed, added);
  const int hi = std::max(removed, added);
  std::vector<IntVec> out = table;
  for (int k = lo + 1; k <= hi; ++k) out[k] = refl * table[k];
  return out;
}

std::vector<Positions> rotation_covers(const ClusterContext& ctx) {
  std::vector<Positions> covers;
  std::vector<bool> covered(ctx.m(), false);
  int missing = ctx.m();
  Positions cur = initial_cluster(ctx);
  for (int step = 0; missing > 0; ++step) {
    detail::require(step <= 4 * ctx.m(), "rotation orbit failed to cover all positions");
    covers.push_back(cur);
    for (int i : cur) {
      if (!covered[i]) {
        covered[i] = true;
        --missing;
      }
    }
    Positions next;
    next.reserve(cur.size());
    for (int i : cur) next.push_back(ctx.rotate_position(i));
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  return covers;
}

namespace {

// Decompose r(I, j) over the root basis {r(I, i)} of one cluster and fill
// the compatibility rows of every i in I.
void fill_rows_from_cluster(const ClusterContext& ctx, const Positions& cluster,
                            std::vector<std::vector<Int>>& table, std::vector<bool>& done) {
  const int n = ctx.rank();
  bool needed = false;
  for (int i : cluster) needed |= !done[i];
  if (!needed) return;
  std::vector<IntVec> roots = root_function_table(ctx, cluster);
  IntMat basis(n, n);
  for (int k = 0; k < n; ++k) basis.col(k) = roots[cluster[k]];
  RationalSolver solver(basis);
  detail::require(!solver.singular(), "root configuration of a cluster must be a basis");
  for (int j = 0; j < ctx.m(); ++j) {
    IntVec rho = solver.solve_integral(roots[j]);
    for (int k = 0; k < n; ++k) {
      int i = cluster[k];
      if (done[i]) continue;
      table[i][j] = j > i ? rho[k] : -rho[k];
    }
  }
  for (int i : cluster) done[i] = true;
}

}  // namespace

std::vector<std::vector<Int>> position_compat_table(const ClusterContext& ctx) {
  std::vector<std::vector<Int>> table(ctx.m(), std::vector<Int>(ctx.m(), 0));
  std::vector<bool> done(ctx.m(), false);
  for (const Positions& cover : rotation_covers(ctx)) {
    detail::require(is_c_cluster(ctx, cover), "rotated initial cluster must stay a cluster");
    fill_rows_from_cluster(ctx, cover, table, done);
  }
  for (bool d : done) detail::require(d, "compatibility rows incomplete");
  return table;
}

Int position_compat(const ClusterContext& ctx, int i, int j) {
  detail::require(i >= 0 && i < ctx.m() && j >= 0 && j < ctx.m(), "position out of range");
  for (const Positions& cover : rotation_covers(ctx)) {
    if (!contains(cover, i)) continue;
    const int n = ctx.rank();
    std::vector<IntVec> roots = root_function_table(ctx, cover);
    IntMat basis(n, n);
    for (int k = 0; k < n; ++k) basis.col(k) = roots[cover[k]];
    RationalSolver solver(basis);
    detail::require(!solver.singular(), "root configuration of a cluster must be a basis");
    IntVec rho = solver.solve_integral(roots[j]);
    int k = static_cast<int>(std::lower_bound(cover.begin(), cover.end(), i) - cover.begin());
    return j > i ? rho[k] : -rho[k];
  }
  throw std::logic_error("no covering cluster found for position");
}

IntVec position_dvector(const ClusterContext& ctx, const Positions& cluster, int j) {
  if (!is_c_cluster(ctx, cluster)) throw std::invalid_argument("positions do not form a cluster");
  const int n = ctx.rank();
  std::vector<IntVec> roots = root_function_table(ctx, cluster);
  IntMat basis(n, n);
  for (int k = 0; k < n; ++k) basis.col(k) = roots[cluster[k]];
  RationalSolver solver(basis);
  detail::require(!solver.singular(), "root configuration of a cluster must be a basis");
  IntVec rho = solver.solve_integral(roots[j]);
  IntVec out(n);
  for (int k = 0; k < n; ++k) out[k] = j > cluster[k] ? rho[k] : -rho[k];
  return out;
}

std::vector<Positions> enumerate_clusters(const ClusterContext& ctx) {
  struct Entry {
    Positions p;
    int layer;
  };
  std::set<Positions> seen;
  std::deque<Entry> queue;
  std::vector<Entry> found;
  Positions init = initial_cluster(ctx);
  seen.insert(init);
  queue.push_back({init, 0});
  while (!queue.empty()) {
    Entry e = std::move(queue.front());
    queue.pop_front();
    found.push_back(e);
    for (int i : e.p) {
      Flip f = flip(ctx, e.p, i);
      if (seen.insert(f.cluster).second) queue.push_back({f.cluster, e.layer + 1});
    }
  }
  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    if (a.layer != b.layer) return a.layer < b.layer;
    return a.p < b.p;
  });
  std::vector<Positions> out;
  out.reserve(found.size());
  for (Entry& e : found) out.push_back(std::move(e.p));
  return out;
}

JumpMap jump(const ClusterContext& ctx) {
  const Word& q = ctx.word().letters;
  const int m = ctx.m();
  Word shifted(ctx.word().coxeter.begin() + 1, ctx.word().coxeter.end());
  shifted.push_back(ctx.word().coxeter.front());
  ClusterContext next = ClusterContext::build(ctx.rs_ptr(), shifted);

  // The jumped word, each letter tagged with its original position.
  std::vector<int> letters, origin;
  letters.reserve(m);
  origin.reserve(m);
  for (int j = 1; j < m; ++j) {
    letters.push_back(q[j]);
    origin.push_back(j);
  }
  letters.push_back(ctx.eta(q[0]));
  origin.push_back(0);

  const Word& target = next.word().letters;
  const IntMat& cartan = ctx.rs().spec.cartan;
  std::vector<bool> used(m, false);
  std::vector<int> sigma(m, -1);
  for (int slot = 0; slot < m; ++slot) {
    int pick = -1;
    for (int k = 0; k < m; ++k) {
      if (used[k]) continue;
      if (letters[k] == target[slot]) {
        pick = k;
        break;
      }
      // every letter skipped over must commute with the target letter
      detail::require(cartan(letters[k], target[slot]) == 0,
                      "jumped word is not commutation-equivalent to the shifted word");
    }
    detail::require(pick >= 0, "jumped word does not contain the needed letter");
    used[pick] = true;
    sigma[origin[pick]] = slot;
  }
  return JumpMap{std::move(next), std::move(sigma)};
}

}  // namespace clusterdv

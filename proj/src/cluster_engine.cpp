#include "clusterdv/cluster_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace clusterdv {

Seed initial_seed(const ClusterContext& ctx) {
  const int n = ctx.rank();
  const IntMat& a = ctx.rs().spec.cartan;
  std::vector<int> pos_in_c(n, -1);
  for (int i = 0; i < n; ++i) pos_in_c[ctx.word().coxeter[i]] = i;
  Seed s;
  s.b = IntMat::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || a(u, v) == 0) continue;
      s.b(u, v) = pos_in_c[u] < pos_in_c[v] ? -a(u, v) : a(u, v);
    }
  }
  s.vars.reserve(n);
  for (int i = 0; i < n; ++i) s.vars.push_back(Laurent::variable(n, i));
  return s;
}

IntMat mutate_matrix(const IntMat& b, int k) {
  const int n = static_cast<int>(b.rows());
  IntMat out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else if (b(i, k) > 0) {
        out(i, j) = b(i, j) + b(i, k) * std::max<Int>(b(k, j), 0);
      } else if (b(i, k) < 0) {
        out(i, j) = b(i, j) - b(i, k) * std::max<Int>(-b(k, j), 0);
      }
    }
  }
  return out;
}

Seed mutate(const Seed& seed, int k) {
  const int n = static_cast<int>(seed.vars.size());
  detail::require(k >= 0 && k < n, "mutation vertex out of range");
  const int nv = seed.vars[0].nvars();
  Laurent plus = Laurent::constant(nv, 1);
  Laurent minus = Laurent::constant(nv, 1);
  for (int i = 0; i < n; ++i) {
    Int e = seed.b(i, k);
    if (e > 0) plus = plus * seed.vars[i].pow(static_cast<unsigned>(e));
    if (e < 0) minus = minus * seed.vars[i].pow(static_cast<unsigned>(-e));
  }
  std::optional<Laurent> next = (plus + minus).divided_exactly(seed.vars[k]);
  detail::require(next.has_value(), "exchange relation did not divide exactly");
  Seed out;
  out.b = mutate_matrix(seed.b, k);
  out.vars = seed.vars;
  out.vars[k] = std::move(*next);
  return out;
}

bool is_skew_symmetrizable(const IntMat& b, const IntVec& d) {
  const int n = static_cast<int>(b.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * b(i, j) != -d[j] * b(j, i)) return false;
  return true;
}

bool quiver_acyclic(const IntMat& b) {
  const int n = static_cast<int>(b.rows());
  std::vector<int> state(n, 0);  // 0 new, 1 in progress, 2 done
  std::function<bool(int)> visit = [&](int u) {
    state[u] = 1;
    for (int v = 0; v < n; ++v) {
      if (b(u, v) <= 0) continue;
      if (state[v] == 1) return false;
      if (state[v] == 0 && !visit(v)) return false;
    }
    state[u] = 2;
    return true;
  };
  for (int u = 0; u < n; ++u)
    if (state[u] == 0 && !visit(u)) return false;
  return true;
}

ExchangeGraph ExchangeGraph::enumerate(const ClusterContext& ctx, int budget) {
  ExchangeGraph g;
  g.ctx_ = std::make_shared<const ClusterContext>(ctx);
  const int n = ctx.rank();

  std::vector<std::vector<Laurent>> labeled;  // polynomials per seed, BFS order
  Seed init = initial_seed(ctx);
  detail::require(is_skew_symmetrizable(init.b, ctx.rs().spec.symmetrizer),
                  "initial exchange matrix is not skew-symmetrizable");

  auto id_of = [&](const Laurent& p) {
    auto it = g.registry_.find(p);
    if (it != g.registry_.end()) return it->second;
    int id = static_cast<int>(g.variables_.size());
    g.registry_.emplace(p, id);
    g.variables_.push_back(p);
    g.first_occurrence_.push_back({-1, -1});
    return id;
  };

  SeedRec rec;
  rec.b = init.b;
  for (int i = 0; i < n; ++i) rec.var_ids.push_back(id_of(init.vars[i]));
  rec.sorted_ids = rec.var_ids;
  std::sort(rec.sorted_ids.begin(), rec.sorted_ids.end());
  g.seed_index_.emplace(rec.sorted_ids, 0);
  g.seeds_.push_back(rec);
  labeled.push_back(init.vars);
  for (int i = 0; i < n; ++i) g.first_occurrence_[rec.var_ids[i]] = {0, i};

  for (int s = 0; s < static_cast<int>(g.seeds_.size()); ++s) {
    for (int k = 0; k < n; ++k) {
      Seed cur{labeled[s], g.seeds_[s].b};
      Seed next = mutate(cur, k);
      int new_id = id_of(next.vars[k]);
      std::vector<int> ids = g.seeds_[s].var_ids;
      ids[k] = new_id;
      std::vector<int> key = ids;
      std::sort(key.begin(), key.end());
      if (g.seed_index_.count(key)) continue;
      if (static_cast<int>(g.seeds_.size()) >= budget)
        throw BudgetExceeded("exchange graph exceeds the seed budget");
      int sid = static_cast<int>(g.seeds_.size());
      g.seed_index_.emplace(key, sid);
      SeedRec nr;
      nr.var_ids = ids;
      nr.sorted_ids = key;
      nr.b = next.b;
      nr.path = g.seeds_[s].path;
      nr.path.push_back(k);
      g.seeds_.push_back(std::move(nr));
      labeled.push_back(next.vars);
      if (g.first_occurrence_[new_id].first < 0) g.first_occurrence_[new_id] = {sid, k};
    }
  }

  // Self-checks pinned to the sign convention: distinct variables carry
  // distinct denominator vectors, and together these are exactly the almost
  // positive roots.
  const int m = ctx.m();
  detail::require(static_cast<int>(g.variables_.size()) == m,
                  "variable count must equal the word length");
  g.dvectors_.reserve(m);
  for (const Laurent& v : g.variables_) g.dvectors_.push_back(v.d_vector());
  for (int id = 0; id < m; ++id) {
    bool fresh = g.dvec_index_.emplace(g.dvectors_[id], id).second;
    detail::require(fresh, "denominator vectors of cluster variables must be distinct");
  }
  for (int j = 0; j < m; ++j)
    detail::require(g.dvec_index_.count(ctx.position_root(j)) == 1,
                    "denominator vectors must exhaust the almost positive roots");

  // Canonical order: variables by denominator vector, seeds by sorted ids.
  std::vector<int> new_id(m, -1);
  {
    std::vector<int> by_dvec;
    for (const auto& [dv, id] : g.dvec_index_) by_dvec.push_back(id);
    for (int k = 0; k < m; ++k) new_id[by_dvec[k]] = k;
  }
  std::vector<Laurent> vars2(m);
  std::vector<IntVec> dv2(m);
  std::vector<std::pair<int, int>> occ2(m);
  for (int id = 0; id < m; ++id) {
    vars2[new_id[id]] = std::move(g.variables_[id]);
    dv2[new_id[id]] = std::move(g.dvectors_[id]);
    occ2[new_id[id]] = g.first_occurrence_[id];
  }
  g.variables_ = std::move(vars2);
  g.dvectors_ = std::move(dv2);
  g.first_occurrence_ = std::move(occ2);
  g.registry_.clear();
  g.dvec_index_.clear();
  for (int id = 0; id < m; ++id) {
    g.registry_.emplace(g.variables_[id], id);
    g.dvec_index_.emplace(g.dvectors_[id], id);
  }
  for (SeedRec& sr : g.seeds_) {
    for (int& id : sr.var_ids) id = new_id[id];
    sr.sorted_ids = sr.var_ids;
    std::sort(sr.sorted_ids.begin(), sr.sorted_ids.end());
  }
  std::vector<int> seed_order(g.seeds_.size());
  for (size_t i = 0; i < g.seeds_.size(); ++i) seed_order[i] = static_cast<int>(i);
  std::sort(seed_order.begin(), seed_order.end(), [&](int a, int b) {
    return g.seeds_[a].sorted_ids < g.seeds_[b].sorted_ids;
  });
  std::vector<int> seed_new(g.seeds_.size());
  std::vector<SeedRec> seeds2(g.seeds_.size());
  for (size_t i = 0; i < g.seeds_.size(); ++i) {
    seed_new[seed_order[i]] = static_cast<int>(i);
    seeds2[i] = std::move(g.seeds_[seed_order[i]]);
  }
  g.seeds_ = std::move(seeds2);
  g.seed_index_.clear();
  for (size_t i = 0; i < g.seeds_.size(); ++i)
    g.seed_index_.emplace(g.seeds_[i].sorted_ids, static_cast<int>(i));
  for (auto& [sid, vtx] : g.first_occurrence_) sid = seed_new[sid];
  g.initial_seed_ = seed_new[0];

  g.position_of_.assign(m, -1);
  for (int j = 0; j < m; ++j) g.position_of_[g.dvec_index_.at(ctx.position_root(j))] = j;
  return g;
}

int ExchangeGraph::variable_id(const Laurent& p) const {
  auto it = registry_.find(p);
  return it == registry_.end() ? -1 : it->second;
}

int ExchangeGraph::find_seed(std::vector<int> sorted_ids) const {
  std::sort(sorted_ids.begin(), sorted_ids.end());
  auto it = seed_index_.find(sorted_ids);
  return it == seed_index_.end() ? -1 : it->second;
}

int ExchangeGraph::seed_containing(int var_id) const {
  for (int s = 0; s < num_seeds(); ++s) {
    const auto& ids = seeds_[s].sorted_ids;
    if (std::binary_search(ids.begin(), ids.end(), var_id)) return s;
  }
  throw std::logic_error("variable not contained in any seed");
}

int ExchangeGraph::psi(int position) const {
  return dvec_index_.at(ctx_->position_root(position));
}

std::vector<Laurent> ExchangeGraph::reseed(int s) const {
  const ClusterContext& ctx = *ctx_;
  const int n = ctx.rank();
  const int m = num_variables();

  Seed ref = initial_seed(ctx);
  for (int k : seeds_[s].path) ref = mutate(ref, k);
  for (int v = 0; v < n; ++v)
    detail::require(variable_id(ref.vars[v]) == seeds_[s].var_ids[v],
                    "replayed seed does not match its record");

  std::vector<Laurent> exprs(m);
  std::vector<bool> have(m, false);
  int missing = m;
  auto record = [&](int id, const Laurent& p) {
    if (!have[id]) {
      have[id] = true;
      exprs[id] = p;
      --missing;
    }
  };

  struct Node {
    std::vector<Laurent> ref_vars;    // in the ambient basis of the graph
    std::vector<Laurent> fresh_vars;  // in the basis of seed s
    IntMat b;
    std::vector<int> ids;
  };
  Node start;
  start.ref_vars = ref.vars;
  start.b = ref.b;
  start.ids = seeds_[s].var_ids;
  for (int v = 0; v < n; ++v) start.fresh_vars.push_back(Laurent::variable(n, v));
  for (int v = 0; v < n; ++v) record(start.ids[v], start.fresh_vars[v]);

  std::set<std::vector<int>> visited;
  std::vector<int> key0 = seeds_[s].sorted_ids;
  visited.insert(key0);
  std::deque<Node> queue;
  queue.push_back(std::move(start));
  while (!queue.empty() && missing > 0) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < n && missing > 0; ++k) {
      Seed ref_side{node.ref_vars, node.b};
      Seed ref_next = mutate(ref_side, k);
      int new_id = variable_id(ref_next.vars[k]);
      detail::require(new_id >= 0, "mutation left the enumerated variable set");
      std::vector<int> ids = node.ids;
      ids[k] = new_id;
      std::vector<int> key = ids;
      std::sort(key.begin(), key.end());
      if (!visited.insert(key).second) continue;
      Seed fresh_side{node.fresh_vars, node.b};
      Seed fresh_next = mutate(fresh_side, k);
      record(new_id, fresh_next.vars[k]);
      Node child;
      child.ref_vars = std::move(ref_next.vars);
      child.fresh_vars = std::move(fresh_next.vars);
      child.b = ref_next.b;
      child.ids = std::move(ids);
      queue.push_back(std::move(child));
    }
  }
  detail::require(missing == 0, "reseed failed to reach every variable");
  return exprs;
}

Int ExchangeGraph::variable_compat(int x_id, int y_id) const {
  int s = seed_containing(x_id);
  std::vector<Laurent> exprs = reseed(s);
  const auto& ids = seeds_[s].var_ids;
  int vertex = static_cast<int>(std::find(ids.begin(), ids.end(), x_id) - ids.begin());
  return exprs[y_id].d_vector()[vertex];
}

std::vector<std::vector<Int>> ExchangeGraph::variable_compat_table() const {
  const int m = num_variables();
  std::vector<std::vector<Int>> table(m, std::vector<Int>(m, 0));
  std::vector<bool> done(m, false);
  int remaining = m;
  while (remaining > 0) {
    int best = -1, best_cover = -1;
    for (int s = 0; s < num_seeds(); ++s) {
      int cover = 0;
      for (int id : seeds_[s].sorted_ids) cover += !done[id];
      if (cover > best_cover) {
        best_cover = cover;
        best = s;
      }
    }
    detail::require(best_cover > 0, "greedy cover stalled");
    std::vector<Laurent> exprs = reseed(best);
    std::vector<IntVec> dvecs;
    dvecs.reserve(m);
    for (int y = 0; y < m; ++y) dvecs.push_back(exprs[y].d_vector());
    const auto& ids = seeds_[best].var_ids;
    for (int vertex = 0; vertex < static_cast<int>(ids.size()); ++vertex) {
      int x = ids[vertex];
      if (done[x]) continue;
      done[x] = true;
      --remaining;
      for (int y = 0; y < m; ++y) table[x][y] = dvecs[y][vertex];
    }
  }
  return table;
}

int ExchangeGraph::rotate_variable(int var_id) const {
  const ClusterContext& ctx = *ctx_;
  auto [sid, vertex] = first_occurrence_[var_id];
  Seed seed = initial_seed(ctx);
  for (int u : ctx.word().coxeter) seed = mutate(seed, u);
  for (int k : seeds_[sid].path) seed = mutate(seed, k);
  int out = variable_id(seed.vars[vertex]);
  detail::require(out >= 0, "rotated variable is not a cluster variable");
  return out;
}

}  // namespace clusterdv

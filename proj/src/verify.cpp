#include "clusterdv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "clusterdv/exact_linalg.hpp"

namespace clusterdv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json positions_json(const Positions& p) {
  Json a = Json::array();
  for (int i : p) a.push_back(i + 1);
  return a;
}

// Deterministic seed sample: everything for rank <= 3, otherwise the initial
// seed, a fixed pseudorandom draw, and one non-acyclic representative.
std::vector<int> sample_seeds(const ExchangeGraph& graph, int sample_cap) {
  const int count = graph.num_seeds();
  std::vector<int> out;
  if (graph.context().rank() <= 3 || count <= sample_cap) {
    out.resize(count);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::set<int> picked;
  picked.insert(graph.initial_seed_id());
  std::mt19937 gen(0);
  while (static_cast<int>(picked.size()) < sample_cap)
    picked.insert(static_cast<int>(gen() % count));
  bool have_nonacyclic = false;
  for (int s : picked) have_nonacyclic |= !quiver_acyclic(graph.seed(s).b);
  if (!have_nonacyclic) {
    for (int s = 0; s < count; ++s) {
      if (!quiver_acyclic(graph.seed(s).b)) {
        picked.insert(s);
        break;
      }
    }
  }
  return {picked.begin(), picked.end()};
}

std::vector<std::vector<Int>> root_compat_table(const ClusterContext& ctx) {
  const int m = ctx.m();
  std::vector<std::vector<Int>> t(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = root_compat(ctx, ctx.position_root(i), ctx.position_root(j));
  return t;
}

// Pairs of positions lying in a common cluster.
std::vector<std::vector<bool>> compatible_pairs(const ClusterContext& ctx,
                                                const std::vector<Positions>& clusters) {
  std::vector<std::vector<bool>> ok(ctx.m(), std::vector<bool>(ctx.m(), false));
  for (const Positions& p : clusters)
    for (int a : p)
      for (int b : p) ok[a][b] = true;
  return ok;
}

struct JumpSweep {
  bool letters_close = true;
  bool sigma_is_inverse_rotation = true;
  bool tables_invariant = true;
  bool clusters_preserved = true;
  Json counterexample = Json::object();
};

JumpSweep jump_sweep(const ClusterContext& ctx, bool with_clusters) {
  JumpSweep out;
  const int m = ctx.m();
  ClusterContext cur = ctx;
  std::vector<int> total(m);
  std::iota(total.begin(), total.end(), 0);
  for (int step = 0; step < ctx.rank(); ++step) {
    auto table = position_compat_table(cur);
    JumpMap jm = jump(cur);
    auto next_table = position_compat_table(jm.context);
    for (int i = 0; i < m && out.tables_invariant; ++i) {
      for (int j = 0; j < m; ++j) {
        if (next_table[jm.sigma[i]][jm.sigma[j]] != table[i][j]) {
          out.tables_invariant = false;
          out.counterexample = {{"step", step + 1}, {"i", i + 1}, {"j", j + 1}};
          break;
        }
      }
    }
    if (with_clusters) {
      for (const Positions& p : enumerate_clusters(cur)) {
        Positions q;
        q.reserve(p.size());
        for (int i : p) q.push_back(jm.sigma[i]);
        std::sort(q.begin(), q.end());
        if (!is_c_cluster(jm.context, q)) {
          out.clusters_preserved = false;
          out.counterexample = {{"step", step + 1}, {"cluster", positions_json(p)}};
          break;
        }
      }
    }
    for (int i = 0; i < m; ++i) total[i] = jm.sigma[total[i]];
    cur = jm.context;
  }
  out.letters_close = cur.word().letters == ctx.word().letters;
  for (int i = 0; i < m; ++i)
    if (total[i] != ctx.rotate_position_inverse(i)) out.sigma_is_inverse_rotation = false;
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, bool pass, Json details) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(details)});
}

Json scenario_json(const ClusterContext& ctx, const std::string& suite) {
  Json c = Json::array();
  for (int s : ctx.word().coxeter) c.push_back(s + 1);
  return Json{{"type", std::string(1, to_char(ctx.rs().spec.family))},
              {"rank", ctx.rank()},
              {"coxeter", c},
              {"suite", suite}};
}

VerificationReport verify_theorem(const ClusterContext& ctx, int budget) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "theorem");
  const int m = ctx.m();

  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, budget);
  auto pos_table = position_compat_table(ctx);
  auto root_table = root_compat_table(ctx);
  auto var_table = graph.variable_compat_table();

  bool agree = true;
  Json bad = Json::object();
  for (int i = 0; i < m && agree; ++i) {
    for (int j = 0; j < m; ++j) {
      Int a = var_table[graph.psi(i)][graph.psi(j)];
      Int b = root_table[i][j];
      Int c = pos_table[i][j];
      if (a != b || b != c) {
        agree = false;
        bad = {{"i", i + 1}, {"j", j + 1}, {"variables", a}, {"roots", b}, {"positions", c}};
        break;
      }
    }
  }
  rep.add("three-way-agreement", agree, bad);

  bool diag = true;
  for (int i = 0; i < m; ++i) diag &= pos_table[i][i] == -1 && root_table[i][i] == -1;
  rep.add("diagonal-is-minus-one", diag);

  bool zeros = true;
  Json zbad = Json::object();
  for (const Positions& p : enumerate_clusters(ctx)) {
    for (int a : p) {
      for (int b : p) {
        if (a != b && pos_table[a][b] != 0) {
          zeros = false;
          zbad = {{"i", a + 1}, {"j", b + 1}, {"cluster", positions_json(p)}};
        }
      }
    }
  }
  rep.add("compatible-pairs-vanish", zeros, zbad);

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_corollaries(const ClusterContext& ctx, int budget, int sample_cap) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "corollaries");
  const int m = ctx.m();
  const int n = ctx.rank();

  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, budget);
  std::vector<int> sample = sample_seeds(graph, sample_cap);

  bool root_route = true, pos_route = true, nonneg = true, cluster_positions = true;
  Json root_bad, pos_bad, nn_bad, cp_bad;
  for (int s : sample) {
    const auto& rec = graph.seed(s);
    std::vector<Laurent> exprs = graph.reseed(s);
    std::vector<IntVec> dvecs;
    dvecs.reserve(m);
    for (int y = 0; y < m; ++y) dvecs.push_back(exprs[y].d_vector());

    // positions of the seed's variables, ascending
    Positions I;
    I.reserve(n);
    for (int id : rec.var_ids) I.push_back(graph.position_of(id));
    std::sort(I.begin(), I.end());
    if (!is_c_cluster(ctx, I)) {
      cluster_positions = false;
      cp_bad = {{"seed", s}, {"positions", positions_json(I)}};
      continue;
    }
    std::vector<int> vertex_of_pos(m, -1);
    for (int v = 0; v < n; ++v) vertex_of_pos[graph.position_of(rec.var_ids[v])] = v;

    for (int j = 0; j < m && (root_route || pos_route); ++j) {
      IntVec pd = position_dvector(ctx, I, j);
      const IntVec& d = dvecs[graph.psi(j)];
      for (int k = 0; k < n; ++k) {
        int v = vertex_of_pos[I[k]];
        if (pos_route && d[v] != pd[k]) {
          pos_route = false;
          pos_bad = {{"seed", s}, {"j", j + 1}, {"i", I[k] + 1}};
        }
        Int rc = root_compat(ctx, graph.dvector(rec.var_ids[v]), graph.dvector(graph.psi(j)));
        if (root_route && d[v] != rc) {
          root_route = false;
          root_bad = {{"seed", s}, {"j", j + 1}, {"vertex", v + 1}};
        }
      }
    }

    for (int y = 0; y < m && nonneg; ++y) {
      if (std::binary_search(rec.sorted_ids.begin(), rec.sorted_ids.end(), y)) continue;
      const IntVec& d = dvecs[y];
      if ((d.array() < 0).any() || d.isZero()) {
        nonneg = false;
        nn_bad = {{"seed", s}, {"variable-dvector", vec_json(graph.dvector(y))}};
      }
    }
  }
  rep.add("seed-positions-form-clusters", cluster_positions, cp_bad);
  rep.add("dvectors-match-root-compat", root_route, root_bad);
  rep.add("dvectors-match-position-compat", pos_route, pos_bad);
  rep.add("noninitial-dvectors-nonnegative-nonzero", nonneg, nn_bad);

  bool exists_nonacyclic = false, sampled_nonacyclic = false;
  for (int s = 0; s < graph.num_seeds(); ++s) exists_nonacyclic |= !quiver_acyclic(graph.seed(s).b);
  for (int s : sample) sampled_nonacyclic |= !quiver_acyclic(graph.seed(s).b);
  rep.add("nonacyclic-seed-sampled", !exists_nonacyclic || sampled_nonacyclic,
          Json{{"exists", exists_nonacyclic}, {"sampled", sampled_nonacyclic}});

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_invariances(const ClusterContext& ctx, int budget) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "invariances");
  const int m = ctx.m();
  const int n = ctx.rank();
  const bool exhaustive = n <= 3;

  std::vector<Positions> clusters = enumerate_clusters(ctx);
  auto pos_table = position_compat_table(ctx);

  // rotation preserves clusters (positions)
  {
    std::set<Positions> all(clusters.begin(), clusters.end());
    bool pass = true;
    Json bad;
    for (const Positions& p : clusters) {
      Positions q;
      for (int i : p) q.push_back(ctx.rotate_position(i));
      std::sort(q.begin(), q.end());
      if (!all.count(q) || !is_c_cluster(ctx, q)) {
        pass = false;
        bad = {{"cluster", positions_json(p)}};
        break;
      }
    }
    rep.add("rotation-preserves-clusters", pass, bad);
  }

  // rotation preserves the position table
  {
    bool pass = true;
    Json bad;
    for (int i = 0; i < m && pass; ++i)
      for (int j = 0; j < m; ++j)
        if (pos_table[ctx.rotate_position(i)][ctx.rotate_position(j)] != pos_table[i][j]) {
          pass = false;
          bad = {{"i", i + 1}, {"j", j + 1}};
          break;
        }
    rep.add("rotation-preserves-position-compat", pass, bad);
  }

  // theta intertwines the two rotations
  {
    bool pass = true;
    for (int i = 0; i < m; ++i)
      pass &= vec_eq(ctx.rotate_root(ctx.position_root(i)),
                     ctx.position_root(ctx.rotate_position(i)));
    rep.add("root-rotation-matches-position-rotation", pass);
  }

  // the sorting word ends, up to commutations, with the conjugated letters of c
  {
    bool pass = true;
    for (int p = 0; p < m; ++p) {
      int t = ctx.rotate_position(p);
      if (t < n) pass &= ctx.word().letters[p] == ctx.eta(ctx.word().letters[t]);
    }
    rep.add("sorting-word-suffix-conjugates-c", pass);
  }

  // every rotation orbit passes through a negated simple root
  {
    bool pass = true;
    for (int i = 0; i < m && pass; ++i) {
      IntVec a = ctx.position_root(i);
      bool hit = false;
      for (int step = 0; step <= m; ++step) {
        if (ctx.rs().negative_simple_index(a) >= 0) {
          hit = true;
          break;
        }
        a = ctx.rotate_root_inverse(a);
      }
      pass &= hit;
    }
    rep.add("rotation-orbits-cover-negated-simples", pass);
  }

  // transported compatibility is independent of which negated-simple hit is used
  {
    bool pass = true;
    Json bad;
    for (int i = 0; i < m && pass; ++i) {
      for (int j = 0; j < m; ++j) {
        IntVec a = ctx.position_root(i), b = ctx.position_root(j);
        Int first = 0;
        bool have_first = false, done = false;
        for (int step = 0; step <= 2 * m && !done; ++step) {
          int neg = ctx.rs().negative_simple_index(a);
          if (neg >= 0) {
            if (!have_first) {
              first = b[neg];
              have_first = true;
            } else {
              done = true;
              if (b[neg] != first) {
                pass = false;
                bad = {{"i", i + 1}, {"j", j + 1}};
              }
            }
          }
          a = ctx.rotate_root_inverse(a);
          b = ctx.rotate_root_inverse(b);
        }
        if (!pass) break;
      }
    }
    rep.add("root-compat-well-defined", pass, bad);
  }

  // root configurations are bases
  {
    bool pass = true;
    for (const Positions& p : clusters) {
      auto roots = root_function_table(ctx, p);
      IntMat basis(n, n);
      for (int k = 0; k < n; ++k) basis.col(k) = roots[p[k]];
      pass &= exact_determinant(basis) != 0;
    }
    rep.add("root-configurations-are-bases", pass);
  }

  // incremental root-function update equals recomputation, across every flip
  {
    bool pass = true;
    bool multiples = true;
    Json bad;
    for (const Positions& p : clusters) {
      auto table = root_function_table(ctx, p);
      for (int i : p) {
        Flip f = flip(ctx, p, i);
        auto updated = update_root_function(ctx, table, f.removed, f.added);
        auto scratch = root_function_table(ctx, f.cluster);
        for (int k = 0; k < m; ++k) {
          if (!vec_eq(updated[k], scratch[k])) {
            pass = false;
            bad = {{"cluster", positions_json(p)}, {"i", i + 1}, {"k", k + 1}};
          }
          // the change is an integer multiple of the flipped root
          IntVec diff = scratch[k] - table[k];
          if (!diff.isZero()) {
            const IntVec& axis = table[i];
            int pivot = 0;
            while (axis[pivot] == 0) ++pivot;
            if (diff[pivot] % axis[pivot] != 0 ||
                !vec_eq(diff, IntVec((diff[pivot] / axis[pivot]) * axis)))
              multiples = false;
          }
        }
      }
    }
    rep.add("incremental-update-matches-recomputation", pass, bad);
    rep.add("flip-changes-are-root-multiples", multiples);
  }

  // position compatibility does not depend on the chosen cluster
  {
    bool pass = true;
    Json bad;
    std::vector<const Positions*> pool;
    if (exhaustive) {
      for (const Positions& p : clusters) pool.push_back(&p);
    } else {
      std::mt19937 gen(0);
      for (int k = 0; k < 10 && !clusters.empty(); ++k)
        pool.push_back(&clusters[gen() % clusters.size()]);
    }
    for (const Positions* p : pool) {
      for (int j = 0; j < m && pass; ++j) {
        IntVec d = position_dvector(ctx, *p, j);
        for (int k = 0; k < n; ++k) {
          if (d[k] != pos_table[(*p)[k]][j]) {
            pass = false;
            bad = {{"cluster", positions_json(*p)}, {"i", (*p)[k] + 1}, {"j", j + 1}};
            break;
          }
        }
      }
    }
    rep.add("position-compat-cluster-independent", pass, bad);
  }

  // zero exactly on compatible pairs, nonnegative off the diagonal
  {
    auto ok = compatible_pairs(ctx, clusters);
    bool pass = true;
    Json bad;
    for (int i = 0; i < m && pass; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        if (pos_table[i][j] < 0 || (pos_table[i][j] == 0) != ok[i][j]) {
          pass = false;
          bad = {{"i", i + 1}, {"j", j + 1}, {"value", pos_table[i][j]}};
          break;
        }
      }
    }
    rep.add("zero-iff-compatible", pass, bad);
  }

  // jump sweep: clusters and the table survive all cyclic shifts of c
  {
    JumpSweep s = jump_sweep(ctx, true);
    rep.add("jump-preserves-clusters", s.clusters_preserved, s.counterexample);
    rep.add("jump-preserves-position-compat", s.tables_invariant, s.counterexample);
    rep.add("jump-cycle-closes", s.letters_close);
    rep.add("jump-cycle-is-inverse-rotation", s.sigma_is_inverse_rotation);
  }

  // symbolic side: variable compatibility is cluster independent, rotation
  // preserves clusters of variables and their compatibility degrees
  {
    ExchangeGraph graph = ExchangeGraph::enumerate(ctx, budget);
    auto var_table = graph.variable_compat_table();

    bool indep = true;
    Json ibad;
    std::vector<int> seed_pool = sample_seeds(graph, 10);
    for (int s : seed_pool) {
      std::vector<Laurent> exprs = graph.reseed(s);
      const auto& ids = graph.seed(s).var_ids;
      for (int y = 0; y < graph.num_variables() && indep; ++y) {
        IntVec d = exprs[y].d_vector();
        for (int v = 0; v < n; ++v) {
          if (d[v] != var_table[ids[v]][y]) {
            indep = false;
            ibad = {{"seed", s}, {"vertex", v + 1}, {"y", y + 1}};
            break;
          }
        }
      }
    }
    rep.add("variable-compat-cluster-independent", indep, ibad);

    std::vector<int> rot(graph.num_variables());
    for (int y = 0; y < graph.num_variables(); ++y) rot[y] = graph.rotate_variable(y);

    bool rot_bijection = true;
    {
      std::vector<bool> hit(rot.size(), false);
      for (int y : rot) {
        if (hit[y]) rot_bijection = false;
        hit[y] = true;
      }
    }
    rep.add("variable-rotation-is-bijection", rot_bijection);

    bool rot_matches = true;
    for (int i = 0; i < m; ++i)
      rot_matches &= rot[graph.psi(i)] == graph.psi(ctx.rotate_position(i));
    rep.add("variable-rotation-matches-position-rotation", rot_matches);

    bool seeds_closed = true;
    for (int s = 0; s < graph.num_seeds(); ++s) {
      std::vector<int> image;
      for (int id : graph.seed(s).var_ids) image.push_back(rot[id]);
      if (graph.find_seed(image) < 0) seeds_closed = false;
    }
    rep.add("rotation-preserves-variable-clusters", seeds_closed);

    bool compat_invariant = true;
    Json cbad;
    for (int x = 0; x < graph.num_variables() && compat_invariant; ++x)
      for (int y = 0; y < graph.num_variables(); ++y)
        if (var_table[rot[x]][rot[y]] != var_table[x][y]) {
          compat_invariant = false;
          cbad = {{"x", x + 1}, {"y", y + 1}};
          break;
        }
    rep.add("rotation-preserves-variable-compat", compat_invariant, cbad);
  }

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_counting(const ClusterContext& ctx, int budget) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "counting");

  auto facets = enumerate_clusters(ctx);
  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, budget);
  Json counts{{"facets", facets.size()},
              {"seeds", graph.num_seeds()},
              {"variables", graph.num_variables()}};

  bool geo_ok = true;
  CartanFamily fam = ctx.rs().spec.family;
  if (fam == CartanFamily::A || fam == CartanFamily::B || fam == CartanFamily::C) {
    PolygonModel model = polygon_model(fam, ctx.rank());
    auto objects = polygon_objects(model);
    auto geo = enumerate_geometric_clusters(model, objects);
    counts["geometric-clusters"] = geo.size();
    counts["diagonal-objects"] = objects.size();
    geo_ok = static_cast<int>(geo.size()) == static_cast<int>(facets.size()) &&
             static_cast<int>(objects.size()) == ctx.m();
  }
  rep.add("facets-equal-seeds", static_cast<int>(facets.size()) == graph.num_seeds(), counts);
  rep.add("geometric-count-agrees", geo_ok, counts);
  rep.add("variables-count-is-word-length", graph.num_variables() == ctx.m(), counts);

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_geometry_oracle(CartanFamily family, int rank, int budget) {
  auto t0 = Clock::now();
  VerificationReport rep;

  auto rs = std::make_shared<const RootSystem>(RootSystem::build(CartanSpec::make(family, rank)));
  Word c(rank);
  std::iota(c.begin(), c.end(), 0);
  ClusterContext ctx = ClusterContext::build(rs, c);
  rep.scenario = scenario_json(ctx, "geometry");

  PolygonModel model = polygon_model(family, rank);
  auto objects = polygon_objects(model);
  auto geo_clusters = enumerate_geometric_clusters(model, objects);
  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, budget);
  auto var_table = graph.variable_compat_table();
  const int m = ctx.m();

  rep.add("object-count-is-word-length", static_cast<int>(objects.size()) == m,
          Json{{"objects", objects.size()}, {"m", m}});

  if (family == CartanFamily::A) {
    bool sym = true;
    for (size_t a = 0; a < objects.size(); ++a)
      for (size_t b = 0; b < objects.size(); ++b)
        if (a != b)
          sym &= crossing_number(model, objects[a], objects[b]) ==
                 crossing_number(model, objects[b], objects[a]);
    rep.add("crossing-symmetry", sym);
  }

  // Algebraic fingerprints: denominator vectors with respect to the initial
  // seed, one per variable.
  std::map<IntVec, int, LexLess> dvec_to_var;
  for (int y = 0; y < m; ++y) dvec_to_var.emplace(graph.dvector(y), y);

  // Search a geometric cluster and slot order whose crossing fingerprints
  // reproduce them; that pins the object-to-variable bijection.
  std::vector<int> chi(objects.size(), -1);
  bool found = false;
  for (const auto& t0_cluster : geo_clusters) {
    std::vector<int> slots = t0_cluster;
    std::sort(slots.begin(), slots.end());
    do {
      bool ok = true;
      std::vector<int> cand(objects.size(), -1);
      for (size_t d = 0; d < objects.size() && ok; ++d) {
        IntVec f = crossing_vector(model, objects, slots, static_cast<int>(d));
        auto it = dvec_to_var.find(f);
        if (it == dvec_to_var.end() || cand[it->second] != -1) {
          ok = false;
        } else {
          cand[it->second] = static_cast<int>(d);
        }
      }
      if (ok) {
        found = true;
        for (int y = 0; y < m; ++y) chi[cand[y]] = y;
        break;
      }
    } while (std::next_permutation(slots.begin(), slots.end()));
    if (found) break;
  }
  rep.add("fingerprint-bijection-found", found);

  bool pairs_ok = found;
  bool clusters_ok = found;
  Json pb, cb;
  if (found) {
    for (size_t a = 0; a < objects.size() && pairs_ok; ++a) {
      for (size_t b = 0; b < objects.size(); ++b) {
        if (crossing_number(model, objects[a], objects[b]) != var_table[chi[a]][chi[b]]) {
          pairs_ok = false;
          pb = {{"theta", static_cast<int>(a)}, {"delta", static_cast<int>(b)}};
          break;
        }
      }
    }
    for (const auto& t : geo_clusters) {
      std::vector<int> ids;
      for (int d : t) ids.push_back(chi[d]);
      if (graph.find_seed(ids) < 0) {
        clusters_ok = false;
        cb = {{"cluster", t}};
      }
    }
    clusters_ok &= static_cast<int>(geo_clusters.size()) == graph.num_seeds();
  }
  rep.add("crossing-equals-compat", pairs_ok, pb);
  rep.add("clusters-map-to-seeds", clusters_ok, cb);

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_duality(const ClusterContext& ctx) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "duality");
  const int m = ctx.m();

  DualContext dual = dual_context(ctx);
  bool agree = true;
  Json bad;
  for (int i = 0; i < m && agree; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (!dual_compat_agrees(ctx, dual, ctx.position_root(i), ctx.position_root(j))) {
        agree = false;
        bad = {{"alpha", vec_json(ctx.position_root(i))}, {"beta", vec_json(ctx.position_root(j))}};
        break;
      }
    }
  }
  rep.add("dual-compat-agrees", agree, bad);

  bool zeros = true;
  for (const Positions& p : enumerate_clusters(ctx)) {
    for (int a : p)
      for (int b : p)
        if (a != b) zeros &= root_compat(ctx, ctx.position_root(a), ctx.position_root(b)) == 0;
  }
  rep.add("co-clustered-pairs-vanish", zeros);

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_subword_layer(const ClusterContext& ctx) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = scenario_json(ctx, "subword");
  const int m = ctx.m();

  auto table = position_compat_table(ctx);
  bool diag = true, nonneg = true, rot = true;
  Json bad;
  for (int i = 0; i < m; ++i) {
    diag &= table[i][i] == -1;
    for (int j = 0; j < m; ++j) {
      if (i != j && table[i][j] < 0) {
        nonneg = false;
        bad = {{"i", i + 1}, {"j", j + 1}, {"value", table[i][j]}};
      }
      if (table[ctx.rotate_position(i)][ctx.rotate_position(j)] != table[i][j]) rot = false;
    }
  }
  rep.add("diagonal-is-minus-one", diag);
  rep.add("offdiagonal-nonnegative", nonneg, bad);
  rep.add("rotation-preserves-position-compat", rot);

  JumpSweep s = jump_sweep(ctx, false);
  rep.add("jump-preserves-position-compat", s.tables_invariant, s.counterexample);
  rep.add("jump-cycle-closes", s.letters_close);
  rep.add("jump-cycle-is-inverse-rotation", s.sigma_is_inverse_rotation);

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<VerificationReport> run_parallel(
    const std::vector<std::function<VerificationReport()>>& tasks, int threads) {
  std::vector<VerificationReport> out(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      out[i] = tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(threads, static_cast<int>(tasks.size()));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace clusterdv

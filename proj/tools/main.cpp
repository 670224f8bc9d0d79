#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "clusterdv/verify.hpp"

namespace {

using namespace clusterdv;

struct CommonOpts {
  std::string type = "A";
  int rank = 2;
  std::string coxeter;  // "1,2,3"; empty means 1..n
  std::string seed = "initial";
  std::string format = "json";
  int budget = 256;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_seed = false) {
  cmd->add_option("--type", o.type, "Type family: A, B, C, D, E, F or G")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  cmd->add_option("--rank", o.rank, "Rank of the root system")->required();
  cmd->add_option("--coxeter", o.coxeter,
                  "Coxeter word as comma-separated generator indices (default 1..n)");
  if (with_seed)
    cmd->add_option("--seed", o.seed, "Reference seed: 'initial' or 'path:k1,k2,...'");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--budget", o.budget, "Exchange-graph seed budget");
  cmd->add_option("--threads", o.threads, "Worker threads for independent scenarios");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Word parse_coxeter(const CommonOpts& o, const RootSystem& rs) {
  Word c;
  if (o.coxeter.empty()) {
    c.resize(rs.rank);
    std::iota(c.begin(), c.end(), 0);
  } else {
    for (int v : parse_int_list(o.coxeter)) c.push_back(v - 1);
  }
  if (!is_coxeter_word(rs, c))
    throw std::invalid_argument("Coxeter word must list each generator 1..n exactly once");
  return c;
}

ClusterContext make_context(const CommonOpts& o) {
  CartanSpec spec = CartanSpec::make(family_from_char(o.type.at(0)), o.rank);
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));
  return ClusterContext::build(rs, parse_coxeter(o, *rs));
}

// One record per line: JSON object, or CSV row with vectors joined by ';'.
struct Emitter {
  bool csv = false;
  std::vector<std::string> columns;

  void header() const {
    if (!csv) return;
    for (size_t i = 0; i < columns.size(); ++i)
      std::cout << (i ? "," : "") << columns[i];
    std::cout << '\n';
  }
  static std::string flat(const Json& v) {
    if (v.is_array()) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += flat(v[i]);
      }
      return s;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }
  void row(const Json& record) const {
    if (!csv) {
      std::cout << record.dump() << '\n';
      return;
    }
    for (size_t i = 0; i < columns.size(); ++i) {
      std::cout << (i ? "," : "");
      if (record.contains(columns[i])) std::cout << flat(record.at(columns[i]));
    }
    std::cout << '\n';
  }
};

Json root_json(const IntVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

int run_count(const CommonOpts& o) {
  ClusterContext ctx = make_context(o);
  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, o.budget);
  Emitter e{o.format == "csv", {"type", "rank", "variables", "clusters"}};
  e.header();
  e.row(Json{{"type", o.type},
             {"rank", o.rank},
             {"variables", graph.num_variables()},
             {"clusters", graph.num_seeds()}});
  return 0;
}

int run_clusters(const CommonOpts& o) {
  ClusterContext ctx = make_context(o);
  Emitter e{o.format == "csv", {"positions", "roots"}};
  e.header();
  for (const Positions& p : enumerate_clusters(ctx)) {
    Json pos = Json::array(), roots = Json::array();
    for (int i : p) {
      pos.push_back(i + 1);
      roots.push_back(root_json(ctx.position_root(i)));
    }
    e.row(Json{{"positions", pos}, {"roots", roots}});
  }
  return 0;
}

int run_variables(const CommonOpts& o) {
  ClusterContext ctx = make_context(o);
  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, o.budget);
  Emitter e{o.format == "csv", {"position", "root", "laurent"}};
  e.header();
  for (int j = 0; j < ctx.m(); ++j) {
    e.row(Json{{"position", j + 1},
               {"root", root_json(ctx.position_root(j))},
               {"laurent", graph.variable(graph.psi(j)).to_string()}});
  }
  return 0;
}

int run_dvectors(const CommonOpts& o) {
  ClusterContext ctx = make_context(o);
  ExchangeGraph graph = ExchangeGraph::enumerate(ctx, o.budget);
  const int m = ctx.m();

  std::vector<Laurent> exprs;
  if (o.seed == "initial") {
    exprs.reserve(m);
    for (int y = 0; y < m; ++y) exprs.push_back(graph.variable(y));
  } else if (o.seed.rfind("path:", 0) == 0) {
    Seed cur = initial_seed(ctx);
    for (int k : parse_int_list(o.seed.substr(5))) {
      if (k < 1 || k > ctx.rank()) throw std::invalid_argument("mutation vertex out of range");
      cur = mutate(cur, k - 1);
    }
    std::vector<int> user_ids;
    for (const Laurent& v : cur.vars) user_ids.push_back(graph.variable_id(v));
    int sid = graph.find_seed(user_ids);
    if (sid < 0) throw std::logic_error("mutated seed missing from the exchange graph");
    std::vector<Laurent> rec_exprs = graph.reseed(sid);
    // express in the user's vertex order along the path
    const auto& rec_ids = graph.seed(sid).var_ids;
    std::vector<int> perm(ctx.rank());
    for (int w = 0; w < ctx.rank(); ++w) {
      auto it = std::find(user_ids.begin(), user_ids.end(), rec_ids[w]);
      perm[w] = static_cast<int>(it - user_ids.begin());
    }
    exprs.reserve(m);
    for (int y = 0; y < m; ++y) exprs.push_back(rec_exprs[y].rename_vars(perm));
  } else {
    throw std::invalid_argument("--seed must be 'initial' or 'path:k1,k2,...'");
  }

  Emitter e{o.format == "csv", {"position", "root", "dvector", "laurent"}};
  e.header();
  for (int j = 0; j < m; ++j) {
    const Laurent& y = exprs[graph.psi(j)];
    e.row(Json{{"position", j + 1},
               {"root", root_json(ctx.position_root(j))},
               {"dvector", root_json(y.d_vector())},
               {"laurent", y.to_string()}});
  }
  return 0;
}

int run_compat(const CommonOpts& o, const std::string& method, int pos_i, int pos_j) {
  ClusterContext ctx = make_context(o);
  const int m = ctx.m();
  std::vector<std::vector<Int>> pos_table, root_table, var_table;
  bool want_all = method == "all";
  if (method == "positions" || want_all) pos_table = position_compat_table(ctx);
  if (method == "roots" || want_all) {
    root_table.assign(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        root_table[i][j] = root_compat(ctx, ctx.position_root(i), ctx.position_root(j));
  }
  ExchangeGraph graph;
  std::vector<int> psi_of(m);
  if (method == "variables" || want_all) {
    graph = ExchangeGraph::enumerate(ctx, o.budget);
    auto vt = graph.variable_compat_table();
    var_table.assign(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) var_table[i][j] = vt[graph.psi(i)][graph.psi(j)];
  }

  std::vector<std::string> cols{"i", "j"};
  if (want_all) {
    cols.insert(cols.end(), {"positions", "roots", "variables"});
  } else {
    cols.push_back("value");
  }
  Emitter e{o.format == "csv", cols};
  e.header();
  auto emit = [&](int i, int j) {
    Json rec{{"i", i + 1}, {"j", j + 1}};
    if (want_all) {
      rec["positions"] = pos_table[i][j];
      rec["roots"] = root_table[i][j];
      rec["variables"] = var_table[i][j];
    } else if (method == "positions") {
      rec["value"] = pos_table[i][j];
    } else if (method == "roots") {
      rec["value"] = root_table[i][j];
    } else {
      rec["value"] = var_table[i][j];
    }
    e.row(rec);
  };
  if (pos_i > 0 && pos_j > 0) {
    if (pos_i > m || pos_j > m) throw std::invalid_argument("position out of range");
    emit(pos_i - 1, pos_j - 1);
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) emit(i, j);
  }
  return 0;
}

int run_rotate(const CommonOpts& o) {
  ClusterContext ctx = make_context(o);
  bool with_vars = true;
  ExchangeGraph graph;
  try {
    graph = ExchangeGraph::enumerate(ctx, o.budget);
  } catch (const BudgetExceeded&) {
    with_vars = false;
  }
  std::vector<std::string> cols{"position", "to", "root", "root_to"};
  if (with_vars) {
    cols.push_back("laurent");
    cols.push_back("laurent_to");
  }
  Emitter e{o.format == "csv", cols};
  e.header();
  for (int i = 0; i < ctx.m(); ++i) {
    Json rec{{"position", i + 1},
             {"to", ctx.rotate_position(i) + 1},
             {"root", root_json(ctx.position_root(i))},
             {"root_to", root_json(ctx.rotate_root(ctx.position_root(i)))}};
    if (with_vars) {
      rec["laurent"] = graph.variable(graph.psi(i)).to_string();
      rec["laurent_to"] = graph.variable(graph.rotate_variable(graph.psi(i))).to_string();
    }
    e.row(rec);
  }
  return 0;
}

int run_geometry(const CommonOpts& o) {
  CartanFamily fam = family_from_char(o.type.at(0));
  PolygonModel model = polygon_model(fam, o.rank);
  auto objects = polygon_objects(model);
  auto clusters = enumerate_geometric_clusters(model, objects);
  Emitter e{o.format == "csv", {"record", "object", "rep", "mirror", "long", "cluster"}};
  e.header();
  e.row(Json{{"record", "summary"},
             {"object", static_cast<int>(objects.size())},
             {"cluster", static_cast<int>(clusters.size())}});
  for (size_t d = 0; d < objects.size(); ++d) {
    e.row(Json{{"record", "object"},
               {"object", static_cast<int>(d)},
               {"rep", Json::array({objects[d].rep[0], objects[d].rep[1]})},
               {"mirror", Json::array({objects[d].mirror[0], objects[d].mirror[1]})},
               {"long", objects[d].is_long}});
  }
  for (const auto& t : clusters) e.row(Json{{"record", "cluster"}, {"cluster", t}});
  return 0;
}

int run_verify(const CommonOpts& o, std::vector<std::string> suites, bool all_coxeter,
               bool timing) {
  CartanSpec spec = CartanSpec::make(family_from_char(o.type.at(0)), o.rank);
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));

  std::vector<Word> words;
  if (all_coxeter) {
    Word c(o.rank);
    std::iota(c.begin(), c.end(), 0);
    do words.push_back(c);
    while (std::next_permutation(c.begin(), c.end()));
  } else {
    CommonOpts tmp = o;
    words.push_back(parse_coxeter(tmp, *rs));
  }

  if (suites.empty()) {
    suites = {"theorem", "corollaries", "invariances", "counting", "duality"};
    if (o.type == "A" || o.type == "B" || o.type == "C") suites.push_back("geometry");
  }

  std::vector<std::function<VerificationReport()>> tasks;
  for (const Word& w : words) {
    for (const std::string& s : suites) {
      if (s == "geometry") continue;  // word independent, queued once below
      tasks.push_back([rs, w, s, &o] {
        ClusterContext ctx = ClusterContext::build(rs, w);
        if (s == "theorem") return verify_theorem(ctx, o.budget);
        if (s == "corollaries") return verify_corollaries(ctx, o.budget, 50);
        if (s == "invariances") return verify_invariances(ctx, o.budget);
        if (s == "counting") return verify_counting(ctx, o.budget);
        if (s == "duality") return verify_duality(ctx);
        if (s == "subword") return verify_subword_layer(ctx);
        throw std::invalid_argument("unknown suite: " + s);
      });
    }
  }
  if (std::find(suites.begin(), suites.end(), "geometry") != suites.end()) {
    CartanFamily fam = family_from_char(o.type.at(0));
    int rank = o.rank;
    int budget = o.budget;
    tasks.push_back([fam, rank, budget] { return verify_geometry_oracle(fam, rank, budget); });
  }

  std::vector<VerificationReport> reports = run_parallel(tasks, o.threads);
  Emitter e{o.format == "csv", {"scenario", "check", "pass"}};
  e.header();
  int failed = 0, total = 0;
  for (const VerificationReport& r : reports) {
    for (const CheckResult& c : r.checks) {
      ++total;
      failed += c.pass ? 0 : 1;
      Json rec{{"scenario", r.scenario}, {"check", c.name}, {"pass", c.pass}};
      if (!c.pass) rec["details"] = c.details;
      if (timing) rec["ms"] = r.elapsed_ms;
      e.row(rec);
    }
  }
  e.row(Json{{"scenario", "summary"}, {"check", Json{{"total", total}, {"failed", failed}}},
             {"pass", failed == 0}});
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact denominator vectors and compatibility degrees of finite type cluster algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string compat_method = "positions";
  int compat_i = 0, compat_j = 0;
  std::vector<std::string> suites;
  bool all_coxeter = false, timing = false;

  auto* count = app.add_subcommand("count", "Variable and cluster counts");
  add_common(count, o);
  auto* clusters = app.add_subcommand("clusters", "All clusters as position sets with their roots");
  add_common(clusters, o);
  auto* variables = app.add_subcommand("variables", "Cluster variables by position");
  add_common(variables, o);
  auto* dvectors =
      app.add_subcommand("dvectors", "Denominator vectors with respect to a chosen seed");
  add_common(dvectors, o, true);
  auto* compat = app.add_subcommand("compat", "Compatibility degrees of position pairs");
  add_common(compat, o);
  compat->add_option("--method", compat_method, "positions, roots, variables or all")
      ->check(CLI::IsMember({"positions", "roots", "variables", "all"}));
  compat->add_option("--i", compat_i, "First position (1-based); with --j, emit a single pair");
  compat->add_option("--j", compat_j, "Second position (1-based)");
  auto* rotate = app.add_subcommand("rotate", "Rotation tables on positions, roots and variables");
  add_common(rotate, o);
  auto* geometry = app.add_subcommand("geometry", "Polygon models for types A, B and C");
  add_common(geometry, o);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, o);
  verify->add_option("--suite", suites,
                     "Suites to run: theorem, corollaries, invariances, counting, duality, "
                     "geometry, subword (default: all applicable)");
  verify->add_flag("--all-coxeter", all_coxeter, "Iterate over all n! Coxeter words");
  verify->add_flag("--timing", timing, "Include elapsed milliseconds in the output");

  try {
    app.parse(argc, argv);
    if (count->parsed()) return run_count(o);
    if (clusters->parsed()) return run_clusters(o);
    if (variables->parsed()) return run_variables(o);
    if (dvectors->parsed()) return run_dvectors(o);
    if (compat->parsed()) return run_compat(o, compat_method, compat_i, compat_j);
    if (rotate->parsed()) return run_rotate(o);
    if (geometry->parsed()) return run_geometry(o);
    if (verify->parsed()) return run_verify(o, suites, all_coxeter, timing);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget or use --suite subword)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

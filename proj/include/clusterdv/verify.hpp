#pragma once

#include <functional>
#include <string>

#include "json.hpp"

#include "clusterdv/almost_positive.hpp"
#include "clusterdv/cluster_engine.hpp"
#include "clusterdv/geometry.hpp"

namespace clusterdv {

using Json = nlohmann::json;

struct CheckResult {
  std::string name;
  bool pass = true;
  /// Carries a minimal reproducer (pair, seed, values) when the check fails.
  Json details = Json::object();
};

struct VerificationReport {
  Json scenario;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;

  bool all_pass() const;
  void add(std::string name, bool pass, Json details = Json::object());
};

Json scenario_json(const ClusterContext& ctx, const std::string& suite);

/// Three-way agreement of the compatibility degrees computed from symbolic
/// mutation, root rotation, and the root function, over all position pairs.
VerificationReport verify_theorem(const ClusterContext& ctx, int budget);

/// Denominator vectors from symbolic reseeding against compatibility-degree
/// vectors (root and position routes), plus nonnegativity of non-initial
/// d-vectors. Seeds are exhaustive for rank <= 3 and a fixed pseudorandom
/// sample (mt19937 seed 0, plus a non-acyclic representative) above.
VerificationReport verify_corollaries(const ClusterContext& ctx, int budget, int sample_cap);

/// The lemma suites: flip/update equivalence, cluster independence of both
/// compatibility notions, rotation and jump invariance, orbit coverage and
/// zero characterization.
VerificationReport verify_invariances(const ClusterContext& ctx, int budget);

/// Facet, seed and (for classical types) geometric cluster counts agree, and
/// the variable count is n + N.
VerificationReport verify_counting(const ClusterContext& ctx, int budget);

/// Polygon crossing numbers against algebraic compatibility degrees under a
/// fingerprint-matched bijection, for types A, B, C.
VerificationReport verify_geometry_oracle(CartanFamily family, int rank, int budget);

/// (alpha || beta) equals (beta* || alpha*) in the dual context, all pairs.
VerificationReport verify_duality(const ClusterContext& ctx);

/// Root-function layer only (no exchange graph): sign and diagonal
/// normalization plus rotation and jump invariance of the position table.
VerificationReport verify_subword_layer(const ClusterContext& ctx);

/// Run independent scenarios on a small pool and return reports in input
/// order, so output is identical regardless of scheduling.
std::vector<VerificationReport> run_parallel(
    const std::vector<std::function<VerificationReport()>>& tasks, int threads);

}  // namespace clusterdv

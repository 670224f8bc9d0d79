#pragma once

#include <stdexcept>

#include "clusterdv/context.hpp"
#include "clusterdv/laurent.hpp"

namespace clusterdv {

/// A labeled seed: one Laurent polynomial per quiver vertex, expressed in
/// the ambient variables of the reference seed, plus the exchange matrix.
struct Seed {
  std::vector<Laurent> vars;
  IntMat b;
};

/// The seed whose quiver is the Coxeter graph oriented along c:
/// b(u,v) = -a(u,v) when u comes before v in c, +a(u,v) otherwise.
Seed initial_seed(const ClusterContext& ctx);

IntMat mutate_matrix(const IntMat& b, int k);

/// Seed mutation at vertex k; the new variable is obtained by exact Laurent
/// division, which must succeed.
Seed mutate(const Seed& seed, int k);

bool is_skew_symmetrizable(const IntMat& b, const IntVec& d);

/// Whether the quiver of b (u -> v iff b(u,v) > 0) has no directed cycle.
bool quiver_acyclic(const IntMat& b);

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive mutation closure of the initial seed.  Seeds are deduplicated
/// as unordered variable sets; variables are globally indexed and sorted by
/// their denominator vectors (which are pairwise distinct and exhaust the
/// almost positive roots -- both facts are asserted during enumeration).
class ExchangeGraph {
 public:
  static ExchangeGraph enumerate(const ClusterContext& ctx, int budget);

  struct SeedRec {
    std::vector<int> var_ids;     // per vertex
    std::vector<int> sorted_ids;  // dedup key / canonical form
    IntMat b;
    Word path;  // mutation path from the initial seed
  };

  const ClusterContext& context() const { return *ctx_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_seeds() const { return static_cast<int>(seeds_.size()); }
  const Laurent& variable(int id) const { return variables_[id]; }
  const IntVec& dvector(int id) const { return dvectors_[id]; }
  const SeedRec& seed(int s) const { return seeds_[s]; }
  int initial_seed_id() const { return initial_seed_; }

  /// Id of a polynomial, or -1 when it is not a cluster variable.
  int variable_id(const Laurent& p) const;
  /// Seed id of an unordered variable set, or -1.
  int find_seed(std::vector<int> sorted_ids) const;
  /// First seed (canonical order) whose cluster contains the variable.
  int seed_containing(int var_id) const;

  /// The variable whose denominator vector matches the root at a position.
  int psi(int position) const;
  /// Inverse of psi.
  int position_of(int var_id) const { return position_of_[var_id]; }

  /// Expressions of every cluster variable in the basis of the given seed:
  /// fresh indeterminates x1..xn are planted on its vertices and the same
  /// mutations are replayed on both sides.
  std::vector<Laurent> reseed(int s) const;

  /// Compatibility degree d(x, y): the x-component of the denominator
  /// vector of y in any seed containing x.
  Int variable_compat(int x_id, int y_id) const;
  /// All-pairs table via a greedy cover of the variables by seeds.
  std::vector<std::vector<Int>> variable_compat_table() const;

  /// Rotation on cluster variables: replay the recorded mutation path after
  /// first mutating along the letters of c.
  int rotate_variable(int var_id) const;

 private:
  std::shared_ptr<const ClusterContext> ctx_;
  std::vector<Laurent> variables_;
  std::vector<IntVec> dvectors_;
  std::map<Laurent, int, LaurentLess> registry_;
  std::map<IntVec, int, LexLess> dvec_index_;
  std::vector<SeedRec> seeds_;
  std::map<std::vector<int>, int> seed_index_;
  std::vector<std::pair<int, int>> first_occurrence_;  // (seed, vertex) per variable
  std::vector<int> position_of_;
  int initial_seed_ = 0;
};

}  // namespace clusterdv

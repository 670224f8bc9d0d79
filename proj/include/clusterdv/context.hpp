#pragma once

#include <memory>

#include "clusterdv/weyl.hpp"

namespace clusterdv {

/// Everything derived from a root system together with one reduced Coxeter
/// word c: the word Q_c = c w0(c), the rotation of positions, the bijection
/// between positions and almost positive roots, and the rotation of roots.
/// Immutable after build; cheap to copy.
class ClusterContext {
 public:
  static ClusterContext build(std::shared_ptr<const RootSystem> rs, const Word& coxeter);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  int rank() const { return rs_->rank; }
  int m() const { return word_.m; }
  const CoxeterWord& word() const { return word_; }
  const IntMat& w0() const { return w0_; }
  int eta(int s) const { return eta_[s]; }

  /// Positions are 0-based throughout.
  int rotate_position(int i) const { return rot_[i]; }
  int rotate_position_inverse(int i) const { return rot_inv_[i]; }

  /// The almost positive root attached to position j: the negated simple
  /// root of the letter for j < n, and the root of the sorting-word prefix
  /// otherwise.
  const IntVec& position_root(int j) const { return theta_[j]; }
  int root_position(const IntVec& root) const;

  /// Rotation of almost positive roots, evaluated from the word c. Matches
  /// rotate_position under position_root (checked by tests, not assumed).
  IntVec rotate_root(const IntVec& root) const;
  IntVec rotate_root_inverse(const IntVec& root) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  CoxeterWord word_;
  IntMat w0_;
  std::vector<int> eta_;
  std::vector<int> rot_, rot_inv_;
  std::vector<IntVec> theta_;
  std::map<IntVec, int, LexLess> theta_inv_;
  IntMat cox_mat_, cox_mat_inv_;
  // first_root_[i] = c_1 ... c_{i-1}(alpha_{c_i}); its rotation preimage is -alpha_{c_i}.
  // last_root_[i]  = c_n ... c_{i+1}(alpha_{c_i}); its rotation image is -alpha_{c_i}.
  std::vector<IntVec> first_root_, last_root_;
  std::map<IntVec, int, LexLess> first_index_, last_index_;
  std::vector<int> simple_to_cox_;  // position of generator s in the word c
};

}  // namespace clusterdv

#include "clusterdv/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterdv {

ClusterContext ClusterContext::build(std::shared_ptr<const RootSystem> rs, const Word& coxeter) {
  detail::require(rs != nullptr, "null root system");
  ClusterContext ctx;
  ctx.rs_ = std::move(rs);
  const RootSystem& r = *ctx.rs_;
  const int n = r.rank;
  ctx.word_ = build_qc(r, coxeter);
  const Word& q = ctx.word_.letters;
  const int m = ctx.word_.m;

  ctx.w0_ = evaluate_word(r, ctx.word_.sorting);
  detail::require(weyl_length(r, ctx.w0_) == r.num_positive, "sorting word is not reduced");

  ctx.eta_.resize(n);
  for (int s = 0; s < n; ++s) ctx.eta_[s] = longest_conjugate(r, ctx.w0_, s);

  // Rotation of positions: next occurrence of the same letter, else the
  // first occurrence of the conjugate letter.
  ctx.rot_.assign(m, -1);
  std::vector<int> first_occ(n, -1);
  for (int i = m - 1; i >= 0; --i) {
    // scan right for the next occurrence
    for (int j = i + 1; j < m; ++j) {
      if (q[j] == q[i]) {
        ctx.rot_[i] = j;
        break;
      }
    }
  }
  for (int i = 0; i < m; ++i)
    if (first_occ[q[i]] < 0) first_occ[q[i]] = i;
  for (int i = 0; i < m; ++i)
    if (ctx.rot_[i] < 0) ctx.rot_[i] = first_occ[ctx.eta_[q[i]]];
  ctx.rot_inv_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    detail::require(ctx.rot_inv_[ctx.rot_[i]] < 0, "position rotation is not a bijection");
    ctx.rot_inv_[ctx.rot_[i]] = i;
  }

  // Bijection from positions to almost positive roots.
  ctx.theta_.reserve(m);
  for (int j = 0; j < n; ++j) ctx.theta_.push_back(-unit_vector(n, q[j]));
  IntMat prefix = IntMat::Identity(n, n);
  for (int j = n; j < m; ++j) {
    ctx.theta_.push_back(prefix.col(q[j]));
    prefix = prefix * r.generator[q[j]];
  }
  for (int j = 0; j < m; ++j) {
    detail::require(r.is_almost_positive(ctx.theta_[j]), "position root not almost positive");
    bool fresh = ctx.theta_inv_.emplace(ctx.theta_[j], j).second;
    detail::require(fresh, "position roots must be pairwise distinct");
  }
  detail::require(static_cast<int>(ctx.theta_inv_.size()) == m,
                  "positions must biject onto almost positive roots");

  // Data for the rotation of roots.
  ctx.cox_mat_ = evaluate_word(r, coxeter);
  Word rev(coxeter.rbegin(), coxeter.rend());
  ctx.cox_mat_inv_ = evaluate_word(r, rev);
  ctx.simple_to_cox_.assign(n, -1);
  for (int i = 0; i < n; ++i) ctx.simple_to_cox_[coxeter[i]] = i;
  ctx.first_root_.resize(n);
  ctx.last_root_.resize(n);
  {
    IntMat acc = IntMat::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      ctx.first_root_[i] = acc.col(coxeter[i]);
      acc = acc * r.generator[coxeter[i]];
    }
    acc = IntMat::Identity(n, n);
    for (int i = n - 1; i >= 0; --i) {
      ctx.last_root_[i] = acc.col(coxeter[i]);
      acc = acc * r.generator[coxeter[i]];
    }
  }
  for (int i = 0; i < n; ++i) {
    ctx.first_index_.emplace(ctx.first_root_[i], i);
    ctx.last_index_.emplace(ctx.last_root_[i], i);
  }
  return ctx;
}

int ClusterContext::root_position(const IntVec& root) const {
  auto it = theta_inv_.find(root);
  if (it == theta_inv_.end())
    throw std::invalid_argument("vector is not an almost positive root of this context");
  return it->second;
}

IntVec ClusterContext::rotate_root(const IntVec& root) const {
  const RootSystem& r = *rs_;
  int neg = r.negative_simple_index(root);
  if (neg >= 0) return first_root_[simple_to_cox_[neg]];
  detail::require(r.is_positive(root), "rotation input must be almost positive");
  auto it = last_index_.find(root);
  if (it != last_index_.end()) return -unit_vector(r.rank, word_.coxeter[it->second]);
  return cox_mat_ * root;
}

IntVec ClusterContext::rotate_root_inverse(const IntVec& root) const {
  const RootSystem& r = *rs_;
  int neg = r.negative_simple_index(root);
  if (neg >= 0) return last_root_[simple_to_cox_[neg]];
  detail::require(r.is_positive(root), "rotation input must be almost positive");
  auto it = first_index_.find(root);
  if (it != first_index_.end()) return -unit_vector(r.rank, word_.coxeter[it->second]);
  return cox_mat_inv_ * root;
}

}  // namespace clusterdv

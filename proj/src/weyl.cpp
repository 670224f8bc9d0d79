#include "clusterdv/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterdv {

IntMat evaluate_word(const RootSystem& rs, const Word& w) {
  IntMat m = IntMat::Identity(rs.rank, rs.rank);
  for (int s : w) {
    detail::require(s >= 0 && s < rs.rank, "generator index out of range");
    m = m * rs.generator[s];
  }
  return m;
}

int weyl_length(const RootSystem& rs, const IntMat& g) {
  int len = 0;
  for (const IntVec& beta : rs.positive_roots) {
    // The image is a root, so the sign of its height decides its sign.
    if ((g * beta).sum() < 0) ++len;
  }
  return len;
}

bool is_reduced(const RootSystem& rs, const Word& w) {
  return weyl_length(rs, evaluate_word(rs, w)) == static_cast<int>(w.size());
}

bool ascends_right(const RootSystem& rs, const IntMat& g, int i) {
  return g.col(i).sum() > 0;  // g(alpha_i) positive
}

bool is_coxeter_word(const RootSystem& rs, const Word& w) {
  if (static_cast<int>(w.size()) != rs.rank) return false;
  std::vector<bool> used(rs.rank, false);
  for (int s : w) {
    if (s < 0 || s >= rs.rank || used[s]) return false;
    used[s] = true;
  }
  return true;
}

Word c_sorting_word(const RootSystem& rs, const Word& coxeter) {
  if (!is_coxeter_word(rs, coxeter))
    throw std::invalid_argument("Coxeter word must use each generator exactly once");
  Word out;
  out.reserve(rs.num_positive);
  IntMat v = IntMat::Identity(rs.rank, rs.rank);
  int len = 0;
  while (len < rs.num_positive) {
    bool appended = false;
    for (int s : coxeter) {
      if (ascends_right(rs, v, s)) {
        v = v * rs.generator[s];
        out.push_back(s);
        appended = true;
        if (++len == rs.num_positive) break;
      }
    }
    detail::require(appended, "sorting-word scan stalled below the longest element");
  }
  return out;
}

IntMat longest_element(const RootSystem& rs) {
  Word c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) c[i] = i;
  return evaluate_word(rs, c_sorting_word(rs, c));
}

int longest_conjugate(const RootSystem& rs, const IntMat& w0, int s) {
  // w0 s w0 = t  <=>  w0(alpha_s) = -alpha_t
  IntVec img = -w0.col(s);
  int t = -1;
  for (int i = 0; i < rs.rank; ++i) {
    if (img[i] == 0) continue;
    detail::require(img[i] == 1 && t < 0, "w0 conjugate of a simple root is not simple");
    t = i;
  }
  detail::require(t >= 0, "w0 conjugate lookup failed");
  return t;
}

CoxeterWord build_qc(const RootSystem& rs, const Word& coxeter) {
  CoxeterWord q;
  q.coxeter = coxeter;
  q.sorting = c_sorting_word(rs, coxeter);
  q.letters = coxeter;
  q.letters.insert(q.letters.end(), q.sorting.begin(), q.sorting.end());
  q.m = static_cast<int>(q.letters.size());
  detail::require(q.m == rs.rank + rs.num_positive, "word length must be n + N");
  return q;
}

Word bipartite_coxeter_word(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || rs.spec.cartan(i, j) == 0) continue;
        if (color[j] < 0) {
          color[j] = 1 - color[i];
          stack.push_back(j);
        } else {
          detail::require(color[j] != color[i], "Coxeter graph is not bipartite");
        }
      }
    }
  }
  Word w;
  for (int i = 0; i < n; ++i)
    if (color[i] == 0) w.push_back(i);
  for (int i = 0; i < n; ++i)
    if (color[i] == 1) w.push_back(i);
  return w;
}

}  // namespace clusterdv

#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterdv {

using Int = std::int64_t;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// A word in the simple generators, 0-based indices.
using Word = std::vector<int>;

inline bool vec_eq(const IntVec& a, const IntVec& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool mat_eq(const IntMat& a, const IntMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

// Strict lexicographic order; shorter vectors sort first.
struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

inline IntVec unit_vector(int n, int i) {
  IntVec e = IntVec::Zero(n);
  e[i] = 1;
  return e;
}

inline std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  os << ']';
  return os.str();
}

namespace detail {

// Internal invariant check; failures indicate a bug, not bad user input.
inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

}  // namespace detail

}  // namespace clusterdv

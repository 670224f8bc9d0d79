#pragma once

#include "clusterdv/root_system.hpp"

namespace clusterdv {

/// Group elements are integer matrices acting on root coordinates.
/// A word (w1, ..., wk) evaluates to the product s_{w1} * ... * s_{wk};
/// applied to a vector the rightmost letter acts first.
IntMat evaluate_word(const RootSystem& rs, const Word& w);

/// Number of positive roots sent to negative roots.
int weyl_length(const RootSystem& rs, const IntMat& g);

bool is_reduced(const RootSystem& rs, const Word& w);

/// length(g * s_i) == length(g) + 1, i.e. g(alpha_i) is positive.
bool ascends_right(const RootSystem& rs, const IntMat& g, int i);

/// Each generator exactly once.
bool is_coxeter_word(const RootSystem& rs, const Word& w);

/// Greedy reduced word for the longest element as a subword of c^infinity:
/// scan c repeatedly and keep every letter that extends reducedly.
Word c_sorting_word(const RootSystem& rs, const Word& coxeter);

IntMat longest_element(const RootSystem& rs);

/// The generator index t with w0 s w0 = t.
int longest_conjugate(const RootSystem& rs, const IntMat& w0, int s);

/// The word c w0(c) of length m = n + N.
struct CoxeterWord {
  Word coxeter;  // length n
  Word sorting;  // length N
  Word letters;  // concatenation
  int m = 0;
};

CoxeterWord build_qc(const RootSystem& rs, const Word& coxeter);

/// Canonical bipartite Coxeter word: the 2-coloring class containing node 0
/// in ascending order, then the other class.
Word bipartite_coxeter_word(const RootSystem& rs);

}  // namespace clusterdv

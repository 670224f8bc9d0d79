#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "clusterdv/types.hpp"

namespace clusterdv {

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.  Terms live in a map keyed by exponent vector, so the
/// representation is canonical: no zero coefficients, ascending
/// lexicographic exponent order, the zero polynomial is the empty map.
class Laurent {
 public:
  static constexpr int kMaxVars = 8;
  /// Exponents padded with zeros up to kMaxVars; the array's lexicographic
  /// order is the term order.
  using Exp = std::array<std::int32_t, kMaxVars>;
  using TermMap = std::map<Exp, mpz_class>;

  Laurent() = default;
  explicit Laurent(int nvars) : nvars_(nvars) {}

  static Laurent zero(int nvars) { return Laurent(nvars); }
  static Laurent constant(int nvars, mpz_class c);
  static Laurent variable(int nvars, int i);
  static Laurent monomial(int nvars, const IntVec& exponents, mpz_class coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent pow(unsigned e) const;

  /// Exact quotient, or nullopt when this is not a multiple of g.
  std::optional<Laurent> divided_exactly(const Laurent& g) const;

  /// Relabel variables: index i becomes perm[i] (perm is a permutation of
  /// 0..nvars-1).
  Laurent rename_vars(const std::vector<int>& perm) const;

  /// Componentwise minimum exponent over all terms (zero polynomial rejected).
  IntVec min_exponents() const;
  /// Negated minimum exponents: denominator exponents of the normalized
  /// fraction, and -e_i for the bare variable x_i.
  IntVec d_vector() const;

  bool operator==(const Laurent& o) const { return compare(o) == 0; }
  bool operator!=(const Laurent& o) const { return compare(o) != 0; }
  /// Total order: term count, then termwise (exponent, coefficient).
  int compare(const Laurent& o) const;

  /// Canonical string: terms in ascending exponent order joined by " + ",
  /// each term "coeff*x1^e1*..." with unit coefficients and zero exponents
  /// omitted.
  std::string to_string() const;

 private:
  void insert_term(const Exp& e, mpz_class c);

  int nvars_ = 0;
  TermMap terms_;
};

struct LaurentLess {
  bool operator()(const Laurent& a, const Laurent& b) const { return a.compare(b) < 0; }
};

}  // namespace clusterdv

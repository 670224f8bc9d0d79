#include "clusterdv/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace clusterdv {

namespace {

using Exp = Laurent::Exp;

Exp exp_add(const Exp& a, const Exp& b) {
  Exp r{};
  for (int i = 0; i < Laurent::kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r{};
  for (int i = 0; i < Laurent::kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

void add_to(Laurent::TermMap& m, const Exp& e, mpz_class v) {
  if (v == 0) return;
  auto [it, fresh] = m.try_emplace(e, std::move(v));
  if (!fresh) {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

Laurent Laurent::constant(int nvars, mpz_class c) {
  Laurent p(nvars);
  if (c != 0) p.terms_.emplace(Exp{}, std::move(c));
  return p;
}

Laurent Laurent::variable(int nvars, int i) {
  detail::require(i >= 0 && i < nvars && nvars <= kMaxVars, "variable index out of range");
  Laurent p(nvars);
  Exp e{};
  e[i] = 1;
  p.terms_.emplace(e, 1);
  return p;
}

Laurent Laurent::monomial(int nvars, const IntVec& exponents, mpz_class coeff) {
  detail::require(static_cast<int>(exponents.size()) == nvars && nvars <= kMaxVars,
                  "exponent vector size mismatch");
  Laurent p(nvars);
  if (coeff == 0) return p;
  Exp e{};
  for (int i = 0; i < nvars; ++i) e[i] = static_cast<std::int32_t>(exponents[i]);
  p.terms_.emplace(e, std::move(coeff));
  return p;
}

void Laurent::insert_term(const Exp& e, mpz_class c) { add_to(terms_, e, std::move(c)); }

Laurent& Laurent::operator+=(const Laurent& o) {
  detail::require(nvars_ == o.nvars_, "mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_to(terms_, e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  detail::require(nvars_ == o.nvars_, "mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_to(terms_, e, mpz_class(-c));
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  detail::require(nvars_ == o.nvars_, "mixed variable counts");
  Laurent r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) add_to(r.terms_, exp_add(ea, eb), mpz_class(ca * cb));
  }
  return r;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent base = *this;
  Laurent r = Laurent::constant(nvars_, 1);
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

std::optional<Laurent> Laurent::divided_exactly(const Laurent& g) const {
  detail::require(nvars_ == g.nvars_, "mixed variable counts");
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (is_zero()) return Laurent(nvars_);

  // An exact quotient is supported inside the exponent box
  // [min(f) - min(g), max(f) - max(g)] componentwise.
  Exp lo{}, hi{};
  {
    Exp fmin = terms_.begin()->first, fmax = fmin;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < kMaxVars; ++i) {
        fmin[i] = std::min(fmin[i], e[i]);
        fmax[i] = std::max(fmax[i], e[i]);
      }
    Exp gmin = g.terms_.begin()->first, gmax = gmin;
    for (const auto& [e, c] : g.terms_)
      for (int i = 0; i < kMaxVars; ++i) {
        gmin[i] = std::min(gmin[i], e[i]);
        gmax[i] = std::max(gmax[i], e[i]);
      }
    lo = exp_sub(fmin, gmin);
    hi = exp_sub(fmax, gmax);
    for (int i = 0; i < kMaxVars; ++i)
      if (lo[i] > hi[i]) return std::nullopt;
  }

  Laurent rem = *this;
  Laurent quo(nvars_);
  const auto& glead = *g.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Exp e = exp_sub(rlead.first, glead.first);
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(rlead.second.get_mpz_t(), glead.second.get_mpz_t()))
      return std::nullopt;
    mpz_class c = rlead.second / glead.second;
    // rem -= c x^e * g
    for (const auto& [ge, gc] : g.terms_) add_to(rem.terms_, exp_add(e, ge), mpz_class(-c * gc));
    quo.insert_term(e, std::move(c));
  }
  return quo;
}

Laurent Laurent::rename_vars(const std::vector<int>& perm) const {
  detail::require(static_cast<int>(perm.size()) == nvars_, "permutation size mismatch");
  Laurent out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exp ne{};
    for (int i = 0; i < nvars_; ++i) ne[perm[i]] = e[i];
    out.terms_.emplace(ne, c);
  }
  return out;
}

IntVec Laurent::min_exponents() const {
  detail::require(!is_zero(), "zero polynomial has no exponent bounds");
  IntVec m(nvars_);
  const Exp& first = terms_.begin()->first;
  for (int i = 0; i < nvars_; ++i) m[i] = first[i];
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::min<Int>(m[i], e[i]);
  return m;
}

IntVec Laurent::d_vector() const { return -min_exponents(); }

int Laurent::compare(const Laurent& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    int c = cmp(a->second, b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    bool has_factor = false;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) has_factor = true;
    if (!has_factor) {
      os << c.get_str();
      continue;
    }
    if (c == -1) {
      os << '-';
    } else if (c != 1) {
      os << c.get_str() << '*';
    }
    bool first_factor = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << 'x' << (i + 1) << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace clusterdv

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bzeta/symfield/var.hpp"

namespace bzeta {

/// Exponent vector, one slot per registry variable. Negative slots allowed.
struct Mono {
  std::array<std::int16_t, kMaxVars> e{};

  static Mono of(Var v, int k = 1) {
    Mono m;
    m.e[v.index()] = static_cast<std::int16_t>(k);
    return m;
  }

  bool is_one() const noexcept {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  int total_degree() const noexcept {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool nonneg() const noexcept {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }
  /// this | other in the polynomial ring.
  bool divides(const Mono& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    return r;
  }
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
    return r;
  }
  Mono pow(int k) const {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] * k);
    return r;
  }
  static Mono min(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
  }
  static Mono max(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  // Lex order, registry index 0 most significant.
  auto operator<=>(const Mono&) const = default;
  bool operator==(const Mono&) const = default;
};

namespace detail {

inline bool coef_is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline bool coef_is_zero(const mpq_class& c) { return sgn(c) == 0; }

}  // namespace detail

/// Sparse multivariate (Laurent) polynomial, terms sorted by descending Mono.
/// C is mpz_class (gcd layer) or mpq_class (public LaurentPoly).
template <class C>
class Poly {
 public:
  struct Term {
    Mono m;
    C c;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  Poly(const C& c) {  // NOLINT(implicit)
    if (!detail::coef_is_zero(c)) terms_.push_back({Mono{}, c});
  }
  Poly(long c) : Poly(C(c)) {}  // NOLINT(implicit)
  Poly(Var v) { terms_.push_back({Mono::of(v), C(1)}); }  // NOLINT(implicit)
  static Poly monomial(const Mono& m, const C& c = C(1)) {
    Poly p;
    if (!detail::coef_is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Takes arbitrary terms, sorts and combines.
  static Poly from_terms(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }
  /// Caller promises strictly descending, nonzero terms.
  static Poly from_sorted(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_const() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1; }
  const Term& lead() const { return terms_.front(); }
  const Term& trail() const { return terms_.back(); }
  C constant_value() const { return terms_.empty() ? C(0) : terms_[0].c; }

  /// Componentwise min / max exponent over all terms (zero polynomial -> zeros).
  Mono min_exps() const {
    if (terms_.empty()) return {};
    Mono r = terms_[0].m;
    for (const auto& t : terms_) r = Mono::min(r, t.m);
    return r;
  }
  Mono max_exps() const {
    if (terms_.empty()) return {};
    Mono r = terms_[0].m;
    for (const auto& t : terms_) r = Mono::max(r, t.m);
    return r;
  }
  int degree(Var v) const { return terms_.empty() ? 0 : max_exps().e[v.index()]; }
  /// Bitmask of variables that occur with nonzero exponent.
  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (t.m.e[i] != 0) s |= (1u << i);
    return s;
  }
  bool is_polynomial() const noexcept {
    for (const auto& t : terms_)
      if (!t.m.nonneg()) return false;
    return true;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].m, a.terms_[0].c);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].m, b.terms_[0].c);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.m * y.m, C(x.c * y.c)});
    return from_terms(std::move(out));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Multiply by c * x^m (order preserved, no resort).
  Poly times_term(const Mono& m, const C& c) const {
    if (detail::coef_is_zero(c)) return {};
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, C(t.c * c)});
    return r;
  }
  Poly scaled(const C& c) const { return times_term(Mono{}, c); }
  Poly shifted(const Mono& m) const { return times_term(m, C(1)); }

  Poly pow(unsigned k) const {
    Poly r(C(1)), b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      k >>= 1u;
      if (k) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return y.m < x.m; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
      } else {
        if (!out.empty() && detail::coef_is_zero(out.back().c)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && detail::coef_is_zero(out.back().c)) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool sub) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && b.terms_[j].m < a.terms_[i].m)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || a.terms_[i].m < b.terms_[j].m) {
        r.terms_.push_back(b.terms_[j++]);
        if (sub) r.terms_.back().c = -r.terms_.back().c;
      } else {
        C c = sub ? C(a.terms_[i].c - b.terms_[j].c) : C(a.terms_[i].c + b.terms_[j].c);
        if (!detail::coef_is_zero(c)) r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

using ZPoly = Poly<mpz_class>;
/// Laurent polynomial over Q; the public polynomial type.
using LaurentPoly = Poly<mpq_class>;

namespace detail {

inline bool coef_divides(const mpz_class& d, const mpz_class& n, mpz_class& q) {
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return true;
}
inline bool coef_divides(const mpq_class& d, const mpq_class& n, mpq_class& q) {
  q = n / d;
  return true;
}

}  // namespace detail

/// Exact division in the polynomial ring (nonnegative exponents), lex order.
/// Returns nullopt when g does not divide f.
template <class C>
std::optional<Poly<C>> divide_exact(const Poly<C>& f, const Poly<C>& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (f.is_zero()) return Poly<C>{};
  if (g.size() == 1) {
    const auto& lt = g.lead();
    std::vector<typename Poly<C>::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!lt.m.divides(t.m)) return std::nullopt;
      C q;
      if (!detail::coef_divides(lt.c, t.c, q)) return std::nullopt;
      out.push_back({t.m / lt.m, std::move(q)});
    }
    return Poly<C>::from_sorted(std::move(out));
  }
  // cheap necessary conditions
  const Mono fmax = f.max_exps(), gmax = g.max_exps();
  if (!gmax.divides(fmax)) return std::nullopt;
  if (!g.trail().m.divides(f.trail().m)) return std::nullopt;

  Poly<C> r = f;
  std::vector<typename Poly<C>::Term> q;
  const auto& lg = g.lead();
  while (!r.is_zero()) {
    const auto& lr = r.lead();
    if (!lg.m.divides(lr.m)) return std::nullopt;
    C c;
    if (!detail::coef_divides(lg.c, lr.c, c)) return std::nullopt;
    Mono m = lr.m / lg.m;
    r = r - g.times_term(m, c);
    q.push_back({m, std::move(c)});
  }
  return Poly<C>::from_sorted(std::move(q));
}

template <class C>
Poly<C> divide_or_throw(const Poly<C>& f, const Poly<C>& g) {
  auto q = divide_exact(f, g);
  if (!q) throw std::logic_error("bzeta: inexact polynomial division");
  return *std::move(q);
}

/// Integer content (positive) of a Z-polynomial.
inline mpz_class int_content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// p = scale * x^shift * prim with prim in Z[x], primitive, lc > 0, no monomial factor.
struct SplitPoly {
  mpq_class scale;
  Mono shift;
  ZPoly prim;
};

inline SplitPoly split(const LaurentPoly& p) {
  SplitPoly s;
  if (p.is_zero()) {
    s.scale = 0;
    s.prim = ZPoly(1);
    return s;
  }
  mpz_class L = 1;
  for (const auto& t : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.c.get_den_mpz_t());
  s.shift = p.min_exps();
  std::vector<ZPoly::Term> ts;
  ts.reserve(p.size());
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_class c = t.c.get_num() * (L / t.c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    ts.push_back({t.m / s.shift, std::move(c)});
  }
  if (sgn(ts.front().c) < 0) g = -g;
  for (auto& t : ts) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  s.prim = ZPoly::from_sorted(std::move(ts));
  s.scale = mpq_class(g, L);
  s.scale.canonicalize();
  return s;
}

/// Same for an integer polynomial (scale is then an integer).
inline SplitPoly split(const ZPoly& p) {
  SplitPoly s;
  if (p.is_zero()) {
    s.scale = 0;
    s.prim = ZPoly(1);
    return s;
  }
  s.shift = p.min_exps();
  mpz_class g = int_content(p);
  if (sgn(p.lead().c) < 0) g = -g;
  std::vector<ZPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    ts.push_back({t.m / s.shift, std::move(c)});
  }
  s.prim = ZPoly::from_sorted(std::move(ts));
  s.scale = mpq_class(g);
  return s;
}

inline LaurentPoly to_laurent(const ZPoly& p) {
  std::vector<LaurentPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.m, mpq_class(t.c)});
  return LaurentPoly::from_sorted(std::move(ts));
}

inline LaurentPoly to_laurent(const SplitPoly& s) {
  return to_laurent(s.prim).times_term(s.shift, s.scale);
}

/// Text form of a monomial times coefficient; e.g. "-3/2*Q^2*T^-1".
template <class C>
std::string term_string(const Mono& m, const C& c, bool leading) {
  std::string out;
  C a = c;
  if (sgn(a) < 0) {
    out += leading ? "-" : " - ";
    a = -a;
  } else if (!leading) {
    out += " + ";
  }
  std::string mono;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += Var::at(static_cast<std::uint8_t>(i)).name();
    if (m.e[i] != 1) mono += "^" + std::to_string(m.e[i]);
  }
  if (mono.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += mono;
  } else {
    out += a.get_str() + "*" + mono;
  }
  return out;
}

template <class C>
std::string to_string(const Poly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    s += term_string(t.m, t.c, first);
    first = false;
  }
  return s;
}

}  // namespace bzeta

#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "bzeta/symfield/gcd.hpp"

namespace bzeta {

/// Exact rational function over Q in registry variables.
///
/// Stored as scale * x^shift * num / den where num, den are primitive integer
/// polynomials with positive leading coefficient, no monomial factor and
/// gcd(num, den) = 1. That makes the representation unique.
class RatFunc {
 public:
  RatFunc() : scale_(0), num_(1), den_(1) {}
  RatFunc(long c) : scale_(c), num_(1), den_(1) {}  // NOLINT(implicit)
  RatFunc(const mpq_class& c) : scale_(c), num_(1), den_(1) { scale_.canonicalize(); }  // NOLINT
  RatFunc(const mpz_class& c) : scale_(c), num_(1), den_(1) {}  // NOLINT
  RatFunc(Var v) : scale_(1), num_(1), den_(1) { shift_.e[v.index()] = 1; }  // NOLINT
  RatFunc(const LaurentPoly& p) : RatFunc(p, LaurentPoly(1)) {}  // NOLINT

  RatFunc(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (n.is_zero()) {
      *this = RatFunc();
      return;
    }
    SplitPoly a = split(n), b = split(d);
    assemble(a.scale / b.scale, a.shift / b.shift, std::move(a.prim), std::move(b.prim));
  }

  static RatFunc rational(long p, long q) { return RatFunc(mpq_class(p, q)); }
  static RatFunc monomial(const Mono& m, const mpq_class& c = 1) {
    RatFunc r(c);
    if (sgn(c) != 0) r.shift_ = m;
    return r;
  }

  bool is_zero() const noexcept { return sgn(scale_) == 0; }
  bool is_const() const noexcept { return is_zero() || (shift_.is_one() && num_.is_one() && den_.is_one()); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_one() const noexcept { return is_const() && scale_ == 1; }
  const mpq_class& scale() const noexcept { return scale_; }
  const Mono& shift() const noexcept { return shift_; }
  const ZPoly& num_prim() const noexcept { return num_; }
  const ZPoly& den_prim() const noexcept { return den_; }

  /// Canonical numerator (Laurent, rational coefficients) and denominator.
  LaurentPoly num() const {
    if (is_zero()) return {};
    return to_laurent(num_).times_term(shift_, scale_);
  }
  LaurentPoly den() const { return to_laurent(den_); }
  mpq_class constant_value() const {
    if (!is_const()) throw std::domain_error("RatFunc: not a constant");
    return scale_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.scale_ = -r.scale_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, -b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return mul(a, b); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return mul(a, b.inverse()); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc r;
    r.scale_ = 1 / scale_;
    r.shift_ = Mono{} / shift_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }

  RatFunc pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return RatFunc(1);
    if (is_zero()) return *this;
    RatFunc r;
    mpz_class nn, dd;
    mpz_pow_ui(nn.get_mpz_t(), scale_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(dd.get_mpz_t(), scale_.get_den_mpz_t(), static_cast<unsigned long>(k));
    r.scale_ = mpq_class(nn, dd);
    r.shift_ = shift_.pow(k);
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Deterministic text: "num" or "(num)/(den)", terms in descending lex order.
  std::string str() const {
    if (den_.is_one()) return to_string(num());
    return "(" + to_string(num()) + ")/(" + to_string(den()) + ")";
  }

  /// Numeric evaluation; `val` maps each occurring variable to a value.
  template <class T>
  T eval(const std::function<T(Var)>& val) const {
    if (is_zero()) return T(0);
    auto poly_at = [&](const ZPoly& p) {
      T s(0);
      for (const auto& t : p.terms()) s += coeff<T>(mpq_class(t.c)) * mono_at<T>(t.m, val);
      return s;
    };
    T d = poly_at(den_);
    if (d == T(0)) throw std::domain_error("RatFunc::eval: pole");
    return coeff<T>(scale_) * mono_at<T>(shift_, val) * poly_at(num_) / d;
  }

 private:
  mpq_class scale_;
  Mono shift_;
  ZPoly num_;
  ZPoly den_;

  template <class T>
  static T coeff(const mpq_class& c) {
    if constexpr (std::is_constructible_v<T, const mpq_class&>)
      return T(c);
    else
      return T(c.get_d());
  }

  template <class T>
  static T mono_at(const Mono& m, const std::function<T(Var)>& val) {
    T r(1);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      T x = val(Var::at(static_cast<std::uint8_t>(i)));
      int k = m.e[i];
      T p(1);
      for (int j = 0; j < (k < 0 ? -k : k); ++j) p *= x;
      r *= (k < 0 ? T(1) / p : p);
    }
    return r;
  }

  // n, d primitive with lc > 0 and no monomial factor, not yet coprime.
  void assemble(mpq_class sc, Mono sh, ZPoly n, ZPoly d) {
    ZPoly g = detail::gcd_prim(n, d);
    if (!g.is_one()) {
      n = divide_or_throw(n, g);
      d = divide_or_throw(d, g);
    }
    scale_ = std::move(sc);
    scale_.canonicalize();
    shift_ = sh;
    num_ = std::move(n);
    den_ = std::move(d);
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ZPoly g = a.den_.is_one() || b.den_.is_one() ? ZPoly(1) : detail::gcd_prim(a.den_, b.den_);
    ZPoly da = g.is_one() ? a.den_ : divide_or_throw(a.den_, g);
    ZPoly db = g.is_one() ? b.den_ : divide_or_throw(b.den_, g);
    mpz_class L;
    mpz_lcm(L.get_mpz_t(), a.scale_.get_den_mpz_t(), b.scale_.get_den_mpz_t());
    const mpz_class ca = a.scale_.get_num() * (L / a.scale_.get_den());
    const mpz_class cb = b.scale_.get_num() * (L / b.scale_.get_den());
    const Mono m = Mono::min(a.shift_, b.shift_);
    ZPoly p = (a.num_ * db).times_term(a.shift_ / m, ca) + (b.num_ * da).times_term(b.shift_ / m, cb);
    if (p.is_zero()) return RatFunc();
    SplitPoly s = split(p);
    ZPoly den = da * db;
    if (!g.is_one()) {
      ZPoly h = detail::gcd_prim(s.prim, g);
      if (!h.is_one()) {
        s.prim = divide_or_throw(s.prim, h);
        g = divide_or_throw(g, h);
      }
      den = den * g;
    }
    RatFunc r;
    r.scale_ = s.scale / mpq_class(L);
    r.scale_.canonicalize();
    r.shift_ = m * s.shift;
    r.num_ = std::move(s.prim);
    r.den_ = std::move(den);
    return r;
  }

  static RatFunc mul(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    ZPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one() && !an.is_one()) {
      ZPoly g = detail::gcd_prim(an, bd);
      if (!g.is_one()) {
        an = divide_or_throw(an, g);
        bd = divide_or_throw(bd, g);
      }
    }
    if (!ad.is_one() && !bn.is_one()) {
      ZPoly g = detail::gcd_prim(bn, ad);
      if (!g.is_one()) {
        bn = divide_or_throw(bn, g);
        ad = divide_or_throw(ad, g);
      }
    }
    RatFunc r;
    r.scale_ = a.scale_ * b.scale_;
    r.shift_ = a.shift_ * b.shift_;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

/// Simultaneous substitution v -> bindings[v]. Throws if the denominator
/// vanishes identically.
RatFunc subst(const RatFunc& f, const std::map<Var, RatFunc>& bindings);

namespace detail {

// Evaluate a Laurent polynomial under simultaneous bindings, as a RatFunc.
inline RatFunc subst_poly(const LaurentPoly& p, const std::map<Var, RatFunc>& bindings) {
  if (p.is_zero()) return RatFunc();
  const Mono lo = p.min_exps(), hi = p.max_exps();
  struct Bound {
    std::uint8_t v;
    LaurentPoly n, d;
    std::vector<LaurentPoly> npow, dpow;
  };
  std::vector<Bound> bs;
  for (const auto& [var, val] : bindings) {
    const auto i = var.index();
    if (lo.e[i] == 0 && hi.e[i] == 0) continue;
    bs.push_back({i, val.num(), val.den(), {}, {}});
    auto& b = bs.back();
    const int span = hi.e[i] - lo.e[i];
    b.npow.resize(static_cast<std::size_t>(span) + 1);
    b.dpow.resize(static_cast<std::size_t>(span) + 1);
    b.npow[0] = LaurentPoly(1);
    b.dpow[0] = LaurentPoly(1);
    for (int k = 1; k <= span; ++k) {
      b.npow[static_cast<std::size_t>(k)] = b.npow[static_cast<std::size_t>(k - 1)] * b.n;
      b.dpow[static_cast<std::size_t>(k)] = b.dpow[static_cast<std::size_t>(k - 1)] * b.d;
    }
  }
  if (bs.empty()) return RatFunc(p);
  // sum of c * rest * prod n^(e-lo) d^(hi-e)
  LaurentPoly sum;
  for (const auto& t : p.terms()) {
    Mono rest = t.m;
    LaurentPoly term = LaurentPoly::monomial(Mono{}, t.c);
    for (const auto& b : bs) {
      const int e = t.m.e[b.v];
      rest.e[b.v] = 0;
      term = term * b.npow[static_cast<std::size_t>(e - lo.e[b.v])] *
             b.dpow[static_cast<std::size_t>(hi.e[b.v] - e)];
    }
    sum += term.shifted(rest);
  }
  // prefactor prod n^lo d^-hi
  LaurentPoly top(1), bot(1);
  for (const auto& b : bs) {
    const int l = lo.e[b.v], h = hi.e[b.v];
    if (l > 0) top = top * b.n.pow(static_cast<unsigned>(l));
    if (l < 0) {
      if (b.n.is_zero()) throw std::domain_error("subst: negative power of a variable bound to 0");
      bot = bot * b.n.pow(static_cast<unsigned>(-l));
    }
    if (h > 0) bot = bot * b.d.pow(static_cast<unsigned>(h));
    if (h < 0) top = top * b.d.pow(static_cast<unsigned>(-h));
  }
  if (sum.is_zero()) return RatFunc();
  return RatFunc(sum * top, bot);
}

}  // namespace detail

inline RatFunc subst(const RatFunc& f, const std::map<Var, RatFunc>& bindings) {
  if (f.is_zero()) return f;
  RatFunc d = detail::subst_poly(f.den(), bindings);
  if (d.is_zero()) throw std::domain_error("subst: denominator vanishes identically under binding");
  return detail::subst_poly(f.num(), bindings) / d;
}

inline RatFunc pow(const RatFunc& f, int k) { return f.pow(k); }

}  // namespace bzeta

#pragma once

#include <bit>
#include <vector>

#include "bzeta/symfield/poly.hpp"

namespace bzeta {

namespace detail {

/// A Z-polynomial viewed as univariate in one variable; c[d] is free of it.
using UPoly = std::vector<ZPoly>;

inline void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline UPoly to_univariate(const ZPoly& f, std::uint8_t v) {
  const int deg = f.max_exps().e[v];
  std::vector<std::vector<ZPoly::Term>> buckets(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : f.terms()) {
    Mono m = t.m;
    const int d = m.e[v];
    m.e[v] = 0;
    buckets[static_cast<std::size_t>(d)].push_back({m, t.c});
  }
  UPoly u(buckets.size());
  for (std::size_t d = 0; d < buckets.size(); ++d) u[d] = ZPoly::from_sorted(std::move(buckets[d]));
  trim(u);
  return u;
}

inline ZPoly from_univariate(const UPoly& u, std::uint8_t v) {
  std::vector<ZPoly::Term> ts;
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& t : u[d].terms()) {
      Mono m = t.m;
      m.e[v] = static_cast<std::int16_t>(d);
      ts.push_back({m, t.c});
    }
  }
  return ZPoly::from_terms(std::move(ts));
}

inline int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

/// Positive leading coefficient.
inline ZPoly normalize_sign(ZPoly p) {
  if (!p.is_zero() && sgn(p.lead().c) < 0) p = -p;
  return p;
}

ZPoly gcd_prim(ZPoly f, ZPoly g);

/// gcd of two arbitrary Z-polynomials, lc > 0.
inline ZPoly gcd_any(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  SplitPoly a = split(f), b = split(g);
  mpz_class ci;
  mpz_gcd(ci.get_mpz_t(), a.scale.get_num_mpz_t(), b.scale.get_num_mpz_t());
  Mono m = Mono::min(a.shift, b.shift);
  ZPoly h = gcd_prim(std::move(a.prim), std::move(b.prim));
  return h.times_term(m, ci);
}

inline ZPoly ucontent(const UPoly& u) {
  ZPoly g;
  // start from the sparsest coefficient; it tends to end the loop early
  std::size_t best = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && (u[best].is_zero() || u[i].size() < u[best].size())) best = i;
  g = normalize_sign(u[best]);
  for (std::size_t i = 0; i < u.size() && !g.is_one(); ++i) {
    if (i == best || u[i].is_zero()) continue;
    g = gcd_any(g, u[i]);
  }
  return g;
}

inline UPoly udiv(const UPoly& u, const ZPoly& c) {
  if (c.is_one()) return u;
  UPoly r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = divide_or_throw(u[i], c);
  return r;
}

inline UPoly prem(UPoly a, const UPoly& b) {
  const int db = udeg(b);
  const ZPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    ZPoly la = a.back();
    const int d = udeg(a) - db;
    for (auto& x : a) x = x * lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + d)] -= la * b[static_cast<std::size_t>(j)];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    ZPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& x : a) x = x * f;
  }
  return a;
}

/// Primitive gcd of primitive a, b (deg a >= deg b >= 1) via subresultant PRS.
inline UPoly subresultant(UPoly a, UPoly b) {
  ZPoly g(1), h(1);
  while (true) {
    const int delta = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (udeg(r) == 0) return UPoly{ZPoly(1)};
    a = std::move(b);
    ZPoly div = g * h.pow(static_cast<unsigned>(delta));
    b = udiv(r, div);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  ZPoly c = ucontent(b);
  return udiv(b, c);
}

/// Both inputs primitive (integer content 1), no monomial factor, lc > 0.
inline ZPoly gcd_prim(ZPoly f, ZPoly g) {
  if (f.is_const() || g.is_const()) return ZPoly(1);
  if (f == g) return f;
  std::uint32_t sf = f.support(), sg = g.support();
  if ((sf & sg) == 0) return ZPoly(1);
  // variables private to one side: only the content w.r.t. them can be shared
  for (std::uint32_t only = sf & ~sg; only; only &= only - 1) {
    const auto v = static_cast<std::uint8_t>(std::countr_zero(only));
    if (f.support() & (1u << v)) f = normalize_sign(ucontent(to_univariate(f, v)));
    if (f.is_const()) return ZPoly(1);
  }
  for (std::uint32_t only = sg & ~sf; only; only &= only - 1) {
    const auto v = static_cast<std::uint8_t>(std::countr_zero(only));
    if (g.support() & (1u << v)) g = normalize_sign(ucontent(to_univariate(g, v)));
    if (g.is_const()) return ZPoly(1);
  }
  if ((sf & ~sg) || (sg & ~sf)) {
    // contents may have picked up monomial / integer factors
    return gcd_any(f, g);
  }
  // trial division by the smaller side
  if (g.size() <= f.size()) {
    if (divide_exact(f, g)) return g;
  } else {
    if (divide_exact(g, f)) return f;
  }
  const Mono fm = f.max_exps(), gm = g.max_exps();
  std::uint8_t v = 0;
  int best = 1 << 30;
  for (std::uint32_t both = sf & sg; both; both &= both - 1) {
    const auto i = static_cast<std::uint8_t>(std::countr_zero(both));
    const int d = std::max(fm.e[i], gm.e[i]);
    if (d < best) {
      best = d;
      v = i;
    }
  }
  UPoly F = to_univariate(f, v), G = to_univariate(g, v);
  ZPoly cf = ucontent(F), cg = ucontent(G);
  ZPoly c = gcd_any(cf, cg);
  F = udiv(F, cf);
  G = udiv(G, cg);
  if (udeg(F) < udeg(G)) std::swap(F, G);
  ZPoly h;
  if (udeg(G) == 0) {
    h = ZPoly(1);
  } else {
    h = from_univariate(subresultant(std::move(F), std::move(G)), v);
  }
  return normalize_sign(h * c);
}

}  // namespace detail

/// gcd in Z[x_1..x_n], normalized to positive leading coefficient.
inline ZPoly gcd(const ZPoly& f, const ZPoly& g) { return detail::gcd_any(f, g); }

}  // namespace bzeta

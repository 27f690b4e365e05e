#pragma once

#include <set>

#include "bzeta/padicring/galois.hpp"

namespace bzeta {

namespace detail {
inline void require_exact_conductor(const MultChar& mu, const char* who) {
  if (mu.conductor() != mu.ring().e())
    throw std::invalid_argument(std::string(who) + ": character conductor " + std::to_string(mu.conductor()) +
                                " differs from ring exponent " + std::to_string(mu.ring().e()));
}
}  // namespace detail

/// Root number W_F(mu, psi) = q^{-e/2} mu(varpi)^{-e} sum_{a in (o/p^e)^x} psi(varpi^-e a) mu(a).
inline cplx gauss_sum_F(const MultChar& mu) {
  detail::require_exact_conductor(mu, "gauss_sum_F");
  const ResidueRing& R = mu.ring();
  const i64 N = R.size();
  cplx s = 0;
  for (i64 a = 1; a < N; ++a)
    if (R.is_unit(a)) s += psi_frac(a, N) * mu(a);
  const double q = static_cast<double>(R.p());
  return std::pow(q, -R.e() / 2.0) * std::pow(mu.at_uniformizer(), -R.e()) * s;
}

/// int_{o^x} psi(varpi^n w a) mu(a) d^x a with vol(o^x) = 1, by enumeration
/// over units mod p^max(e, -n). `w` is a unit, known modulo at least p^-n.
inline cplx unit_integral(const MultChar& mu, int n, i64 w = 1) {
  const ResidueRing& R = mu.ring();
  const i64 p = R.p();
  const int level = std::max(R.e(), -n);
  const i64 PN = ipow(p, level);
  const i64 pk = n < 0 ? ipow(p, -n) : 1;
  cplx s = 0;
  i64 count = 0;
  for (i64 a = 1; a < PN; ++a) {
    if (a % p == 0) continue;
    ++count;
    const cplx ps = n < 0 ? psi_frac(mulmod(w, a, pk), pk) : cplx(1.0);
    s += ps * mu(mod(a, R.size()));
  }
  return s / static_cast<double>(count);
}

/// Closed value of unit_integral at n = -e (w = 1).
inline cplx gauss_lemma_value(const MultChar& mu) {
  const ResidueRing& R = mu.ring();
  const double q = static_cast<double>(R.p());
  const int e = R.e();
  return std::pow(q, -e / 2.0 + 1.0) / (q - 1.0) * std::pow(mu.at_uniformizer(), e) * gauss_sum_F(mu);
}

/// Conductor of mu o N on the Galois ring.
inline int norm_char_conductor(const GaloisRing& L, const MultChar& mu) {
  const i64 p = L.base().p(), N = L.base().size();
  for (int f = 0; f < L.base().e(); ++f) {
    bool trivial = true;
    if (f == 0) {
      L.for_each_unit([&](GElem x) { trivial = trivial && mu.exponent(L.norm(x)) == 0; });
    } else {
      const i64 pf = ipow(p, f);
      L.for_each([&](GElem x) {
        if (!trivial || x.u % pf != 0 || x.v % pf != 0) return;
        trivial = mu.exponent(L.norm(L.add({1, 0}, x))) == 0;
      });
    }
    if (trivial) return f;
  }
  (void)N;
  return L.base().e();
}

/// W_L(mu_L, psi_L) with mu_L = mu o N and psi_L = psi o tr.
inline cplx gauss_sum_L(const MultChar& mu, const GaloisRing& L) {
  if (&mu.ring() != &L.base() && (mu.ring().p() != L.base().p() || mu.ring().e() != L.base().e()))
    throw std::invalid_argument("gauss_sum_L: character and ring have different bases");
  detail::require_exact_conductor(mu, "gauss_sum_L");
  const int e = L.base().e();
  if (norm_char_conductor(L, mu) != e) throw std::invalid_argument("gauss_sum_L: conductor of mu_L differs from e");
  const i64 N = L.base().size();
  cplx s = 0;
  L.for_each_unit([&](GElem x) { s += psi_frac(L.trace(x), N) * mu(L.norm(x)); });
  const double qL = static_cast<double>(L.base().p() * L.base().p());
  const cplx muL_pi = mu.at_uniformizer() * mu.at_uniformizer();
  return std::pow(qL, -e / 2.0) * std::pow(muL_pi, -e) * s;
}

/// sum over eta in o_L/p^e with u + N(eta) a unit of mu(u + N(eta)).
inline cplx norm_char_sum(const GaloisRing& L, const MultChar& mu, i64 u) {
  if (!L.base().is_unit(u)) throw std::invalid_argument("norm_char_sum: u must be a unit");
  const i64 N = L.base().size();
  cplx s = 0;
  L.for_each([&](GElem x) {
    const i64 v = mod(u + L.norm(x), N);
    if (L.base().is_unit(v)) s += mu(v);
  });
  return s;
}

/// Does N map (o_L/p^e)^x onto (o/p^e)^x?
inline bool norm_surjective(const GaloisRing& L) {
  std::set<i64> img;
  L.for_each_unit([&](GElem x) { img.insert(L.norm(x)); });
  return static_cast<i64>(img.size()) == L.base().unit_count();
}

}  // namespace bzeta

#pragma once

#include <vector>

#include "bzeta/besselzeta.hpp"
#include "bzeta/padicring/gauss.hpp"
#include "bzeta/padicring/yeta.hpp"

namespace bzeta {

/// B^0(h(l,0)) for l = 0..lmax from the Hecke matrices, evaluated at numeric
/// Satake parameters (env needs A, B, G as the type requires).
inline std::vector<cplx> diag_bessel_numeric(const LocalRep& rep, NumEnv env, i64 q, int lmax) {
  detail::require_spherical(rep, "diag_bessel_numeric");
  env[sym::Q] = std::sqrt(static_cast<double>(q));
  const HeckePair H = hecke_matrices(rep);
  const std::vector<RatFunc> bv = bessel_identity_values(rep);
  const std::size_t n = bv.size();
  std::vector<std::vector<cplx>> t(n, std::vector<cplx>(n));
  std::vector<cplx> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = eval(bv[i], env);
    for (std::size_t k = 0; k < n; ++k) t[i][k] = eval(H.t10(i, k), env);
  }
  // B(h(l,0)) = q^{-3l} b^T t^l 1
  std::vector<cplx> w(n, 1.0), out;
  const double q3 = std::pow(static_cast<double>(q), -3.0);
  for (int l = 0; l <= lmax; ++l) {
    cplx s = 0;
    for (std::size_t i = 0; i < n; ++i) s += b[i] * w[i];
    out.push_back(s);
    std::vector<cplx> nw(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) nw[i] += t[i][k] * w[k];
    for (auto& x : nw) x *= q3;
    w = std::move(nw);
  }
  return out;
}

struct Case23Result {
  cplx zphi_closed, zphi_sum, zphihat_closed, zphihat_sum;
  cplx W_F, W_L;
  double err_phi() const { return std::abs(zphi_closed - zphi_sum); }
  double err_phihat() const { return std::abs(zphihat_closed - zphihat_sum); }
};

namespace detail {

inline i64 half_mod(const mpz_class& x, i64 n) {
  const i64 r = mpz_class(((x % n) + n) % n).get_si();
  return mulmod(r, invmod(2, n), n);
}

/// f_phi(k) for k = [[*, *], [c, d]] with det k = 1: the tau-integral over
/// the unit shell, tau with c tau^dag = 0 and d tau^dag = 1 mod p^e.
inline cplx f_phi_enum(const GaloisRing& L, const MultChar& mu, GElem c, GElem d) {
  cplx s = 0;
  L.for_each_unit([&](GElem tau) {
    const GElem tb = L.frob(tau);
    if (L.mul(c, tb) == GElem{0, 0} && L.mul(d, tb) == GElem{1, 0}) s += mu(L.norm(tau));
  });
  return s / static_cast<double>(L.unit_count());
}

/// f_phihat(k) with det k = 1, as the sum over shells n >= -e (shells n >= 0 vanish).
inline cplx f_phihat_enum(const GaloisRing& L, const MultChar& mu, cplx lambda, cplx qs, GElem c) {
  const int e = L.base().e();
  const double q = static_cast<double>(L.base().p());
  const cplx u = mu.at_uniformizer();
  cplx total = 0;
  for (int n = -e; n <= -1; ++n) {
    const i64 pk = ipow(L.base().p(), -n);
    cplx J = 0;
    L.for_each_unit([&](GElem tau) { J += psi_frac(mod(L.trace(L.mul(c, tau)), pk), pk) * mu(L.norm(tau)); });
    J /= static_cast<double>(L.unit_count());
    // (lambda u^2)^n q^{-2n(s+1)}, qs = q^{-s}
    total += std::pow(lambda * u * u, n) * std::pow(qs * qs / (q * q), n) * J;
  }
  return std::pow(q, -4.0 * e) * total;
}

}  // namespace detail

/// Z(phi, B^0, s, mu; b) and Z(phihat, ...) for the ramified twist, both as
/// closed forms and as the finite coset sum. S must make L/F an unramified
/// field (d a non-residue) with a, d/2 units; mu of exact conductor e.
inline Case23Result zeta_case2_3_numeric(const LocalRep& rep, const NumEnv& satake, const BesselS& S,
                                         const MultChar& mu, cplx lambda, cplx s) {
  detail::require_spherical(rep, "zeta_case2_3_numeric");
  const ResidueRing& R = mu.ring();
  const i64 p = R.p(), Ne = R.size();
  const int e = R.e();
  const double q = static_cast<double>(p);
  if (S.a % p == 0) throw std::invalid_argument("zeta_case2_3_numeric: a must be a unit");
  const mpz_class d = S.d();
  if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("zeta_case2_3_numeric: d/2 must be a unit");
  const GaloisRing L(mu.ring_ptr(), S.b, S.a * S.c);  // throws unless L/F is a field

  const cplx u = mu.at_uniformizer();
  const cplx qs = std::exp(-s * std::log(q));  // q^{-s}
  const std::vector<cplx> Bdiag = diag_bessel_numeric(rep, satake, p, 2 * e + 8);
  auto B = [&](int l) -> cplx {
    if (l < 0) return 0.0;
    if (l >= static_cast<int>(Bdiag.size())) throw std::logic_error("zeta_case2_3_numeric: Bessel window too small");
    return Bdiag[static_cast<std::size_t>(l)];
  };
  // u^n q^{-n(s-1)}
  auto mellin = [&](int n) { return std::pow(u * qs * q, n); };
  const int K = 2 * e + 6;
  const i64 PK = ipow(p, K);
  auto G = [&](int n, i64 w) { return n < 0 ? unit_integral(mu, n, mod(w, ipow(p, -n))) : unit_integral(mu, n, 1); };

  Case23Result r;
  r.W_F = gauss_sum_F(mu);
  r.W_L = gauss_sum_L(mu, L);
  const double pref = std::pow(q, -2.0 * e + 2.0) / (q * q + 1.0);
  const double C = 1.0 / ((std::pow(q, 4) - 1.0) * (q - 1.0));

  // closed forms
  const i64 mdh = detail::half_mod(-d, Ne);                          // -d/2
  const i64 ma2h = detail::half_mod(-mpz_class(S.a) * S.a, Ne);      // -a^2/2
  r.zphi_closed = std::exp(std::log(q) * (double(e) * (s - 5.5) + 5.0)) * C / mu(mdh) * r.W_F;
  const double sgn = e % 2 ? -1.0 : 1.0;
  r.zphihat_closed = sgn * std::exp(std::log(q) * (double(e) * (3.0 * s - 5.5) + 5.0)) * C * std::pow(lambda, -e) * mu(ma2h) *
                     r.W_L * r.W_F;

  // coset sum: xi-representatives [[1,0],[xi,1]] and eta-representatives [[0,-1],[1,eta^dag]]
  cplx zphi = 0, zphihat = 0;
  const mpz_class mdh_K = [&] {
    mpz_class x = -d;
    x = ((x % PK) + PK) % PK;
    return mpz_class(mulmod(x.get_si(), invmod(2, PK), PK));
  }();
  L.for_each([&](GElem xi) {
    if (xi.u % p != 0 || xi.v % p != 0) return;
    const cplx f = detail::f_phi_enum(L, mu, xi, {1, 0});
    const cplx fh = detail::f_phihat_enum(L, mu, lambda, qs, xi);
    if (std::abs(fh) > 1e-12) throw std::logic_error("zeta_case2_3_numeric: f_phihat nonzero on a xi-representative");
    if (std::abs(f) < 1e-14) return;
    if (!(xi == GElem{0, 0})) throw std::logic_error("zeta_case2_3_numeric: f_phi nonzero off the identity");
    // identity: B(m(a, a) b) = psi(a tr(S S^dag)) B(diag(a varpi^e, 1)), tr(S S^dag) = -d/2
    cplx I = 0;
    for (int n = -e - 3; n <= e + 3; ++n) {
      const cplx g = G(n, mdh_K.get_si());
      if (std::abs(g) < 1e-12) continue;
      I += B(e + n) * mellin(n) * g;
    }
    zphi += f * I;
  });
  L.for_each([&](GElem eta) {
    const GElem etad = L.frob(eta);
    if (std::abs(detail::f_phi_enum(L, mu, {1, 0}, etad)) > 1e-12)
      throw std::logic_error("zeta_case2_3_numeric: f_phi nonzero on an eta-representative");
    const cplx fh = detail::f_phihat_enum(L, mu, lambda, qs, {1, 0});
    // lift eta so that a^6 d/4 + N(eta) has valuation j <= e
    const mpz_class a(S.a), a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
    int j = -1;
    mpz_class v4;
    for (i64 du = 0; du < p && j < 0; ++du)
      for (i64 dv = 0; dv < p && j < 0; ++dv) {
        const mpz_class uu = mpz_class(eta.u) + mpz_class(du) * Ne, vv = mpz_class(eta.v) + mpz_class(dv) * Ne;
        v4 = a6 * d + 4 * theta_norm(S, uu, vv);
        const int jj = ord_p(v4, p);
        if (jj <= e) j = jj;
      }
    if (j < 0) throw std::logic_error("zeta_case2_3_numeric: no lift with j <= e");
    // w = -(a^4 d / 2) / (a^6 d/4 + N) / p^-j = -2 a^4 d / (v4 / p^j)
    mpz_class v0 = v4;
    for (int k = 0; k < j; ++k) v0 /= p;
    const i64 v0m = mpz_class(((v0 % PK) + PK) % PK).get_si();
    const i64 num = mpz_class(((-2 * a4 * d) % PK + PK) % PK).get_si();
    const i64 w = mulmod(num, invmod(v0m, PK), PK);
    cplx I = 0;
    for (int n = j - e - 3; n <= j + e + 3; ++n) {
      const cplx g = G(n - j, w);
      if (std::abs(g) < 1e-12) continue;
      const int l = e + n - 2 * j;
      if (l < 0) continue;  // support
      if (j != 0) throw std::logic_error("zeta_case2_3_numeric: needs B(h(l, j)) with j > 0");
      I += B(l) * mellin(n) * g;
    }
    zphihat += fh * I;
  });
  r.zphi_sum = pref * zphi;
  r.zphihat_sum = pref * zphihat;
  return r;
}

struct EpsilonCheck {
  cplx ratio, expected;
  double err() const { return std::abs(ratio - expected); }
};

/// Z(phihat, -s, conj mu) / Z(phi, s, mu) against
/// q^{-4es} lambda^{-e} mu(-a^-2 d) conj(W_F^4), i.e. eps(pi, s + 1/2, mu).
inline EpsilonCheck case2_3_epsilon(const LocalRep& rep, const NumEnv& satake, const BesselS& S, const MultChar& mu,
                                    cplx lambda, cplx s) {
  const Case23Result fwd = zeta_case2_3_numeric(rep, satake, S, mu, lambda, s);
  const Case23Result bwd = zeta_case2_3_numeric(rep, satake, S, mu.conj(), lambda, -s);
  const ResidueRing& R = mu.ring();
  const i64 Ne = R.size();
  const int e = R.e();
  const double q = static_cast<double>(R.p());
  const i64 a2inv = invmod(mulmod(S.a, S.a, Ne), Ne);
  const i64 x = mulmod(mod(-mpz_class(S.d() % Ne).get_si(), Ne), a2inv, Ne);
  EpsilonCheck c;
  c.ratio = bwd.zphihat_sum / fwd.zphi_sum;
  c.expected = std::exp(-4.0 * double(e) * s * std::log(q)) * std::pow(lambda, -e) * mu(x) * std::conj(std::pow(fwd.W_F, 4));
  return c;
}

}  // namespace bzeta

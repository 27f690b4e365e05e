#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_result.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzeta/classgroup.hpp"
#include "bzeta/localrep.hpp"
#include "bzeta/padicring/gauss.hpp"

namespace bzeta {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Gamma_C(s) = 2 (2 pi)^-s Gamma(s).
inline cplx gamma_C(cplx s) {
  const double nearest = std::round(s.real());
  if (nearest <= 0 && std::abs(s - cplx(nearest, 0)) < 1e-12)
    throw PoleError("gamma_C: pole at s = " + std::to_string(static_cast<long>(nearest)));
  gsl_sf_result lnr, arg;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  const int status = gsl_sf_lngamma_complex_e(s.real(), s.imag(), &lnr, &arg);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS) throw std::domain_error(std::string("gamma_C: ") + gsl_strerror(status));
  const cplx lg(lnr.val, arg.val);
  return 2.0 * std::exp(lg - s * std::log(2.0 * std::numbers::pi));
}

/// L(s, pi_inf) for weight (l1, l2).
inline cplx arch_lfactor(cplx s, int l1, int l2) {
  return gamma_C(s + (l1 - l2) / 2.0 + 0.5) * gamma_C(s + (l1 + l2) / 2.0 - 1.5);
}

struct QuadraturePin {
  double quad, closed;
  double rel_err() const { return std::abs(quad - closed) / std::abs(closed); }
};

/// int_0^inf a^{sigma-1} exp(-2 pi sqrt|D| a) da against Gamma(sigma) (2 pi sqrt|D|)^-sigma.
inline QuadraturePin mellin_pin(double sigma, std::int64_t D) {
  if (sigma <= 0) throw std::invalid_argument("mellin_pin: sigma must be positive");
  const double k = 2.0 * std::numbers::pi * std::sqrt(std::abs(static_cast<double>(D)));
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double a) { return a > 0 ? std::exp((sigma - 1.0) * std::log(a) - k * a) : 0.0; };
  QuadraturePin r;
  r.quad = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
  r.closed = std::tgamma(sigma) * std::pow(k, -sigma);
  return r;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> f;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      f.emplace_back(p, k);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

/// Kronecker symbol (D / p) for a prime p.
inline int kronecker(i64 D, i64 p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const i64 r = mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const i64 r = mod(D, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Dirichlet character mod odd M, one MultChar component per prime power of M
/// (primes in increasing order).
class DirichletChar {
 public:
  DirichletChar() = default;
  DirichletChar(i64 M, const std::vector<i64>& indices) : M_(M) {
    if (M < 1) throw std::invalid_argument("DirichletChar: modulus must be positive");
    const auto fs = factorize(M);
    if (indices.size() != fs.size())
      throw std::invalid_argument("DirichletChar: expected " + std::to_string(fs.size()) + " component indices for M = " +
                                  std::to_string(M));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto R = std::make_shared<const ResidueRing>(fs[i].first, fs[i].second);
      comps_.emplace_back(R, indices[i], 1.0);
    }
  }
  static DirichletChar trivial() { return DirichletChar(1, {}); }

  i64 modulus() const noexcept { return M_; }
  const std::vector<MultChar>& components() const noexcept { return comps_; }

  cplx operator()(i64 n) const {
    if (std::gcd(mod(n, M_), M_) != 1) return 0.0;
    cplx v = 1.0;
    for (const auto& c : comps_) v *= c(mod(n, c.ring().size()));
    return v;
  }
  bool is_primitive() const {
    for (const auto& c : comps_)
      if (c.conductor() != c.ring().e()) return false;
    return true;
  }
  bool is_even() const { return std::abs((*this)(-1) - 1.0) < 1e-12; }
  bool is_real() const {
    for (i64 a = 1; a < M_; ++a)
      if (std::abs((*this)(a).imag()) > 1e-12) return false;
    return true;
  }
  DirichletChar conj() const {
    DirichletChar c = *this;
    for (auto& x : c.comps_) x = x.conj();
    return c;
  }

 private:
  i64 M_ = 1;
  std::vector<MultChar> comps_;
};

/// G(chi) = sum_{a mod M} chi(a) e(a/M), assembled from prime-power Gauss sums
/// by CRT: G(chi1 chi2) = chi1(m2) chi2(m1) G(chi1) G(chi2).
inline cplx gauss_sum_dirichlet(const DirichletChar& chi) {
  if (chi.modulus() == 1) return 1.0;
  cplx g = 1.0;
  const i64 M = chi.modulus();
  for (const auto& c : chi.components()) {
    const ResidueRing& R = c.ring();
    cplx raw = 0;
    for (i64 a = 1; a < R.size(); ++a)
      if (R.is_unit(a)) raw += c(a) * psi_frac(a, R.size());
    const i64 rest = M / R.size();
    g *= raw * c(mod(rest, R.size()));
  }
  return g;
}

/// Direct summation, for cross-checks.
inline cplx gauss_sum_dirichlet_direct(const DirichletChar& chi) {
  cplx g = 0;
  for (i64 a = 0; a < chi.modulus(); ++a) g += chi(a) * psi_frac(a, chi.modulus());
  return g;
}

struct GlobalParams {
  i64 D = -4;
  int l1 = 4, l2 = 4;
  i64 N = 1;
  i64 M = 1;
  DirichletChar chi = DirichletChar::trivial();
  std::vector<i64> S;

  /// Throws naming the first failed assumption.
  void validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("GlobalParams: " + m); };
    if (D >= 0 || !is_fundamental_discriminant(D)) fail("D must be a negative fundamental discriminant");
    if (!(l1 >= l2 && l2 >= 3)) fail("need l1 >= l2 >= 3");
    if ((l1 - l2) % 2 != 0) fail("need l1 = l2 mod 2");
    if (N < 1) fail("N must be positive");
    for (auto [p, k] : factorize(N))
      if (k > 1) fail("N is not squarefree");
    if (M < 1 || M % 2 == 0) fail("M must be odd");
    if (std::gcd(M, N) != 1) fail("M and N must be coprime");
    for (i64 n : {N, M})
      for (auto [p, k] : factorize(n))
        if (kronecker(D, p) != -1) fail("prime " + std::to_string(p) + " dividing NM is not inert");
    if (chi.modulus() != M) fail("character modulus differs from M");
    if (!chi.is_primitive()) fail("character is not primitive mod M");
    if (!chi.is_even()) fail("character is not even");
    for (i64 p : S)
      if (!is_prime(p) || std::gcd(p, D * M * N) != 1) fail("S must consist of primes coprime to DMN");
  }
};

inline int w_D(i64 D) { return D == -3 ? 6 : D == -4 ? 4 : 2; }

/// [K_f : K_0(N)] = prod_{p | N} p^3 (1 + 1/p)(1 + 1/p^2) = prod (p + 1)(p^2 + 1).
inline i64 siegel_index(i64 N) {
  i64 r = 1;
  for (auto [p, k] : factorize(N)) r *= (p + 1) * (p * p + 1);
  return r;
}

/// (-1)^l2 chi(Npi^2) (G/sqrt M)^4 (M^4 Npi^2)^{1/2 - s}.
inline cplx global_epsilon(cplx s, const GlobalParams& gp, i64 Npi) {
  if (Npi < 1 || gp.N % Npi != 0) throw std::invalid_argument("global_epsilon: N_pi must divide N");
  const double M = static_cast<double>(gp.M);
  const cplx G = gauss_sum_dirichlet(gp.chi);
  const double sign = gp.l2 % 2 ? -1.0 : 1.0;
  const double base = std::pow(M, 4) * static_cast<double>(Npi) * static_cast<double>(Npi);
  return sign * gp.chi(Npi * Npi) * std::pow(G / std::sqrt(M), 4) * std::exp((0.5 - s) * std::log(base));
}

/// Scalar in front of the spectral sum; vnorm is the archimedean vector norm (v|v).
inline cplx average_prefactor(cplx s, const GlobalParams& gp, double vnorm = 1.0) {
  gp.validate();
  const double absD = std::abs(static_cast<double>(gp.D));
  const double w = w_D(gp.D);
  const double k = (gp.l1 + gp.l2) / 2.0;
  const double head = 0.25 * std::pow(absD, 0.5 * (3.0 - k)) * std::exp(-2.0 * std::numbers::pi * std::sqrt(absD)) /
                      (w * w * static_cast<double>(siegel_index(gp.N)));
  double zM = 1.0;
  for (auto [p, e] : factorize(gp.M)) zM /= (1.0 - 1.0 / p) * (1.0 - std::pow(static_cast<double>(p), -4));
  const cplx Mpart = std::exp((s - 6.0) * std::log(static_cast<double>(gp.M))) * zM * gp.chi(2 * gp.D) *
                     gauss_sum_dirichlet(gp.chi);
  double nprod = 1.0;
  for (auto [p, e] : factorize(gp.N)) nprod /= 1.0 + 1.0 / static_cast<double>(p * p);
  const cplx Npart = std::exp((s - 1.0) * std::log(static_cast<double>(gp.N))) / gp.chi(gp.N) * nprod;
  return head * Mpart * Npart * vnorm * vnorm;
}

enum class CompositeKind { SK, Yoshida };

/// SK: inputs {Lhat(s, pi0 x mu), Lhat(s + 1/2, mu), Lhat(s - 1/2, mu)};
/// Yoshida: inputs {Lhat(s, pi1 x mu), Lhat(s, pi2 x mu)}.
inline cplx composite_lfactors(CompositeKind kind, const std::vector<std::optional<cplx>>& inputs, cplx s) {
  const std::size_t need = kind == CompositeKind::SK ? 3 : 2;
  if (inputs.size() != need) throw std::invalid_argument("composite_lfactors: expected " + std::to_string(need) + " inputs");
  for (std::size_t i = 0; i < need; ++i)
    if (!inputs[i]) throw std::invalid_argument("composite_lfactors: missing local data for input " + std::to_string(i));
  if (kind == CompositeKind::Yoshida) return *inputs[0] * *inputs[1];
  return (s - 0.5) / (4.0 * std::numbers::pi) * *inputs[0] * *inputs[1] * *inputs[2];
}

struct LocalDatum {
  LocalRep rep;
  NumEnv satake;  ///< values for A, B, G
};
using LocalDataMap = std::map<i64, LocalDatum>;

/// Truncated Euler product over the supplied primes times L(s, pi_inf).
/// Primes dividing M carry the ramified-twist factor 1.
inline cplx partial_spinor_L(cplx s, const LocalDataMap& data, const GlobalParams& gp) {
  cplx v = arch_lfactor(s, gp.l1, gp.l2);
  for (const auto& [p, ld] : data) {
    if (!is_prime(p)) throw std::invalid_argument("partial_spinor_L: " + std::to_string(p) + " is not prime");
    if (gp.M % p == 0) continue;
    const bool level = gp.N % p == 0;
    const RepType t = ld.rep.tag();
    if (level != (t == RepType::IIIa || t == RepType::VIb))
      throw std::invalid_argument("partial_spinor_L: type " + to_string(t) + " at p = " + std::to_string(p) +
                                  " does not match the level");
    const RatFunc f = spinor_lfactor(ld.rep, TwistData::unramified(RatFunc(sym::U)));
    NumEnv env = ld.satake;
    const double dp = static_cast<double>(p);
    env[sym::Q] = std::sqrt(dp);
    env[sym::T] = std::exp(-s * std::log(dp));
    env[sym::U] = gp.chi(p);
    const cplx fv = eval(f, env);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) throw PoleError("partial_spinor_L: pole at p = " + std::to_string(p));
    v *= fv;
  }
  return v;
}

}  // namespace bzeta

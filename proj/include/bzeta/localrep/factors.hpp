#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "bzeta/besselzeta/hecke.hpp"
#include "bzeta/localrep/rep.hpp"

namespace bzeta {

/// (dim V^K, dim V^{K0(p)}).
inline std::pair<int, int> dims(const LocalRep& rep) {
  switch (rep.tag()) {
    case RepType::I: return {1, 4};
    case RepType::IIb: return {1, 3};
    case RepType::IIIa: return {0, 2};
    case RepType::VIb: return {0, 1};
  }
  return {0, 0};
}

struct RamifiedTwistError : std::domain_error {
  RamifiedTwistError() : std::domain_error("L-factor is 1 by convention for a ramified twist (e > 0)") {}
};

/// L(s, pi, mu) in T = q^{-s}; the twist scales T by u.
inline RatFunc spinor_lfactor(const LocalRep& rep, const TwistData& tw) {
  if (tw.e > 0) throw RamifiedTwistError();
  const RatFunc x = tw.u * RatFunc(sym::T);
  const RatFunc Q(sym::Q);
  const RatFunc g = rep.gamma();
  auto f = [&](const RatFunc& c) { return RatFunc(1) - c * x; };
  RatFunc den;
  switch (rep.tag()) {
    case RepType::I: {
      const RatFunc a = rep.alpha(), b = rep.beta();
      den = f(a * b * g) * f(a * g) * f(b * g) * f(g);
      break;
    }
    case RepType::IIb: {
      const RatFunc a = rep.alpha();
      den = f(a * a * g) * f(g) * f(a * g / Q) * f(a * g * Q);
      break;
    }
    case RepType::IIIa: den = f(rep.alpha() * g / Q) * f(g / Q); break;
    case RepType::VIb: den = f(g / Q).pow(2); break;
  }
  return den.inverse();
}

/// s -> s + k/2, i.e. T -> T Q^{-k}.
inline RatFunc shift_half(const RatFunc& f, int k = 1) {
  return subst(f, {{sym::T, RatFunc(sym::T) * RatFunc(sym::Q).pow(-k)}});
}

/// Standard (degree 5) L-factor in T.
inline RatFunc std_lfactor(const LocalRep& rep) {
  const RatFunc T(sym::T), Q(sym::Q);
  auto f = [&](const RatFunc& c) { return RatFunc(1) - c * T; };
  switch (rep.tag()) {
    case RepType::I: {
      const RatFunc a = rep.alpha(), b = rep.beta();
      return (f(a) * f(b) * f(a.inverse()) * f(b.inverse()) * f(1)).inverse();
    }
    case RepType::IIb: {
      const RatFunc a = rep.alpha();
      return (f(a * Q) * f(a / Q) * f(Q / a) * f((a * Q).inverse()) * f(1)).inverse();
    }
    default: throw std::invalid_argument("std_lfactor: only types I and IIb are supported");
  }
}

enum class EpsCase { ramified_spherical, IIIa, VIb, old_I_IIb };

inline EpsCase parse_eps_case(const std::string& s) {
  if (s == "ramified_spherical") return EpsCase::ramified_spherical;
  if (s == "IIIa") return EpsCase::IIIa;
  if (s == "VIb") return EpsCase::VIb;
  if (s == "old_I_IIb") return EpsCase::old_I_IIb;
  throw std::invalid_argument("unknown epsilon case '" + s + "'");
}

/// Local epsilon factor in T. For the ramified case the unit
/// mu(-a^-2 d) conj(W_F^4) is the opaque symbol W.
inline RatFunc local_epsilon(const LocalRep& rep, const TwistData& tw, EpsCase c) {
  const RatFunc T(sym::T), Q(sym::Q);
  const bool spherical = rep.tag() == RepType::I || rep.tag() == RepType::IIb;
  switch (c) {
    case EpsCase::ramified_spherical:
      if (!spherical || tw.e <= 0) throw std::invalid_argument("local_epsilon: ramified_spherical needs type I/IIb and e > 0");
      return (Q * T).pow(4 * tw.e) * tw.lambda.pow(-tw.e) * RatFunc(sym::W);
    case EpsCase::IIIa:
    case EpsCase::VIb:
      if (tw.e != 0 || rep.tag() != (c == EpsCase::IIIa ? RepType::IIIa : RepType::VIb))
        throw std::invalid_argument("local_epsilon: case does not match representation type or twist is ramified");
      return tw.u.pow(2) * (Q * T).pow(2);
    case EpsCase::old_I_IIb:
      if (!spherical || tw.e != 0) throw std::invalid_argument("local_epsilon: old_I_IIb needs type I/IIb and an unramified twist");
      return RatFunc(1);
  }
  throw std::logic_error("bad EpsCase");
}

/// Local factor t(pi_p, mu_p) of the spectral average at a prime p. `env`
/// supplies numeric values for any symbols left in the Satake data or u.
inline std::complex<double> t_factor(const LocalRep& rep, const TwistData& tw, long p, NumEnv env = {}) {
  if (tw.e != 0) throw RamifiedTwistError();
  switch (rep.tag()) {
    case RepType::VIb: return 1.0;
    case RepType::IIIa: return 2.0;
    default: break;
  }
  const double pd = static_cast<double>(p);
  env[sym::Q] = std::sqrt(pd);
  env[sym::T] = 1.0 / pd;
  const HeckePair h = hecke_matrices(rep);
  const RatFunc tr = h.t10.trace() / RatFunc(sym::Q).pow(2) + h.eta.trace();
  const std::complex<double> u = eval(tw.u, env);
  const std::complex<double> Lstd = eval(std_lfactor(rep), env);
  return 2.0 * (pd - 1.0) * std::pow(pd, -5.0) * Lstd * (1.0 + u * u - u / (pd + 1.0) * eval(tr, env));
}

}  // namespace bzeta

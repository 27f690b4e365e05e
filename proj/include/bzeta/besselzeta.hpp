#pragma once

#include <string>
#include <vector>

#include "bzeta/besselzeta/hecke.hpp"
#include "bzeta/localrep.hpp"

namespace bzeta {

/// B_i(1_4) for the fixed basis. I/IIb entries sum to 1; IIIa is (1, 1/alpha); VIb is (1).
inline std::vector<RatFunc> bessel_identity_values(const LocalRep& rep) {
  const RatFunc Q(sym::Q), q = Q * Q;
  auto nonzero = [](const RatFunc& d, const char* what) {
    if (d.is_zero()) throw std::domain_error(std::string("bessel_identity_values: degenerate parameters, ") + what + " vanishes");
    return d;
  };
  switch (rep.tag()) {
    case RepType::I: {
      const RatFunc a = rep.alpha(), b = rep.beta();
      const RatFunc den = nonzero(q - a, "q - alpha") * nonzero(q - b, "q - beta");
      return {a * b / den, -q * b / den, -q * a / den, q * q / den};
    }
    case RepType::IIb: {
      const RatFunc a = rep.alpha();
      const RatFunc den = nonzero(Q - a, "q^(1/2) - alpha") * nonzero(Q * q - a, "q^(3/2) - alpha");
      return {a * a / den, -Q * (1 + q) * a / den, q * q / den};
    }
    case RepType::IIIa: return {RatFunc(1), rep.alpha().inverse()};
    case RepType::VIb: return {RatFunc(1)};
  }
  throw std::logic_error("bad RepType");
}

/// <B_i|B_i> for types I and IIb.
inline std::vector<RatFunc> bessel_norms(RepType t) {
  const RatFunc q = RatFunc(sym::Q).pow(2);
  switch (t) {
    case RepType::I: return {q + 1, q * (q + 1), q.pow(2) * (q + 1), q.pow(3) * (q + 1)};
    case RepType::IIb: return {q + 1, q * (q + 1).pow(2), q.pow(3) * (q + 1)};
    default: throw std::invalid_argument("bessel_norms: only types I and IIb");
  }
}

namespace detail {

inline void require_spherical(const LocalRep& rep, const char* who) {
  if (rep.tag() != RepType::I && rep.tag() != RepType::IIb)
    throw std::invalid_argument(std::string(who) + ": needs type I or IIb");
}
inline void require_trivial_central(const LocalRep& rep, const char* who) {
  if (!rep.central_character().is_one())
    throw std::invalid_argument(std::string(who) + ": needs trivial central character");
}

inline RatMatrix row_of(const std::vector<RatFunc>& v) { return RatMatrix::row(v); }
inline RatMatrix ones(std::size_t n) { return RatMatrix::column(std::vector<RatFunc>(n, RatFunc(1))); }

/// Row vector b^T (I - q^-3 X t10)^-1; entry j is sum_l B_j-weighted diagonal values.
inline RatMatrix bessel_row_series(const LocalRep& rep, const RatFunc& X) {
  const HeckePair h = hecke_matrices(rep);
  const RatMatrix R = geom_resolvent(RatFunc(sym::Q).pow(-6) * h.t10, X);
  return row_of(bessel_identity_values(rep)) * R;
}

inline RatFunc inert_L_s_plus_1(const TwistData& tw) {
  const RatFunc T(sym::T), Q(sym::Q);
  return (RatFunc(1) - tw.lambda * tw.u.pow(2) * T.pow(2) / Q.pow(4)).inverse();
}

inline RatFunc series_argument(const TwistData& tw) { return tw.u * RatFunc(sym::T) * RatFunc(sym::Q).pow(2); }

}  // namespace detail

/// sum_{l>=0} B0(h(l,0)) X^l = b^T (I - q^-3 X t10)^-1 1.
inline RatFunc diag_series(const LocalRep& rep, Var X) {
  detail::require_spherical(rep, "diag_series");
  detail::require_trivial_central(rep, "diag_series");
  const auto n = static_cast<std::size_t>(dims(rep).second);
  return (detail::bessel_row_series(rep, RatFunc(X)) * detail::ones(n))(0, 0);
}

/// Z(phi, B0, s, mu; 1_4) via the diagonal series; equals L(s+1/2, pi, mu).
inline RatFunc zeta_case1(const LocalRep& rep, const TwistData& tw) {
  detail::require_spherical(rep, "zeta_case1");
  if (tw.e != 0) throw RamifiedTwistError();
  const RatFunc ser = subst(diag_series(rep, sym::X), {{sym::X, detail::series_argument(tw)}});
  return detail::inert_L_s_plus_1(tw) * ser;
}

struct ZetaPair {
  RatFunc closed_form;
  RatFunc series_form;
  bool match() const { return closed_form == series_form; }
};

/// Z(phi, B_j, s, mu; eta) for the j-th basis vector (0-based), both routes.
inline ZetaPair zeta_case4(const LocalRep& rep, const TwistData& tw, std::size_t j) {
  detail::require_spherical(rep, "zeta_case4");
  detail::require_trivial_central(rep, "zeta_case4");
  if (tw.e != 0) throw RamifiedTwistError();
  if (!tw.lambda.is_one()) throw std::invalid_argument("zeta_case4: needs Lambda = 1");
  const auto n = static_cast<std::size_t>(dims(rep).second);
  if (j >= n) throw std::out_of_range("zeta_case4: basis index out of range");
  const HeckePair h = hecke_matrices(rep);
  const auto b = bessel_identity_values(rep);
  const RatMatrix bt = RatMatrix::row(b);
  const RatFunc Q(sym::Q), q = Q * Q, T(sym::T);
  const RatFunc X = detail::series_argument(tw);
  const RatFunc Lhalf = shift_half(spinor_lfactor(rep, tw));

  const RatFunc brace = q / (tw.u * T) + tw.u * T * q - h.t10.trace() / q - h.eta.trace();
  const RatFunc val = (bt * h.eta)(0, j) + (bt * h.t10)(0, j) / q + brace * b[j];
  ZetaPair z;
  z.closed_form = Lhalf / (q * q + 1) * val;

  const RatMatrix row = detail::bessel_row_series(rep, X);
  const RatFunc ser = (row * h.eta)(0, j) + q * q / (tw.lambda * X) * row(0, j);
  z.series_form = detail::inert_L_s_plus_1(tw) / (q * q + 1) * ser;
  return z;
}

/// Lambda^-1 u^-1 q^{s+1} / (q^2+1) * L(s+1/2) * B_j(1_4), types IIIa / VIb.
inline RatFunc zeta_case5_6(const LocalRep& rep, const TwistData& tw, std::size_t j = 0) {
  if (rep.tag() != RepType::IIIa && rep.tag() != RepType::VIb) throw std::invalid_argument("zeta_case5_6: needs type IIIa or VIb");
  if (tw.e != 0) throw RamifiedTwistError();
  const auto b = bessel_identity_values(rep);
  if (j >= b.size()) throw std::out_of_range("zeta_case5_6: basis index out of range");
  const RatFunc Q(sym::Q), q = Q * Q, T(sym::T);
  return q / (tw.lambda * tw.u * T) / (q * q + 1) * shift_half(spinor_lfactor(rep, tw)) * b[j];
}

/// Same quantity through the general-B geometric series with the IIIa/VIb
/// eigen-data. Agrees with zeta_case5_6 when Lambda(varpi) = 1 and the
/// central character is trivial.
inline RatFunc zeta_case5_6_series(const LocalRep& rep, const TwistData& tw, std::size_t j = 0) {
  if (rep.tag() != RepType::IIIa && rep.tag() != RepType::VIb) throw std::invalid_argument("zeta_case5_6_series: needs type IIIa or VIb");
  const HeckePair h = hecke_matrices(rep);
  const RatFunc q = RatFunc(sym::Q).pow(2);
  const RatFunc X = detail::series_argument(tw);
  const RatMatrix row = detail::bessel_row_series(rep, X);
  const RatFunc ser = (row * h.eta)(0, j) + q * q / (tw.lambda * X) * row(0, j);
  return detail::inert_L_s_plus_1(tw) / (q * q + 1) * ser;
}

/// Complex conjugation of unitary symbolic parameters: A, B, G, U, L -> inverses.
inline RatFunc unit_conj(const RatFunc& f) {
  std::map<Var, RatFunc> m;
  for (Var v : {sym::A, sym::B, sym::G, sym::U, sym::L}) m.emplace(v, RatFunc(v).inverse());
  return subst(f, m);
}

struct PeriodPair {
  RatFunc from_components;
  RatFunc closed_form;
  bool match() const { return from_components == closed_form; }
};

/// Local period I^{(s)} from components and from the closed form.
inline PeriodPair local_period(const LocalRep& rep, const TwistData& tw) {
  if (tw.e != 0) throw RamifiedTwistError();
  const RatFunc Q(sym::Q), q = Q * Q, T(sym::T);
  const auto b = bessel_identity_values(rep);
  PeriodPair out;
  if (rep.tag() == RepType::IIIa || rep.tag() == RepType::VIb) {
    const RatFunc c = q / (tw.lambda * tw.u * T) / (q * q + 1);
    RatFunc sum;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const RatFunc zstar = zeta_case5_6(rep, tw, j) / shift_half(spinor_lfactor(rep, tw));
      sum += zstar * unit_conj(b[j]);
    }
    out.from_components = sum;
    out.closed_form = (rep.tag() == RepType::IIIa ? RatFunc(2) : RatFunc(1)) * c;
    return out;
  }
  detail::require_trivial_central(rep, "local_period");
  const auto norms = bessel_norms(rep.tag());
  const RatFunc Lhalf = shift_half(spinor_lfactor(rep, tw));
  RatFunc sum;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const RatFunc zstar = zeta_case4(rep, tw, j).closed_form / Lhalf;
    sum += zstar * unit_conj(b[j]) / norms[j];
  }
  out.from_components = sum;
  const HeckePair h = hecke_matrices(rep);
  const RatFunc L1 = subst(std_lfactor(rep), {{sym::T, q.inverse()}});
  const RatFunc brace = q / (tw.u * T) + tw.u * T * q - (h.t10.trace() + q * h.eta.trace()) / (q + 1);
  out.closed_form = 2 * (q - 1) / (q.pow(5) * (q * q + 1)) * L1 * brace;
  return out;
}

struct RecursionReport {
  RatFunc b2_derived;          ///< B_2(1) from the rederived system at kappa
  RatFunc b2_derived_generic;  ///< same with kappa left symbolic
  RatFunc b2_printed;          ///< B_2(1) from the system as printed, at kappa
  bool derived_ok = false;     ///< b2_derived == 1/alpha
  bool printed_ok = false;
};

namespace detail {

// Unknowns x1 = B1(s2), x2 = B1(h(-1,1)s1s2), x3 = B1(h(0,1)s1s2), x4 = B2(1); B1(1) = 1.
// `q_on_eq3` restores the factor q on the left of Eq3.
inline RatFunc solve_iiia_system(const RatFunc& a, const RatFunc& g, const RatFunc& k, bool q_on_eq3) {
  const RatFunc q = RatFunc(sym::Q).pow(2);
  const RatFunc f3 = q_on_eq3 ? q : RatFunc(1);
  RatMatrix M{{a * g * q, -q * q, 0, 0},
              {0, -(q * q - 1), 0, k / g * (q.inverse() - 1)},
              {k * (a * q + 1) * f3, 0, -q.pow(4), 0},
              {0, 0, -(q * q - 1), k / q.pow(3) * (1 - q)}};
  RatMatrix rhs = RatMatrix::column({a * g * (q - 1), a * g * (q - 1), k * (a * q * q - a * q - q * q - 1) / (q + 1),
                                     k * a / q.pow(2) * (q - 1)});
  const RatMatrix sol = inverse(M) * rhs;
  return sol(3, 0);
}

}  // namespace detail

/// IIIa: solves Eq1-Eq4 for B_2(1) given B_1(1) = 1.
inline RecursionReport recursion_consistency(const LocalRep& rep) {
  if (rep.tag() != RepType::IIIa) throw std::invalid_argument("recursion_consistency: needs type IIIa");
  const RatFunc a = rep.alpha(), g = rep.gamma();
  const RatFunc kappa = a * g * g;
  RecursionReport r;
  r.b2_derived = detail::solve_iiia_system(a, g, kappa, true);
  r.b2_derived_generic = detail::solve_iiia_system(a, g, RatFunc(sym::kappa), true);
  r.b2_printed = detail::solve_iiia_system(a, g, kappa, false);
  r.derived_ok = r.b2_derived == a.inverse();
  r.printed_ok = r.b2_printed == a.inverse();
  if (!r.derived_ok) throw std::logic_error("recursion_consistency: derived system does not give B2(1) = 1/alpha");
  return r;
}

}  // namespace bzeta

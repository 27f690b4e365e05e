#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bzeta/symfield.hpp"

namespace bzeta {

enum class RepType { I, IIb, IIIa, VIb };

inline std::string to_string(RepType t) {
  switch (t) {
    case RepType::I: return "I";
    case RepType::IIb: return "IIb";
    case RepType::IIIa: return "IIIa";
    case RepType::VIb: return "VIb";
  }
  return "?";
}

inline RepType parse_rep_type(const std::string& s) {
  if (s == "I") return RepType::I;
  if (s == "IIb") return RepType::IIb;
  if (s == "IIIa") return RepType::IIIa;
  if (s == "VIb") return RepType::VIb;
  throw std::invalid_argument("unknown representation type '" + s + "' (expected I, IIb, IIIa or VIb)");
}

/// Iwahori-spherical representation descriptor with Satake data.
/// Parameters absent for a type are empty: I has alpha, beta, gamma; IIb and
/// IIIa have alpha, gamma; VIb has gamma only.
class LocalRep {
 public:
  static LocalRep type_I(RatFunc a, RatFunc b, RatFunc g) { return LocalRep(RepType::I, std::move(a), std::move(b), std::move(g)); }
  static LocalRep type_IIb(RatFunc a, RatFunc g) { return LocalRep(RepType::IIb, std::move(a), std::nullopt, std::move(g)); }
  static LocalRep type_IIIa(RatFunc a, RatFunc g) { return LocalRep(RepType::IIIa, std::move(a), std::nullopt, std::move(g)); }
  static LocalRep type_VIb(RatFunc g) { return LocalRep(RepType::VIb, std::nullopt, std::nullopt, std::move(g)); }

  /// Free symbols A, B, G for whatever the type carries.
  static LocalRep symbolic(RepType t) {
    using namespace sym;
    switch (t) {
      case RepType::I: return type_I(A, B, G);
      case RepType::IIb: return type_IIb(A, G);
      case RepType::IIIa: return type_IIIa(A, G);
      case RepType::VIb: return type_VIb(G);
    }
    throw std::logic_error("bad RepType");
  }

  /// Symbolic parameters with the central character forced to 1 by
  /// eliminating one symbol: I: B = 1/(A G^2); IIb, IIIa: G = 1/A (IIIa: A = G^-2); VIb: G = 1.
  static LocalRep symbolic_trivial_central(RepType t) {
    using namespace sym;
    const RatFunc a(A), g(G);
    LocalRep r = [&] {
      switch (t) {
        case RepType::I: return type_I(a, (a * g * g).inverse(), g);
        case RepType::IIb: return type_IIb(a, a.inverse());
        case RepType::IIIa: return type_IIIa((g * g).inverse(), g);
        case RepType::VIb: return type_VIb(RatFunc(1));
      }
      throw std::logic_error("bad RepType");
    }();
    r.require_trivial_central();
    return r;
  }

  RepType tag() const noexcept { return tag_; }
  bool has_alpha() const noexcept { return alpha_.has_value(); }
  bool has_beta() const noexcept { return beta_.has_value(); }
  const RatFunc& alpha() const { return get(alpha_, "alpha"); }
  const RatFunc& beta() const { return get(beta_, "beta"); }
  const RatFunc& gamma() const { return get(gamma_, "gamma"); }
  bool trivial_central() const noexcept { return trivial_central_; }

  /// Central character at the uniformizer: I: a b g^2, IIb: a^2 g^2,
  /// IIIa: a g^2, VIb: g^2.
  RatFunc central_character() const {
    const RatFunc g2 = gamma() * gamma();
    switch (tag_) {
      case RepType::I: return alpha() * beta() * g2;
      case RepType::IIb: return alpha() * alpha() * g2;
      case RepType::IIIa: return alpha() * g2;
      case RepType::VIb: return g2;
    }
    return {};
  }

  /// Sets the flag after checking the central character is exactly 1.
  LocalRep& require_trivial_central() {
    if (!central_character().is_one())
      throw std::invalid_argument("LocalRep: central character is " + central_character().str() + ", not 1");
    trivial_central_ = true;
    return *this;
  }

  /// Satake substitution A, B, G -> the stored parameters.
  std::map<Var, RatFunc> satake_binding() const {
    std::map<Var, RatFunc> m;
    if (alpha_) m.emplace(sym::A, *alpha_);
    if (beta_) m.emplace(sym::B, *beta_);
    if (gamma_) m.emplace(sym::G, *gamma_);
    return m;
  }

  /// Metadata for numeric inputs off the unit circle. Accepted silently;
  /// the note is surfaced in CLI output.
  std::string unitarity_note(const std::map<Var, std::complex<double>>& env = {}) const;

 private:
  RepType tag_;
  std::optional<RatFunc> alpha_, beta_, gamma_;
  bool trivial_central_ = false;

  LocalRep(RepType t, std::optional<RatFunc> a, std::optional<RatFunc> b, std::optional<RatFunc> g)
      : tag_(t), alpha_(std::move(a)), beta_(std::move(b)), gamma_(std::move(g)) {
    for (const auto* p : {&alpha_, &beta_, &gamma_})
      if (*p && p->value().is_zero()) throw std::invalid_argument("LocalRep: Satake parameter must be nonzero");
  }
  static const RatFunc& get(const std::optional<RatFunc>& x, const char* what) {
    if (!x) throw std::logic_error(std::string("LocalRep: parameter ") + what + " not present for this type");
    return *x;
  }
};

/// Twist data: u = mu(varpi), lambda = Lambda(varpi), e = cond(mu).
struct TwistData {
  RatFunc u = RatFunc(1);
  RatFunc lambda = RatFunc(1);
  int e = 0;

  static TwistData symbolic() { return {RatFunc(sym::U), RatFunc(sym::L), 0}; }
  static TwistData unramified(RatFunc u, RatFunc lambda = RatFunc(1)) { return {std::move(u), std::move(lambda), 0}; }
};

/// Numeric environment for evaluating RatFuncs.
using NumEnv = std::map<Var, std::complex<double>>;

inline std::complex<double> eval(const RatFunc& f, const NumEnv& env) {
  return f.eval<std::complex<double>>([&](Var v) {
    auto it = env.find(v);
    if (it == env.end()) throw std::invalid_argument("eval: no value for variable " + v.name());
    return it->second;
  });
}

inline std::string LocalRep::unitarity_note(const NumEnv& env) const {
  std::string note;
  auto check = [&](const std::optional<RatFunc>& x, const char* name) {
    if (!x) return;
    try {
      const double m = std::abs(eval(*x, env));
      if (std::abs(m - 1.0) > 1e-9) note += std::string(note.empty() ? "" : "; ") + name + " is not unitary";
    } catch (const std::invalid_argument&) {
      // symbolic: nothing to say
    }
  };
  check(alpha_, "alpha");
  check(beta_, "beta");
  check(gamma_, "gamma");
  return note;
}

}  // namespace bzeta

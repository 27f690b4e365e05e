#pragma once

#include "bzeta/localrep/rep.hpp"

namespace bzeta {

/// T_{1,0} and the Atkin-Lehner element on the K0(p)-fixed space, acting on
/// column coordinate vectors: T B_j = sum_i t(i,j) B_i.
struct HeckePair {
  RatMatrix t10;
  RatMatrix eta;
};

namespace detail {
inline RatFunc Qp(int k) { return RatFunc(sym::Q).pow(k); }
}  // namespace detail

inline HeckePair hecke_matrices(const LocalRep& rep) {
  using detail::Qp;
  const RatFunc q = Qp(2), Q = Qp(1), Q3 = Qp(3);
  const RatFunc g = rep.gamma();
  switch (rep.tag()) {
    case RepType::I: {
      const RatFunc a = rep.alpha(), b = rep.beta();
      const RatFunc abg = a * b * g, bg = b * g, ag = a * g;
      const RatFunc w = (q - 1) * Q;
      HeckePair h;
      h.t10 = RatMatrix{{abg * Q3, 0, 0, 0},
                        {abg * w, bg * Q3, 0, 0},
                        {abg * w, bg * w, ag * Q3, 0},
                        {abg * w, bg * w, ag * w, g * Q3}};
      h.eta = RatMatrix{{0, 0, 0, g * Q3},
                        {0, 0, ag * Q, 0},
                        {0, bg / Q, 0, 0},
                        {abg / Q3, 0, 0, 0}};
      return h;
    }
    case RepType::IIb: {
      const RatFunc a = rep.alpha();
      const RatFunc a2g = a * a * g, ag = a * g;
      HeckePair h;
      h.t10 = RatMatrix{{a2g * Q3, 0, 0},
                        {a2g * (q - 1) * Q, ag * q * q, 0},
                        {a2g * (q - 1) * Q, ag * (q * q - 1), g * Q3}};
      h.eta = RatMatrix{{0, 0, g * Q3}, {0, ag, 0}, {a2g / Q3, 0, 0}};
      return h;
    }
    case RepType::IIIa: {
      const RatFunc a = rep.alpha();
      HeckePair h;
      h.t10 = RatMatrix{{a * g * q, 0}, {0, g * q}};
      h.eta = RatMatrix{{0, g}, {a * g, 0}};
      return h;
    }
    case RepType::VIb: {
      HeckePair h;
      h.t10 = RatMatrix{{g * q}};
      h.eta = RatMatrix{{g}};
      return h;
    }
  }
  throw std::logic_error("bad RepType");
}

}  // namespace bzeta

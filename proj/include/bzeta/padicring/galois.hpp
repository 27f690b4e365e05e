#pragma once

#include "bzeta/padicring/residue.hpp"

namespace bzeta {

/// u + v*theta in a Galois ring.
struct GElem {
  i64 u = 0, v = 0;
  bool operator==(const GElem&) const = default;
};

/// Unramified quadratic extension of Z/p^e: (Z/p^e)[theta]/(theta^2 - t theta + n)
/// with x^2 - t x + n irreducible mod p. The nontrivial automorphism theta ->
/// t - theta is the Frobenius.
class GaloisRing {
 public:
  GaloisRing(std::shared_ptr<const ResidueRing> base, i64 t, i64 n) : base_(std::move(base)) {
    const i64 N = base_->size();
    t_ = mod(t, N);
    n_ = mod(n, N);
    const i64 p = base_->p();
    const i64 disc = mod(t * t - 4 * n, p);
    if (disc == 0 || powmod(disc, (p - 1) / 2, p) == 1)
      throw std::invalid_argument("GaloisRing: modulus polynomial is not irreducible mod p");
  }

  /// theta^2 = r with r the least quadratic non-residue mod p.
  static GaloisRing standard(std::shared_ptr<const ResidueRing> base) {
    const i64 p = base->p();
    i64 r = 2;
    while (powmod(r, (p - 1) / 2, p) == 1) ++r;
    return GaloisRing(std::move(base), 0, -r);
  }

  const ResidueRing& base() const noexcept { return *base_; }
  std::shared_ptr<const ResidueRing> base_ptr() const noexcept { return base_; }
  i64 trace_theta() const noexcept { return t_; }
  i64 norm_theta() const noexcept { return n_; }
  i64 size() const noexcept { return base_->size() * base_->size(); }

  GElem reduce(GElem x) const { return {mod(x.u, base_->size()), mod(x.v, base_->size())}; }
  GElem add(GElem x, GElem y) const { return reduce({x.u + y.u, x.v + y.v}); }
  GElem mul(GElem x, GElem y) const {
    const i64 N = base_->size();
    // (u1 + v1 th)(u2 + v2 th), th^2 = t th - n
    const i64 vv = mulmod(x.v, y.v, N);
    const i64 u = mod(mulmod(x.u, y.u, N) - mulmod(vv, n_, N), N);
    const i64 v = mod(mulmod(x.u, y.v, N) + mulmod(x.v, y.u, N) + mulmod(vv, t_, N), N);
    return {u, v};
  }
  GElem scale(i64 c, GElem x) const { return reduce({mulmod(c, x.u, base_->size()), mulmod(c, x.v, base_->size())}); }
  GElem frob(GElem x) const { return reduce({x.u + mulmod(x.v, t_, base_->size()), -x.v}); }
  i64 norm(GElem x) const {
    const i64 N = base_->size();
    return mod(mulmod(x.u, x.u, N) + mulmod(mulmod(x.u, x.v, N), t_, N) + mulmod(mulmod(x.v, x.v, N), n_, N), N);
  }
  i64 trace(GElem x) const { return mod(2 * x.u + mulmod(x.v, t_, base_->size()), base_->size()); }
  bool is_unit(GElem x) const { return base_->is_unit(norm(x)); }

  template <class F>
  void for_each(F&& f) const {
    const i64 N = base_->size();
    for (i64 u = 0; u < N; ++u)
      for (i64 v = 0; v < N; ++v) f(GElem{u, v});
  }
  template <class F>
  void for_each_unit(F&& f) const {
    for_each([&](GElem x) {
      if (is_unit(x)) f(x);
    });
  }
  i64 unit_count() const {
    const i64 q = base_->p();
    return size() / (q * q) * (q * q - 1);
  }

 private:
  std::shared_ptr<const ResidueRing> base_;
  i64 t_ = 0, n_ = 0;
};

}  // namespace bzeta

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bzeta {

using cplx = std::complex<double>;
using i64 = std::int64_t;
using i128 = __int128;

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline i64 mod(i64 a, i64 n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline i64 mulmod(i64 a, i64 b, i64 n) { return static_cast<i64>(static_cast<i128>(mod(a, n)) * mod(b, n) % n); }

inline i64 powmod(i64 b, i64 k, i64 n) {
  i64 r = 1 % n;
  b = mod(b, n);
  while (k > 0) {
    if (k & 1) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    k >>= 1;
  }
  return r;
}

/// Inverse modulo n; throws if gcd(a, n) != 1.
inline i64 invmod(i64 a, i64 n) {
  i64 r0 = n, r1 = mod(a, n), t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i64 qt = r0 / r1;
    i64 t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = t0 - qt * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0 != 1) throw std::domain_error("invmod: not invertible");
  return mod(t0, n);
}

/// p-adic valuation of a nonzero integer (returns `cap` for 0).
inline int ord_p(i64 v, i64 p, int cap = 1 << 20) {
  if (v == 0) return cap;
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

/// Additive character psi(x) = exp(2 pi i {x}) at x = num / p^k.
inline cplx psi_frac(i64 num, i64 pk) {
  const double t = static_cast<double>(mod(num, pk)) / static_cast<double>(pk);
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

/// Z/p^e for an odd prime p, with a generator of the (cyclic) unit group
/// and a discrete-log table.
class ResidueRing {
 public:
  ResidueRing(i64 p, int e) : p_(p), e_(e) {
    if (p == 2) throw std::invalid_argument("ResidueRing: p = 2 is not supported (unit group not cyclic)");
    if (!is_prime(p)) throw std::invalid_argument("ResidueRing: p must be an odd prime");
    if (e < 1) throw std::invalid_argument("ResidueRing: exponent must be positive");
    n_ = ipow(p, e);
    if (n_ > 50'000'000) throw std::invalid_argument("ResidueRing: p^e too large for table-based enumeration");
    phi_ = n_ / p * (p - 1);
    gen_ = find_generator();
    dlog_.assign(static_cast<std::size_t>(n_), -1);
    i64 x = 1;
    for (i64 k = 0; k < phi_; ++k) {
      dlog_[static_cast<std::size_t>(x)] = k;
      x = mulmod(x, gen_, n_);
    }
  }

  i64 p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  i64 size() const noexcept { return n_; }
  i64 unit_count() const noexcept { return phi_; }
  i64 generator() const noexcept { return gen_; }
  bool is_unit(i64 a) const { return mod(a, p_) != 0; }
  /// Discrete log w.r.t. the generator; -1 for non-units.
  i64 dlog(i64 a) const { return dlog_[static_cast<std::size_t>(mod(a, n_))]; }

 private:
  i64 p_;
  int e_;
  i64 n_ = 0, phi_ = 0, gen_ = 0;
  std::vector<i64> dlog_;

  i64 find_generator() const {
    // prime factors of phi
    std::vector<i64> fs;
    i64 m = phi_;
    for (i64 d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        fs.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) fs.push_back(m);
    for (i64 g = 2; g < n_; ++g) {
      if (g % p_ == 0) continue;
      bool ok = true;
      for (i64 f : fs)
        if (powmod(g, phi_ / f, n_) == 1) {
          ok = false;
          break;
        }
      if (ok) return g;
    }
    return 1;  // n = 3: generator 2 found above; unreachable otherwise
  }
};

/// Character of F^x = Q_p^x with unit part mu(g^k) = exp(2 pi i m k / phi) on
/// (Z/p^e)^x and mu(varpi) = `pi_value`.
class MultChar {
 public:
  MultChar(std::shared_ptr<const ResidueRing> ring, i64 m, cplx pi_value = 1.0)
      : ring_(std::move(ring)), m_(mod(m, ring_->unit_count())), pi_(pi_value) {}

  const ResidueRing& ring() const noexcept { return *ring_; }
  std::shared_ptr<const ResidueRing> ring_ptr() const noexcept { return ring_; }
  i64 index() const noexcept { return m_; }
  cplx at_uniformizer() const noexcept { return pi_; }

  /// Exponent of the root of unity mu(a), modulo phi. Requires a unit.
  i64 exponent(i64 a) const {
    const i64 k = ring_->dlog(a);
    if (k < 0) throw std::domain_error("MultChar: argument is not a unit");
    return mulmod(m_, k, ring_->unit_count());
  }
  cplx operator()(i64 a) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent(a)) / static_cast<double>(ring_->unit_count()));
  }

  /// Smallest f >= 0 with mu trivial on 1 + p^f (on all units for f = 0).
  int conductor() const {
    const i64 n = ring_->size(), p = ring_->p();
    auto trivial_on = [&](int f) {
      if (f == 0) {
        for (i64 x = 1; x < n; ++x)
          if (ring_->is_unit(x) && exponent(x) != 0) return false;
        return true;
      }
      const i64 pf = ipow(p, f);
      for (i64 x = 0; x < n; x += pf)
        if (exponent(mod(1 + x, n)) != 0) return false;
      return true;
    };
    for (int f = 0; f < ring_->e(); ++f)
      if (trivial_on(f)) return f;
    return ring_->e();
  }

  MultChar conj() const { return MultChar(ring_, -m_, std::conj(pi_)); }
  MultChar with_uniformizer(cplx v) const { return MultChar(ring_, m_, v); }

 private:
  std::shared_ptr<const ResidueRing> ring_;
  i64 m_;
  cplx pi_;
};

/// All unit-part characters of exact conductor e.
inline std::vector<i64> primitive_char_indices(const std::shared_ptr<const ResidueRing>& R) {
  std::vector<i64> out;
  for (i64 m = 0; m < R->unit_count(); ++m)
    if (MultChar(R, m).conductor() == R->e()) out.push_back(m);
  return out;
}

}  // namespace bzeta

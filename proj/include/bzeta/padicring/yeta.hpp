#pragma once

#include <gmpxx.h>

#include <string>

#include "bzeta/padicring/residue.hpp"
#include "bzeta/padicring/smith.hpp"

namespace bzeta {

/// S = [[a, b/2], [b/2, c]], d = b^2 - 4ac. theta0 = (b + sqrt d)/2 has
/// trace b and norm ac.
struct BesselS {
  i64 a = 1, b = 0, c = 1;
  mpz_class d() const { return mpz_class(b) * b - mpz_class(4) * a * c; }
};

/// Norm of u + v theta0.
inline mpz_class theta_norm(const BesselS& S, const mpz_class& u, const mpz_class& v) {
  return u * u + u * v * S.b + v * v * S.a * S.c;
}

inline int ord_p(const mpz_class& x, i64 p, int cap = 1 << 20) {
  if (x == 0) return cap;
  mpz_class y = x;
  int k = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    y /= p;
    ++k;
  }
  return k;
}

inline bool is_square_mod(i64 x, i64 p) { return mod(x, p) == 0 || powmod(x, (p - 1) / 2, p) == 1; }

struct YEtaReport {
  mpq_class det, det_expected, trace, trace_expected;
  int j = 0;
  SmithForm2 smith;
  int ord_d1 = 0, ord_d2 = 0;
  bool field = true;  ///< d a non-residue mod p
  bool det_ok = false, trace_ok = false, smith_ok = false;
  bool ok() const { return det_ok && trace_ok && smith_ok; }
};

/// Y_eta = -a^2 adj(S) + X_eta for eta = u + v theta0 = beta2 a + beta3 theta0.
/// Checks the determinant and trace identities exactly and the Smith shape
/// diag(1, p^j) up to p-units.
inline YEtaReport y_eta_check(const BesselS& S, i64 u, i64 v, i64 p, int e) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("y_eta_check: p must be an odd prime");
  if (e < 1) throw std::invalid_argument("y_eta_check: e must be positive");
  if (S.a % p == 0) throw std::invalid_argument("y_eta_check: condition a in o^x fails");
  const mpz_class d = S.d();
  if (d == 0 || mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("y_eta_check: condition d/2 in o^x fails");
  const mpz_class N = theta_norm(S, u, v);
  const mpz_class a(S.a), b(S.b), c(S.c);
  const mpz_class a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
  // 4 (a^6 d/4 + N)
  const mpz_class v4 = a6 * d + 4 * N;
  YEtaReport r;
  r.j = ord_p(v4, p);
  if (r.j > e)
    throw std::invalid_argument("y_eta_check: condition a^6 d/4 + N(eta) in p^j o^x with j <= e fails (j = " +
                                std::to_string(r.j) + ")");
  r.field = !is_square_mod(mpz_class(d % p).get_si(), p);

  const mpq_class beta2(mpz_class(u), a), beta3(v);
  mpq_class hb(b, 2);
  hb.canonicalize();
  // adj(S) = [[c, -b/2], [-b/2, a]]
  mpq_class Y[2][2];
  Y[0][0] = -mpq_class(a2 * c) + (-(mpq_class(b) * beta2) - mpq_class(c) * beta3) / mpq_class(a);
  Y[0][1] = mpq_class(a2) * hb + beta2;
  Y[1][0] = Y[0][1];
  Y[1][1] = -mpq_class(a2 * a) + beta3;
  r.det = Y[0][0] * Y[1][1] - Y[0][1] * Y[1][0];
  r.det_expected = -mpq_class(a4 * d, 4) - mpq_class(N, a2);
  r.det_expected.canonicalize();
  r.det_ok = r.det == r.det_expected;
  // tr(Y S)
  const mpq_class Sm[2][2] = {{mpq_class(a), hb}, {hb, mpq_class(c)}};
  r.trace = 0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) r.trace += Y[i][k] * Sm[k][i];
  r.trace_expected = mpq_class(a2 * d, 2);
  r.trace_expected.canonicalize();
  r.trace_ok = r.trace == r.trace_expected;

  // 2 a^2 Y is integral; the scale is a p-unit
  Mat2Z M;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      mpq_class x = Y[i][k] * mpq_class(2 * a2);
      x.canonicalize();
      if (x.get_den() != 1) throw std::logic_error("y_eta_check: 2 a^2 Y_eta not integral");
      M[i][k] = x.get_num();
    }
  r.smith = smith_form_2x2(M);
  r.ord_d1 = ord_p(r.smith.d1, p);
  r.ord_d2 = ord_p(r.smith.d2, p);
  const Mat2Z D = mat_mul(mat_mul(r.smith.U, M), r.smith.V);
  const bool unimod = abs(mat_det(r.smith.U)) == 1 && abs(mat_det(r.smith.V)) == 1;
  const bool diag = D[0][1] == 0 && D[1][0] == 0 && D[0][0] == r.smith.d1 && D[1][1] == r.smith.d2;
  r.smith_ok = unimod && diag && r.ord_d1 == 0 && r.ord_d2 == r.j;
  return r;
}

}  // namespace bzeta

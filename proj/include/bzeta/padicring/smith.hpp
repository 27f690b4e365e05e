#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <utility>

namespace bzeta {

using Mat2Z = std::array<std::array<mpz_class, 2>, 2>;

inline Mat2Z mat_mul(const Mat2Z& x, const Mat2Z& y) {
  Mat2Z r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}
inline mpz_class mat_det(const Mat2Z& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

struct SmithForm2 {
  mpz_class d1, d2;
  Mat2Z U, V;  ///< U * M * V = diag(d1, d2)
};

/// Smith normal form of a nonsingular 2x2 integer matrix; d1 | d2, both > 0.
inline SmithForm2 smith_form_2x2(const Mat2Z& M) {
  if (mat_det(M) == 0) throw std::domain_error("smith_form_2x2: singular matrix");
  Mat2Z A = M;
  Mat2Z U{{{1, 0}, {0, 1}}}, V{{{1, 0}, {0, 1}}};
  auto swap_rows = [&] {
    std::swap(A[0], A[1]);
    std::swap(U[0], U[1]);
  };
  auto swap_cols = [&] {
    for (int i = 0; i < 2; ++i) {
      std::swap(A[i][0], A[i][1]);
      std::swap(V[i][0], V[i][1]);
    }
  };
  // row1 -= k row0
  auto row_op = [&](const mpz_class& k) {
    for (int j = 0; j < 2; ++j) {
      A[1][j] -= k * A[0][j];
      U[1][j] -= k * U[0][j];
    }
  };
  auto col_op = [&](const mpz_class& k) {
    for (int i = 0; i < 2; ++i) {
      A[i][1] -= k * A[i][0];
      V[i][1] -= k * V[i][0];
    }
  };
  while (true) {
    // smallest nonzero entry to (0,0)
    int bi = -1, bj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (A[i][j] != 0 && (bi < 0 || abs(A[i][j]) < abs(A[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == 1) swap_rows();
    if (bj == 1) swap_cols();
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), A[1][0].get_mpz_t(), A[0][0].get_mpz_t());
    row_op(k);
    mpz_fdiv_q(k.get_mpz_t(), A[0][1].get_mpz_t(), A[0][0].get_mpz_t());
    col_op(k);
    if (A[1][0] != 0 || A[0][1] != 0) continue;
    if (A[1][1] % A[0][0] != 0) {
      // fold row 1 into row 0 and retry
      for (int j = 0; j < 2; ++j) {
        A[0][j] += A[1][j];
        U[0][j] += U[1][j];
      }
      continue;
    }
    break;
  }
  for (int i = 0; i < 2; ++i)
    if (A[i][i] < 0) {
      for (int j = 0; j < 2; ++j) {
        A[i][j] = -A[i][j];
        U[i][j] = -U[i][j];
      }
    }
  return {A[0][0], A[1][1], U, V};
}

}  // namespace bzeta

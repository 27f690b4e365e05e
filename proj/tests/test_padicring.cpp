#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bzeta/padicring.hpp"

using namespace bzeta;

namespace {

std::shared_ptr<const ResidueRing> ring(i64 p, int e) { return std::make_shared<const ResidueRing>(p, e); }

cplx e_frac(i64 a, i64 n) { return std::polar(1.0, 2 * std::numbers::pi * double(mod(a, n)) / double(n)); }

}  // namespace

TEST(Residue, Arithmetic) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_EQ(powmod(3, 4, 7), 4);
  EXPECT_EQ(mulmod(invmod(5, 9), 5, 9), 1);
  EXPECT_EQ(ord_p(i64(250), 5), 3);
  EXPECT_THROW(ResidueRing(2, 2), std::invalid_argument);
  EXPECT_THROW(ResidueRing(9, 1), std::invalid_argument);
}

TEST(Residue, GeneratorAndDlog) {
  for (i64 p : {3, 5, 7})
    for (int e : {1, 2, 3}) {
      const ResidueRing R(p, e);
      EXPECT_EQ(R.unit_count(), (p - 1) * ipow(p, e - 1));
      std::set<i64> seen;
      i64 x = 1;
      for (i64 k = 0; k < R.unit_count(); ++k) {
        EXPECT_EQ(R.dlog(x), k);
        seen.insert(x);
        x = mulmod(x, R.generator(), R.size());
      }
      EXPECT_EQ(i64(seen.size()), R.unit_count());
    }
}

TEST(MultChar, MultiplicativeAndConductor) {
  std::mt19937_64 rng(2);
  for (i64 p : {3, 5, 7})
    for (int e : {1, 2}) {
      auto R = ring(p, e);
      for (i64 m = 0; m < R->unit_count(); ++m) {
        const MultChar mu(R, m);
        std::uniform_int_distribution<i64> pick(1, R->size() - 1);
        for (int t = 0; t < 50; ++t) {
          const i64 a = pick(rng), b = pick(rng);
          if (!R->is_unit(a) || !R->is_unit(b)) continue;
          EXPECT_NEAR(std::abs(mu(mulmod(a, b, R->size())) - mu(a) * mu(b)), 0, 1e-12);
        }
        // conductor oracle: smallest c with mu trivial on 1 + p^c
        int c = e;
        while (c > 0) {
          bool trivial = true;
          for (i64 k = 0; k < R->size(); k += ipow(p, c - 1))
            if (R->is_unit(mod(1 + k, R->size())))
              trivial = trivial && std::abs(mu(mod(1 + k, R->size())) - 1.0) < 1e-12;
          if (!trivial) break;
          --c;
        }
        EXPECT_EQ(mu.conductor(), c) << "p=" << p << " e=" << e << " m=" << m;
      }
      EXPECT_FALSE(primitive_char_indices(R).empty());
    }
}

TEST(Gauss, FieldSumAgainstDirectSum) {
  for (i64 p : {3, 5, 7})
    for (int e : {1, 2}) {
      auto R = ring(p, e);
      for (i64 m : primitive_char_indices(R)) {
        const MultChar mu(R, m, std::polar(1.0, 0.4));
        const cplx W = gauss_sum_F(mu);
        EXPECT_NEAR(std::abs(W), 1.0, 1e-10);
        // unnormalized sum over units of mu(a) psi(a / p^e), modulus sqrt(p^e)
        cplx g = 0;
        for (i64 a = 1; a < R->size(); ++a)
          if (R->is_unit(a)) g += mu(a) * e_frac(a, R->size());
        EXPECT_NEAR(std::abs(g), std::sqrt(double(R->size())), 1e-9);
        EXPECT_NEAR(std::abs(unit_integral(mu, -e) - gauss_lemma_value(mu)), 0, 1e-10);
        EXPECT_NEAR(std::abs(unit_integral(mu, -e - 1)), 0, 1e-10);
        EXPECT_NEAR(std::abs(unit_integral(mu, 0)), 0, 1e-10);
      }
    }
}

TEST(Gauss, QuadraticCharacterMod5) {
  const MultChar leg(ring(5, 1), 2);
  // Legendre symbol mod 5; classical Gauss sum sqrt 5
  for (i64 a = 1; a < 5; ++a) EXPECT_NEAR(leg(a).real(), (a == 1 || a == 4) ? 1.0 : -1.0, 1e-12);
  EXPECT_NEAR(std::abs(gauss_sum_F(leg) - 1.0), 0, 1e-12);
}

TEST(Gauss, SplitAndNormSum) {
  for (i64 p : {3, 5, 7})
    for (int e : {1, 2}) {
      auto R = ring(p, e);
      const GaloisRing L = GaloisRing::standard(R);
      EXPECT_TRUE(norm_surjective(L));
      const double sgn = e % 2 ? -1.0 : 1.0;
      for (i64 m : primitive_char_indices(R)) {
        const MultChar mu(R, m);
        const cplx W = gauss_sum_F(mu);
        EXPECT_NEAR(std::abs(gauss_sum_L(mu, L) - sgn * W * W), 0, 1e-9);
        for (i64 u : {i64(1), i64(2), R->size() - 1})
          EXPECT_NEAR(std::abs(norm_char_sum(L, mu, u) - sgn * std::pow(double(p), e) * mu(u)), 0, 1e-9);
      }
    }
}

TEST(GaloisRing, NormIsMultiplicative) {
  auto R = ring(5, 2);
  const GaloisRing L = GaloisRing::standard(R);
  EXPECT_EQ(L.size(), 625);
  EXPECT_EQ(L.unit_count(), 625 - 25);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<i64> pick(0, 24);
  for (int t = 0; t < 200; ++t) {
    const GElem x{pick(rng), pick(rng)}, y{pick(rng), pick(rng)};
    EXPECT_EQ(L.norm(L.mul(x, y)), mulmod(L.norm(x), L.norm(y), 25));
    EXPECT_EQ(L.trace(L.add(x, y)), mod(L.trace(x) + L.trace(y), 25));
    EXPECT_EQ(L.frob(L.frob(x)), L.reduce(x));
  }
  EXPECT_THROW(GaloisRing(R, 0, 4), std::invalid_argument);  // theta^2 + 4 = (theta-1)(theta+1) mod 5
}

TEST(Smith, RandomMatricesAgainstGcdOracle) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> ent(-60, 60);
  for (int t = 0; t < 500; ++t) {
    Mat2Z M{{{ent(rng), ent(rng)}, {ent(rng), ent(rng)}}};
    if (mat_det(M) == 0) continue;
    const SmithForm2 s = smith_form_2x2(M);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(gcd(M[0][0], M[0][1])).get_mpz_t(), mpz_class(gcd(M[1][0], M[1][1])).get_mpz_t());
    EXPECT_EQ(s.d1, g);
    EXPECT_EQ(s.d1 * s.d2, abs(mat_det(M)));
    const Mat2Z D = mat_mul(mat_mul(s.U, M), s.V);
    EXPECT_EQ(D[0][1], 0);
    EXPECT_EQ(D[1][0], 0);
    EXPECT_EQ(D[0][0], s.d1);
    EXPECT_EQ(D[1][1], s.d2);
    EXPECT_EQ(abs(mat_det(s.U)), 1);
    EXPECT_EQ(abs(mat_det(s.V)), 1);
  }
  EXPECT_THROW(smith_form_2x2({{{2, 4}, {1, 2}}}), std::domain_error);
}

TEST(YEta, ExamplesAndErrors) {
  const YEtaReport y = y_eta_check({1, 0, 1}, 4, 5, 5, 2);
  EXPECT_TRUE(y.ok());
  EXPECT_EQ(y.j, 1);
  EXPECT_FALSE(y.field);
  EXPECT_THROW(y_eta_check({1, 0, 1}, 1, 0, 5, 1), std::invalid_argument);  // j > e
  EXPECT_THROW(y_eta_check({1, 1, 1}, 0, 0, 3, 1), std::invalid_argument);  // d/2 not a unit
  EXPECT_THROW(y_eta_check({3, 0, 1}, 0, 0, 3, 1), std::invalid_argument);  // a not a unit
  for (i64 u = 1; u < 9; ++u) {  // N(eta) - 1 = u^2
    const YEtaReport r = y_eta_check({1, 0, 1}, u, 1, 3, 2);
    EXPECT_TRUE(r.field);
    EXPECT_TRUE(r.ok()) << u;
  }
}

TEST(Case23, CosetSumMatchesClosedForm) {
  auto R = ring(3, 1);
  const LocalRep rep = LocalRep::symbolic_trivial_central(RepType::I);
  const NumEnv env{{sym::A, std::polar(1.0, 0.3)}, {sym::G, std::polar(1.0, -1.1)}};
  const MultChar mu(R, primitive_char_indices(R).front(), std::polar(1.0, 0.7));
  for (cplx s : {cplx(0.3), cplx(0.7, 0.2), cplx(1.1)}) {
    const Case23Result z = zeta_case2_3_numeric(rep, env, {1, 2, 5}, mu, std::polar(1.0, 0.9), s);
    EXPECT_LT(z.err_phi(), 1e-8);
    EXPECT_LT(z.err_phihat(), 1e-8);
    EXPECT_LT(case2_3_epsilon(rep, env, {1, 2, 5}, mu, std::polar(1.0, 0.9), s).err(), 1e-8);
  }
  EXPECT_THROW(zeta_case2_3_numeric(rep, env, {2, 0, 1}, mu, 1.0, 0.5), std::invalid_argument);
}

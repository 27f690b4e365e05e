#include <gtest/gtest.h>

#include "bzeta/globalasm.hpp"

using namespace bzeta;

TEST(Global, GammaC) {
  // Gamma_C(1) = 2 (2 pi)^-1 = 1/pi
  EXPECT_NEAR(std::abs(gamma_C(1.0) - 1 / std::numbers::pi), 0, 1e-15);
  EXPECT_THROW(gamma_C(-2.0), PoleError);
  EXPECT_THROW(gamma_C(0.0), PoleError);
}

TEST(Global, ArchFactorExact) {
  const double pi = std::numbers::pi;
  const double g32 = std::sqrt(pi) / 2, g72 = 15 * std::sqrt(pi) / 8;
  const double expect = 2 * std::pow(2 * pi, -1.5) * g32 * 2 * std::pow(2 * pi, -3.5) * g72;
  EXPECT_NEAR(std::abs(arch_lfactor(1.0, 4, 4) - expect) / expect, 0, 1e-12);
}

TEST(Global, MellinQuadrature) {
  for (auto [sigma, D] : std::vector<std::pair<double, std::int64_t>>{{4, -4}, {4.5, -23}, {4, -3}, {6.5, -7}})
    EXPECT_LT(mellin_pin(sigma, D).rel_err(), 1e-6) << sigma << " " << D;
}

TEST(Global, Kronecker) {
  EXPECT_EQ(kronecker(-3, 5), -1);
  EXPECT_EQ(kronecker(-3, 7), 1);
  EXPECT_EQ(kronecker(-4, 7), -1);
  EXPECT_EQ(kronecker(-4, 5), 1);
  EXPECT_EQ(kronecker(-23, 23), 0);
}

TEST(Global, DirichletGaussSums) {
  for (i64 M : {5, 7, 9, 11, 13, 25, 35, 63}) {
    bool any = false;
    // walk all index tuples on small moduli
    const auto fs = factorize(M);
    std::vector<i64> idx(fs.size(), 0), sizes;
    for (auto [p, k] : fs) sizes.push_back((p - 1) * ipow(p, k - 1));
    while (true) {
      const DirichletChar chi(M, idx);
      if (chi.is_primitive()) {
        any = true;
        const cplx G = gauss_sum_dirichlet(chi);
        EXPECT_NEAR(std::abs(G), std::sqrt(double(M)), 1e-9);
        EXPECT_NEAR(std::abs(G - gauss_sum_dirichlet_direct(chi)), 0, 1e-9);
        // G(conj chi) = chi(-1) conj G(chi)
        EXPECT_NEAR(std::abs(gauss_sum_dirichlet(chi.conj()) - chi(M - 1) * std::conj(G)), 0, 1e-9);
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == sizes[k]) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    EXPECT_TRUE(any) << M;
  }
}

TEST(Global, ParamsValidation) {
  GlobalParams gp;
  EXPECT_NO_THROW(gp.validate());
  gp.D = -3;
  gp.N = 5;
  gp.M = 11;
  gp.chi = DirichletChar(11, {2});
  EXPECT_NO_THROW(gp.validate());  // even, order 5
  gp.chi = DirichletChar(11, {1});
  EXPECT_THROW(gp.validate(), std::invalid_argument);  // odd character
  GlobalParams bad;
  bad.l2 = 2;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = GlobalParams{};
  bad.N = 4;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Global, EpsilonSign) {
  for (int l2 : {3, 4, 5, 6}) {
    GlobalParams gp;
    gp.D = -3;
    gp.l1 = gp.l2 = l2;
    gp.M = 5;
    gp.chi = DirichletChar(5, {2});
    gp.N = 2;
    gp.validate();
    EXPECT_NEAR(std::abs(global_epsilon(0.5, gp, 2) - (l2 % 2 ? -1.0 : 1.0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(global_epsilon(0.5, gp, 1) - (l2 % 2 ? -1.0 : 1.0)), 0, 1e-12);
    EXPECT_THROW(global_epsilon(0.5, gp, 3), std::invalid_argument);
  }
}

TEST(Global, PrefactorPins) {
  GlobalParams gp;
  const double expect = 0.25 * std::pow(4.0, -0.5) * std::exp(-4 * std::numbers::pi) / 16;
  EXPECT_NEAR(std::abs(average_prefactor(0.3, gp) - expect) / expect, 0, 1e-12);
  EXPECT_EQ(siegel_index(3), 40);
  EXPECT_EQ(siegel_index(6), 15 * 40);
  // multiplicativity in N
  auto pref = [](i64 N) {
    GlobalParams g;
    g.D = -3;
    g.N = N;
    return average_prefactor(cplx(0.2, 0.4), g);
  };
  EXPECT_NEAR(std::abs(pref(2) * pref(5) - pref(10) * pref(1)) / std::abs(pref(10) * pref(1)), 0, 1e-12);
  EXPECT_NEAR(std::abs(pref(2) * pref(11) - pref(22) * pref(1)) / std::abs(pref(22) * pref(1)), 0, 1e-12);
}

TEST(Global, CompositeAndPartial) {
  EXPECT_EQ(composite_lfactors(CompositeKind::Yoshida, {cplx(2), cplx(3)}, 1.0), cplx(6));
  EXPECT_THROW(composite_lfactors(CompositeKind::SK, {cplx(1), std::nullopt, cplx(1)}, 1.0), std::invalid_argument);
  GlobalParams gp;
  gp.D = -3;
  LocalDataMap m;
  m.emplace(2, LocalDatum{LocalRep::symbolic(RepType::I), {{sym::A, 1.0}, {sym::B, 1.0}, {sym::G, 1.0}}});
  EXPECT_NEAR(std::abs(partial_spinor_L(2.0, m, gp) / arch_lfactor(2.0, 4, 4) - std::pow(0.75, -4)), 0, 1e-12);
  LocalDataMap bad;
  bad.emplace(2, LocalDatum{LocalRep::symbolic(RepType::VIb), {{sym::G, 1.0}}});
  EXPECT_THROW(partial_spinor_L(2.0, bad, gp), std::invalid_argument);
}

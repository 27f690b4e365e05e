#include <gtest/gtest.h>

#include <set>

#include "bzeta/classgroup.hpp"

using namespace bzeta;
using cplx = std::complex<double>;

namespace {

// classical values of h(D)
const std::map<std::int64_t, std::size_t> kClassNumbers = {{-3, 1},  {-4, 1},  {-7, 1},  {-8, 1},  {-15, 2}, {-20, 2},
                                                            {-23, 3}, {-24, 2}, {-47, 5}, {-56, 4}, {-71, 7}, {-84, 4}};

// oracle: reduce every primitive form with a <= bound, collect the orbits
std::set<QuadForm> orbit_oracle(std::int64_t D, std::int64_t bound) {
  std::set<QuadForm> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = -a; b <= a; ++b) {
      if ((b * b - D) % (4 * a)) continue;
      const QuadForm f{a, b, (b * b - D) / (4 * a)};
      if (std::gcd(std::gcd(f.a, std::abs(f.b)), f.c) == 1) out.insert(reduce_form(f).form);
    }
  return out;
}

}  // namespace

TEST(ClassGroup, ClassNumbers) {
  for (auto [D, h] : kClassNumbers) {
    const ClassGroup G(D);
    EXPECT_EQ(G.h(), h) << D;
    EXPECT_EQ(std::set<QuadForm>(G.classes().begin(), G.classes().end()), orbit_oracle(D, 60)) << D;
  }
}

TEST(ClassGroup, RejectsBadDiscriminants) {
  EXPECT_THROW(ClassGroup(5), std::invalid_argument);
  EXPECT_THROW(ClassGroup(-12), std::invalid_argument);
  EXPECT_THROW(ClassGroup(-5), std::invalid_argument);
  EXPECT_FALSE(is_fundamental_discriminant(-16));
  EXPECT_TRUE(is_fundamental_discriminant(-8));
}

TEST(ClassGroup, ReductionWitness) {
  const QuadForm f{6, 1, 1};
  const Reduction r = reduce_form(f);
  EXPECT_EQ(r.form, (QuadForm{1, 1, 6}));
  EXPECT_EQ(act(f, r.witness), r.form);
  EXPECT_TRUE(is_reduced(r.form));
  EXPECT_THROW(reduce_form({1, 0, -1}), std::invalid_argument);
}

TEST(ClassGroup, GroupAxiomsAndIdealOracle) {
  for (auto [D, h] : kClassNumbers) {
    const ClassGroup G(D);
    for (std::size_t i = 0; i < h; ++i) {
      EXPECT_EQ(G.compose(i, G.identity()), i);
      EXPECT_EQ(G.compose(i, G.conjugate(i)), G.identity());
      EXPECT_EQ(G.power(i, G.element_order(i)), G.identity());
      for (std::size_t j = 0; j < h; ++j) {
        EXPECT_EQ(G.compose(i, j), G.compose(j, i));
        EXPECT_EQ(compose_via_ideals(G.form(i), G.form(j)), G.form(G.compose(i, j)));
        for (std::size_t k = 0; k < h; ++k) EXPECT_EQ(G.compose(G.compose(i, j), k), G.compose(i, G.compose(j, k)));
      }
    }
  }
}

TEST(ClassGroup, Structure) {
  EXPECT_EQ(ClassGroup(-23).structure(), std::vector<std::int64_t>{3});
  EXPECT_EQ(ClassGroup(-84).structure(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(ClassGroup(-56).structure(), std::vector<std::int64_t>{4});
  EXPECT_EQ(ClassGroup(-3).w(), 6);
  EXPECT_EQ(ClassGroup(-4).w(), 4);
  EXPECT_EQ(ClassGroup(-23).w(), 2);
}

TEST(ClassGroup, CharactersOrthogonal) {
  for (std::int64_t D : {-23, -47, -84, -71}) {
    const ClassGroup G(D);
    const auto chars = G.characters();
    ASSERT_EQ(chars.size(), G.h());
    for (const auto& x : chars) {
      for (std::size_t i = 0; i < G.h(); ++i)
        for (std::size_t j = 0; j < G.h(); ++j) EXPECT_NEAR(std::abs(x(G.compose(i, j)) - x(i) * x(j)), 0, 1e-12);
      // conj(chi)(c) = chi(conj c)
      for (std::size_t i = 0; i < G.h(); ++i) EXPECT_NEAR(std::abs(x.conj()(i) - x(G.conjugate(i))), 0, 1e-12);
    }
  }
}

TEST(ClassGroup, TTheta) {
  EXPECT_EQ(t_theta(-23, 1, 6), (QuadForm{1, 1, 6}));
  EXPECT_EQ(t_theta(-4, 0, 1).disc(), -4);
}

TEST(ClassGroup, BesselCoeffSum) {
  const ClassGroup G(-23);
  std::map<QuadForm, cplx> c;
  for (std::size_t i = 0; i < G.h(); ++i) c[G.form(i)] = double(i + 1);
  const auto chars = G.characters();
  cplx total = 0;
  for (const auto& x : chars) total += bessel_coeff_sum(G, c, x);
  // orthogonality picks out the principal class times h
  EXPECT_NEAR(std::abs(total - 3.0 * c[G.form(G.identity())]), 0, 1e-12);
  c.erase(G.form(1));
  EXPECT_THROW(bessel_coeff_sum(G, c, chars[0]), std::invalid_argument);
}

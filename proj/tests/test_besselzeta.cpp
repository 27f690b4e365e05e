#include <gtest/gtest.h>

#include "bzeta/besselzeta.hpp"

using namespace bzeta;
using cplx = std::complex<double>;

namespace {
const RatFunc A(sym::A), B(sym::B), G(sym::G), T(sym::T), Q(sym::Q), U(sym::U), L(sym::L), X(sym::X);
}

TEST(BesselZeta, Case1MatchesShiftedL) {
  for (RepType t : {RepType::I, RepType::IIb}) {
    const LocalRep rep = LocalRep::symbolic_trivial_central(t);
    const TwistData tw = TwistData::unramified(U);
    EXPECT_EQ(zeta_case1(rep, tw), shift_half(spinor_lfactor(rep, tw))) << to_string(t);
  }
}

TEST(BesselZeta, ShiftHalfIsTScaling) {
  const RatFunc f = 1 / (1 - A * T);
  EXPECT_EQ(shift_half(f), 1 / (1 - A * T / Q));
}

TEST(BesselZeta, Case1Preconditions) {
  EXPECT_THROW(zeta_case1(LocalRep::symbolic(RepType::IIIa), TwistData::unramified(U)), std::invalid_argument);
  EXPECT_THROW(zeta_case1(LocalRep::symbolic(RepType::I), TwistData::unramified(U)), std::invalid_argument);
}

TEST(BesselZeta, Case4AllBasisVectors) {
  for (RepType t : {RepType::I, RepType::IIb}) {
    const LocalRep rep = LocalRep::symbolic_trivial_central(t);
    const TwistData tw = TwistData::unramified(U);
    for (std::size_t j = 0; j < static_cast<std::size_t>(dims(rep).second); ++j) {
      const ZetaPair z = zeta_case4(rep, tw, j);
      EXPECT_TRUE(z.match()) << to_string(t) << " B" << j + 1;
      const RatFunc n = z.closed_form / shift_half(spinor_lfactor(rep, tw));
      EXPECT_EQ(n, subst(n, {{sym::T, T.inverse()}, {sym::U, U.inverse()}}));
    }
  }
}

TEST(BesselZeta, Case5And6) {
  const TwistData tw = TwistData::symbolic();
  const RatFunc q = Q * Q;
  const LocalRep vib = LocalRep::symbolic(RepType::VIb);
  EXPECT_EQ(zeta_case5_6(vib, tw), q / (L * U * T) / (q * q + 1) * shift_half(spinor_lfactor(vib, tw)));
  const LocalRep iiia = LocalRep::symbolic(RepType::IIIa);
  EXPECT_EQ(zeta_case5_6(iiia, tw, 1), zeta_case5_6(iiia, tw, 0) / A);
  for (RepType t : {RepType::IIIa, RepType::VIb}) {
    const LocalRep r = LocalRep::symbolic_trivial_central(t);
    EXPECT_EQ(zeta_case5_6(r, TwistData::unramified(U)), zeta_case5_6_series(r, TwistData::unramified(U)));
  }
}

TEST(BesselZeta, Periods) {
  const TwistData tw = TwistData::symbolic();
  const PeriodPair p3 = local_period(LocalRep::symbolic(RepType::IIIa), tw);
  const PeriodPair p6 = local_period(LocalRep::symbolic(RepType::VIb), tw);
  EXPECT_TRUE(p3.match());
  EXPECT_TRUE(p6.match());
  EXPECT_EQ(p3.from_components, 2 * p6.from_components);
  for (RepType t : {RepType::I, RepType::IIb})
    EXPECT_TRUE(local_period(LocalRep::symbolic_trivial_central(t), TwistData::unramified(U)).match());
  // q = 3, s = 0, all parameters 1
  const PeriodPair p1 = local_period(LocalRep::type_I(1, 1, 1), TwistData::unramified(1));
  const cplx v = eval(p1.from_components, {{sym::Q, std::sqrt(3.0)}, {sym::T, 1.0}});
  EXPECT_NEAR(std::abs(v - (6 - 3 * std::sqrt(3.0)) / 80), 0, 1e-13);
}

TEST(BesselZeta, RecursionIIIa) {
  const RecursionReport r = recursion_consistency(LocalRep::symbolic(RepType::IIIa));
  EXPECT_TRUE(r.derived_ok);
  EXPECT_EQ(r.b2_derived, A.inverse());
}

TEST(BesselZeta, HeckeEtaInvolution) {
  for (RepType t : {RepType::I, RepType::IIb}) {
    const HeckePair H = hecke_matrices(LocalRep::symbolic_trivial_central(t));
    EXPECT_EQ(H.eta * H.eta, RatMatrix::identity(H.eta.rows()));
  }
}

TEST(BesselZeta, TraceOfT10AtTrivialParameters) {
  // tr T_{1,0} = 4 q^{3/2}, tr eta = 0 at alpha = beta = gamma = 1
  const HeckePair H = hecke_matrices(LocalRep::type_I(1, 1, 1));
  EXPECT_EQ(H.t10.trace(), 4 * Q.pow(3));
  EXPECT_TRUE(H.eta.trace().is_zero());
}

TEST(BesselZeta, BesselValuesSumToOne) {
  for (RepType t : {RepType::I, RepType::IIb}) {
    RatFunc s;
    for (const auto& b : bessel_identity_values(LocalRep::symbolic(t))) s += b;
    EXPECT_TRUE(s.is_one()) << to_string(t);
  }
}

TEST(BesselZeta, DiagSeriesConstantTerm) {
  const RatFunc f = diag_series(LocalRep::symbolic_trivial_central(RepType::I), sym::X);
  EXPECT_TRUE(subst(f, {{sym::X, RatFunc(0)}}).is_one());
}

#include <gtest/gtest.h>

#include "bzeta/localrep.hpp"

using namespace bzeta;
using cplx = std::complex<double>;

namespace {
const RatFunc A(sym::A), B(sym::B), G(sym::G), T(sym::T), Q(sym::Q), U(sym::U);
RatFunc f(const RatFunc& c) { return 1 - c * T; }
const TwistData one = TwistData::unramified(1);
}  // namespace

TEST(LocalRep, SpinorTable) {
  EXPECT_EQ(spinor_lfactor(LocalRep::symbolic(RepType::I), one), (f(A * B * G) * f(A * G) * f(B * G) * f(G)).inverse());
  EXPECT_EQ(spinor_lfactor(LocalRep::symbolic(RepType::IIb), one),
            (f(A * A * G) * f(G) * f(A * G / Q) * f(A * G * Q)).inverse());
  EXPECT_EQ(spinor_lfactor(LocalRep::symbolic(RepType::IIIa), one), (f(A * G / Q) * f(G / Q)).inverse());
  EXPECT_EQ(spinor_lfactor(LocalRep::symbolic(RepType::VIb), one), (f(G / Q) * f(G / Q)).inverse());
}

TEST(LocalRep, TwistScalesT) {
  for (RepType t : {RepType::I, RepType::IIb, RepType::IIIa, RepType::VIb}) {
    const LocalRep r = LocalRep::symbolic(t);
    EXPECT_EQ(spinor_lfactor(r, TwistData::unramified(U)), subst(spinor_lfactor(r, one), {{sym::T, U * T}})) << to_string(t);
  }
}

TEST(LocalRep, RamifiedTwistRejected) {
  const TwistData ram{RatFunc(1), RatFunc(1), 1};
  EXPECT_THROW(spinor_lfactor(LocalRep::symbolic(RepType::I), ram), RamifiedTwistError);
  EXPECT_THROW(t_factor(LocalRep::type_VIb(1), ram, 3), RamifiedTwistError);
}

TEST(LocalRep, CentralCharacter) {
  EXPECT_EQ(LocalRep::symbolic(RepType::I).central_character(), A * B * G * G);
  EXPECT_TRUE(LocalRep::symbolic_trivial_central(RepType::I).central_character().is_one());
  EXPECT_THROW(LocalRep::symbolic(RepType::I).require_trivial_central(), std::invalid_argument);
  EXPECT_THROW(LocalRep::type_VIb(0), std::invalid_argument);
}

TEST(LocalRep, SymmetryOfTypeI) {
  const LocalRep r = LocalRep::symbolic_trivial_central(RepType::I);
  const LocalRep s = LocalRep::type_I(r.beta(), r.alpha(), r.gamma());
  EXPECT_EQ(spinor_lfactor(r, one), spinor_lfactor(s, one));
}

TEST(LocalRep, StandardFactor) {
  // alpha = beta = gamma = 1 collapses to (1 - T)^-5
  EXPECT_EQ(std_lfactor(LocalRep::type_I(1, 1, 1)), f(RatFunc(1)).pow(-5));
  EXPECT_THROW(std_lfactor(LocalRep::symbolic(RepType::VIb)), std::invalid_argument);
}

TEST(LocalRep, Dimensions) {
  EXPECT_EQ(dims(LocalRep::symbolic(RepType::I)), std::make_pair(1, 4));
  EXPECT_EQ(dims(LocalRep::symbolic(RepType::IIb)), std::make_pair(1, 3));
  EXPECT_EQ(dims(LocalRep::symbolic(RepType::IIIa)), std::make_pair(0, 2));
  EXPECT_EQ(dims(LocalRep::symbolic(RepType::VIb)), std::make_pair(0, 1));
}

TEST(LocalRep, Epsilon) {
  const TwistData tw = TwistData::unramified(U);
  EXPECT_TRUE(local_epsilon(LocalRep::symbolic(RepType::I), tw, EpsCase::old_I_IIb).is_one());
  EXPECT_EQ(local_epsilon(LocalRep::symbolic(RepType::IIIa), tw, EpsCase::IIIa),
            local_epsilon(LocalRep::symbolic(RepType::VIb), tw, EpsCase::VIb));
  EXPECT_EQ(parse_eps_case("VIb"), EpsCase::VIb);
  EXPECT_THROW(parse_eps_case("II"), std::invalid_argument);
}

TEST(LocalRep, TFactorPins) {
  EXPECT_EQ(t_factor(LocalRep::type_VIb(1), TwistData{}, 7), cplx(1.0));
  EXPECT_EQ(t_factor(LocalRep::type_IIIa(1, 1), TwistData{}, 7), cplx(2.0));
  // independent evaluation: 2(p-1)p^-5 L(1,Std) {1 + 1 - (1/(p+1)) tr}, tr = p^-1 4 p^{3/2} + 0
  const double p = 3, L = std::pow(1 - 1 / p, -5);
  const double tr = 4 * std::pow(p, 1.5) / p;
  const double expect = 2 * (p - 1) * std::pow(p, -5) * L * (2 - tr / (p + 1));
  EXPECT_NEAR(std::abs(t_factor(LocalRep::type_I(1, 1, 1), TwistData{}, 3) - expect), 0, 1e-12);
  EXPECT_NEAR(expect, (2 - std::sqrt(3.0)) / 8, 1e-12);
}

TEST(LocalRep, Parsing) {
  EXPECT_EQ(parse_rep_type("IIIa"), RepType::IIIa);
  EXPECT_EQ(to_string(RepType::IIb), "IIb");
  EXPECT_THROW(parse_rep_type("V"), std::invalid_argument);
}

TEST(LocalRep, NumericEval) {
  const RatFunc L = spinor_lfactor(LocalRep::symbolic(RepType::VIb), one);
  const cplx v = eval(L, {{sym::G, 1.0}, {sym::Q, std::sqrt(2.0)}, {sym::T, 0.5}});
  EXPECT_NEAR(std::abs(v - std::pow(1 - 0.5 / std::sqrt(2.0), -2)), 0, 1e-14);
  EXPECT_THROW(eval(L, {{sym::G, 1.0}}), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>

#include "bzeta/symfield.hpp"

using namespace bzeta;

namespace {

const RatFunc A(sym::A), B(sym::B), T(sym::T), X(sym::X), Q(sym::Q);

RatFunc random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(-2, 3), n(1, 4);
  auto poly = [&] {
    RatFunc p;
    for (int k = n(rng); k > 0; --k) p += RatFunc(coef(rng)) * A.pow(ex(rng)) * B.pow(ex(rng)) * T.pow(ex(rng));
    return p;
  };
  RatFunc d = poly();
  while (d.is_zero()) d = poly();
  return poly() / d;
}

// exact evaluation at a rational point: the oracle for every identity below
mpq_class at(const RatFunc& f, const mpq_class& a, const mpq_class& b, const mpq_class& t) {
  return f.eval<mpq_class>([&](Var v) -> mpq_class {
    if (v == sym::A) return a;
    if (v == sym::B) return b;
    if (v == sym::T) return t;
    throw std::invalid_argument("unbound " + v.name());
  });
}

}  // namespace

TEST(SymField, CanonicalFormsCancel) {
  EXPECT_TRUE(((A * A - B * B) / (A - B) - (A + B)).is_zero());
  EXPECT_EQ((1 - T).inverse() * (1 - T), RatFunc(1));
  EXPECT_EQ((A + B).pow(3), A.pow(3) + 3 * A * A * B + 3 * A * B * B + B.pow(3));
  EXPECT_EQ(RatFunc::rational(6, 4), RatFunc::rational(3, 2));
  EXPECT_EQ(A.pow(-2) * A.pow(2), RatFunc(1));
}

TEST(SymField, EqualityIsRepresentationFree) {
  const RatFunc f = (A * T - 1) / (B * T - 1);
  const RatFunc g = (1 - A * T) * (A + 1) / ((1 - B * T) * (1 + A));
  EXPECT_EQ(f, g);
  EXPECT_EQ(f.str(), g.str());
}

TEST(SymField, ArithmeticAgreesWithPointEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc f = random_rf(rng), g = random_rf(rng);
    mpq_class a(num(rng) | 1, 5), b(num(rng) | 1, 7), t(num(rng) | 1, 3);
    a.canonicalize();
    b.canonicalize();
    t.canonicalize();
    try {
      const mpq_class fa = at(f, a, b, t), ga = at(g, a, b, t);
      EXPECT_EQ(at(f + g, a, b, t), fa + ga);
      EXPECT_EQ(at(f * g, a, b, t), fa * ga);
      EXPECT_EQ(at(f - g, a, b, t), fa - ga);
      if (ga != 0) {
        EXPECT_EQ(at(f / g, a, b, t), fa / ga);
      }
      ++checked;
    } catch (const std::domain_error&) {
      // point hit a pole
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(SymField, FieldAxiomsRandom) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc f = random_rf(rng), g = random_rf(rng), h = random_rf(rng);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    if (!f.is_zero()) {
      EXPECT_TRUE((f * f.inverse()).is_one());
    }
  }
}

TEST(SymField, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc f = random_rf(rng);
    EXPECT_EQ(parse(f.str()), f) << f.str();
  }
  EXPECT_EQ(parse("(A^2-B^2)/(A+B)"), A - B);
  EXPECT_EQ(parse("Q^-2*T"), T / (Q * Q));
  EXPECT_EQ(parse("3/6"), RatFunc::rational(1, 2));
}

TEST(SymField, ParseErrors) {
  EXPECT_THROW(parse("A +"), ParseError);
  EXPECT_THROW(parse("(A"), ParseError);
  EXPECT_THROW(parse("A^B"), ParseError);
  EXPECT_THROW(parse("A & B"), ParseError);
  EXPECT_THROW(parse("A B"), ParseError);
  EXPECT_TRUE(Var::exists(parse("zz_new").str()));  // unknown names are interned
}

TEST(SymField, DivisionByZeroThrows) {
  EXPECT_THROW(RatFunc(0).inverse(), std::domain_error);
  EXPECT_THROW(A / (A - A), std::domain_error);
}

TEST(SymField, Substitution) {
  EXPECT_EQ(subst(X + X.inverse(), {{sym::X, X.inverse()}}), X + X.inverse());
  EXPECT_EQ(subst(1 - A * T, {{sym::T, Q.pow(-2)}}), 1 - A / (Q * Q));
  EXPECT_EQ(subst(A * B, {{sym::A, B}, {sym::B, A}}), A * B);  // simultaneous
  EXPECT_THROW(subst(1 / (1 - T), {{sym::T, RatFunc(1)}}), std::domain_error);
}

TEST(SymField, MatrixInverseAndResolvent) {
  const RatMatrix M{{A, RatFunc(1)}, {RatFunc(0), B}};
  const RatMatrix Mi = inverse(M);
  EXPECT_EQ(M * Mi, RatMatrix::identity(2));
  // (I - X M)^{-1} for upper-triangular M, by hand
  const RatMatrix R = geom_resolvent(M, X);
  EXPECT_EQ(R(0, 0), (1 - A * X).inverse());
  EXPECT_EQ(R(1, 1), (1 - B * X).inverse());
  EXPECT_EQ(R(0, 1), X / ((1 - A * X) * (1 - B * X)));
  EXPECT_TRUE(R(1, 0).is_zero());
  EXPECT_THROW(inverse(RatMatrix{{A, B}, {A, B}}), std::domain_error);
}

TEST(SymField, ResolventMatchesTruncatedSeries) {
  // numeric partial sums of M^l X^l against the closed form
  const RatMatrix M{{A, RatFunc(1)}, {B, RatFunc(2)}};
  const RatMatrix R = geom_resolvent(M, X);
  const double a = 0.3, b = -0.2, x = 0.1;
  const double m[2][2] = {{a, 1}, {b, 2}};
  double P[2][2] = {{1, 0}, {0, 1}}, S[2][2] = {{1, 0}, {0, 1}};
  for (int l = 1; l < 60; ++l) {
    double N[2][2] = {};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) N[i][j] += P[i][k] * m[k][j] * x;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        P[i][j] = N[i][j];
        S[i][j] += N[i][j];
      }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double v = R(i, j).eval<double>([&](Var w) { return w == sym::A ? a : w == sym::B ? b : x; });
      EXPECT_NEAR(v, S[i][j], 1e-13);
    }
}

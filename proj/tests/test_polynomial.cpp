#include <gtest/gtest.h>

#include "artin/polynomial.hpp"
#include "artin/random.hpp"
#include "artin/ring_map.hpp"

using namespace artin;

namespace {

const FieldPtr& QQ() { return Field::rationals(); }

Polynomial P(const std::string& s, int n = 2, const FieldPtr& f = Field::rationals()) { return parse_poly(s, n, f); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST(MonomialOrder, GradedReverseLex) {
  // degree first
  EXPECT_LT(compare(Monomial{2, 0}, Monomial{0, 3}), 0);
  // in degree 2 with three variables: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
  std::vector<Monomial> desc{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (size_t i = 0; i + 1 < desc.size(); ++i) EXPECT_GT(compare(desc[i], desc[i + 1]), 0) << i;
  // lex tie order differs: x1x3 > x2^2
  EXPECT_GT(compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, TieOrder::kLex), 0);
  EXPECT_LT(compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}), 0);
}

TEST(Parse, GrammarCases) {
  Polynomial p = P("x1^2*x2 - 3*x2^3");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(Monomial{2, 1}), Scalar(1));
  EXPECT_EQ(p.coefficient(Monomial{0, 3}), Scalar(-3));
  EXPECT_TRUE(P("0", 3).is_zero());
  EXPECT_TRUE(P("1/2*x1 + x1 - 3/2*x1").is_zero());
  EXPECT_EQ(P("x1 \xE2\x88\x92 x2"), P("x1 - x2"));
  EXPECT_EQ(P("x1*x1*x2"), P("x1^2*x2"));
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of([] { P("x3", 2); }), ErrorCode::kVariableOutOfRange);
  EXPECT_EQ(code_of([] { P("x0", 2); }), ErrorCode::kVariableOutOfRange);
  EXPECT_EQ(code_of([] { P("x1 +", 2); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { P("2x1", 2); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { P("1/0*x1", 2); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { P("sqrt(2)*x1", 2); }), ErrorCode::kCoefficientNotInField);
  EXPECT_EQ(code_of([] { P("s1*x1", 2); }), ErrorCode::kCoefficientNotInField);
}

TEST(Parse, ExtensionCoefficients) {
  FieldPtr f = adjoin_sqrt(Scalar(5));
  Polynomial p = P("sqrt(5)*x1 + 2*sqrt(20)*x2 + s1*x1", 2, f);
  EXPECT_EQ(p.coefficient(Monomial{1, 0}), Scalar(2).lift(f) * Scalar::generator(f, 1));
  EXPECT_EQ(p.coefficient(Monomial{0, 1}), Scalar(4).lift(f) * Scalar::generator(f, 1));
}

TEST(Print, CanonicalRoundTrip) {
  EXPECT_EQ(to_string(P("x2^3 - 3*x1 + x1^2*x2 + 1/2")), "x1^2*x2 + x2^3 - 3*x1 + 1/2");
  EXPECT_EQ(to_string(P("0")), "0");
  FieldPtr f = adjoin_sqrt(Scalar(-1));
  FieldPtr g = adjoin_sqrt(Scalar(2).lift(f));
  const std::vector<std::string> canon{
      "-2*x1^5 + x1^3*x2",
      "x2^5 - x1*x2^3 + x1^2",
      "-1/3*x1*x2 + 7",
  };
  for (const auto& s : canon) EXPECT_EQ(to_string(P(s)), s);
  Polynomial p = P("x1^2 + 2*sqrt(-1)*x1^2 - 3*sqrt(-1)*s2*x2 + s2*x2", 2, g);
  std::string printed = to_string(p);
  EXPECT_EQ(printed, "x1^2 + 2*sqrt(-1)*x1^2 + s2*x2 - 3*sqrt(-1)*s2*x2");
  EXPECT_EQ(P(printed, 2, g), p);
}

TEST(Truncation, MulTruncExamples) {
  EXPECT_EQ(mul_trunc(P("x1"), P("x1"), 3), P("x1^2"));
  EXPECT_TRUE(mul_trunc(P("x1"), P("x1"), 2).is_zero());
  Polynomial p = P("x1^3 - 2*x1*x2 + 5*x2^7");
  EXPECT_EQ(mul_trunc(p, P("1"), kNoTruncation), p);
  EXPECT_EQ(pow_trunc(P("x1 + x2"), 3, 3), P("0"));
  EXPECT_EQ(pow_trunc(P("1 + x1"), 3, 3), P("1 + 3*x1 + 3*x1^2"));
}

TEST(Truncation, RingAxiomsOnRandomPolynomials) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int D = rng.uniform(2, 8);
    Polynomial a = random_polynomial(rng, 3, QQ(), 0, 5, 6);
    Polynomial b = random_polynomial(rng, 3, QQ(), 0, 5, 6);
    Polynomial c = random_polynomial(rng, 3, QQ(), 0, 5, 6);
    EXPECT_EQ(mul_trunc(a, b, D), mul_trunc(b, a, D));
    EXPECT_EQ(mul_trunc(mul_trunc(a, b, D), c, D), mul_trunc(a, mul_trunc(b, c, D), D));
    EXPECT_EQ(mul_trunc(a, b + c, D), mul_trunc(a, b, D) + mul_trunc(a, c, D));
    EXPECT_EQ(mul_trunc(a, b, D), (a * b).truncate(D));
  }
}

TEST(RingMaps, IdentityAndPaperSubstitution) {
  Polynomial p = P("x1^3*x2 - 2*x1^2 + x2^4");
  EXPECT_EQ(apply_map(RingMap::identity(2, QQ()), p), p);
  // y1 -> a y1 - y2, y2 -> y1^3 + a y2 with a = 1, applied to y1 y2
  RingMap m({P("x1 - x2"), P("x1^3 + x2")}, 6);
  EXPECT_TRUE(is_invertible(m));
  EXPECT_EQ(apply_map(m, P("x1*x2")), mul_trunc(P("x1 - x2"), P("x1^3 + x2"), 6));
  EXPECT_EQ(apply_map(m, P("x1*x2")), P("x1*x2 - x2^2 + x1^4 - x1^3*x2"));
}

TEST(RingMaps, Invertibility) {
  RingMap square({P("x1^2"), P("x2")}, 5);
  EXPECT_FALSE(is_invertible(square));
  EXPECT_EQ(code_of([&] { apply_map(square, P("x1")); }), ErrorCode::kNonInvertibleMap);
  EXPECT_EQ(apply_map(square, P("x1"), false), P("x1^2"));
  EXPECT_FALSE(is_invertible(RingMap({P("x1 + x2"), P("x1 + x2")}, 5)));
  EXPECT_TRUE(is_invertible(RingMap::identity(3, QQ())));
  // linear part [[3, -1], [0, 3]]
  RingMap m({P("3*x1 - x2"), P("x1^3 + 3*x2")}, 8);
  EXPECT_EQ(determinant(m.linear_part()), Scalar(9));
  EXPECT_EQ(code_of([] { RingMap({P("1 + x1"), P("x2")}, 4); }), ErrorCode::kInvalidArgument);
}

TEST(RingMaps, CompositionMatchesSequentialApplication) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int D = rng.uniform(3, 7);
    RingMap m1 = random_invertible_map(rng, 3, QQ(), D);
    RingMap m2 = random_invertible_map(rng, 3, QQ(), D);
    Polynomial p = random_polynomial(rng, 3, QQ(), 0, D + 1, 5);
    EXPECT_EQ(apply_map(m2, apply_map(m1, p)), apply_map(compose(m1, m2), p));
  }
}

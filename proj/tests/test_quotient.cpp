#include <gtest/gtest.h>

#include <algorithm>

#include "artin/quotient.hpp"
#include "artin/random.hpp"

using namespace artin;

namespace {

IdealPresentation ideal(int n, const std::vector<std::string>& gens, const FieldPtr& f = Field::rationals()) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, n, f));
  return IdealPresentation(n, f, std::move(g));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

void expect_algebra_invariants(const ArtinAlgebra& A) {
  const HilbertFunction& H = A.hilbert();
  EXPECT_EQ(H[0], 1);
  EXPECT_EQ(H.length(), A.length());
  EXPECT_GE(H[A.socle_degree()], 1);
  EXPECT_EQ(H[A.socle_degree() + 1], 0);
  for (int i = 0; i < A.nvars(); ++i) {
    for (int j = 0; j < A.nvars(); ++j) {
      EXPECT_EQ(A.multiplication(i) * A.multiplication(j), A.multiplication(j) * A.multiplication(i));
    }
    for (size_t k = 0; k < A.basis().size(); ++k) {
      Polynomial m = Polynomial::monomial(A.field(), A.basis()[k], Scalar::one(A.field()));
      Vector lhs = A.multiplication(i) * A.normal_form(m);
      Vector rhs = A.normal_form(mul_trunc(Polynomial::var(A.nvars(), A.field(), i), m, kNoTruncation));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

}  // namespace

TEST(BuildQuotient, SquareOfMaximalIdeal) {
  ArtinAlgebra A = build_quotient(ideal(2, {"x1^2", "x1*x2", "x2^2"}));
  EXPECT_EQ(A.hilbert(), (HilbertFunction{1, 2}));
  EXPECT_EQ(A.length(), 3);
  EXPECT_EQ(socle(A).tau, 2);
  expect_algebra_invariants(A);

  ArtinAlgebra B = build_quotient(ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"}));
  EXPECT_EQ(B.hilbert(), (HilbertFunction{1, 3}));
  EXPECT_EQ(invariants(B).tau, 3);
}

TEST(BuildQuotient, HandEchelonizedExample) {
  // basis {1, x1, x2, x1^2, x1^3} (x2 sorts below x1): x2^2 = x1^3 and x1^4 = x1 x2^2 = 0
  ArtinAlgebra A = build_quotient(ideal(2, {"x1*x2", "x2^2 - x1^3"}));
  EXPECT_EQ(A.hilbert(), (HilbertFunction{1, 2, 1, 1}));
  EXPECT_EQ(A.length(), 5);
  EXPECT_EQ(A.socle_degree(), 3);
  std::vector<std::string> basis;
  for (const auto& m : A.basis()) basis.push_back(to_string(m));
  EXPECT_EQ(basis, (std::vector<std::string>{"1", "x2", "x1", "x1^2", "x1^3"}));
  EXPECT_EQ(A.normal_form(parse_poly("x2^2", 2)), A.normal_form(parse_poly("x1^3", 2)));
  EXPECT_TRUE(is_zero(A.normal_form(parse_poly("x1^4", 2))));
  Invariants inv = invariants(A);
  EXPECT_EQ(inv.tau, 1);
  EXPECT_TRUE(inv.is_gorenstein);
  EXPECT_EQ(min_gens(A.presentation()), 2);
  expect_algebra_invariants(A);
}

TEST(BuildQuotient, NotArtinian) {
  EXPECT_EQ(code_of([] { build_quotient(ideal(2, {"x1"})); }), ErrorCode::kNotArtinian);
  EXPECT_EQ(code_of([] { build_quotient(ideal(2, {"x1*x2"})); }), ErrorCode::kNotArtinian);
}

TEST(BuildQuotient, TruncationDoublesForHighSocleDegree) {
  ArtinAlgebra A = build_quotient(ideal(1, {"x1^20"}));
  EXPECT_EQ(A.socle_degree(), 19);
  EXPECT_GT(A.truncation(), 20);
  ArtinAlgebra B = build_quotient(ideal(2, {"x1*x2", "x1^12 - x2^9"}));
  EXPECT_EQ(B.socle_degree(), 12);
  EXPECT_EQ(B.length(), 1 + 12 + 8);
}

TEST(BuildQuotient, GeneratorOrderIndependence) {
  IdealPresentation I = ideal(3, {"x1*x2 - x3^3", "x2^2 + x1*x3", "x1^3 - x2*x3 + x3^4", "x3^2*x1"});
  IdealPresentation J = I;
  std::reverse(J.gens.begin(), J.gens.end());
  ArtinAlgebra A = build_quotient(I);
  ArtinAlgebra B = build_quotient(J);
  EXPECT_EQ(A.hilbert(), B.hilbert());
  EXPECT_EQ(A.basis(), B.basis());
  expect_algebra_invariants(A);
}

TEST(NormalForm, Idempotent) {
  ArtinAlgebra A = build_quotient(ideal(3, {"x1*x2", "x1*x3", "x2*x3", "x1^3 - x2^3", "x3^2 - x2^3"}));
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    Polynomial p = random_polynomial(rng, 3, A.field(), 0, 6, 8);
    Vector v = A.normal_form(p);
    EXPECT_EQ(A.normal_form(A.to_polynomial(v)), v);
  }
  expect_algebra_invariants(A);
}

TEST(MinGens, RegularSequenceAndTruncationStability) {
  IdealPresentation I = ideal(2, {"x1^2", "x2^3"});
  EXPECT_EQ(min_gens(I), 2);
  // redundant generators do not count
  IdealPresentation J = ideal(2, {"x1^2", "x2^3", "x1^2*x2 + x2^3", "x1^3"});
  EXPECT_EQ(min_gens(J), 2);
  Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> g;
    for (int i = 0; i < 3; ++i) g.push_back(Polynomial::monomial(Field::rationals(), Monomial::var(3, i, rng.uniform(2, 4)), Scalar(1)));
    for (int k = 0; k < 2; ++k) g.push_back(random_polynomial(rng, 3, Field::rationals(), 2, 3, 3));
    IdealPresentation K(3, Field::rationals(), g);
    int s = build_quotient(K).socle_degree();
    EXPECT_EQ(min_gens(K, s + 2), min_gens(K, s + 3));
  }
}

TEST(PowerGens, StretchedAndAlmostStretched) {
  ArtinAlgebra A = build_quotient(ideal(3, {"x1*x2", "x1*x3", "x2*x3", "x2^2 - x1^3", "x3^2 - x1^3"}));
  EXPECT_EQ(A.hilbert(), (HilbertFunction{1, 3, 1, 1}));
  EXPECT_EQ(power_gens(A, 2), 1);
  EXPECT_EQ(power_gens(A, 4), 0);
  EXPECT_TRUE(is_stretched(A));
  EXPECT_FALSE(is_almost_stretched(A));

  ArtinAlgebra B = build_quotient(ideal(2, {"x1^2*x2", "x2^2 - x1^2"}));
  EXPECT_EQ(B.hilbert(), (HilbertFunction{1, 2, 2, 1}));
  EXPECT_TRUE(is_almost_stretched(B));

  ArtinAlgebra C = build_quotient(ideal(2, {"x1^2", "x1*x2", "x2^2"}));
  EXPECT_FALSE(is_stretched(C));
  EXPECT_FALSE(is_almost_stretched(C));
}

TEST(LeadingForms, HomogeneousIdealIsItsOwnInitialIdeal) {
  IdealPresentation I = ideal(2, {"x1^2 - x2^2", "x1*x2"});
  LeadingForms lf = leading_forms(I);
  ASSERT_GE(lf.by_degree.size(), 3u);
  EXPECT_EQ(lf.by_degree[2].size(), 2u);
  EXPECT_EQ(lf.v_star, 2);
  ArtinAlgebra A = build_quotient(I);
  EXPECT_EQ(A.hilbert(), (HilbertFunction{1, 2, 1}));
}

TEST(LeadingForms, InitialIdealOfNonHomogeneousIdeal) {
  // I = (x1x2, x2^2 - x1^3): I* = (X1X2, X2^2, X1^4), so v(I*) = 3 > v(I) = 2
  IdealPresentation I = ideal(2, {"x1*x2", "x2^2 - x1^3"});
  LeadingForms lf = leading_forms(I);
  EXPECT_EQ(lf.v_star, 3);
  EXPECT_EQ(min_gens(I), 2);
  ArtinAlgebra A = build_quotient(I);
  // S/I* has the Hilbert function of A
  for (int j = 0; j <= A.socle_degree(); ++j) {
    EXPECT_EQ(static_cast<int>(monomials_of_degree(2, j).size() - lf.by_degree[static_cast<size_t>(j)].size()), A.hilbert()[j]);
  }
}

TEST(LeadingForms, ChainOnRandomIdeals) {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.uniform(2, 3);
    std::vector<Polynomial> g;
    for (int i = 0; i < n; ++i) g.push_back(Polynomial::monomial(Field::rationals(), Monomial::var(n, i, rng.uniform(2, 5)), Scalar(1)) + random_polynomial(rng, n, Field::rationals(), 3, 5, 2));
    for (int k = 0; k < 2; ++k) g.push_back(random_polynomial(rng, n, Field::rationals(), 2, 4, 3));
    IdealPresentation I(n, Field::rationals(), g);
    ArtinAlgebra A = build_quotient(I);
    LeadingForms lf = leading_forms(I);
    EXPECT_LE(min_gens(I), lf.v_star);
    EXPECT_GE(socle(A).tau, std::max(1, A.hilbert()[A.socle_degree()]));
  }
}

TEST(NthRoot, BinomialSeries) {
  ArtinAlgebra A = build_quotient(ideal(1, {"x1^4"}));
  Vector a = A.normal_form(parse_poly("1 + x1", 1));
  Vector c = nth_root(A, a, 2);
  EXPECT_EQ(c, A.normal_form(parse_poly("1 + 1/2*x1 - 1/8*x1^2 + 1/16*x1^3", 1)));
  EXPECT_EQ(A.mul(c, c), a);
  EXPECT_EQ(nth_root(A, A.one(), 3), A.one());
}

TEST(NthRoot, ResidueMustBeAPower) {
  ArtinAlgebra A = build_quotient(ideal(2, {"x1^2", "x2^2"}));
  EXPECT_EQ(code_of([&] { nth_root(A, A.scalar(Scalar(2)), 2); }), ErrorCode::kResidueNotPower);
  ExtendedRoot r = nth_root_extending(A, A.normal_form(parse_poly("2 + x1 - x2", 2)), 2);
  EXPECT_EQ(r.algebra.field()->depth(), 1);
  EXPECT_EQ(r.algebra.mul(r.value, r.value), r.algebra.normal_form(parse_poly("2 + x1 - x2", 2, r.algebra.field())));
}

TEST(NthRoot, RandomUnitsCubeRoots) {
  ArtinAlgebra A = build_quotient(ideal(2, {"x1^3*x2", "x2^2 - x1*x2 - x1^4"}));
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Scalar b(rng.nonzero(4), rng.uniform(1, 3));
    Polynomial u = Polynomial::constant(2, b * b * b) + random_polynomial(rng, 2, A.field(), 1, 6, 5);
    Vector a = A.normal_form(u);
    Vector c = nth_root(A, a, 3);
    EXPECT_TRUE(is_zero(A.pow(c, 3) - a));
  }
}

TEST(IdealText, RoundTrip) {
  IdealPresentation I = parse_ideal("vars: 2\nfield: sqrt(-1)\n# comment\nx1^3*x2\nx2^2 - 2*sqrt(-1)*x1*x2 - x1^4\n");
  EXPECT_EQ(I.nvars, 2);
  EXPECT_EQ(I.field->depth(), 1);
  IdealPresentation J = parse_ideal(to_text(I));
  ASSERT_EQ(J.gens.size(), 2u);
  EXPECT_EQ(J.gens[1], I.gens[1]);
  EXPECT_EQ(to_text(J), to_text(I));
  IdealPresentation K = parse_ideal("vars: 1\nfield: sqrt(5), sqrt(2 + sqrt(5))\nx1^2\n");
  EXPECT_EQ(K.field->depth(), 2);
  EXPECT_EQ(to_text(parse_ideal(to_text(K))), to_text(K));
  EXPECT_EQ(code_of([] { parse_ideal("x1^2\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_ideal("vars: 2\n1 + x1\n"); }), ErrorCode::kInvalidArgument);
}

TEST(SameIdeal, RowSpaceEquality) {
  IdealPresentation I = ideal(2, {"x1*x2", "x2^2 - x1^3"});
  IdealPresentation J = ideal(2, {"x1*x2 + x2^2 - x1^3", "x2^2 - x1^3", "x1^5"});
  EXPECT_TRUE(same_ideal(I, J, 6));
  EXPECT_FALSE(same_ideal(I, ideal(2, {"x1*x2", "x2^2 + x1^3"}), 6));
}

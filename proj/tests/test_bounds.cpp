#include <gtest/gtest.h>

#include <set>

#include "artin/bounds.hpp"

using namespace artin;

namespace {

// n^<i> by brute force: in enough variables, the lex-greatest dim S_i - n
// monomials of degree i generate a segment whose complement in degree i+1
// has exactly n^<i> elements.
long brute_shift(int n, int i, int nvars) {
  auto deg_i = monomials_of_degree(nvars, i);
  std::sort(deg_i.begin(), deg_i.end(), lex_greater);
  std::set<Monomial::Exponents> covered;
  for (size_t k = 0; k + static_cast<size_t>(n) < deg_i.size(); ++k) {
    for (int v = 0; v < nvars; ++v) covered.insert((deg_i[k] * Monomial::var(nvars, v)).exponents());
  }
  return static_cast<long>(monomials_of_degree(nvars, i + 1).size() - covered.size());
}

}  // namespace

TEST(Macaulay, ExpansionIsGreedyAndExact) {
  auto ex = binomial_expansion(5, 2);
  ASSERT_EQ(ex.terms.size(), 2u);
  EXPECT_EQ(ex.terms[0], std::make_pair(3L, 2));
  EXPECT_EQ(ex.terms[1], std::make_pair(2L, 1));
  for (int n = 1; n < 200; ++n) {
    for (int i = 1; i < 6; ++i) {
      auto e = binomial_expansion(n, i);
      EXPECT_EQ(e.value(), n);
      for (size_t k = 0; k + 1 < e.terms.size(); ++k) EXPECT_GT(e.terms[k].first, e.terms[k + 1].first);
      EXPECT_GE(e.terms.back().first, e.terms.back().second);
    }
  }
}

TEST(Macaulay, ShiftAgainstLexOracle) {
  EXPECT_EQ(macaulay_shift(5, 2), 7);
  EXPECT_EQ(brute_shift(5, 2, 3), 7);
  EXPECT_EQ(macaulay_shift(0, 3), 0);
  for (int i = 1; i <= 3; ++i) {
    for (int n = 1; n <= 9; ++n) {
      EXPECT_EQ(macaulay_shift(n, i), brute_shift(n, i, std::max(n, 2))) << n << "^<" << i << ">";
    }
  }
}

TEST(Bounds, TAndR) {
  for (int h = 1; h <= 6; ++h) {
    for (int e = h + 1; e <= 80; ++e) {
      TR tr = t_and_r(e, h);
      EXPECT_LE(binomial(h + tr.t - 1, tr.t - 1), e);
      EXPECT_LT(e, binomial(h + tr.t, tr.t));
      EXPECT_EQ(tr.r, e - binomial(h + tr.t - 1, tr.t - 1));
    }
  }
  EXPECT_THROW(t_and_r(3, 3), Error);
}

TEST(Bounds, KnownValues) {
  // e = 4, h = 3: t = 2, r = 0, upper = C(4,2) = 6, lower = 10 - 4 = 6
  EXPECT_EQ(erv_upper(4, 3), 6);
  EXPECT_EQ(lower_bound(4, 3), 6);
  // e = 5, h = 2 (1,2,2): t = 2, r = 2, upper = 3 - 2 + 2^<2> = 1 + 2 = 3
  EXPECT_EQ(erv_upper(5, 2), 3);
  // huge values stay exact
  mpz_class big("1000000000000000000000");
  EXPECT_GT(erv_upper(big, 3), 0);
}

TEST(Admissible, MacaulayGrowth) {
  EXPECT_TRUE(hf_admissible(HilbertFunction{1, 2, 3, 4}));
  EXPECT_TRUE(hf_admissible(HilbertFunction{1, 3, 1, 1}));
  EXPECT_FALSE(hf_admissible(HilbertFunction{1, 2, 4}));
  EXPECT_FALSE(hf_admissible(HilbertFunction{1, 1, 2}));
  EXPECT_FALSE(hf_admissible(HilbertFunction{2, 1}));
}

TEST(LexSegment, Examples) {
  auto a = lex_segment(HilbertFunction{1, 2, 1, 1}, 2);
  ASSERT_EQ(a.v, 3);
  EXPECT_EQ(a.generators[0], (Monomial{2, 0}));
  EXPECT_EQ(a.generators[1], (Monomial{1, 1}));
  EXPECT_EQ(a.generators[2], (Monomial{0, 4}));

  auto b = lex_segment(HilbertFunction{1, 2, 2, 1}, 2);
  ASSERT_EQ(b.v, 3);
  EXPECT_EQ(b.generators[0], (Monomial{2, 0}));
  EXPECT_EQ(b.generators[1], (Monomial{1, 2}));
  EXPECT_EQ(b.generators[2], (Monomial{0, 4}));

  EXPECT_THROW(lex_segment(HilbertFunction{1, 1, 2}, 2), Error);
}

TEST(LexSegment, ReproducesHilbertFunction) {
  for (const HilbertFunction& H : {HilbertFunction{1, 3, 2, 1}, HilbertFunction{1, 2, 3, 1}, HilbertFunction{1, 3, 6, 2}}) {
    auto lex = lex_segment(H, H[1]);
    for (int d = 0; d <= H.socle_degree() + 1; ++d) {
      EXPECT_EQ(monomials_of_degree(H[1], d).size() - lex.by_degree[static_cast<size_t>(d)].size(), static_cast<size_t>(H[d]));
    }
  }
}

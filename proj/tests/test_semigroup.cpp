#include <gtest/gtest.h>

#include <map>

#include "artin/linalg.hpp"
#include "artin/semigroup.hpp"

using namespace artin;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

// Minimal generators of the toric ideal counted degreewise: in S-degree m the
// ideal is spanned by differences of factorizations, and the part coming from
// lower degrees is spanned by x_i times the differences in degree m - n_i.
int kernel_oracle(const NumericalSemigroup& S, int64_t bound) {
  const FieldPtr& f = Field::rationals();
  int total = 0;
  for (int64_t m = 1; m <= bound; ++m) {
    auto facts = factorizations(S, m);
    if (facts.size() < 2) continue;
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < facts.size(); ++i) index[facts[i]] = i;
    std::vector<Vector> rows;
    for (int i = 0; i < S.k; ++i) {
      auto lower = factorizations(S, m - S.gens[static_cast<size_t>(i)]);
      for (size_t a = 1; a < lower.size(); ++a) {
        Vector row = zero_vector(f, facts.size());
        auto u = lower[0];
        auto w = lower[a];
        ++u[static_cast<size_t>(i)];
        ++w[static_cast<size_t>(i)];
        row[index.at(u)] = Scalar(1);
        row[index.at(w)] = Scalar(-1);
        rows.push_back(row);
      }
    }
    const size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(f, facts.size(), rows));
    total += static_cast<int>(facts.size() - 1 - r);
  }
  return total;
}

}  // namespace

TEST(Semigroup, Invariants) {
  auto S = semigroup_invariants({2, 3});
  EXPECT_EQ(S.e, 2);
  EXPECT_EQ(S.k, 2);
  EXPECT_EQ(S.frobenius, 1);
  EXPECT_TRUE(S.symmetric);
  EXPECT_TRUE(semigroup_invariants({8, 10, 12, 15}).symmetric);
  auto T = semigroup_invariants({7, 8, 10, 19});
  EXPECT_EQ(T.e, 7);
  EXPECT_EQ(T.h, 3);
  EXPECT_EQ(T.e, T.h + 4);
  EXPECT_FALSE(semigroup_invariants({3, 4, 5}).symmetric);
  EXPECT_EQ(semigroup_invariants({5, 3}).gens, (std::vector<int64_t>{3, 5}));
}

TEST(Semigroup, Errors) {
  EXPECT_EQ(code_of([] { semigroup_invariants({4, 6}); }), ErrorCode::kGcdNotOne);
  EXPECT_EQ(code_of([] { semigroup_invariants({3, 5, 8}); }), ErrorCode::kNonMinimalGenerators);
  EXPECT_EQ(code_of([] { semigroup_invariants({3, 3, 4}); }), ErrorCode::kNonMinimalGenerators);
}

TEST(Semigroup, AperySetSize) {
  for (const auto& S : semigroup_family(9, 4, 20)) EXPECT_EQ(S.apery.size(), static_cast<size_t>(S.e));
}

TEST(Presentation, Examples) {
  EXPECT_EQ(min_presentation_size(semigroup_invariants({2, 3})), 1);
  EXPECT_EQ(min_presentation_size(semigroup_invariants({3, 4, 5})), 3);
  const int v = min_presentation_size(semigroup_invariants({7, 8, 10, 19}));
  EXPECT_GT(v, 6);
  EXPECT_LE(v, 7);
  EXPECT_NE(min_presentation_size(semigroup_invariants({8, 10, 12, 15})), 5);
  for (int64_t a = 2; a <= 9; ++a) {
    for (int64_t b = a + 1; b <= 20; ++b) {
      if (std::gcd(a, b) == 1) {
        EXPECT_EQ(min_presentation_size(semigroup_invariants({a, b})), 1);
      }
    }
  }
}

TEST(Presentation, AgreesWithKernelOracle) {
  int checked = 0;
  for (const auto& S : semigroup_family(7, 3, 16)) {
    // the oracle scans well past the Betti search bound
    EXPECT_EQ(min_presentation_size(S), kernel_oracle(S, 2 * betti_search_bound(S))) << S.gens[0] << "," << S.gens[1];
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Rgs, Reports) {
  auto r = check_rgs(semigroup_invariants({8, 10, 12, 15}));
  EXPECT_EQ(r.e, r.h + 5);
  EXPECT_FALSE(r.r2_applies);
  EXPECT_FALSE(r.r2_value_ok);

  auto q = check_rgs(semigroup_invariants({7, 8, 10, 19}));
  EXPECT_FALSE(q.r1_upper_ok);
  EXPECT_TRUE(q.r3_applies);
  EXPECT_TRUE(q.r3_ok);

  auto m = check_rgs(semigroup_invariants({3, 4, 5}));
  EXPECT_TRUE(m.minimal_multiplicity);
  EXPECT_FALSE(m.r1_applies || m.r2_applies || m.r3_applies);
  EXPECT_EQ(m.v, 3);
  EXPECT_TRUE(m.consistent());
}

TEST(Rgs, SmallFamilyConsistent) {
  for (const auto& S : semigroup_family(7, 4, 24)) EXPECT_TRUE(check_rgs(S).consistent()) << S.gens[0];
}

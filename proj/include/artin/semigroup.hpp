#pragma once

// Numerical semigroups: Apery sets, symmetry, and the minimal number of
// generators of the defining ideal of the monomial curve.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "artin/error.hpp"

namespace artin {

struct NumericalSemigroup {
  std::vector<int64_t> gens;   // minimal generators, increasing
  int64_t e = 0;               // multiplicity n1
  int k = 0;                   // embedding dimension
  int h = 0;                   // k - 1
  int64_t frobenius = -1;
  std::vector<int64_t> apery;  // apery[r] = least element congruent to r mod n1
  bool symmetric = false;

  bool contains(int64_t x) const { return x >= 0 && apery[static_cast<size_t>(x % e)] <= x; }
};

namespace detail {

inline std::vector<int64_t> apery_set(const std::vector<int64_t>& gens) {
  const int64_t n1 = gens.front();
  std::vector<int64_t> dist(static_cast<size_t>(n1), std::numeric_limits<int64_t>::max());
  using Item = std::pair<int64_t, int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<size_t>(r)]) continue;
    for (size_t i = 1; i < gens.size(); ++i) {
      const int64_t nd = d + gens[i];
      const int64_t nr = nd % n1;
      if (nd < dist[static_cast<size_t>(nr)]) {
        dist[static_cast<size_t>(nr)] = nd;
        pq.emplace(nd, nr);
      }
    }
  }
  return dist;
}

/// x in the monoid generated by `others` (no gcd assumption).
inline bool generated_by(int64_t x, const std::vector<int64_t>& others) {
  std::vector<char> reach(static_cast<size_t>(x + 1), 0);
  reach[0] = 1;
  for (int64_t v = 1; v <= x; ++v) {
    for (int64_t g : others) {
      if (g <= v && reach[static_cast<size_t>(v - g)]) {
        reach[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<size_t>(x)] != 0;
}

}  // namespace detail

inline NumericalSemigroup semigroup_invariants(std::vector<int64_t> gens) {
  require(!gens.empty(), ErrorCode::kInvalidArgument, "a semigroup needs generators");
  std::sort(gens.begin(), gens.end());
  require(gens.front() >= 1, ErrorCode::kInvalidArgument, "generators must be positive");
  int64_t g = 0;
  for (int64_t n : gens) g = std::gcd(g, n);
  require(g == 1, ErrorCode::kGcdNotOne, "generators have gcd " + std::to_string(g));
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int64_t> others;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    require(!(i > 0 && gens[i] == gens[i - 1]) && !detail::generated_by(gens[i], others), ErrorCode::kNonMinimalGenerators,
            std::to_string(gens[i]) + " is generated by the others");
  }
  NumericalSemigroup S;
  S.gens = gens;
  S.e = gens.front();
  S.k = static_cast<int>(gens.size());
  S.h = S.k - 1;
  S.apery = detail::apery_set(gens);
  S.frobenius = *std::max_element(S.apery.begin(), S.apery.end()) - S.e;
  S.symmetric = true;
  for (int64_t x = 0; x <= S.frobenius; ++x) {
    if (S.contains(x) == S.contains(S.frobenius - x)) S.symmetric = false;
  }
  return S;
}

/// All factorizations u with sum u_i n_i = m.
inline std::vector<std::vector<int>> factorizations(const NumericalSemigroup& S, int64_t m) {
  std::vector<std::vector<int>> out;
  std::vector<int> u(static_cast<size_t>(S.k), 0);
  auto rec = [&](auto&& self, size_t i, int64_t rest) -> void {
    if (i + 1 == u.size()) {
      if (rest % S.gens[i] == 0) {
        u[i] = static_cast<int>(rest / S.gens[i]);
        out.push_back(u);
      }
      return;
    }
    for (int64_t c = rest / S.gens[i]; c >= 0; --c) {
      u[i] = static_cast<int>(c);
      self(self, i + 1, rest - c * S.gens[i]);
    }
    u[i] = 0;
  };
  if (m >= 0 && S.contains(m)) rec(rec, 0, m);
  return out;
}

/// Number of connected components of the factorization graph of m, where two
/// factorizations are adjacent when their supports meet.
inline int factorization_components(const std::vector<std::vector<int>>& facts) {
  const size_t n = facts.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  if (n == 0) return 0;
  for (size_t i = 0; i < facts.front().size(); ++i) {
    size_t first = n;
    for (size_t f = 0; f < n; ++f) {
      if (facts[f][i] == 0) continue;
      if (first == n) {
        first = f;
      } else {
        parent[find(f)] = find(first);
      }
    }
  }
  int c = 0;
  for (size_t f = 0; f < n; ++f) c += find(f) == f;
  return c;
}

/// Betti candidates: elements up to F + 2 n_k.
inline int64_t betti_search_bound(const NumericalSemigroup& S) { return S.frobenius + 2 * S.gens.back(); }

/// Minimal number of generators of the defining ideal of the monomial curve.
inline int min_presentation_size(const NumericalSemigroup& S) {
  int v = 0;
  for (int64_t m = 1; m <= betti_search_bound(S); ++m) {
    if (!S.contains(m)) continue;
    auto facts = factorizations(S, m);
    if (facts.size() > 1) v += factorization_components(facts) - 1;
  }
  return v;
}

inline long binom2(long n) { return n * (n - 1) / 2; }

struct RgsReport {
  int64_t e = 0;
  int h = 0;
  int v = 0;
  bool symmetric = false;
  bool minimal_multiplicity = false;  // e = h+1, where v = C(h+1, 2)
  long lower = 0;                     // C(h+2, 2) - e
  long upper = 0;                     // C(h+1, 2)
  bool r1_applies = false;            // h+2 <= e <= h+3
  bool r1_lower_ok = false;
  bool r1_upper_ok = false;
  bool r2_applies = false;            // symmetric, h >= 2, h+2 <= e <= h+4
  bool r2_value_ok = false;           // v = C(h+1, 2) - 1
  bool r3_applies = false;            // e = h+4
  bool r3_ok = false;                 // lower <= v <= C(h+1, 2) + 1

  /// No applicable statement is contradicted.
  bool consistent() const {
    return (!r1_applies || (r1_lower_ok && r1_upper_ok)) && (!r2_applies || r2_value_ok) && (!minimal_multiplicity || v == upper);
  }
};

inline RgsReport check_rgs(const NumericalSemigroup& S) {
  RgsReport r;
  r.e = S.e;
  r.h = S.h;
  r.v = min_presentation_size(S);
  r.symmetric = S.symmetric;
  const long h = S.h;
  r.minimal_multiplicity = S.e == h + 1;
  r.lower = binom2(h + 2) - S.e;
  r.upper = binom2(h + 1);
  r.r1_applies = S.e >= h + 2 && S.e <= h + 3;
  r.r1_lower_ok = r.lower <= r.v;
  r.r1_upper_ok = r.v <= r.upper;
  r.r2_applies = S.symmetric && h >= 2 && S.e >= h + 2 && S.e <= h + 4;
  r.r2_value_ok = r.v == r.upper - 1;
  r.r3_applies = S.e == h + 4;
  r.r3_ok = r.lower <= r.v && r.v <= r.upper + 1;
  return r;
}

/// Every minimally generated semigroup with multiplicity in [2, max_e],
/// at most max_k generators, and all generators <= cap.
inline std::vector<NumericalSemigroup> semigroup_family(int64_t max_e, int max_k, int64_t cap) {
  std::vector<NumericalSemigroup> out;
  std::vector<int64_t> gens;
  auto rec = [&](auto&& self, int64_t next) -> void {
    if (gens.size() >= 2) {
      int64_t g = 0;
      for (int64_t n : gens) g = std::gcd(g, n);
      if (g == 1) out.push_back(semigroup_invariants(gens));
    }
    if (static_cast<int>(gens.size()) == max_k) return;
    for (int64_t n = next; n <= cap; ++n) {
      // n must lie outside the monoid generated so far, and no generator
      // may be redundant once n is added (only n can become redundant here
      // because n exceeds every earlier generator)
      if (detail::generated_by(n, gens)) continue;
      gens.push_back(n);
      self(self, n + 1);
      gens.pop_back();
    }
  };
  for (int64_t n1 = 2; n1 <= max_e; ++n1) {
    gens = {n1};
    rec(rec, n1 + 1);
  }
  return out;
}

}  // namespace artin

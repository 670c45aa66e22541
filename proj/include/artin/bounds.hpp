#pragma once

// Macaulay binomial calculus and generator-count bounds.

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "artin/polynomial.hpp"
#include "artin/quotient.hpp"

namespace artin {

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct BinomialExpansion {
  int i = 0;
  std::vector<std::pair<long, int>> terms;  // (n(j), j) for j = i, i-1, ...

  mpz_class value() const {
    mpz_class v = 0;
    for (const auto& [nj, j] : terms) v += binomial(nj, j);
    return v;
  }
};

/// Greedy i-binomial expansion n = C(n(i), i) + C(n(i-1), i-1) + ...
inline BinomialExpansion binomial_expansion(const mpz_class& n, int i) {
  require(n >= 1 && i >= 1, ErrorCode::kInvalidArgument, "binomial expansion needs n >= 1 and i >= 1");
  BinomialExpansion out;
  out.i = i;
  mpz_class rest = n;
  for (int j = i; j >= 1 && rest > 0; --j) {
    long nj = j;
    while (binomial(nj + 1, j) <= rest) ++nj;
    out.terms.emplace_back(nj, j);
    rest -= binomial(nj, j);
  }
  return out;
}

/// n^<i>; 0^<i> = 0.
inline mpz_class macaulay_shift(const mpz_class& n, int i) {
  require(n >= 0 && i >= 1, ErrorCode::kInvalidArgument, "macaulay_shift needs n >= 0 and i >= 1");
  if (n == 0) return 0;
  mpz_class v = 0;
  for (const auto& [nj, j] : binomial_expansion(n, i).terms) v += binomial(nj + 1, j + 1);
  return v;
}

struct TR {
  int t = 0;
  mpz_class r;
};

/// The unique t with C(h+t-1, t-1) <= e < C(h+t, t), and r = e - C(h+t-1, t-1).
inline TR t_and_r(const mpz_class& e, int h) {
  require(h >= 1 && e >= h + 1, ErrorCode::kInvalidArgument, "t and r need e >= h+1 >= 2");
  for (int t = 1;; ++t) {
    if (binomial(h + t - 1, t - 1) <= e && e < binomial(h + t, t)) return {t, e - binomial(h + t - 1, t - 1)};
  }
}

/// C(h+t-1, t) - r + r^<t>.
inline mpz_class erv_upper(const mpz_class& e, int h) {
  TR tr = t_and_r(e, h);
  return binomial(h + tr.t - 1, tr.t) - tr.r + macaulay_shift(tr.r, tr.t);
}

/// C(h+2, 2) - e.
inline mpz_class lower_bound(const mpz_class& e, int h) { return binomial(h + 2, 2) - e; }

struct BoundReport {
  mpz_class e;
  int h = 0;
  int t = 0;
  mpz_class r;
  mpz_class lower;
  mpz_class upper;
};

inline BoundReport bound_report(const mpz_class& e, int h) {
  TR tr = t_and_r(e, h);
  return {e, h, tr.t, tr.r, lower_bound(e, h), erv_upper(e, h)};
}

/// Macaulay's growth condition: H(0) = 1 and H(j+1) <= H(j)^<j> for j >= 1.
inline bool hf_admissible(const HilbertFunction& H) {
  if (H[0] != 1) return false;
  for (int j = 1; j <= H.socle_degree(); ++j) {
    if (H[j + 1] > macaulay_shift(H[j], j)) return false;
  }
  return true;
}

struct LexSegmentIdeal {
  std::vector<std::vector<Monomial>> by_degree;  // the lex segment in each degree 0..s+1
  std::vector<Monomial> generators;
  int v = 0;
};

/// The lex-segment ideal with Hilbert function H in `nvars` variables.
inline LexSegmentIdeal lex_segment(const HilbertFunction& H, int nvars) {
  require(hf_admissible(H), ErrorCode::kInadmissibleHilbertFunction, "Hilbert function " + H.to_string() + " violates Macaulay's bound");
  require(H[1] <= nvars, ErrorCode::kInvalidArgument, "H(1) exceeds the number of variables");
  LexSegmentIdeal out;
  std::set<Monomial::Exponents> previous;
  for (int d = 0; d <= H.socle_degree() + 1; ++d) {
    std::vector<Monomial> all = monomials_of_degree(nvars, d);
    std::sort(all.begin(), all.end(), lex_greater);
    const size_t keep = all.size() - static_cast<size_t>(H[d]);
    std::vector<Monomial> segment(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
    std::set<Monomial::Exponents> current;
    for (const auto& m : segment) current.insert(m.exponents());
    std::set<Monomial::Exponents> products;
    for (const auto& e : previous) {
      for (int i = 0; i < nvars; ++i) {
        Monomial::Exponents f = e;
        ++f[static_cast<size_t>(i)];
        products.insert(f);
      }
    }
    for (const auto& p : products) {
      require(current.count(p) > 0, ErrorCode::kInadmissibleHilbertFunction, "lex segments are not closed under multiplication");
    }
    for (const auto& m : segment) {
      if (products.count(m.exponents()) == 0) out.generators.push_back(m);
    }
    out.by_degree.push_back(std::move(segment));
    previous = std::move(current);
  }
  out.v = static_cast<int>(out.generators.size());
  return out;
}

}  // namespace artin

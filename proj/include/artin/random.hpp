#pragma once

// Seeded generators for random polynomials, units and coordinate changes.

#include <cstdint>
#include <random>
#include <vector>

#include "artin/ring_map.hpp"

namespace artin {

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  /// Small nonzero integer in [-bound, bound].
  int nonzero(int bound) {
    int v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

/// Random polynomial with `terms` attempted terms of degree in [min_deg, max_deg]
/// and integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(Rng& rng, int nvars, const FieldPtr& f, int min_deg, int max_deg, int terms, int bound = 3) {
  Polynomial p(nvars, f);
  for (int t = 0; t < terms; ++t) {
    int d = rng.uniform(min_deg, max_deg);
    Monomial::Exponents e(static_cast<size_t>(nvars), 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<size_t>(rng.uniform(0, nvars - 1))];
    p.add_term(Monomial(e), Scalar::from_rational(f, mpq_class(rng.nonzero(bound))));
  }
  return p;
}

/// Random unit: nonzero constant plus random terms of degree 1..max_deg.
inline Polynomial random_unit(Rng& rng, int nvars, const FieldPtr& f, int max_deg, int bound = 3) {
  Polynomial u = Polynomial::constant(nvars, Scalar::from_rational(f, mpq_class(rng.nonzero(bound))));
  if (max_deg >= 1) u += random_polynomial(rng, nvars, f, 1, max_deg, rng.uniform(0, 2), bound);
  return u;
}

/// Random invertible map: a dense small-integer linear part with nonzero
/// determinant plus a few nonlinear terms of degree 2..max_deg.
inline RingMap random_invertible_map(Rng& rng, int nvars, const FieldPtr& f, int D, int max_deg = 2, int bound = 2) {
  while (true) {
    std::vector<Polynomial> images;
    for (int i = 0; i < nvars; ++i) {
      Polynomial p(nvars, f);
      for (int j = 0; j < nvars; ++j) p.add_term(Monomial::var(nvars, j), Scalar::from_rational(f, mpq_class(rng.uniform(-bound, bound))));
      if (max_deg >= 2) p += random_polynomial(rng, nvars, f, 2, max_deg, rng.uniform(0, 2), bound);
      images.push_back(std::move(p));
    }
    RingMap m(std::move(images), D);
    if (is_invertible(m)) return m;
  }
}

}  // namespace artin

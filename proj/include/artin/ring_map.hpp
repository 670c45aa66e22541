#pragma once

// Substitution maps x_i -> image_i modulo 𝔫^D.

#include <vector>

#include "artin/linalg.hpp"
#include "artin/polynomial.hpp"

namespace artin {

class RingMap {
 public:
  RingMap() = default;
  RingMap(std::vector<Polynomial> images, int D) : images_(std::move(images)), D_(D) {
    require(!images_.empty(), ErrorCode::kInvalidArgument, "a ring map needs at least one variable");
    for (auto& p : images_) {
      require(p.nvars() == nvars(), ErrorCode::kNvarsMismatch, "image has the wrong number of variables");
      require(same_field(p.field(), field()), ErrorCode::kFieldMismatch, "images live over different fields");
      require(p.constant_term().is_zero(), ErrorCode::kInvalidArgument, "image of a variable must lie in the maximal ideal");
      p = p.truncate(D_);
    }
  }

  static RingMap identity(int nvars, const FieldPtr& f, int D = kNoTruncation) {
    std::vector<Polynomial> images;
    for (int i = 0; i < nvars; ++i) images.push_back(Polynomial::var(nvars, f, i));
    return RingMap(std::move(images), D);
  }

  int nvars() const { return static_cast<int>(images_.size()); }
  int truncation() const { return D_; }
  const FieldPtr& field() const { return images_.front().field(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int i) const { return images_.at(static_cast<size_t>(i)); }

  /// Entry (i, j) is the coefficient of x_j in the image of x_i.
  Matrix linear_part() const {
    Matrix m(field(), images_.size(), images_.size());
    for (int i = 0; i < nvars(); ++i) {
      for (int j = 0; j < nvars(); ++j) m(static_cast<size_t>(i), static_cast<size_t>(j)) = images_[static_cast<size_t>(i)].coefficient(Monomial::var(nvars(), j));
    }
    return m;
  }

  RingMap lift(const FieldPtr& f) const {
    std::vector<Polynomial> images;
    for (const auto& p : images_) images.push_back(p.lift(f));
    return RingMap(std::move(images), D_);
  }

 private:
  std::vector<Polynomial> images_;
  int D_ = kNoTruncation;
};

inline bool is_invertible(const RingMap& m) { return !determinant(m.linear_part()).is_zero(); }

/// Substitutes x_i -> m.image(i) in p, dropping terms of degree >= m.truncation().
inline Polynomial apply_map(const RingMap& m, const Polynomial& p, bool require_invertible = true) {
  require(p.nvars() == m.nvars(), ErrorCode::kNvarsMismatch, "polynomial and map disagree on the number of variables");
  require(same_field(p.field(), m.field()), ErrorCode::kFieldMismatch, "polynomial and map live over different fields");
  if (require_invertible) require(is_invertible(m), ErrorCode::kNonInvertibleMap, "map has a singular linear part");
  const int D = m.truncation();
  const int n = m.nvars();
  // powers[i][k] = image(i)^k truncated
  std::vector<std::vector<Polynomial>> powers(static_cast<size_t>(n));
  auto power = [&](int i, int k) -> const Polynomial& {
    auto& cache = powers[static_cast<size_t>(i)];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, Scalar::one(m.field())));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(mul_trunc(cache.back(), m.image(i), D));
    return cache[static_cast<size_t>(k)];
  };
  Polynomial out(n, m.field());
  for (const auto& [mono, c] : p.terms()) {
    // every image lies in 𝔫, so a monomial of degree >= D maps to zero
    if (D != kNoTruncation && mono.degree() >= D) break;
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n && !term.is_zero(); ++i) {
      if (mono[i] > 0) term = mul_trunc(term, power(i, mono[i]), D);
    }
    out += term;
  }
  return out;
}

/// The map x -> m2(m1(x)): apply_map(compose(m1, m2), p) == apply_map(m2, apply_map(m1, p)).
inline RingMap compose(const RingMap& m1, const RingMap& m2) {
  require(m1.nvars() == m2.nvars(), ErrorCode::kNvarsMismatch, "maps disagree on the number of variables");
  const int D = std::min(m1.truncation(), m2.truncation());
  RingMap inner(m2.images(), D);
  std::vector<Polynomial> images;
  for (const auto& p : m1.images()) images.push_back(apply_map(inner, p, false));
  return RingMap(std::move(images), D);
}

}  // namespace artin

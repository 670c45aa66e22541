#pragma once

// Exact scalars: rationals and a tower of at most two quadratic extensions
// Q ⊂ Q(√θ₁) ⊂ Q(√θ₁)(√θ₂).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "artin/error.hpp"

namespace artin {

/// Coordinates of a tower element of depth d: 2^d rationals. An element of
/// depth d is lo + hi·√θ_d where lo is the first half and hi the second.
using Coords = boost::container::small_vector<mpq_class, 1>;

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr int kMaxDepth = 2;

  static const FieldPtr& rationals() {
    static const FieldPtr q(new Field({}));
    return q;
  }

  int depth() const { return static_cast<int>(thetas_.size()); }
  int dimension() const { return 1 << depth(); }

  /// Radicand of layer `layer` (1-based), as coordinates one layer down.
  const Coords& theta(int layer) const { return thetas_.at(static_cast<size_t>(layer - 1)); }

  /// True when `sub` is this field or one of its lower layers.
  bool extends(const Field& sub) const {
    if (sub.depth() > depth()) return false;
    for (int i = 0; i < sub.depth(); ++i) {
      if (thetas_[static_cast<size_t>(i)] != sub.thetas_[static_cast<size_t>(i)]) return false;
    }
    return true;
  }

  /// The sub-field made of the first `d` layers.
  FieldPtr layer_field(int d) const {
    require(d >= 0 && d <= depth(), ErrorCode::kInvalidArgument, "no such layer");
    if (d == 0) return rationals();
    return FieldPtr(new Field(std::vector<Coords>(thetas_.begin(), thetas_.begin() + d)));
  }

  friend bool operator==(const Field& a, const Field& b) { return a.thetas_ == b.thetas_; }

  std::string to_string() const;

 private:
  explicit Field(std::vector<Coords> thetas) : thetas_(std::move(thetas)) {}

  std::vector<Coords> thetas_;

  friend FieldPtr adjoin_sqrt(const Scalar& theta);
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

namespace detail {

inline Coords zeros(size_t n) { return Coords(n, mpq_class(0)); }

inline bool is_zero(const Coords& a) {
  for (const auto& q : a) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

inline Coords add(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Coords sub(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Coords neg(const Coords& a) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Coords scale(const Coords& a, const mpq_class& q) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * q;
  return r;
}

inline std::pair<Coords, Coords> split(const Coords& a) {
  const auto half = static_cast<std::ptrdiff_t>(a.size() / 2);
  return {Coords(a.begin(), a.begin() + half), Coords(a.begin() + half, a.end())};
}

inline Coords join(const Coords& lo, const Coords& hi) {
  Coords r(lo);
  r.insert(r.end(), hi.begin(), hi.end());
  return r;
}

inline Coords mul(const Field& f, int depth, const Coords& a, const Coords& b) {
  if (depth == 0) return Coords{a[0] * b[0]};
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  const Coords& theta = f.theta(depth);
  Coords lo = add(mul(f, depth - 1, a0, b0), mul(f, depth - 1, mul(f, depth - 1, a1, b1), theta));
  Coords hi = add(mul(f, depth - 1, a0, b1), mul(f, depth - 1, a1, b0));
  return join(lo, hi);
}

inline Coords inv(const Field& f, int depth, const Coords& a) {
  if (depth == 0) {
    require(sgn(a[0]) != 0, ErrorCode::kInvalidArgument, "division by zero");
    return Coords{1 / a[0]};
  }
  auto [a0, a1] = split(a);
  const Coords& theta = f.theta(depth);
  // (a0 + a1 r)^{-1} = (a0 - a1 r) / (a0^2 - a1^2 θ); the norm is nonzero since θ is not a square.
  Coords norm = sub(mul(f, depth - 1, a0, a0), mul(f, depth - 1, mul(f, depth - 1, a1, a1), theta));
  Coords ninv = inv(f, depth - 1, norm);
  return join(mul(f, depth - 1, a0, ninv), neg(mul(f, depth - 1, a1, ninv)));
}

inline std::optional<mpq_class> rational_root(const mpq_class& q, int n) {
  if (sgn(q) == 0) return mpq_class(0);
  if (sgn(q) < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  mpq_class r(rn, rd);
  r.canonicalize();
  if (sgn(q) < 0) r = -r;
  return r;
}

inline std::optional<Coords> sqrt(const Field& f, int depth, const Coords& a) {
  if (depth == 0) {
    auto r = rational_root(a[0], 2);
    if (!r) return std::nullopt;
    return Coords{*r};
  }
  auto [a0, a1] = split(a);
  const Coords& theta = f.theta(depth);
  const size_t half = a0.size();
  if (is_zero(a1)) {
    if (auto r = sqrt(f, depth - 1, a0)) return join(*r, zeros(half));
    // a0 = (c·√θ)^2 = c^2 θ
    if (auto r = sqrt(f, depth - 1, mul(f, depth - 1, a0, inv(f, depth - 1, theta)))) return join(zeros(half), *r);
    return std::nullopt;
  }
  // (c + d√θ)^2 = c^2 + d^2 θ + 2cd√θ: the norm a0^2 - a1^2 θ is (c^2 - d^2 θ)^2.
  Coords norm = sub(mul(f, depth - 1, a0, a0), mul(f, depth - 1, mul(f, depth - 1, a1, a1), theta));
  auto n = sqrt(f, depth - 1, norm);
  if (!n) return std::nullopt;
  const mpq_class half_q(1, 2);
  for (int sign : {1, -1}) {
    Coords c2 = scale(sign > 0 ? add(a0, *n) : sub(a0, *n), half_q);
    auto c = sqrt(f, depth - 1, c2);
    if (!c || is_zero(*c)) continue;
    Coords d = mul(f, depth - 1, a1, inv(f, depth - 1, scale(*c, mpq_class(2))));
    return join(*c, d);
  }
  return std::nullopt;
}

}  // namespace detail

/// An exact element of a tower field. Every Scalar carries its field;
/// arithmetic between different fields is rejected (use lift()).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), c_{mpq_class(0)} {}
  Scalar(long v) : field_(Field::rationals()), c_{mpq_class(v)} {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}                   // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& q) : field_(Field::rationals()), c_{q} {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : field_(Field::rationals()), c_{mpq_class(num, den)} { c_[0].canonicalize(); }
  Scalar(FieldPtr field, Coords coords) : field_(std::move(field)), c_(std::move(coords)) {
    require(c_.size() == static_cast<size_t>(field_->dimension()), ErrorCode::kInternal, "coordinate size mismatch");
  }

  static Scalar zero(const FieldPtr& f) { return Scalar(f, detail::zeros(static_cast<size_t>(f->dimension()))); }
  static Scalar one(const FieldPtr& f) { return from_rational(f, mpq_class(1)); }
  static Scalar from_rational(const FieldPtr& f, const mpq_class& q) {
    Coords c = detail::zeros(static_cast<size_t>(f->dimension()));
    c[0] = q;
    return Scalar(f, std::move(c));
  }

  /// √θ_layer embedded in `f`.
  static Scalar generator(const FieldPtr& f, int layer) {
    require(layer >= 1 && layer <= f->depth(), ErrorCode::kInvalidArgument, "no such extension layer");
    Coords c = detail::zeros(static_cast<size_t>(f->dimension()));
    c[static_cast<size_t>(1) << (layer - 1)] = 1;
    return Scalar(f, std::move(c));
  }

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return c_; }

  bool is_zero() const { return detail::is_zero(c_); }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return false;
    }
    return true;
  }
  const mpq_class& rational() const {
    require(is_rational(), ErrorCode::kInvalidArgument, "scalar is not rational");
    return c_[0];
  }

  Scalar lift(const FieldPtr& to) const {
    if (to == field_) return *this;
    require(to->extends(*field_), ErrorCode::kFieldMismatch, "cannot lift into a field that does not contain it");
    Coords c = c_;
    c.resize(static_cast<size_t>(to->dimension()), mpq_class(0));
    return Scalar(to, std::move(c));
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_->depth() == 0) {
      c_[0] *= o.c_[0];
    } else {
      c_ = detail::mul(*field_, field_->depth(), c_, o.c_);
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(field_, detail::neg(c_)); }

  Scalar inverse() const {
    require(!is_zero(), ErrorCode::kInvalidArgument, "division by zero");
    if (field_->depth() == 0) return Scalar(field_, Coords{1 / c_[0]});
    return Scalar(field_, detail::inv(*field_, field_->depth(), c_));
  }

  Scalar pow(int n) const {
    Scalar r = one(field_);
    Scalar b = *this;
    if (n < 0) {
      b = b.inverse();
      n = -n;
    }
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Nonzero parts as (basis index, rational); basis index bit k-1 marks √θ_k.
  std::vector<std::pair<int, mpq_class>> parts() const {
    std::vector<std::pair<int, mpq_class>> out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) out.emplace_back(static_cast<int>(i), c_[i]);
    }
    return out;
  }

  std::string to_string() const;

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) fail(ErrorCode::kFieldMismatch, "scalars live in different fields");
  }

  FieldPtr field_;
  Coords c_;
};

/// Name of basis element `index` of `f`: "" for 1, "sqrt(θ1)" for √θ₁, "s2" for √θ₂.
inline std::string basis_name(const Field& f, int index) {
  std::string out;
  for (int layer = 1; layer <= f.depth(); ++layer) {
    if (!(index & (1 << (layer - 1)))) continue;
    if (!out.empty()) out += "*";
    out += layer == 1 ? "sqrt(" + f.theta(1)[0].get_str() + ")" : "s" + std::to_string(layer);
  }
  return out;
}

inline std::string Scalar::to_string() const {
  auto ps = parts();
  if (ps.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, q] : ps) {
    mpq_class mag = abs(q);
    std::string name = basis_name(*field_, idx);
    std::string body;
    if (name.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = name;
    } else {
      body = mag.get_str() + "*" + name;
    }
    if (first) {
      out += sgn(q) < 0 ? "-" + body : body;
    } else {
      out += sgn(q) < 0 ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

inline std::string Field::to_string() const {
  if (depth() == 0) return "QQ";
  std::string out = "QQ(sqrt(" + thetas_[0][0].get_str() + ")";
  if (depth() == 2) {
    out += ", sqrt(" + Scalar(layer_field(1), thetas_[1]).to_string() + ")";
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

/// Square root inside the scalar's own field, if one exists.
inline std::optional<Scalar> sqrt(const Scalar& x) {
  const FieldPtr& f = x.field();
  auto r = detail::sqrt(*f, f->depth(), x.coords());
  if (!r) return std::nullopt;
  return Scalar(f, std::move(*r));
}

/// n-th root inside the field. Powers of two go through repeated square
/// roots; other n are supported for rational radicands only.
inline std::optional<Scalar> root(const Scalar& x, int n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "root index must be positive");
  if (n == 1) return x;
  if (n % 2 == 0) {
    // Try every square root choice ±r so that odd parts can still succeed.
    auto r = sqrt(x);
    if (!r) return std::nullopt;
    if (auto rr = root(*r, n / 2)) return rr;
    if (auto rr = root(-*r, n / 2)) return rr;
    return std::nullopt;
  }
  if (x.is_rational()) {
    if (auto q = detail::rational_root(x.coords()[0], n)) return Scalar::from_rational(x.field(), *q);
  }
  return std::nullopt;
}

/// Adjoins √θ to θ's field. Fails past depth two or when θ is already a square.
inline FieldPtr adjoin_sqrt(const Scalar& theta) {
  const FieldPtr& base = theta.field();
  if (base->depth() >= Field::kMaxDepth) {
    fail(ErrorCode::kFieldExtensionRequired, "quadratic tower depth " + std::to_string(Field::kMaxDepth) + " exceeded");
  }
  require(!theta.is_zero(), ErrorCode::kInvalidArgument, "cannot adjoin sqrt(0)");
  require(!sqrt(theta).has_value(), ErrorCode::kInvalidArgument, "radicand " + theta.to_string() + " is already a square");
  std::vector<Coords> thetas = base->thetas_;
  thetas.push_back(theta.coords());
  return FieldPtr(new Field(std::move(thetas)));
}

}  // namespace artin

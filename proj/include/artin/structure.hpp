#pragma once

// Stretched and almost stretched algebras: model ideals, normal forms of
// presentations, and unit normalization.

#include <optional>
#include <string>
#include <vector>

#include "artin/quotient.hpp"
#include "artin/random.hpp"

namespace artin {

struct StretchedParams {
  int h = 1;
  int s = 2;
  int tau = 1;
  FieldPtr field = Field::rationals();
  std::vector<Polynomial> units;  // u_i for i = tau+1..h, polynomials in h variables

  StretchedParams lift(const FieldPtr& f) const {
    StretchedParams p = *this;
    p.field = f;
    for (auto& u : p.units) u = u.lift(f);
    return p;
  }
};

struct AlmostStretchedParams {
  int h = 2;
  int t = 2;
  int s = 3;
  FieldPtr field = Field::rationals();
  Polynomial a;                   // in h variables
  Polynomial w;                   // unit
  std::vector<Polynomial> units;  // u_j for j = 3..h

  AlmostStretchedParams lift(const FieldPtr& f) const {
    AlmostStretchedParams p = *this;
    p.field = f;
    p.a = a.lift(f);
    p.w = w.lift(f);
    for (auto& u : p.units) u = u.lift(f);
    return p;
  }
};

namespace detail {

inline Polynomial var(int n, const FieldPtr& f, int i) { return Polynomial::var(n, f, i); }

inline Polynomial var_power(int n, const FieldPtr& f, int i, int k) { return Polynomial::monomial(f, Monomial::var(n, i, k), Scalar::one(f)); }

inline void check_unit(const Polynomial& u, int n, const FieldPtr& f, const std::string& what) {
  require(u.nvars() == n, ErrorCode::kNvarsMismatch, what + " has the wrong number of variables");
  require(same_field(u.field(), f), ErrorCode::kFieldMismatch, what + " lives over another field");
  require(!u.constant_term().is_zero(), ErrorCode::kInvalidArgument, what + " is not a unit");
}

}  // namespace detail

/// The stretched model: x_i x_j (i < j), x_j^2 (2 <= j <= tau) and
/// x_i^2 - u_i x1^s (i > tau) when tau < h; x1 x_j, x_i x_j (2 <= i <= j)
/// and x1^{s+1} when tau = h.
inline IdealPresentation make_stretched(const StretchedParams& p) {
  require(p.h >= 1 && p.h <= kMaxVars, ErrorCode::kInvalidArgument, "h must be in 1..8");
  require(p.s >= 2, ErrorCode::kInvalidArgument, "s must be at least 2");
  require(p.tau >= 1 && p.tau <= p.h, ErrorCode::kInvalidArgument, "tau must be in 1..h");
  require(static_cast<int>(p.units.size()) == p.h - p.tau, ErrorCode::kInvalidArgument, "expected h - tau units");
  const int n = p.h;
  const FieldPtr& f = p.field;
  for (const auto& u : p.units) detail::check_unit(u, n, f, "u_i");
  std::vector<Polynomial> g;
  if (p.tau < p.h) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) g.push_back(detail::var(n, f, i) * detail::var(n, f, j));
    }
    for (int j = 1; j < p.tau; ++j) g.push_back(detail::var_power(n, f, j, 2));
    for (int i = p.tau; i < n; ++i) {
      g.push_back(detail::var_power(n, f, i, 2) - p.units[static_cast<size_t>(i - p.tau)] * detail::var_power(n, f, 0, p.s));
    }
  } else {
    for (int j = 1; j < n; ++j) g.push_back(detail::var(n, f, 0) * detail::var(n, f, j));
    for (int i = 1; i < n; ++i) {
      for (int j = i; j < n; ++j) g.push_back(detail::var(n, f, i) * detail::var(n, f, j));
    }
    g.push_back(detail::var_power(n, f, 0, p.s + 1));
  }
  return IdealPresentation(n, f, std::move(g));
}

/// The almost stretched Gorenstein model: x1 x_j, x_i x_j (2 <= i < j),
/// x_j^2 - u_j x1^s (j >= 3), x2^2 - a x1 x2 - w x1^{s-t+1}, x1^t x2.
inline IdealPresentation make_almost_stretched(const AlmostStretchedParams& p) {
  require(p.h >= 2 && p.h <= kMaxVars, ErrorCode::kInvalidArgument, "h must be in 2..8");
  require(p.t >= 2 && p.s >= p.t + 1, ErrorCode::kInvalidArgument, "need s >= t+1 >= 3");
  require(static_cast<int>(p.units.size()) == p.h - 2, ErrorCode::kInvalidArgument, "expected h - 2 units");
  const int n = p.h;
  const FieldPtr& f = p.field;
  require(p.a.nvars() == n, ErrorCode::kNvarsMismatch, "a has the wrong number of variables");
  require(same_field(p.a.field(), f), ErrorCode::kFieldMismatch, "a lives over another field");
  detail::check_unit(p.w, n, f, "w");
  for (const auto& u : p.units) detail::check_unit(u, n, f, "u_j");
  const Polynomial x1 = detail::var(n, f, 0);
  const Polynomial x2 = detail::var(n, f, 1);
  std::vector<Polynomial> g;
  for (int j = 2; j < n; ++j) g.push_back(x1 * detail::var(n, f, j));
  for (int i = 1; i < n; ++i) {
    for (int j = std::max(i + 1, 2); j < n; ++j) g.push_back(detail::var(n, f, i) * detail::var(n, f, j));
  }
  for (int j = 2; j < n; ++j) g.push_back(detail::var_power(n, f, j, 2) - p.units[static_cast<size_t>(j - 2)] * detail::var_power(n, f, 0, p.s));
  g.push_back(x2 * x2 - p.a * x1 * x2 - p.w * detail::var_power(n, f, 0, p.s - p.t + 1));
  g.push_back(detail::var_power(n, f, 0, p.t) * x2);
  return IdealPresentation(n, f, std::move(g));
}

/// The two Gorenstein models with Hilbert function (1,3,2,1).
inline std::vector<IdealPresentation> make_1321_models() {
  const FieldPtr& f = Field::rationals();
  return {
      IdealPresentation(3, f, {parse_poly("x1*x2", 3), parse_poly("x1*x3", 3), parse_poly("x2*x3", 3), parse_poly("x1^3 - x2^3", 3), parse_poly("x3^2 - x2^3", 3)}),
      IdealPresentation(3, f, {parse_poly("x1^3", 3), parse_poly("x2^2", 3), parse_poly("x2*x3", 3), parse_poly("x1*x3", 3), parse_poly("x3^2 - x1^2*x2", 3)}),
  };
}

/// Result of a normalization: apply_map(map, model(params)) equals `ideal`.
template <class Params>
struct NormalForm {
  Params params;
  RingMap map;
  IdealPresentation ideal;
};

using StretchedForm = NormalForm<StretchedParams>;
using AlmostStretchedForm = NormalForm<AlmostStretchedParams>;

struct NormalizeOptions {
  uint64_t seed = 0;
  int budget = 100;
  bool allow_extensions = false;
};

struct LeanBasis {
  std::vector<Vector> elements;  // x1 (and x2) first, completed by coordinate variables
  int attempts = 0;
};

namespace detail {

/// Coefficients c_k in A with sum c_k g_k = target, if any.
inline std::optional<std::vector<Vector>> solve_combination(const ArtinAlgebra& A, const std::vector<Vector>& gens, const Vector& target) {
  const size_t e = static_cast<size_t>(A.length());
  Matrix M(A.field(), e, e * gens.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    Matrix Mg = A.multiplication_matrix(gens[g]);
    for (size_t r = 0; r < e; ++r) {
      for (size_t c = 0; c < e; ++c) M(r, g * e + c) = Mg(r, c);
    }
  }
  auto x = solve(M, target);
  if (!x) return std::nullopt;
  std::vector<Vector> out;
  for (size_t g = 0; g < gens.size(); ++g) out.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(g * e), x->begin() + static_cast<std::ptrdiff_t>((g + 1) * e));
  return out;
}

inline std::vector<Vector> must_solve(const ArtinAlgebra& A, const std::vector<Vector>& gens, const Vector& target, const char* what) {
  auto r = solve_combination(A, gens, target);
  require(r.has_value(), ErrorCode::kInternal, std::string("normalization step failed: ") + what);
  return *r;
}

/// The scalar r with v = r * top.
inline Scalar ratio(const Vector& v, const Vector& top) {
  size_t k = 0;
  while (k < top.size() && top[k].is_zero()) ++k;
  require(k < top.size(), ErrorCode::kInternal, "ratio against zero");
  Scalar r = v[k] / top[k];
  require(v == r * top, ErrorCode::kInternal, "product is not a multiple of the socle generator");
  return r;
}

inline size_t rank_of(const ArtinAlgebra& A, const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(A.field(), rows.front().size(), rows));
}

/// Polynomial P(X1, X2) of degree <= bound with P(g1, g2) * target = c * target.
inline Polynomial project_two(const ArtinAlgebra& A, const Vector& c, const Vector& target, const Vector& g1, const Vector& g2, int bound) {
  std::vector<Monomial> monos;
  std::vector<Vector> cols;
  for (int d = 0; d <= bound; ++d) {
    for (int i = d; i >= 0; --i) {
      Monomial::Exponents e(static_cast<size_t>(A.nvars()), 0);
      e[0] = i;
      e[1] = d - i;
      monos.emplace_back(e);
      cols.push_back(A.mul(A.mul(A.pow(g1, i), A.pow(g2, d - i)), target));
    }
  }
  auto x = solve(Matrix::from_columns(A.field(), static_cast<size_t>(A.length()), cols), A.mul(c, target));
  require(x.has_value(), ErrorCode::kInternal, "coefficient does not reduce to a polynomial in x1, x2");
  Polynomial P(A.nvars(), A.field());
  for (size_t k = 0; k < monos.size(); ++k) P.add_term(monos[k], (*x)[k]);
  return P;
}

inline RingMap map_from(const ArtinAlgebra& A, const std::vector<Vector>& images) {
  std::vector<Polynomial> polys;
  for (const auto& v : images) polys.push_back(A.to_polynomial(v));
  return RingMap(std::move(polys), A.truncation());
}

inline Vector random_linear(const ArtinAlgebra& A, Rng& rng) {
  Vector v = A.zero();
  for (int i = 0; i < A.nvars(); ++i) v = v + Scalar::from_rational(A.field(), mpq_class(rng.uniform(-2, 2))) * A.variable(i);
  return v;
}

/// Appends coordinate variables until the linear parts span 𝔪/𝔪^2.
inline void complete_basis(const ArtinAlgebra& A, std::vector<Vector>& elems) {
  std::vector<Vector> lin;
  for (const auto& v : elems) lin.push_back(A.degree_part(v, 1));
  for (int i = 0; i < A.nvars() && static_cast<int>(elems.size()) < A.embedding_dimension(); ++i) {
    Vector x = A.variable(i);
    lin.push_back(A.degree_part(x, 1));
    if (rank_of(A, lin) == lin.size()) {
      elems.push_back(x);
    } else {
      lin.pop_back();
    }
  }
  require(static_cast<int>(elems.size()) == A.embedding_dimension(), ErrorCode::kInternal, "could not complete a minimal generating set");
}

inline int last_two(const HilbertFunction& H) {
  int t = 0;
  for (int j = 1; j <= H.socle_degree(); ++j) {
    if (H[j] == 2) t = j;
  }
  return t;
}

inline bool lean_almost(const ArtinAlgebra& A, const Vector& x1, const Vector& x2, int t) {
  if (is_zero(A.pow(x1, A.socle_degree()))) return false;
  Vector p = A.pow(x1, 1);
  for (int j = 2; j <= t; ++j) {
    Vector q = A.mul(p, x2);
    p = A.mul(p, x1);
    if (rank_of(A, {A.degree_part(p, j), A.degree_part(q, j)}) != 2) return false;
  }
  return true;
}

inline void require_square_presentation(const ArtinAlgebra& A) {
  require(A.embedding_dimension() == A.nvars(), ErrorCode::kNotApplicable, "normalization needs the ideal inside the square of the maximal ideal");
}

}  // namespace detail

/// Elements x1 (stretched) or x1, x2 (almost stretched) in lean position,
/// completed by coordinate variables to a minimal generating set of 𝔪.
inline LeanBasis find_lean_basis(const ArtinAlgebra& A, uint64_t seed = 0, int budget = 100) {
  const int s = A.socle_degree();
  const int h2 = power_gens(A, 2);
  require(s >= 2 && (h2 == 1 || h2 == 2), ErrorCode::kNotApplicable, "lean bases exist for stretched and almost stretched algebras");
  const int n = A.nvars();
  Rng rng(seed);
  LeanBasis out;
  if (h2 == 1) {
    auto ok = [&](const Vector& x) { return !is_zero(A.pow(x, s)); };
    for (int i = 0; i < n && out.elements.empty(); ++i) {
      ++out.attempts;
      if (ok(A.variable(i))) out.elements.push_back(A.variable(i));
    }
    while (out.elements.empty() && out.attempts < budget) {
      ++out.attempts;
      Vector x = detail::random_linear(A, rng);
      if (ok(x)) out.elements.push_back(x);
    }
  } else {
    const int t = detail::last_two(A.hilbert());
    for (int i = 0; i < n && out.elements.empty(); ++i) {
      for (int j = 0; j < n && out.elements.empty(); ++j) {
        if (i == j) continue;
        ++out.attempts;
        if (detail::lean_almost(A, A.variable(i), A.variable(j), t)) out.elements = {A.variable(i), A.variable(j)};
      }
    }
    while (out.elements.empty() && out.attempts < budget) {
      ++out.attempts;
      Vector x1 = detail::random_linear(A, rng);
      Vector x2 = detail::random_linear(A, rng);
      if (detail::lean_almost(A, x1, x2, t)) out.elements = {x1, x2};
    }
  }
  require(!out.elements.empty(), ErrorCode::kSearchExhausted, "no lean basis found within " + std::to_string(budget) + " attempts");
  detail::complete_basis(A, out.elements);
  return out;
}

/// Coordinates y with I = image of the stretched model, units constant.
inline StretchedForm normalize_stretched(const ArtinAlgebra& A, const NormalizeOptions& options = {}) {
  require(is_stretched(A), ErrorCode::kNotStretched, "H(2) = " + std::to_string(power_gens(A, 2)) + ", expected 1 with s >= 2");
  detail::require_square_presentation(A);
  const int s = A.socle_degree();
  const int h = A.embedding_dimension();
  LeanBasis lean = find_lean_basis(A, options.seed, options.budget);
  const Vector y1 = lean.elements[0];
  const Vector top = A.pow(y1, s);

  std::vector<Vector> ys{y1};
  std::vector<Vector> lin{A.degree_part(y1, 1)};
  for (const auto& z : socle(A).basis) {
    lin.push_back(A.degree_part(z, 1));
    if (detail::rank_of(A, lin) == lin.size()) {
      ys.push_back(z);
    } else {
      lin.pop_back();
    }
  }
  const int tau = static_cast<int>(ys.size());

  std::vector<Vector> rest;
  std::vector<Vector> completed = ys;
  detail::complete_basis(A, completed);
  const Vector y1sq = A.mul(y1, y1);
  for (size_t k = static_cast<size_t>(tau); k < completed.size(); ++k) {
    const Vector& z = completed[k];
    Vector t = detail::must_solve(A, {y1sq}, A.mul(y1, z), "y1 z in y1^2 A")[0];
    rest.push_back(z - A.mul(y1, t));
  }
  const size_t m = rest.size();
  Matrix U(A.field(), m, m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i; j < m; ++j) U(i, j) = U(j, i) = detail::ratio(A.mul(rest[i], rest[j]), top);
  }
  StretchedParams p;
  p.h = h;
  p.s = s;
  p.tau = tau;
  p.field = A.field();
  if (m > 0) {
    Diagonalization d = diagonalize_symmetric(U);
    for (size_t i = 0; i < m; ++i) {
      Vector y = A.zero();
      for (size_t k = 0; k < m; ++k) y = y + d.basis(i, k) * rest[k];
      ys.push_back(y);
      p.units.push_back(Polynomial::constant(h, d.diagonal[i]));
    }
  }
  RingMap map = detail::map_from(A, ys);
  return {p, map, A.presentation()};
}

/// Coordinates with I = image of the almost stretched model (Gorenstein case);
/// the units u_j come out constant and a, w are polynomials in x1, x2.
inline AlmostStretchedForm normalize_almost_stretched_gorenstein(const ArtinAlgebra& A, const NormalizeOptions& options = {}) {
  require(is_almost_stretched(A), ErrorCode::kNotAlmostStretched, "H(2) = " + std::to_string(power_gens(A, 2)) + ", expected 2 with s >= 2");
  require(socle(A).tau == 1, ErrorCode::kNotGorenstein, "socle has dimension " + std::to_string(socle(A).tau));
  detail::require_square_presentation(A);
  const int s = A.socle_degree();
  const int h = A.embedding_dimension();
  const int t = detail::last_two(A.hilbert());
  require(s >= t + 1, ErrorCode::kNotApplicable, "needs H(s) = 1 below a length-2 stretch");
  LeanBasis lean = find_lean_basis(A, options.seed, options.budget);
  std::vector<Vector> x = lean.elements;
  const Vector& x1 = x[0];
  const Vector x1sq = A.mul(x1, x1);

  // x1 x_j = 0 for j >= 3
  for (size_t j = 2; j < x.size(); ++j) {
    auto bc = detail::must_solve(A, {x1sq, A.mul(x1, x[1])}, A.mul(x1, x[j]), "x1 x_j in (x1^2, x1 x2)");
    x[j] = x[j] - A.mul(bc[0], x1) - A.mul(bc[1], x[1]);
  }
  // x1^t x2 = 0
  {
    const Vector x1t = A.pow(x1, t);
    Vector c = detail::must_solve(A, {A.mul(x1t, x1)}, A.mul(x1t, x[1]), "x1^t x2 in (x1^{t+1})")[0];
    x[1] = x[1] - A.mul(c, x1);
  }
  const Vector top = A.pow(x1, s);
  const size_t m = x.size() - 2;
  Matrix U(A.field(), m, m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i; j < m; ++j) U(i, j) = U(j, i) = detail::ratio(A.mul(x[i + 2], x[j + 2]), top);
  }
  AlmostStretchedParams p;
  p.h = h;
  p.t = t;
  p.s = s;
  p.field = A.field();
  std::vector<Vector> rest;
  if (m > 0) {
    Diagonalization d = diagonalize_symmetric(U);
    for (size_t i = 0; i < m; ++i) {
      Vector y = A.zero();
      for (size_t k = 0; k < m; ++k) y = y + d.basis(i, k) * x[k + 2];
      rest.push_back(y);
      p.units.push_back(Polynomial::constant(h, d.diagonal[i]));
    }
  }
  // clear x2 x_j against the diagonal form
  Vector y2 = x[1];
  for (size_t i = 0; i < m; ++i) {
    Scalar aj = detail::ratio(A.mul(x[1], rest[i]), top);
    y2 = y2 - (aj / p.units[i].constant_term()) * rest[i];
  }
  const Vector x1y2 = A.mul(x1, y2);
  const Vector tail = A.pow(x1, s - t + 1);
  auto aw = detail::must_solve(A, {x1y2, tail}, A.mul(y2, y2), "x2^2 in (x1 x2, x1^{s-t+1})");
  require(A.is_unit(aw[1]), ErrorCode::kInternal, "w is not a unit");
  p.a = detail::project_two(A, aw[0], x1y2, x1, y2, s - 2);
  p.w = detail::project_two(A, aw[1], tail, x1, y2, t - 1);

  std::vector<Vector> images{x1, y2};
  images.insert(images.end(), rest.begin(), rest.end());
  RingMap map = detail::map_from(A, images);
  return {p, map, A.presentation()};
}

namespace detail {

/// Square roots of the residues of `units`, adjoining them when allowed.
inline FieldPtr field_for_roots(FieldPtr f, const std::vector<Scalar>& residues, bool allow_extensions) {
  for (const auto& r : residues) {
    Scalar c = r.lift(f);
    if (sqrt(c)) continue;
    require(allow_extensions, ErrorCode::kFieldExtensionRequired, c.to_string() + " is not a square in " + f->to_string());
    f = adjoin_sqrt(c);
  }
  return f;
}

}  // namespace detail

/// Rescales x_i (i > tau) so that every unit in the stretched model becomes 1.
inline StretchedForm rescale_stretched_units(const StretchedParams& params, const NormalizeOptions& options = {}) {
  std::vector<Scalar> residues;
  for (const auto& u : params.units) residues.push_back(u.constant_term().inverse());
  const FieldPtr f = detail::field_for_roots(params.field, residues, options.allow_extensions);
  const StretchedParams p = params.lift(f);
  const ArtinAlgebra A = build_quotient(make_stretched(p));
  const int n = p.h;
  StretchedParams out = p;
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) images.push_back(Polynomial::var(n, f, i));
  for (int i = p.tau; i < n; ++i) {
    const Polynomial& u = p.units[static_cast<size_t>(i - p.tau)];
    Vector r = nth_root(A, A.inverse(A.normal_form(u)), 2);
    images[static_cast<size_t>(i)] = mul_trunc(A.to_polynomial(r), images[static_cast<size_t>(i)], A.truncation());
    out.units[static_cast<size_t>(i - p.tau)] = Polynomial::constant(n, Scalar::one(f));
  }
  RingMap map(std::move(images), A.truncation());
  return {out, map, apply_map(map, make_stretched(out))};
}

/// Rescales x2 and x_j (j >= 3) so that w = u_j = 1 in the almost stretched model.
inline AlmostStretchedForm normalize_units(const AlmostStretchedParams& params, const NormalizeOptions& options = {}) {
  std::vector<Scalar> residues{params.w.constant_term().inverse()};
  for (const auto& u : params.units) residues.push_back(u.constant_term().inverse());
  const FieldPtr f = detail::field_for_roots(params.field, residues, options.allow_extensions);
  const AlmostStretchedParams p = params.lift(f);
  const ArtinAlgebra A = build_quotient(make_almost_stretched(p));
  const int n = p.h;
  const int D = A.truncation();
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) images.push_back(Polynomial::var(n, f, i));
  const Vector v = nth_root(A, A.inverse(A.normal_form(p.w)), 2);
  images[1] = mul_trunc(A.to_polynomial(v), images[1], D);
  for (int j = 2; j < n; ++j) {
    Vector r = nth_root(A, A.inverse(A.normal_form(p.units[static_cast<size_t>(j - 2)])), 2);
    images[static_cast<size_t>(j)] = mul_trunc(A.to_polynomial(r), images[static_cast<size_t>(j)], D);
  }
  // x2' = v x2 gives x2'^2 - (a v) x1 x2' - x1^{s-t+1}
  const Vector x1 = A.variable(0);
  const Vector x2n = A.mul(v, A.variable(1));
  AlmostStretchedParams out = p;
  out.a = detail::project_two(A, A.mul(A.normal_form(p.a), v), A.mul(x1, x2n), x1, x2n, p.s - 2);
  out.w = Polynomial::constant(n, Scalar::one(f));
  for (auto& u : out.units) u = Polynomial::constant(n, Scalar::one(f));
  RingMap map(std::move(images), D);
  return {out, map, apply_map(map, make_almost_stretched(out))};
}

namespace detail {

inline Polynomial embed_two(const Polynomial& p, int n) {
  Polynomial out(n, p.field());
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exponents e(static_cast<size_t>(n), 0);
    e[0] = m[0];
    e[1] = m[1];
    out.add_term(Monomial(e), c);
  }
  return out;
}

}  // namespace detail

/// Random stretched parameters with units of degree <= unit_degree.
inline StretchedParams random_stretched_params(Rng& rng, int h, int s, int tau, const FieldPtr& f = Field::rationals(), int unit_degree = 1) {
  StretchedParams p{h, s, tau, f, {}};
  for (int i = tau; i < h; ++i) p.units.push_back(random_unit(rng, h, f, unit_degree));
  return p;
}

/// Random almost stretched parameters; a and w depend on x1, x2 only.
inline AlmostStretchedParams random_almost_stretched_params(Rng& rng, int h, int t, int s, const FieldPtr& f = Field::rationals(), int degree = 1) {
  AlmostStretchedParams p;
  p.h = h;
  p.t = t;
  p.s = s;
  p.field = f;
  p.a = detail::embed_two(random_polynomial(rng, 2, f, 0, degree, rng.uniform(0, 2)), h);
  p.w = detail::embed_two(random_unit(rng, 2, f, degree), h);
  for (int j = 2; j < h; ++j) p.units.push_back(random_unit(rng, h, f, degree));
  return p;
}

}  // namespace artin

#pragma once

// Gorenstein complete intersections with Hilbert function (1,2,2,2,1,1,1):
// the four models and a certified classifier.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/structure.hpp"

namespace artin {

enum class Case7 { kCase1, kCase2a, kCase2b1, kCase2b2 };

inline const char* case_name(Case7 c) {
  switch (c) {
    case Case7::kCase1: return "Case1";
    case Case7::kCase2a: return "Case2a";
    case Case7::kCase2b1: return "Case2b1";
    case Case7::kCase2b2: return "Case2b2";
  }
  return "?";
}

inline Case7 parse_case(const std::string& s) {
  for (Case7 c : {Case7::kCase1, Case7::kCase2a, Case7::kCase2b1, Case7::kCase2b2}) {
    if (s == case_name(c)) return c;
  }
  fail(ErrorCode::kInvalidArgument, "unknown case '" + s + "'");
}

inline const HilbertFunction& hf7() {
  static const HilbertFunction H{1, 2, 2, 2, 1, 1, 1};
  return H;
}

inline constexpr int kClassifyTruncation = 9;

struct ClassificationResult {
  Case7 kind = Case7::kCase1;
  std::optional<Scalar> p;
  std::optional<Scalar> p_squared;
  FieldPtr field = Field::rationals();
  IdealPresentation input;  // over `field`
  IdealPresentation model;
  RingMap witness;          // apply_map(witness, model) presents `input`
  std::vector<std::pair<std::string, std::string>> trace;
};

struct ClassifyOptions {
  bool allow_extensions = true;
  uint64_t seed = 0;
};

namespace detail {

inline void check_p(const Scalar& p) {
  require(!p.is_zero(), ErrorCode::kInvalidArgument, "p must be nonzero");
  require(!(p * p).is_one(), ErrorCode::kInvalidArgument, "p^2 must differ from 1");
}

}  // namespace detail

/// Case1 (xy, y^4 - x^6), Case2a (x^3y, y^2 - x^4), Case2b1 (x^2, xy^3 - y^5),
/// Case2b2 (x^3y - p x^5, y^2 - x^4) with x = x1, y = x2.
inline IdealPresentation make_model(Case7 c, const std::optional<Scalar>& p = std::nullopt) {
  require(p.has_value() == (c == Case7::kCase2b2), ErrorCode::kInvalidArgument, "p is required exactly for Case2b2");
  const FieldPtr f = p ? p->field() : Field::rationals();
  auto P = [&](const char* s) { return parse_poly(s, 2, f); };
  switch (c) {
    case Case7::kCase1: return IdealPresentation(2, f, {P("x1*x2"), P("x2^4 - x1^6")});
    case Case7::kCase2a: return IdealPresentation(2, f, {P("x1^3*x2"), P("x2^2 - x1^4")});
    case Case7::kCase2b1: return IdealPresentation(2, f, {P("x1^2"), P("x1*x2^3 - x2^5")});
    case Case7::kCase2b2: {
      detail::check_p(*p);
      return IdealPresentation(2, f, {P("x1^3*x2") - *p * P("x1^5"), P("x2^2 - x1^4")});
    }
  }
  fail(ErrorCode::kInternal, "unreachable");
}

/// True iff the degree-2 initial form of I factors into two independent
/// linear forms over the base field, i.e. I contains xy for some minimal basis x, y.
inline bool contains_generator_product(const IdealPresentation& I) {
  LeadingForms lf = leading_forms(I);
  if (lf.by_degree.size() < 3 || lf.by_degree[2].size() != 1) return false;
  const Polynomial& q = lf.by_degree[2][0];
  const Scalar a = q.coefficient(Monomial{2, 0});
  const Scalar b = q.coefficient(Monomial{1, 1});
  const Scalar c = q.coefficient(Monomial{0, 2});
  const Scalar disc = b * b - Scalar(4).lift(q.field()) * a * c;
  return !disc.is_zero() && sqrt(disc).has_value();
}

/// p^2 differs for the two Case2b2 parameters, so the models are not isomorphic.
inline bool invariant_separates(Scalar p, Scalar q) {
  detail::check_p(p);
  detail::check_p(q);
  if (!same_field(p.field(), q.field())) {
    if (q.field()->extends(*p.field())) {
      p = p.lift(q.field());
    } else {
      q = q.lift(p.field());
    }
  }
  return !(p * p == q * q);
}

namespace detail {

/// An algebra that grows by quadratic extensions as square roots are needed.
class Workspace {
 public:
  Workspace(ArtinAlgebra A, bool allow) : A_(std::move(A)), allow_(allow) {}

  const ArtinAlgebra& algebra() const { return A_; }
  const FieldPtr& field() const { return A_.field(); }

  /// A square root of the unit u; `live` elements are lifted if the field grows.
  Vector sqrt(Vector u, std::initializer_list<Vector*> live) {
    if (!artin::sqrt(u[0])) {
      require(allow_, ErrorCode::kFieldExtensionRequired, u[0].to_string() + " is not a square in " + field()->to_string());
      FieldPtr f = adjoin_sqrt(u[0]);
      A_ = A_.lift(f);
      for (Vector* v : live) *v = lift(*v, f);
      u = lift(u, f);
    }
    return nth_root(A_, u, 2);
  }

 private:
  ArtinAlgebra A_;
  bool allow_;
};

struct Outcome {
  Case7 kind;
  Vector x;
  Vector y;
  std::optional<Scalar> p;
};

inline Outcome case1(Workspace& ws, const Vector& av, std::vector<std::pair<std::string, std::string>>& trace) {
  const ArtinAlgebra& A0 = ws.algebra();
  const Vector y1 = A0.variable(0);
  const Vector y2 = A0.variable(1);
  Vector z1 = A0.mul(av, y1) - y2;
  Vector z2 = A0.pow(y1, 3) + A0.mul(av, y2);
  require(is_zero(A0.mul(z1, z2)), ErrorCode::kInternal, "z1 z2 does not vanish");
  Vector x0 = z1;
  Vector y0 = z2;
  if (A0.order(A0.pow(z1, 4)) != 4) std::swap(x0, y0);
  require(A0.order(A0.pow(x0, 4)) == 4, ErrorCode::kInternal, "no generator with x^4 outside m^5");
  const Scalar mu = ratio(A0.pow(y0, 4), A0.pow(x0, 6));
  trace.emplace_back("mu", mu.to_string());
  Vector nu = ws.sqrt(A0.scalar(mu), {&x0, &y0});
  const ArtinAlgebra& A = ws.algebra();
  return {Case7::kCase1, A.mul(nu, x0), A.mul(nu, y0), std::nullopt};
}

inline Outcome case2(Workspace& ws, Vector av, std::vector<std::pair<std::string, std::string>>& trace) {
  const ArtinAlgebra& A = ws.algebra();
  const Vector y1 = A.variable(0);
  const Vector y2 = A.variable(1);
  auto bc = must_solve(A, {y1, y2}, av, "a = b y1 + c y2");
  trace.emplace_back("b", to_string(A.to_polynomial(bc[0])));
  trace.emplace_back("c", to_string(A.to_polynomial(bc[1])));
  // residue 1: no extension
  const Vector v = ws.sqrt(A.one() - A.mul(bc[1], y1), {});
  const Vector x1 = y1;
  const Vector x2 = A.mul(v, y2);
  Vector d = A.mul(bc[0], A.inverse(v));
  trace.emplace_back("v", to_string(A.to_polynomial(v)));
  trace.emplace_back("d", to_string(A.to_polynomial(d)));
  require(A.mul(x2, x2) == A.mul(d, A.mul(A.pow(x1, 2), x2)) + A.pow(x1, 4), ErrorCode::kInternal, "x2^2 = d x1^2 x2 + x1^4 fails");

  if (d[0].is_zero()) {
    auto fe = must_solve(A, {x1, x2}, d, "d = f x1 + e x2");
    const Vector w = ws.sqrt(A.one() - A.mul(fe[1], A.pow(x1, 2)), {});
    trace.emplace_back("e", to_string(A.to_polynomial(fe[1])));
    return {Case7::kCase2a, x1, A.mul(w, x2), std::nullopt};
  }

  const Scalar quarter(1, 4);
  const Scalar dd = d[0] * d[0] + Scalar(4).lift(A.field());
  if (dd.is_zero()) {
    const Vector x15 = A.pow(x1, 5);
    const Vector k = A.one() + quarter.lift(A.field()) * A.mul(d, d);
    const Vector e = must_solve(A, {x15}, A.mul(k, A.pow(x1, 4)), "(1 + d^2/4) x1^4 in (x1^5)")[0];
    const Vector dinv = A.inverse(d);
    const Vector ed = A.mul(e, dinv);
    const Scalar half(1, 2);
    Vector l = x2 - half.lift(A.field()) * A.mul(d, A.pow(x1, 2)) + A.mul(ed, A.pow(x1, 3)) + A.mul(A.mul(ed, A.mul(ed, dinv)), A.pow(x1, 4));
    const Vector vv = Scalar(-1, 2).lift(A.field()) * d + A.mul(ed, x1);
    trace.emplace_back("e", to_string(A.to_polynomial(e)));
    trace.emplace_back("l", to_string(A.to_polynomial(l)));
    require(is_zero(A.mul(l, l)), ErrorCode::kInternal, "l^2 does not vanish");
    require(A.mul(A.pow(x1, 3), l) == A.mul(vv, x15), ErrorCode::kInternal, "x1^3 l = v x1^5 fails");
    return {Case7::kCase2b1, A.mul(l, A.inverse(vv)), x1, std::nullopt};
  }

  // c^2 = d^2 + 4, p = d/c, x = x1, y = -(2/c)(x2 - (d/2) x1^2)
  Vector x1l = x1;
  Vector x2l = x2;
  Vector dl = d;
  Vector c = ws.sqrt(A.mul(d, d) + A.scalar(Scalar(4).lift(A.field())), {&x1l, &x2l, &dl});
  const ArtinAlgebra& B = ws.algebra();
  const FieldPtr& f = B.field();
  const Vector cinv = B.inverse(c);
  const Vector p = B.mul(dl, cinv);
  const Vector x = x1l;
  const Vector y = Scalar(-2).lift(f) * B.mul(cinv, x2l - Scalar(1, 2).lift(f) * B.mul(dl, B.pow(x1l, 2)));
  trace.emplace_back("c", to_string(B.to_polynomial(c)));
  trace.emplace_back("p", to_string(B.to_polynomial(p)));
  require(B.mul(y, y) == B.pow(x, 4), ErrorCode::kInternal, "y^2 = x^4 fails");
  require(B.mul(B.pow(x, 3), y) == B.mul(p, B.pow(x, 5)), ErrorCode::kInternal, "x^3 y = p x^5 fails");

  // replace p by its residue
  const Scalar pb = p[0];
  const Vector x6 = B.pow(x, 6);
  const Scalar alpha = ratio(B.mul(B.pow(x, 3), y) - pb * B.pow(x, 5), x6);
  const Scalar mu = alpha / (pb * pb - Scalar::one(f));
  const Scalar kappa = mu * pb / Scalar(2).lift(f);
  const Vector X = x + kappa * B.pow(x, 2);
  const Vector Y1 = y + mu * B.pow(x, 3);
  const Scalar gamma = ratio(B.mul(Y1, Y1) - B.pow(X, 4), x6);
  const Scalar nu = -gamma / (Scalar(2).lift(f) * pb);
  const Vector Y = Y1 + nu * B.pow(x, 4);
  require(B.mul(B.pow(X, 3), Y) == pb * B.pow(X, 5), ErrorCode::kInternal, "X^3 Y = p X^5 fails");
  require(B.mul(Y, Y) == B.pow(X, 4), ErrorCode::kInternal, "Y^2 = X^4 fails");
  return {Case7::kCase2b2, X, Y, pb};
}

inline ClassificationResult finish(const Workspace& ws, const IdealPresentation& I, const Outcome& o, std::vector<std::pair<std::string, std::string>> trace) {
  const ArtinAlgebra& A = ws.algebra();
  ClassificationResult r;
  r.kind = o.kind;
  r.field = A.field();
  r.input = I.lift(r.field);
  if (o.p) {
    r.p = o.p;
    r.p_squared = *o.p * *o.p;
  }
  r.model = make_model(o.kind, o.p);
  r.model = r.model.lift(r.field);
  r.witness = map_from(A, {o.x, o.y});
  r.trace = std::move(trace);
  require(same_ideal(apply_map(r.witness, r.model), r.input, A.truncation()), ErrorCode::kInternal, "witness map does not certify the classification");
  return r;
}

}  // namespace detail

/// Classifies (y1^3 y2, y2^2 - a y1 y2 - y1^4).
inline ClassificationResult classify(const Polynomial& a, const ClassifyOptions& options = {}) {
  require(a.nvars() == 2, ErrorCode::kNvarsMismatch, "a must be a polynomial in two variables");
  AlmostStretchedParams p;
  p.h = 2;
  p.t = 3;
  p.s = 6;
  p.field = a.field();
  p.a = a;
  p.w = Polynomial::constant(2, Scalar::one(a.field()));
  const IdealPresentation I = make_almost_stretched(p);
  detail::Workspace ws(build_quotient(I, QuotientOptions{kClassifyTruncation}), options.allow_extensions);
  const Vector av = ws.algebra().normal_form(a);
  std::vector<std::pair<std::string, std::string>> trace{{"a", to_string(a)}};
  detail::Outcome o = av[0].is_zero() ? detail::case2(ws, av, trace) : detail::case1(ws, av, trace);
  return detail::finish(ws, I, o, std::move(trace));
}

/// Normalizes I to the form above and classifies it; the witness is composed
/// through every normalization step.
inline ClassificationResult classify_ideal(const IdealPresentation& I, const ClassifyOptions& options = {}) {
  require(I.nvars == 2, ErrorCode::kNvarsMismatch, "classify7 works in two variables");
  const ArtinAlgebra A = build_quotient(I, QuotientOptions{kClassifyTruncation});
  require(A.hilbert() == hf7(), ErrorCode::kWrongHilbertFunction, "Hilbert function " + A.hilbert().to_string() + ", expected " + hf7().to_string());
  require(socle(A).tau == 1, ErrorCode::kNotGorenstein, "socle has dimension " + std::to_string(socle(A).tau));
  NormalizeOptions no;
  no.seed = options.seed;
  no.allow_extensions = options.allow_extensions;
  AlmostStretchedForm first = normalize_almost_stretched_gorenstein(A, no);
  AlmostStretchedForm second = normalize_units(first.params, no);
  ClassificationResult r = classify(second.params.a, options);
  const FieldPtr f = r.field;
  r.witness = compose(r.witness, compose(second.map.lift(f), first.map.lift(f)));
  r.input = I.lift(f);
  const int D = std::max(A.truncation(), kClassifyTruncation);
  require(same_ideal(apply_map(r.witness, r.model), r.input, D), ErrorCode::kInternal, "composed witness does not certify the classification");
  return r;
}

}  // namespace artin

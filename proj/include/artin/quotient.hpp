#pragma once

// Artinian quotients A = R/I, built by echelonizing the truncated ideal
// I + 𝔫^D in the space of polynomials of degree < D.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artin/linalg.hpp"
#include "artin/polynomial.hpp"
#include "artin/ring_map.hpp"

namespace artin {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxTruncation = 32;

class HilbertFunction {
 public:
  HilbertFunction() = default;
  HilbertFunction(std::vector<int> values) : v_(std::move(values)) {  // NOLINT(google-explicit-constructor)
    while (!v_.empty() && v_.back() == 0) v_.pop_back();
  }
  HilbertFunction(std::initializer_list<int> values) : HilbertFunction(std::vector<int>(values)) {}

  const std::vector<int>& values() const { return v_; }
  int operator[](int j) const { return j >= 0 && j < static_cast<int>(v_.size()) ? v_[static_cast<size_t>(j)] : 0; }
  int socle_degree() const { return static_cast<int>(v_.size()) - 1; }
  int length() const {
    int e = 0;
    for (int x : v_) e += x;
    return e;
  }

  friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) { return a.v_ == b.v_; }
  friend bool operator!=(const HilbertFunction& a, const HilbertFunction& b) { return !(a == b); }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < v_.size(); ++i) out += (i ? "," : "") + std::to_string(v_[i]);
    return out + ")";
  }

 private:
  std::vector<int> v_;
};

// ---------------------------------------------------------------------------
// Ideal presentations and their text form.

struct IdealPresentation {
  int nvars = 0;
  FieldPtr field = Field::rationals();
  std::vector<Polynomial> gens;

  IdealPresentation() = default;
  IdealPresentation(int n, FieldPtr f, std::vector<Polynomial> g) : nvars(n), field(std::move(f)), gens(std::move(g)) {
    for (const auto& p : gens) {
      require(p.nvars() == nvars, ErrorCode::kNvarsMismatch, "generator has the wrong number of variables");
      require(same_field(p.field(), field), ErrorCode::kFieldMismatch, "generator lives over another field");
      require(p.constant_term().is_zero(), ErrorCode::kInvalidArgument, "generator " + to_string(p) + " is not in the maximal ideal");
    }
  }

  /// True when every generator lies in 𝔫².
  bool in_square() const {
    for (const auto& p : gens) {
      if (p.order() == 1) return false;
    }
    return true;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& p : gens) d = std::max(d, p.degree());
    return d;
  }

  IdealPresentation lift(const FieldPtr& f) const {
    std::vector<Polynomial> g;
    for (const auto& p : gens) g.push_back(p.lift(f));
    return IdealPresentation(nvars, f, std::move(g));
  }
};

inline IdealPresentation apply_map(const RingMap& m, const IdealPresentation& I) {
  std::vector<Polynomial> g;
  for (const auto& p : I.gens) {
    Polynomial q = apply_map(m, p);
    if (!q.is_zero()) g.push_back(std::move(q));
  }
  return IdealPresentation(I.nvars, m.field(), std::move(g));
}

/// "QQ", "sqrt(q)" or "sqrt(q), sqrt(<scalar of the first layer>)".
inline std::string field_spec(const Field& f) {
  if (f.depth() == 0) return "QQ";
  std::string out = "sqrt(" + f.theta(1)[0].get_str() + ")";
  if (f.depth() == 2) out += ", sqrt(" + Scalar(f.layer_field(1), f.theta(2)).to_string() + ")";
  return out;
}

inline FieldPtr parse_field_spec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  FieldPtr f = Field::rationals();
  if (s.empty() || s == "QQ") return f;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, 5, "sqrt(") != 0) fail(ErrorCode::kSyntaxError, "field layers are written sqrt(...)");
    pos += 5;
    int depth = 1;
    size_t end = pos;
    while (end < s.size() && depth > 0) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      if (depth > 0) ++end;
    }
    if (depth != 0) fail(ErrorCode::kSyntaxError, "unbalanced parentheses in field spec");
    Polynomial theta = parse_poly(s.substr(pos, end - pos), 0, f);
    f = adjoin_sqrt(theta.is_zero() ? Scalar::zero(f) : theta.constant_term());
    pos = end + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') fail(ErrorCode::kSyntaxError, "expected ',' between field layers");
      ++pos;
    }
  }
  return f;
}

/// Reads "vars: h", an optional "field: ..." line, then one generator per line.
inline IdealPresentation parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int nvars = -1;
  FieldPtr field = Field::rationals();
  std::vector<Polynomial> gens;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (nvars < 0) {
      if (line.rfind("vars:", 0) != 0) fail(ErrorCode::kSyntaxError, "ideal file must start with 'vars: h'");
      try {
        nvars = std::stoi(line.substr(5));
      } catch (const std::exception&) {
        fail(ErrorCode::kSyntaxError, "bad variable count in '" + line + "'");
      }
      require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::kInvalidArgument, "variable count must be in 1.." + std::to_string(kMaxVars));
      continue;
    }
    if (line.rfind("field:", 0) == 0) {
      require(gens.empty(), ErrorCode::kSyntaxError, "'field:' must precede the generators");
      field = parse_field_spec(line.substr(6));
      continue;
    }
    Polynomial p = parse_poly(line, nvars, field);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  require(nvars >= 1, ErrorCode::kSyntaxError, "missing 'vars: h' line");
  return IdealPresentation(nvars, field, std::move(gens));
}

inline std::string to_text(const IdealPresentation& I) {
  std::string out = "vars: " + std::to_string(I.nvars) + "\n";
  if (I.field->depth() > 0) out += "field: " + field_spec(*I.field) + "\n";
  for (const auto& g : I.gens) out += to_string(g) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Monomials of degree < D, indexed in ascending graded order.

class MonomialTable {
 public:
  MonomialTable(int nvars, int D) : n_(nvars), D_(D) {
    require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::kInvalidArgument, "at most " + std::to_string(kMaxVars) + " variables are supported");
    require(D >= 1 && D < 256, ErrorCode::kInvalidArgument, "truncation degree out of range");
    for (int d = 0; d < D; ++d) {
      degree_start_.push_back(monos_.size());
      auto ms = monomials_of_degree(n_, d);
      std::sort(ms.begin(), ms.end(), GradedLess());
      for (auto& m : ms) {
        index_.emplace(key(m), static_cast<uint32_t>(monos_.size()));
        monos_.push_back(std::move(m));
      }
    }
    degree_start_.push_back(monos_.size());
    mul_.assign(monos_.size() * static_cast<size_t>(n_), -1);
    for (size_t k = 0; k < monos_.size(); ++k) {
      if (monos_[k].degree() + 1 >= D_) continue;
      for (int i = 0; i < n_; ++i) mul_[k * static_cast<size_t>(n_) + static_cast<size_t>(i)] = static_cast<int32_t>(find(monos_[k] * Monomial::var(n_, i)));
    }
  }

  int nvars() const { return n_; }
  int truncation() const { return D_; }
  size_t size() const { return monos_.size(); }
  const Monomial& operator[](size_t k) const { return monos_[k]; }
  int degree(size_t k) const { return monos_[k].degree(); }

  /// Index of m, or -1 when deg m >= D.
  int64_t find(const Monomial& m) const {
    if (m.degree() >= D_) return -1;
    return index_.at(key(m));
  }
  /// Index of x_i * monomial k, or -1 when it falls past the truncation.
  int32_t times_var(size_t k, int i) const { return mul_[k * static_cast<size_t>(n_) + static_cast<size_t>(i)]; }

  size_t degree_begin(int d) const { return degree_start_[static_cast<size_t>(std::min(d, D_))]; }
  size_t degree_end(int d) const { return degree_start_[static_cast<size_t>(std::min(d + 1, D_))]; }

 private:
  static uint64_t key(const Monomial& m) {
    uint64_t k = 0;
    for (int i = 0; i < m.nvars(); ++i) k |= static_cast<uint64_t>(m[i]) << (8 * i);
    return k;
  }

  int n_;
  int D_;
  std::vector<Monomial> monos_;
  std::unordered_map<uint64_t, uint32_t> index_;
  std::vector<int32_t> mul_;
  std::vector<size_t> degree_start_;
};

/// Sparse vector over table indices, sorted by index.
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

inline SparseVec to_sparse(const MonomialTable& t, const Polynomial& p) {
  SparseVec v;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() >= t.truncation()) break;
    v.emplace_back(static_cast<uint32_t>(t.find(m)), c);
  }
  return v;
}

inline Polynomial from_sparse(const MonomialTable& t, const FieldPtr& f, const SparseVec& v) {
  Polynomial p(t.nvars(), f);
  for (const auto& [k, c] : v) p.add_term(t[k], c);
  return p;
}

inline SparseVec times_var(const MonomialTable& t, const SparseVec& v, int i) {
  SparseVec r;
  r.reserve(v.size());
  for (const auto& [k, c] : v) {
    int32_t j = t.times_var(k, i);
    if (j < 0) break;  // multiplication is monotone, so the rest fall off too
    r.emplace_back(static_cast<uint32_t>(j), c);
  }
  return r;
}

/// v[from:] - c * row, merged.
inline SparseVec axpy_tail(const SparseVec& v, size_t from, const Scalar& c, const SparseVec& row) {
  SparseVec r;
  r.reserve(v.size() - from + row.size());
  size_t i = from, j = 0;
  while (i < v.size() || j < row.size()) {
    if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
      r.push_back(v[i++]);
    } else if (i == v.size() || row[j].first < v[i].first) {
      r.emplace_back(row[j].first, -(c * row[j].second));
      ++j;
    } else {
      Scalar x = v[i].second - c * row[j].second;
      if (!x.is_zero()) r.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return r;
}

/// Rows with distinct pivots; the pivot of a row is its lowest monomial and
/// has coefficient one.
class EchelonSpace {
 public:
  EchelonSpace(std::shared_ptr<const MonomialTable> table, FieldPtr field)
      : table_(std::move(table)), field_(std::move(field)), pivot_row_(table_->size(), -1) {}

  const MonomialTable& table() const { return *table_; }
  const std::shared_ptr<const MonomialTable>& table_ptr() const { return table_; }
  const FieldPtr& field() const { return field_; }
  size_t dimension() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(size_t k) const { return pivot_row_[k] >= 0; }

  /// Cancels leading terms until the lowest monomial is not a pivot.
  SparseVec head_reduce(SparseVec v) const {
    while (!v.empty()) {
      int32_t r = pivot_row_[v.front().first];
      if (r < 0) break;
      Scalar c = v.front().second;
      v = axpy_tail(v, 0, c, rows_[static_cast<size_t>(r)]);
    }
    return v;
  }

  /// Normal form: no term of the result is a pivot.
  SparseVec reduce(SparseVec v) const {
    SparseVec out;
    size_t pos = 0;
    while (pos < v.size()) {
      int32_t r = pivot_row_[v[pos].first];
      if (r < 0) {
        out.push_back(v[pos++]);
        continue;
      }
      Scalar c = v[pos].second;
      v = axpy_tail(v, pos, c, rows_[static_cast<size_t>(r)]);
      pos = 0;
    }
    return out;
  }

  /// Adds v to the span. Returns the inserted row, or empty when v was dependent.
  const SparseVec* insert(SparseVec v) {
    v = head_reduce(std::move(v));
    if (v.empty()) return nullptr;
    Scalar inv = v.front().second.inverse();
    if (!inv.is_one()) {
      for (auto& [k, c] : v) c *= inv;
    }
    pivot_row_[v.front().first] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    return &rows_.back();
  }

  bool contains(const SparseVec& v) const { return head_reduce(v).empty(); }

 private:
  std::shared_ptr<const MonomialTable> table_;
  FieldPtr field_;
  std::vector<SparseVec> rows_;
  std::vector<int32_t> pivot_row_;
};

/// Span of all m * g (g a seed, m a monomial) modulo 𝔫^D.
inline EchelonSpace ideal_closure(const std::shared_ptr<const MonomialTable>& table, const FieldPtr& field, const std::vector<SparseVec>& seeds) {
  EchelonSpace space(table, field);
  std::deque<SparseVec> queue(seeds.begin(), seeds.end());
  const int n = table->nvars();
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    const SparseVec* row = space.insert(std::move(v));
    if (!row) continue;
    SparseVec copy = *row;
    for (int i = 0; i < n; ++i) {
      SparseVec w = times_var(*table, copy, i);
      if (!w.empty()) queue.push_back(std::move(w));
    }
  }
  return space;
}

inline EchelonSpace ideal_space(const IdealPresentation& I, int D) {
  auto table = std::make_shared<const MonomialTable>(I.nvars, D);
  std::vector<SparseVec> seeds;
  for (const auto& g : I.gens) seeds.push_back(to_sparse(*table, g));
  return ideal_closure(table, I.field, seeds);
}

/// Span of 𝔫·I modulo 𝔫^D.
inline EchelonSpace maximal_times_ideal_space(const IdealPresentation& I, int D) {
  auto table = std::make_shared<const MonomialTable>(I.nvars, D);
  std::vector<SparseVec> seeds;
  for (const auto& g : I.gens) {
    SparseVec v = to_sparse(*table, g);
    for (int i = 0; i < I.nvars; ++i) seeds.push_back(times_var(*table, v, i));
  }
  return ideal_closure(table, I.field, seeds);
}

/// Row-space equality of I + 𝔫^D and J + 𝔫^D.
inline bool same_ideal(const IdealPresentation& I, const IdealPresentation& J, int D) {
  if (I.nvars != J.nvars || !same_field(I.field, J.field)) return false;
  EchelonSpace a = ideal_space(I, D);
  EchelonSpace b = ideal_space(J, D);
  if (a.dimension() != b.dimension()) return false;
  for (const auto& r : a.rows()) {
    if (!b.contains(r)) return false;
  }
  for (const auto& r : b.rows()) {
    if (!a.contains(r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct QuotientOptions {
  int min_truncation = 0;
};

class ArtinAlgebra;
ArtinAlgebra build_quotient(const IdealPresentation& I, const QuotientOptions& options = {});

/// A = R/I with the standard monomial basis. Elements are coordinate vectors
/// over that basis; basis[0] = 1.
class ArtinAlgebra {
 public:
  const IdealPresentation& presentation() const { return source_; }
  const FieldPtr& field() const { return source_.field; }
  int nvars() const { return source_.nvars; }
  int truncation() const { return D_; }
  const HilbertFunction& hilbert() const { return hf_; }
  int length() const { return static_cast<int>(basis_.size()); }
  int socle_degree() const { return hf_.socle_degree(); }
  int embedding_dimension() const { return hf_[1]; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Matrix& multiplication(int i) const { return mult_[static_cast<size_t>(i)]; }

  /// Basis indices of degree d form the range [degree_begin(d), degree_end(d)).
  size_t degree_begin(int d) const { return degree_start_[static_cast<size_t>(std::clamp(d, 0, socle_degree() + 1))]; }
  size_t degree_end(int d) const { return degree_begin(d + 1); }

  Vector zero() const { return zero_vector(field(), basis_.size()); }
  Vector one() const {
    Vector v = zero();
    v[0] = Scalar::one(field());
    return v;
  }
  Vector scalar(const Scalar& c) const {
    Vector v = zero();
    v[0] = c;
    return v;
  }
  Vector variable(int i) const { return normal_form(Polynomial::var(nvars(), field(), i)); }

  Vector normal_form(const Polynomial& p) const {
    require(p.nvars() == nvars(), ErrorCode::kNvarsMismatch, "polynomial has the wrong number of variables");
    require(same_field(p.field(), field()), ErrorCode::kFieldMismatch, "polynomial lives over another field");
    SparseVec r = space_->reduce(to_sparse(*table_, p));
    Vector v = zero();
    for (const auto& [k, c] : r) v[static_cast<size_t>(table_to_basis_[k])] = c;
    return v;
  }

  Polynomial to_polynomial(const Vector& v) const {
    Polynomial p(nvars(), field());
    for (size_t k = 0; k < v.size(); ++k) p.add_term(basis_[k], v[k]);
    return p;
  }

  /// Columns are u * basis[k].
  Matrix multiplication_matrix(const Vector& u) const {
    std::vector<Vector> cols(basis_.size());
    cols[0] = u;
    for (size_t k = 1; k < basis_.size(); ++k) {
      const auto& [var, parent] = parent_[k];
      cols[k] = mult_[static_cast<size_t>(var)] * cols[parent];
    }
    return Matrix::from_columns(field(), basis_.size(), cols);
  }

  Vector mul(const Vector& u, const Vector& v) const {
    // u*v = sum_k v_k (u * m_k), with u * m_k built along parent chains
    std::vector<Vector> um(basis_.size());
    um[0] = u;
    Vector acc = zero();
    for (size_t k = 0; k < basis_.size(); ++k) {
      if (k > 0) {
        const auto& [var, parent] = parent_[k];
        um[k] = mult_[static_cast<size_t>(var)] * um[parent];
      }
      if (!v[k].is_zero()) acc = acc + v[k] * um[k];
    }
    return acc;
  }

  Vector pow(const Vector& u, int n) const {
    Vector r = one();
    Vector b = u;
    while (n > 0) {
      if (n & 1) r = mul(r, b);
      n >>= 1;
      if (n > 0) b = mul(b, b);
    }
    return r;
  }

  bool is_unit(const Vector& u) const { return !u[0].is_zero(); }

  Vector inverse(const Vector& u) const {
    require(is_unit(u), ErrorCode::kInvalidArgument, "element is not a unit");
    Scalar c = u[0].inverse();
    Vector m = c * u;
    m[0] = Scalar::zero(field());
    // (1 + m)^{-1} = sum (-m)^k, finite since m is nilpotent
    Vector neg_m = Scalar(-1).lift(field()) * m;
    Vector term = one();
    Vector acc = one();
    for (int k = 1; k <= socle_degree(); ++k) {
      term = mul(term, neg_m);
      if (is_zero(term)) break;
      acc = acc + term;
    }
    return c * acc;
  }

  /// 𝔪-adic order: smallest basis degree with a nonzero coordinate; s+1 for zero.
  int order(const Vector& u) const {
    for (size_t k = 0; k < u.size(); ++k) {
      if (!u[k].is_zero()) return basis_[k].degree();
    }
    return socle_degree() + 1;
  }

  /// Coordinates of the image of u in 𝔪^d/𝔪^{d+1}.
  Vector degree_part(const Vector& u, int d) const {
    return Vector(u.begin() + static_cast<std::ptrdiff_t>(degree_begin(d)), u.begin() + static_cast<std::ptrdiff_t>(degree_end(d)));
  }

  /// The same algebra over a larger field.
  ArtinAlgebra lift(const FieldPtr& f) const {
    if (same_field(f, field())) return *this;
    return build_quotient(source_.lift(f), QuotientOptions{D_});
  }

 private:
  friend ArtinAlgebra build_quotient(const IdealPresentation& I, const QuotientOptions& options);

  IdealPresentation source_;
  int D_ = 0;
  std::shared_ptr<const MonomialTable> table_;
  std::shared_ptr<const EchelonSpace> space_;
  std::vector<Monomial> basis_;
  std::vector<int32_t> table_to_basis_;
  std::vector<size_t> degree_start_;
  std::vector<std::pair<int, size_t>> parent_;
  std::vector<Matrix> mult_;
  HilbertFunction hf_;
};

namespace detail {

inline int initial_truncation(const IdealPresentation& I, const QuotientOptions& options) {
  return std::max({4, I.max_degree() + 2, options.min_truncation});
}

/// H(j) for j < D of R/(I+𝔫^D), from the non-pivots.
inline std::vector<int> truncated_hilbert(const EchelonSpace& space) {
  const MonomialTable& t = space.table();
  std::vector<int> h(static_cast<size_t>(t.truncation()), 0);
  for (size_t k = 0; k < t.size(); ++k) {
    if (!space.is_pivot(k)) ++h[static_cast<size_t>(t.degree(k))];
  }
  return h;
}

inline bool reaches_zero(const std::vector<int>& h) { return std::find(h.begin(), h.end(), 0) != h.end(); }

}  // namespace detail

inline ArtinAlgebra build_quotient(const IdealPresentation& I, const QuotientOptions& options) {
  for (int D = detail::initial_truncation(I, options);; D = std::min(2 * D, kMaxTruncation)) {
    auto table = std::make_shared<const MonomialTable>(I.nvars, D);
    std::vector<SparseVec> seeds;
    for (const auto& g : I.gens) seeds.push_back(to_sparse(*table, g));
    auto space = std::make_shared<const EchelonSpace>(ideal_closure(table, I.field, seeds));
    std::vector<int> h = detail::truncated_hilbert(*space);
    if (!detail::reaches_zero(h)) {
      if (D >= kMaxTruncation) fail(ErrorCode::kNotArtinian, "Hilbert function has not vanished below degree " + std::to_string(kMaxTruncation));
      continue;
    }

    ArtinAlgebra A;
    A.source_ = I;
    A.D_ = D;
    A.table_ = table;
    A.space_ = space;
    A.hf_ = HilbertFunction(h);
    A.table_to_basis_.assign(table->size(), -1);
    for (size_t k = 0; k < table->size(); ++k) {
      if (space->is_pivot(k)) continue;
      A.table_to_basis_[k] = static_cast<int32_t>(A.basis_.size());
      A.basis_.push_back((*table)[k]);
    }
    const int s = A.hf_.socle_degree();
    size_t pos = 0;
    for (int d = 0; d <= s + 1; ++d) {
      while (pos < A.basis_.size() && A.basis_[pos].degree() < d) ++pos;
      A.degree_start_.push_back(pos);
    }
    // Standard monomials form an order ideal, so each has a standard parent.
    A.parent_.assign(A.basis_.size(), {0, 0});
    for (size_t k = 1; k < A.basis_.size(); ++k) {
      const Monomial& m = A.basis_[k];
      int var = 0;
      while (m[var] == 0) ++var;
      Monomial::Exponents e = m.exponents();
      --e[static_cast<size_t>(var)];
      int32_t parent = A.table_to_basis_[static_cast<size_t>(table->find(Monomial(e)))];
      require(parent >= 0, ErrorCode::kInternal, "standard monomials are not an order ideal");
      A.parent_[k] = {var, static_cast<size_t>(parent)};
    }
    const size_t e = A.basis_.size();
    for (int i = 0; i < I.nvars; ++i) {
      Matrix M(I.field, e, e);
      for (size_t k = 0; k < e; ++k) {
        int32_t j = table->times_var(static_cast<size_t>(table->find(A.basis_[k])), i);
        if (j < 0) continue;
        SparseVec r = space->reduce(SparseVec{{static_cast<uint32_t>(j), Scalar::one(I.field)}});
        for (const auto& [idx, c] : r) M(static_cast<size_t>(A.table_to_basis_[idx]), k) = c;
      }
      A.mult_.push_back(std::move(M));
    }
    return A;
  }
}

inline const HilbertFunction& hilbert_function(const ArtinAlgebra& A) { return A.hilbert(); }

struct SocleData {
  std::vector<Vector> basis;
  int tau = 0;
};

inline SocleData socle(const ArtinAlgebra& A) {
  const size_t e = static_cast<size_t>(A.length());
  Matrix stacked(A.field(), e * static_cast<size_t>(A.nvars()), e);
  for (int i = 0; i < A.nvars(); ++i) {
    const Matrix& M = A.multiplication(i);
    for (size_t r = 0; r < e; ++r) {
      for (size_t c = 0; c < e; ++c) stacked(static_cast<size_t>(i) * e + r, c) = M(r, c);
    }
  }
  SocleData out;
  out.basis = kernel(stacked);
  out.tau = static_cast<int>(out.basis.size());
  return out;
}

struct Invariants {
  int e = 0;
  int h = 0;
  int s = 0;
  int tau = 0;
  bool is_gorenstein = false;
};

inline Invariants invariants(const ArtinAlgebra& A) {
  Invariants inv;
  inv.e = A.length();
  inv.h = A.embedding_dimension();
  inv.s = A.socle_degree();
  inv.tau = socle(A).tau;
  inv.is_gorenstein = inv.tau == 1;
  return inv;
}

/// v(I) = dim (I + 𝔫^D)/(𝔫I + 𝔫^D) for D >= s+2. A truncation below that
/// threshold is raised to it.
inline int min_gens(const IdealPresentation& I, std::optional<int> truncation = std::nullopt) {
  if (I.gens.empty()) return 0;
  const ArtinAlgebra A = build_quotient(I);
  const int D = std::max(truncation.value_or(0), A.socle_degree() + 2);
  return static_cast<int>(ideal_space(I, D).dimension() - maximal_times_ideal_space(I, D).dimension());
}

/// v(𝔪^j), which equals H_A(j) in an Artinian quotient.
inline int power_gens(const ArtinAlgebra& A, int j) { return A.hilbert()[j]; }

inline bool is_stretched(const ArtinAlgebra& A) { return A.embedding_dimension() >= 1 && A.socle_degree() >= 2 && power_gens(A, 2) == 1; }
inline bool is_almost_stretched(const ArtinAlgebra& A) { return A.embedding_dimension() >= 1 && A.socle_degree() >= 2 && power_gens(A, 2) == 2; }

struct LeadingForms {
  std::vector<std::vector<Polynomial>> by_degree;  // basis of I*_j
  int v_star = 0;
};

/// Initial-form ideal I* in degrees <= s+1 and its minimal generator count.
inline LeadingForms leading_forms(const IdealPresentation& I) {
  const ArtinAlgebra A = build_quotient(I);
  const int D = A.socle_degree() + 2;
  EchelonSpace W = ideal_space(I, D);
  const MonomialTable& t = W.table();
  std::vector<std::vector<SparseVec>> forms(static_cast<size_t>(D));
  for (const auto& row : W.rows()) {
    const int d = t.degree(row.front().first);
    SparseVec hom;
    for (const auto& term : row) {
      if (t.degree(term.first) == d) hom.push_back(term);
    }
    forms[static_cast<size_t>(d)].push_back(std::move(hom));
  }
  LeadingForms out;
  for (int d = 0; d < D; ++d) {
    std::vector<Polynomial> polys;
    for (const auto& v : forms[static_cast<size_t>(d)]) polys.push_back(from_sparse(t, I.field, v));
    out.by_degree.push_back(std::move(polys));
    if (d == 0) continue;
    EchelonSpace products(W.table_ptr(), I.field);
    for (const auto& v : forms[static_cast<size_t>(d - 1)]) {
      for (int i = 0; i < I.nvars; ++i) products.insert(times_var(t, v, i));
    }
    out.v_star += static_cast<int>(forms[static_cast<size_t>(d)].size() - products.dimension());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hensel roots.

namespace detail {

inline Vector newton_root(const ArtinAlgebra& A, const Vector& a, int n, const Scalar& residue_root) {
  Vector c = A.scalar(residue_root);
  const Scalar nn = Scalar(n).lift(A.field());
  for (int iter = 0; iter < 2 * A.socle_degree() + 4; ++iter) {
    Vector diff = A.pow(c, n) - a;
    if (is_zero(diff)) return c;
    Vector deriv = nn * A.pow(c, n - 1);
    c = c - A.mul(diff, A.inverse(deriv));
  }
  fail(ErrorCode::kInternal, "Newton iteration did not converge");
}

}  // namespace detail

/// c with c^n = a in A, for a unit a whose residue is an n-th power in the field.
inline Vector nth_root(const ArtinAlgebra& A, const Vector& a, int n) {
  require(n >= 2, ErrorCode::kInvalidArgument, "root index must be at least 2");
  require(A.is_unit(a), ErrorCode::kInvalidArgument, "nth_root needs a unit");
  auto r = root(a[0], n);
  if (!r) fail(ErrorCode::kResidueNotPower, a[0].to_string() + " has no " + std::to_string(n) + "-th root in " + A.field()->to_string());
  return detail::newton_root(A, a, n, *r);
}

struct ExtendedRoot {
  ArtinAlgebra algebra;  // A itself, or A over a quadratic extension
  Vector value;
};

/// As nth_root, adjoining a square root of the residue when needed (n = 2 only).
inline ExtendedRoot nth_root_extending(const ArtinAlgebra& A, const Vector& a, int n) {
  require(A.is_unit(a), ErrorCode::kInvalidArgument, "nth_root needs a unit");
  if (root(a[0], n)) return {A, nth_root(A, a, n)};
  if (n != 2) fail(ErrorCode::kFieldExtensionRequired, "only square roots can be adjoined");
  FieldPtr f = adjoin_sqrt(a[0]);
  ArtinAlgebra B = A.lift(f);
  Vector b = lift(a, f);
  return {B, nth_root(B, b, n)};
}

}  // namespace artin

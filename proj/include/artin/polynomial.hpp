#pragma once

// Monomials, sparse polynomials with exact coefficients, truncated
// arithmetic, and the text grammar.

#include <boost/container/small_vector.hpp>
#include <cctype>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/field.hpp"

namespace artin {

/// Sentinel truncation degree meaning "keep every term".
inline constexpr int kNoTruncation = std::numeric_limits<int>::max();

class Monomial {
 public:
  using Exponents = boost::container::small_vector<int, 6>;

  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(Exponents e) : e_(std::move(e)) {
    for (int x : e_) deg_ += x;
  }
  Monomial(std::initializer_list<int> e) : Monomial(Exponents(e)) {}

  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.e_[static_cast<size_t>(i)] = power;
    m.deg_ = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const Exponents& exponents() const { return e_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    r.deg_ += b.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  Exponents e_;
  int deg_ = 0;
};

enum class TieOrder { kRevLex, kLex };

/// Graded comparison: -1, 0, 1. Ties are broken by reverse-lex (default)
/// or lex on the variable indices.
inline int compare(const Monomial& a, const Monomial& b, TieOrder tie = TieOrder::kRevLex) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const int n = a.nvars();
  if (tie == TieOrder::kRevLex) {
    for (int i = n - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
  }
  return 0;
}

struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Pure lex with x1 > x2 > ... ; used for lex-segment ideals.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

/// All monomials of degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial::Exponents e(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<size_t>(i)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLess>;

  Polynomial() : field_(Field::rationals()) {}
  Polynomial(int nvars, FieldPtr field) : nvars_(nvars), field_(std::move(field)) {}

  static Polynomial constant(int nvars, const Scalar& c) {
    Polynomial p(nvars, c.field());
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial var(int nvars, const FieldPtr& f, int i) {
    require(i >= 0 && i < nvars, ErrorCode::kVariableOutOfRange, "variable index out of range");
    Polynomial p(nvars, f);
    p.add_term(Monomial::var(nvars, i), Scalar::one(f));
    return p;
  }
  static Polynomial monomial(const FieldPtr& f, const Monomial& m, const Scalar& c) {
    Polynomial p(m.nvars(), f);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Largest total degree, -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  /// Smallest total degree (the 𝔫-adic order), -1 for zero.
  int order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }
  Scalar constant_term() const { return coefficient(Monomial(nvars_)); }

  void add_term(const Monomial& m, const Scalar& c) {
    require(m.nvars() == nvars_, ErrorCode::kNvarsMismatch, "monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial truncate(int D) const {
    if (D == kNoTruncation) return *this;
    Polynomial r(nvars_, field_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() < D) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  /// Homogeneous component of degree d.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(nvars_, field_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  Polynomial lift(const FieldPtr& f) const {
    Polynomial r(nvars_, f);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c.lift(f));
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, x] : r.terms_) x = -x;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (m != it->first || c != it->second) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void check(const Polynomial& o) const {
    require(nvars_ == o.nvars_, ErrorCode::kNvarsMismatch, "polynomials have different numbers of variables");
    require(same_field(field_, o.field_), ErrorCode::kFieldMismatch, "polynomials live over different fields");
  }

 private:
  int nvars_ = 0;
  FieldPtr field_;
  Terms terms_;
};

/// p*q with every term of degree >= D dropped.
inline Polynomial mul_trunc(const Polynomial& p, const Polynomial& q, int D) {
  p.check(q);
  Polynomial r(p.nvars(), p.field());
  for (const auto& [mp, cp] : p.terms()) {
    if (mp.degree() >= D) break;
    for (const auto& [mq, cq] : q.terms()) {
      if (D != kNoTruncation && mp.degree() + mq.degree() >= D) break;
      r.add_term(mp * mq, cp * cq);
    }
  }
  return r;
}

inline Polynomial pow_trunc(const Polynomial& p, int n, int D) {
  Polynomial r = Polynomial::constant(p.nvars(), Scalar::one(p.field())).truncate(D);
  Polynomial b = p.truncate(D);
  while (n > 0) {
    if (n & 1) r = mul_trunc(r, b, D);
    n >>= 1;
    if (n > 0) b = mul_trunc(b, b, D);
  }
  return r;
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul_trunc(p, q, kNoTruncation); }

// ---------------------------------------------------------------------------
// Text form.

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text: terms in descending graded order; a coefficient outside
/// the rationals is split into one term per basis part.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    for (const auto& [idx, q] : c.parts()) {
      mpq_class mag = abs(q);
      std::vector<std::string> factors;
      if (mag != 1 || (idx == 0 && m.degree() == 0)) factors.push_back(mag.get_str());
      std::string name = basis_name(*p.field(), idx);
      if (!name.empty()) factors.push_back(name);
      if (m.degree() > 0) factors.push_back(to_string(m));
      std::string body;
      for (size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
      if (out.empty()) {
        out = sgn(q) < 0 ? "-" + body : body;
      } else {
        out += sgn(q) < 0 ? " - " + body : " + " + body;
      }
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars, FieldPtr field) : nvars_(nvars), field_(std::move(field)) {
    // Normalize the Unicode minus sign to ASCII and drop whitespace.
    static constexpr std::string_view kMinus = "\xE2\x88\x92";
    for (size_t i = 0; i < text.size();) {
      if (text.substr(i, kMinus.size()) == kMinus) {
        s_ += '-';
        i += kMinus.size();
      } else {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) s_ += text[i];
        ++i;
      }
    }
  }

  Polynomial parse() {
    require(!s_.empty(), ErrorCode::kSyntaxError, "empty polynomial");
    Polynomial result(nvars_, field_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        syntax("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      if (negative) term = -term;
      result += term;
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void syntax(const std::string& what) const {
    fail(ErrorCode::kSyntaxError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  Polynomial parse_term() {
    Scalar coeff = Scalar::one(field_);
    Monomial mono(nvars_);
    while (true) {
      parse_factor(coeff, mono);
      if (peek() != '*') break;
      ++pos_;
    }
    return Polynomial::monomial(field_, mono, coeff);
  }

  mpz_class parse_nat() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) syntax("expected a number");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  mpq_class parse_rational() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    mpq_class q(parse_nat());
    if (peek() == '/') {
      ++pos_;
      mpz_class den = parse_nat();
      if (den == 0) syntax("zero denominator");
      q /= mpq_class(den);
    }
    return neg ? mpq_class(-q) : q;
  }

  void parse_factor(Scalar& coeff, Monomial& mono) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= Scalar::from_rational(field_, parse_rational());
    } else if (c == 'x') {
      ++pos_;
      int index = static_cast<int>(parse_nat().get_si());
      if (index < 1 || index > nvars_) {
        fail(ErrorCode::kVariableOutOfRange, "x" + std::to_string(index) + " with only " + std::to_string(nvars_) + " variables");
      }
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        power = static_cast<int>(parse_nat().get_si());
      }
      mono = mono * Monomial::var(nvars_, index - 1, power);
    } else if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      mpq_class q = parse_rational();
      if (peek() != ')') syntax("expected ')'");
      ++pos_;
      coeff *= sqrt_in_field(q);
    } else if (c == 's' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      int layer = static_cast<int>(parse_nat().get_si());
      if (layer < 1 || layer > field_->depth()) fail(ErrorCode::kCoefficientNotInField, "s" + std::to_string(layer) + " is not a layer of " + field_->to_string());
      coeff *= Scalar::generator(field_, layer);
    } else if (c == '(') {
      syntax("parentheses are not part of the grammar");
    } else {
      syntax("unexpected character");
    }
  }

  Scalar sqrt_in_field(const mpq_class& q) {
    if (field_->depth() >= 1 && field_->theta(1).size() == 1 && field_->theta(1)[0] == q) return Scalar::generator(field_, 1);
    auto r = sqrt(Scalar::from_rational(field_, q));
    if (!r) fail(ErrorCode::kCoefficientNotInField, "sqrt(" + q.get_str() + ") is not in " + field_->to_string());
    return *r;
  }

  std::string s_;
  size_t pos_ = 0;
  int nvars_;
  FieldPtr field_;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, int nvars, const FieldPtr& field = Field::rationals()) {
  return detail::PolyParser(text, nvars, field).parse();
}

}  // namespace artin

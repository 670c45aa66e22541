#pragma once

// Dense exact linear algebra over a tower field.

#include <optional>
#include <utility>
#include <vector>

#include "artin/field.hpp"

namespace artin {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const FieldPtr& f, size_t n) { return Vector(n, Scalar::zero(f)); }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vector operator*(const Scalar& c, const Vector& a) {
  Vector r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline Vector lift(const Vector& v, const FieldPtr& f) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.lift(f));
  return r;
}

class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(FieldPtr f, size_t rows, size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field_)) {}

  static Matrix identity(const FieldPtr& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const FieldPtr& f, size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const FieldPtr& f, size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const FieldPtr& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vector row(size_t i) const { return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }
  Vector column(size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Vector operator*(const Vector& v) const {
    Vector r = zero_vector(field_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) {
        const Scalar& x = (*this)(i, j);
        if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
      }
    }
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t k = 0; k < cols_; ++k) {
        const Scalar& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
        }
      }
    }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

inline Rref rref(Matrix m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}.
inline std::vector<Vector> kernel(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(std::move(aug));
  Vector x = zero_vector(m.field(), m.cols());
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.reduced(i, m.cols());
  }
  return x;
}

inline Scalar determinant(Matrix m) {
  require(m.rows() == m.cols(), ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  Scalar det = Scalar::one(m.field());
  const size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

struct Diagonalization {
  Matrix basis;     // rows are the new basis vectors
  Vector diagonal;  // basis * g * basis^T = diag(diagonal)
};

/// Congruence diagonalization of a symmetric matrix (characteristic zero).
inline Diagonalization diagonalize_symmetric(const Matrix& g) {
  const size_t n = g.rows();
  const FieldPtr& f = g.field();
  std::vector<Vector> e;
  for (size_t i = 0; i < n; ++i) e.push_back(Matrix::identity(f, n).row(i));
  auto form = [&](const Vector& u, const Vector& v) {
    Scalar acc = Scalar::zero(f);
    for (size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (!v[j].is_zero() && !g(i, j).is_zero()) acc += u[i] * g(i, j) * v[j];
      }
    }
    return acc;
  };
  for (size_t k = 0; k < n; ++k) {
    if (form(e[k], e[k]).is_zero()) {
      for (size_t j = k + 1; j < n; ++j) {
        if (!form(e[j], e[j]).is_zero()) {
          std::swap(e[k], e[j]);
          break;
        }
        if (!form(e[k], e[j]).is_zero()) {
          // <e_k+e_j, e_k+e_j> = 2<e_k,e_j> when both diagonals vanish
          e[k] = e[k] + e[j];
          break;
        }
      }
    }
    Scalar d = form(e[k], e[k]);
    if (d.is_zero()) continue;
    Scalar dinv = d.inverse();
    for (size_t j = k + 1; j < n; ++j) {
      Scalar c = form(e[j], e[k]);
      if (!c.is_zero()) e[j] = e[j] - (c * dinv) * e[k];
    }
  }
  Vector diag;
  for (size_t k = 0; k < n; ++k) diag.push_back(form(e[k], e[k]));
  return {Matrix::from_rows(f, n, e), std::move(diag)};
}

inline Matrix lift(const Matrix& m, const FieldPtr& f) {
  Matrix r(f, m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).lift(f);
  }
  return r;
}

}  // namespace artin

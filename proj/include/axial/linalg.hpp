#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/field.hpp"

namespace axial {

/// Polynomials assumed nonzero for a symbolic result to hold.  A result is
/// valid at every specialization where none of them vanishes.
using Certificate = std::set<Poly>;

inline void merge_into(Certificate& into, const Certificate& from) { into.insert(from.begin(), from.end()); }

inline void add_condition(Certificate& cert, const Poly& p) {
  if (!p.is_constant()) cert.insert(monic(p));
}

template <Field F>
using Vect = std::vector<F>;

template <Field F>
Vect<F> zero_vect(std::size_t n) {
  return Vect<F>(n, F(0));
}

template <Field F>
Vect<F> unit_vect(std::size_t n, std::size_t i) {
  Vect<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

template <Field F>
bool is_zero(const Vect<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& c) { return c.is_zero(); });
}

template <Field F>
Vect<F> operator+(const Vect<F>& u, const Vect<F>& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimMismatch, "vector sum");
  Vect<F> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

template <Field F>
Vect<F> operator-(const Vect<F>& u, const Vect<F>& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimMismatch, "vector difference");
  Vect<F> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

template <Field F>
Vect<F> operator-(const Vect<F>& u) {
  Vect<F> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = -u[i];
  return r;
}

template <Field F>
Vect<F> operator*(const F& c, const Vect<F>& u) {
  Vect<F> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = c.is_zero() ? F(0) : c * u[i];
  return r;
}

/// u += c * v without building a temporary for zero coefficients.
template <Field F>
void axpy(Vect<F>& u, const F& c, const Vect<F>& v) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!v[i].is_zero()) u[i] += c * v[i];
  }
}

template <Field F>
std::string to_string(const Vect<F>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vect<F>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorKind::DimMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vect<F>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vect<F> row(std::size_t i) const { return Vect<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  Vect<F> column(std::size_t j) const {
    Vect<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Vect<F> apply(const Vect<F>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimMismatch, "matrix-vector product");
    Vect<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
      }
    }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimMismatch, "matrix product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

  /// this - c * I
  Matrix shifted(const F& c) const {
    if (rows_ != cols_) throw Error(ErrorKind::DimMismatch, "shift of a non-square matrix");
    Matrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i) r(i, i) -= c;
    return r;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& c) { return c.is_zero(); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <class Fn>
  Matrix map(Fn&& fn) const {
    Matrix r = *this;
    for (auto& c : r.data_) c = fn(c);
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ", ";
      s += axial::to_string(row(i));
    }
    return s + "]";
  }

 private:
  static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimMismatch, "matrix sum");
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) {
      r.data_[k] = subtract ? r.data_[k] - b.data_[k] : r.data_[k] + b.data_[k];
    }
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
struct RrefResult {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  Certificate certificate;
  std::size_t rank = 0;
};

/// Reduced row echelon form.  In each column the pivot is the nonzero entry
/// of lowest degree (ties broken by row index); its vanishing locus is
/// recorded in the certificate.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      if (!best || m(i, c).degree() < m(*best, c).degree()) best = i;
    }
    if (!best) continue;
    if (*best != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(*best, j));
    }
    add_condition(out.certificate, certificate_poly(m(r, c)));
    const F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Linear span kept as a reduced row echelon basis, so equal subspaces have
/// identical bases.
template <Field F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vect<F>>& vectors, Certificate cert = {}) {
    Subspace s(ambient);
    s.certificate_ = std::move(cert);
    if (vectors.empty()) return s;
    auto red = rref(Matrix<F>::from_rows(ambient, vectors));
    merge_into(s.certificate_, red.certificate);
    for (std::size_t i = 0; i < red.rank; ++i) s.basis_.push_back(red.matrix.row(i));
    s.pivots_ = std::move(red.pivots);
    return s;
  }

  static Subspace whole(std::size_t ambient) {
    std::vector<Vect<F>> basis;
    for (std::size_t i = 0; i < ambient; ++i) basis.push_back(unit_vect<F>(ambient, i));
    return span(ambient, basis);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vect<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Certificate& certificate() const { return certificate_; }
  void add_certificate(const Certificate& c) { merge_into(certificate_, c); }

  /// Remainder of v after eliminating the pivot coordinates.
  Vect<F> reduce(const Vect<F>& v) const {
    check_ambient(v.size());
    Vect<F> r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const F c = r[pivots_[i]];
      if (!c.is_zero()) axpy(r, -c, basis_[i]);
    }
    return r;
  }

  /// Coefficients of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vect<F>> coordinates(const Vect<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vect<F> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool contains(const Vect<F>& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vect<F>& v) { return contains(v); });
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    std::vector<Vect<F>> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    Certificate cert = a.certificate_;
    merge_into(cert, b.certificate_);
    return span(a.ambient_, all, std::move(cert));
  }

  /// Solves s.A = t.B over the two bases; the common vectors s.A span the
  /// intersection.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    Certificate cert = a.certificate_;
    merge_into(cert, b.certificate_);
    if (a.basis_.empty() || b.basis_.empty()) return span(a.ambient_, {}, std::move(cert));
    std::vector<Vect<F>> cols = a.basis_;
    for (const auto& v : b.basis_) cols.push_back(-v);
    const auto k = kernel(Matrix<F>::from_columns(a.ambient_, cols));
    merge_into(cert, k.certificate());
    std::vector<Vect<F>> common;
    for (const auto& st : k.basis()) {
      Vect<F> v = zero_vect<F>(a.ambient_);
      for (std::size_t i = 0; i < a.basis_.size(); ++i) axpy(v, st[i], a.basis_[i]);
      common.push_back(std::move(v));
    }
    return span(a.ambient_, common, std::move(cert));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) s += "; ";
      s += axial::to_string(basis_[i]);
    }
    return s + ">";
  }

 private:
  void check_ambient(std::size_t n) const {
    if (n != ambient_) {
      throw Error(ErrorKind::AmbientMismatch,
                  "ambient dimensions " + std::to_string(ambient_) + " and " + std::to_string(n));
    }
  }

  std::size_t ambient_;
  std::vector<Vect<F>> basis_;
  std::vector<std::size_t> pivots_;
  Certificate certificate_;
};

/// Null space of m, one basis vector per non-pivot column.
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  const auto red = rref(m);
  std::vector<Vect<F>> vecs;
  std::size_t p = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (p < red.pivots.size() && red.pivots[p] == free) {
      ++p;
      continue;
    }
    Vect<F> v = zero_vect<F>(m.cols());
    v[free] = F(1);
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.matrix(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(m.cols(), vecs, red.certificate);
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m, Certificate* cert = nullptr) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimMismatch, "inverse of a non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
  if (cert) merge_into(*cert, red.certificate);
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
  }
  return inv;
}

/// True when the subspaces are independent, i.e. their sum is direct.
template <Field F>
bool is_direct_sum(const std::vector<Subspace<F>>& parts) {
  if (parts.empty()) return true;
  Subspace<F> total(parts.front().ambient());
  std::size_t dims = 0;
  for (const auto& p : parts) {
    total = sum(total, p);
    dims += p.dim();
  }
  return total.dim() == dims;
}

}  // namespace axial

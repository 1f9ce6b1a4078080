#pragma once

// Dense vectors and matrices over a max-times backend, plus the residuated
// (min-times) operations the rest of the library is built on.

#include <cstddef>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "maxcone/error.hpp"
#include "maxcone/semiring.hpp"

namespace maxcone {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

template <Semiring S>
class Vector {
 public:
  using value_type = typename S::value_type;

  Vector() = default;
  explicit Vector(std::size_t n, const S& s = S()) : s_(s), data_(n, s.zero()) {}
  Vector(std::vector<value_type> data, const S& s) : s_(s), data_(std::move(data)) {}

  const S& semiring() const { return s_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  const value_type& operator[](Index i) const { return data_[i]; }
  value_type& operator[](Index i) { return data_[i]; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }
  const std::vector<value_type>& values() const { return data_; }

  IndexSet support() const {
    IndexSet out;
    for (Index i = 0; i < size(); ++i)
      if (!s_.is_zero(data_[i])) out.push_back(i);
    return out;
  }
  bool is_zero() const {
    for (const auto& v : data_)
      if (!s_.is_zero(v)) return false;
    return true;
  }
  bool is_positive() const {
    for (const auto& v : data_)
      if (s_.is_zero(v) || s_.is_top(v)) return false;
    return !data_.empty();
  }

 private:
  S s_{};
  std::vector<value_type> data_;
};

template <Semiring S>
class Matrix {
 public:
  using value_type = typename S::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& s = S())
      : s_(s), rows_(rows), cols_(cols), data_(rows * cols, s.zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<value_type> data, const S& s)
      : s_(s), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols)
      throw Error(ErrorCode::DimensionMismatch, "matrix data size does not match its shape");
  }

  static Matrix from_columns(const std::vector<Vector<S>>& columns, const S& s) {
    if (columns.empty()) throw Error(ErrorCode::Precondition, "no columns given");
    Matrix m(columns.front().size(), columns.size(), s);
    for (Index j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "columns have different lengths");
      for (Index i = 0; i < m.rows(); ++i) m.data_[i * m.cols_ + j] = columns[j][i];
    }
    return m;
  }

  const S& semiring() const { return s_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const value_type& operator()(Index i, Index j) const { return data_[i * cols_ + j]; }
  value_type& operator()(Index i, Index j) {
    zero_row_.reset();
    zero_col_.reset();
    return data_[i * cols_ + j];
  }

  Vector<S> column(Index j) const {
    Vector<S> v(rows_, s_);
    for (Index i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector<S> row(Index i) const {
    Vector<S> v(cols_, s_);
    for (Index j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  std::vector<Vector<S>> columns() const {
    std::vector<Vector<S>> out;
    for (Index j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  bool has_zero_row() const {
    if (!zero_row_) {
      zero_row_ = false;
      for (Index i = 0; i < rows_ && !*zero_row_; ++i) {
        bool all_zero = true;
        for (Index j = 0; j < cols_; ++j) all_zero = all_zero && s_.is_zero((*this)(i, j));
        if (all_zero) zero_row_ = true;
      }
    }
    return *zero_row_;
  }
  bool has_zero_column() const {
    if (!zero_col_) {
      zero_col_ = false;
      for (Index j = 0; j < cols_ && !*zero_col_; ++j) {
        bool all_zero = true;
        for (Index i = 0; i < rows_; ++i) all_zero = all_zero && s_.is_zero((*this)(i, j));
        if (all_zero) zero_col_ = true;
      }
    }
    return *zero_col_;
  }
  bool is_positive() const {
    for (const auto& v : data_)
      if (s_.is_zero(v) || s_.is_top(v)) return false;
    return !data_.empty();
  }

  const std::vector<value_type>& values() const { return data_; }

 private:
  S s_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
  mutable std::optional<bool> zero_row_;
  mutable std::optional<bool> zero_col_;
};

namespace detail {

inline std::string shape(std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

}  // namespace detail

template <Semiring S>
Matrix<S> identity(std::size_t n, const S& s = S()) {
  Matrix<S> m(n, n, s);
  for (Index i = 0; i < n; ++i) m(i, i) = s.one();
  return m;
}

template <Semiring S>
Vector<S> ones(std::size_t n, const S& s = S()) {
  return Vector<S>(std::vector<typename S::value_type>(n, s.one()), s);
}

template <Semiring S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows(), a.semiring());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <Semiring S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "mat_add: " + detail::shape(a.rows(), a.cols()) +
                                                  " vs " + detail::shape(b.rows(), b.cols()));
  const S& s = a.semiring();
  Matrix<S> c(a.rows(), a.cols(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) c(i, j) = s.add(a(i, j), b(i, j));
  return c;
}

template <Semiring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "mat_mul: " + detail::shape(a.rows(), a.cols()) +
                                                  " times " + detail::shape(b.rows(), b.cols()));
  const S& s = a.semiring();
  Matrix<S> c(a.rows(), b.cols(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (s.is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) = s.add(c(i, j), s.mul(aik, b(k, j)));
    }
  return c;
}

// A (x) x
template <Semiring S>
Vector<S> apply(const Matrix<S>& a, const Vector<S>& x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch,
                "apply: matrix " + detail::shape(a.rows(), a.cols()) + " vs vector of length " +
                    std::to_string(x.size()));
  const S& s = a.semiring();
  Vector<S> y(a.rows(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) y[i] = s.add(y[i], s.mul(a(i, j), x[j]));
  return y;
}

// Cuninghame-Green inverse: transpose with entrywise inversion, zero -> top.
template <Semiring S>
Matrix<S> conjugate(const Matrix<S>& a) {
  const S& s = a.semiring();
  Matrix<S> c(a.cols(), a.rows(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) c(j, i) = s.inv(a(i, j));
  return c;
}

// Min-times product B (x)' y with zero (x) top = zero. Entries may be top.
template <Semiring S>
Vector<S> min_mul_unchecked(const Matrix<S>& b, const Vector<S>& y) {
  if (b.cols() != y.size())
    throw Error(ErrorCode::DimensionMismatch,
                "min_mul: matrix " + detail::shape(b.rows(), b.cols()) + " vs vector of length " +
                    std::to_string(y.size()));
  const S& s = b.semiring();
  Vector<S> x(b.rows(), s);
  for (Index j = 0; j < b.rows(); ++j) {
    auto acc = s.top();
    // dual product: top absorbs zero
    for (Index i = 0; i < b.cols(); ++i)
      if (!s.is_top(b(j, i))) acc = s.min(acc, s.mul(b(j, i), y[i]));
    x[j] = acc;
  }
  return x;
}

template <Semiring S>
Vector<S> min_mul(const Matrix<S>& b, const Vector<S>& y) {
  Vector<S> x = min_mul_unchecked(b, y);
  for (Index j = 0; j < x.size(); ++j)
    if (x.semiring().is_top(x[j]))
      throw Error(ErrorCode::Precondition,
                  "min_mul: entry " + std::to_string(j) + " is unbounded (residual undefined)");
  return x;
}

// Principal solution conj(A) (x)' y. Zero columns of A get coefficient zero.
template <Semiring S>
Vector<S> principal_solution(const Matrix<S>& a, const Vector<S>& y) {
  Vector<S> x = min_mul_unchecked(conjugate(a), y);
  for (Index j = 0; j < x.size(); ++j)
    if (x.semiring().is_top(x[j])) x[j] = x.semiring().zero();
  return x;
}

// y / v = max { lambda : lambda v <= y }
template <Semiring S>
typename S::value_type residual(const Vector<S>& y, const Vector<S>& v) {
  if (y.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "residual: length mismatch");
  const S& s = y.semiring();
  auto acc = s.top();
  for (Index i = 0; i < v.size(); ++i)
    if (!s.is_zero(v[i])) acc = s.min(acc, s.div(y[i], v[i]));
  if (s.is_top(acc)) throw Error(ErrorCode::Precondition, "residual: divisor vector is zero");
  return acc;
}

template <Semiring S>
Vector<S> scale(const Vector<S>& v, const typename S::value_type& c) {
  Vector<S> out(v.size(), v.semiring());
  for (Index i = 0; i < v.size(); ++i) out[i] = v.semiring().mul(c, v[i]);
  return out;
}

template <Semiring S>
Matrix<S> scale(const Matrix<S>& a, const typename S::value_type& c) {
  Matrix<S> out(a.rows(), a.cols(), a.semiring());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a.semiring().mul(c, a(i, j));
  return out;
}

template <Semiring S>
Vector<S> vec_max(const Vector<S>& a, const Vector<S>& b) {
  Vector<S> out(a.size(), a.semiring());
  for (Index i = 0; i < a.size(); ++i) out[i] = a.semiring().add(a[i], b[i]);
  return out;
}

template <Semiring S>
Vector<S> vec_min(const Vector<S>& a, const Vector<S>& b) {
  Vector<S> out(a.size(), a.semiring());
  for (Index i = 0; i < a.size(); ++i) out[i] = a.semiring().min(a[i], b[i]);
  return out;
}

template <Semiring S>
bool vec_le(const Vector<S>& a, const Vector<S>& b) {
  for (Index i = 0; i < a.size(); ++i)
    if (a.semiring().compare(a[i], b[i]) > 0) return false;
  return true;
}

template <Semiring S>
bool vec_eq(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a.semiring().compare(a[i], b[i]) != 0) return false;
  return true;
}

template <Semiring S>
bool mat_eq(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a.semiring().compare(a(i, j), b(i, j)) != 0) return false;
  return true;
}

template <Semiring S>
typename S::value_type max_entry(const Vector<S>& v) {
  auto m = v.semiring().zero();
  for (const auto& x : v) m = v.semiring().add(m, x);
  return m;
}

// Max-norm scaling: largest entry becomes one. The zero vector is returned as is.
template <Semiring S>
Vector<S> scaled(const Vector<S>& v) {
  auto m = max_entry(v);
  if (v.semiring().is_zero(m)) return v;
  return scale(v, v.semiring().inv(m));
}

template <Semiring S>
bool proportional(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) return false;
  return vec_eq(scaled(a), scaled(b));
}

// u <=_j v : u u_j^{-1} <= v v_j^{-1}
template <Semiring S>
bool preorder_le(const Vector<S>& u, const Vector<S>& v, Index j) {
  const S& s = u.semiring();
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "preorder_le: length mismatch");
  if (j >= u.size()) throw Error(ErrorCode::Precondition, "preorder_le: index out of range");
  if (s.is_zero(u[j]) || s.is_zero(v[j]))
    throw Error(ErrorCode::Precondition,
                "preorder_le: coordinate " + std::to_string(j) + " must be nonzero in both vectors");
  auto ui = s.inv(u[j]);
  auto vi = s.inv(v[j]);
  for (Index k = 0; k < u.size(); ++k)
    if (s.compare(s.mul(u[k], ui), s.mul(v[k], vi)) > 0) return false;
  return true;
}

// max_{i,j} y_i y_j^{-1}, as a semiring value.
template <Semiring S>
typename S::value_type proj_norm_value(const Vector<S>& y) {
  const S& s = y.semiring();
  if (y.empty()) throw Error(ErrorCode::Precondition, "proj_norm: empty vector");
  auto hi = y[0];
  auto lo = y[0];
  for (const auto& v : y) {
    if (s.is_zero(v) || s.is_top(v))
      throw Error(ErrorCode::Precondition, "proj_norm: all entries must be positive");
    hi = s.add(hi, v);
    lo = s.min(lo, v);
  }
  return s.div(hi, lo);
}

template <Semiring S>
typename S::value_type proj_norm_value(const Matrix<S>& a) {
  const S& s = a.semiring();
  auto best = s.one();
  for (Index k = 0; k < a.cols(); ++k) best = s.add(best, proj_norm_value(a.column(k)));
  return best;
}

// log of the projective spread; in the max-plus view this is max_{i,j}(y_i - y_j).
template <Semiring S>
double proj_norm(const Vector<S>& y) {
  return y.semiring().to_log(proj_norm_value(y));
}

template <Semiring S>
double proj_norm(const Matrix<S>& a) {
  return a.semiring().to_log(proj_norm_value(a));
}

}  // namespace maxcone

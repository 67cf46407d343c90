#pragma once
// Dense exact matrices and the linear algebra the complexes need.

#include "nary/scalar.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace nary {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const {
    for (const T& x : a)
      if (!nary::is_zero(x)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    assert(rows == o.rows && cols == o.cols);
    for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    assert(rows == o.rows && cols == o.cols);
    for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (T& x : a) x *= s;
    return *this;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
    return t;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class T>
Mat<T> operator+(Mat<T> x, const Mat<T>& y) { return x += y; }
template <class T>
Mat<T> operator-(Mat<T> x, const Mat<T>& y) { return x -= y; }
template <class T>
Mat<T> operator*(Mat<T> x, const T& s) { return x *= s; }
template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.rows);
  Mat<T> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& v = x(i, k);
      if (is_zero(v)) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

template <class T>
Mat<T> commutator(const Mat<T>& x, const Mat<T>& y) { return x * y - y * x; }

using QMat = Mat<Q>;
using GMat = Mat<Gauss>;
using QVec = std::vector<Q>;

QVec mat_vec(const QMat& m, const QVec& v);

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators; pivots are taken left to right, lowest row first.
int rank(const QMat& m);

// Reduced row echelon form; pivot columns returned in order.
QMat rref(QMat m, std::vector<int>* pivots = nullptr);

// Basis of {x : m x = 0} as columns of the returned matrix.
QMat nullspace(const QMat& m);

// Some x with m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);

std::optional<QMat> inverse(const QMat& m);

// Inertia (n+, n-, n0) of a symmetric matrix by exact congruence diagonalisation.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};
Inertia inertia(const QMat& sym);

// A is a nonzero multiple of B (ray equality), entrywise and exact.
template <class T>
bool proportional(const std::vector<T>& A, const std::vector<T>& B, T* ratio = nullptr) {
  if (A.size() != B.size()) return false;
  size_t k = 0;
  while (k < A.size() && is_zero(A[k]) && is_zero(B[k])) ++k;
  if (k == A.size()) return false;  // both zero: no ray
  if (is_zero(A[k]) || is_zero(B[k])) return false;
  const T& a0 = A[k];
  const T& b0 = B[k];
  for (size_t i = 0; i < A.size(); ++i)
    if (A[i] * b0 != B[i] * a0) return false;
  if (ratio) *ratio = a0 / b0;
  return true;
}

}  // namespace nary

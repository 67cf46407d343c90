#include "nary/matrix.hpp"

#include <utility>

namespace nary {

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!is_zero(m(i, j)) && !is_zero(v[j])) r[i] += m(i, j) * v[j];
  return r;
}

int rank(const QMat& m) {
  int R = m.rows, C = m.cols;
  std::vector<std::vector<mpz_class>> z(R, std::vector<mpz_class>(C));
  for (int i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < C; ++j)
      if (!is_zero(m(i, j))) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < C; ++j)
      if (!is_zero(m(i, j))) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (sgn(z[i][c]) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(z[p], z[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) {
        mpz_class v = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

QMat rref(QMat m, std::vector<int>* pivots) {
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Q f = m(i, c);
      for (int j = c; j < m.cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

QMat nullspace(const QMat& m) {
  std::vector<int> piv;
  QMat e = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  int nfree = m.cols - static_cast<int>(piv.size());
  QMat basis(m.cols, nfree);
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    basis(f, k) = 1;
    for (size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -e(static_cast<int>(r), f);
    ++k;
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  QMat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  std::vector<int> piv;
  QMat e = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  QVec x(m.cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = e(static_cast<int>(r), m.cols);
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  QMat e = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
}

Inertia inertia(const QMat& sym) {
  QMat a = sym;
  int n = a.rows;
  Inertia in;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !is_zero(a(i, i))) { p = i; break; }
    if (p < 0) {
      // all remaining diagonal entries vanish; look for an off-diagonal pair
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && !is_zero(a(i, j))) { pi = i; pj = j; break; }
      if (pi < 0) break;
      // replace row/col pi by pi + pj, making the diagonal entry 2 a(pi,pj)
      for (int k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (int k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      p = pi;
    }
    done[p] = true;
    if (sgn(a(p, p)) > 0) ++in.pos; else ++in.neg;
    for (int i = 0; i < n; ++i) {
      if (done[i] || is_zero(a(i, p))) continue;
      Q f = a(i, p) / a(p, p);
      for (int k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
      for (int k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
    }
  }
  in.zero = n - in.pos - in.neg;
  return in;
}

}  // namespace nary

#include "nary/algebra.hpp"

#include <functional>
#include <stdexcept>

namespace nary {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Lie: return "lie";
    case Kind::GLA: return "gla";
    case Kind::Filippov: return "filippov";
    case Kind::Leibniz: return "leibniz";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& s) {
  if (s == "lie") return Kind::Lie;
  if (s == "gla") return Kind::GLA;
  if (s == "filippov") return Kind::Filippov;
  if (s == "leibniz") return Kind::Leibniz;
  return std::nullopt;
}

Vec unit(int D, int i) {
  Vec v(D);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const Q& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec& axpy(Vec& y, const Q& a, const Vec& x) {
  if (is_zero(a)) return y;
  for (size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x[k])) y[k] += a * x[k];
  return y;
}

Algebra::Algebra(Kind k, int arity, int dim) : kind(k), n(arity), D(dim) {
  c.assign(static_cast<size_t>(ipow(dim, arity + 1)), Q(0));
}

void Algebra::set(const Tuple& a, int b, const Q& v) {
  if (!antisymmetric_kind()) {
    at(a, b) = v;
    return;
  }
  if (perm_sign(a) == 0) {
    if (!nary::is_zero(v)) throw std::invalid_argument("nonzero bracket with a repeated entry");
    return;
  }
  for_each_perm(n, [&](const Tuple& p, int s) {
    Tuple u(n);
    for (int k = 0; k < n; ++k) u[k] = a[p[k]];
    at(u, b) = s > 0 ? v : Q(-v);
  });
}

Vec Algebra::bracket_basis(const Tuple& a) const {
  const Q* r = row(a);
  return Vec(r, r + D);
}

Vec Algebra::bracket(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != n) throw std::invalid_argument("bracket: wrong number of arguments");
  Vec out(D);
  std::vector<std::vector<int>> supp(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < D; ++i)
      if (!nary::is_zero(args[k][i])) supp[k].push_back(i);
  Tuple t(n);
  std::function<void(int, const Q&)> rec = [&](int k, const Q& coef) {
    if (k == n) {
      const Q* r = row(t);
      for (int b = 0; b < D; ++b)
        if (!nary::is_zero(r[b])) out[b] += coef * r[b];
      return;
    }
    for (int i : supp[k]) {
      if (antisymmetric_kind()) {
        bool rep = false;
        for (int j = 0; j < k; ++j) rep |= (t[j] == i);
        if (rep) continue;
      }
      t[k] = i;
      rec(k + 1, coef * args[k][i]);
    }
  };
  rec(0, Q(1));
  return out;
}

bool Algebra::is_antisymmetric(Tuple* witness) const {
  bool ok = true;
  for_each_tuple(D, n, [&](const Tuple& a) {
    if (!ok) return;
    for (int k = 0; k + 1 < n && ok; ++k) {
      Tuple u = a;
      std::swap(u[k], u[k + 1]);
      for (int b = 0; b < D; ++b) {
        if (at(a, b) != -at(u, b)) {
          ok = false;
          if (witness) {
            *witness = a;
            witness->push_back(b);
          }
          return;
        }
      }
    }
  });
  return ok;
}

bool Algebra::is_abelian() const {
  for (const Q& x : c)
    if (!nary::is_zero(x)) return false;
  return true;
}

AntisymTensor Algebra::slice(int b) const {
  AntisymTensor t(n, D);
  for (const Tuple& a : combinations(D, n)) {
    const Q& v = at(a, b);
    if (!nary::is_zero(v)) t.set(a, v);
  }
  return t;
}

QMat Algebra::ad(const Tuple& a) const {
  QMat m(D, D);
  Tuple t = a;
  t.push_back(0);
  for (int b = 0; b < D; ++b) {
    t.back() = b;
    const Q* r = row(t);
    for (int l = 0; l < D; ++l) m(l, b) = r[l];
  }
  return m;
}

QMat Algebra::ad(const std::vector<Vec>& x) const {
  QMat m(D, D);
  std::vector<Vec> args = x;
  args.push_back(Vec(D));
  for (int b = 0; b < D; ++b) {
    args.back() = unit(D, b);
    Vec r = bracket(args);
    for (int l = 0; l < D; ++l) m(l, b) = r[l];
  }
  return m;
}

Algebra change_basis(const Algebra& A, const QMat& P) {
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("change_basis: singular matrix");
  std::vector<Vec> cols(A.D, Vec(A.D));
  for (int i = 0; i < A.D; ++i)
    for (int j = 0; j < A.D; ++j) cols[i][j] = P(j, i);
  Algebra B(A.kind, A.n, A.D);
  auto emit = [&](const Tuple& a) {
    std::vector<Vec> args;
    for (int x : a) args.push_back(cols[x]);
    Vec v = mat_vec(*Pinv, A.bracket(args));
    for (int b = 0; b < A.D; ++b)
      if (!nary::is_zero(v[b])) B.set(a, b, v[b]);
  };
  if (A.antisymmetric_kind()) {
    for (const Tuple& a : combinations(A.D, A.n)) emit(a);
  } else {
    for_each_tuple(A.D, A.n, emit);
  }
  if (A.metric) B.metric = P.transpose() * *A.metric * P;
  return B;
}

Algebra direct_sum(const Algebra& A, const Algebra& B) {
  if (A.n != B.n || A.kind != B.kind) throw std::invalid_argument("direct_sum: arity mismatch");
  Algebra S(A.kind, A.n, A.D + B.D);
  auto copy = [&](const Algebra& X, int off) {
    for_each_tuple(X.D, X.n, [&](const Tuple& a) {
      Tuple u = a;
      for (int& x : u) x += off;
      for (int b = 0; b < X.D; ++b)
        if (!nary::is_zero(X.at(a, b))) S.at(u, b + off) = X.at(a, b);
    });
  };
  copy(A, 0);
  copy(B, A.D);
  if (A.metric && B.metric) {
    QMat g(S.D, S.D);
    for (int i = 0; i < A.D; ++i)
      for (int j = 0; j < A.D; ++j) g(i, j) = (*A.metric)(i, j);
    for (int i = 0; i < B.D; ++i)
      for (int j = 0; j < B.D; ++j) g(A.D + i, A.D + j) = (*B.metric)(i, j);
    S.metric = g;
  }
  return S;
}

Algebra abelian(Kind k, int n, int D) { return Algebra(k, n, D); }

}  // namespace nary

namespace nary {

std::string tuple_str(const Tuple& t) {
  std::string s;
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(t[k] + 1);
  }
  return s;
}

}  // namespace nary

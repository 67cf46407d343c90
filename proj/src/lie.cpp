#include "nary/lie.hpp"

#include <functional>
#include <stdexcept>

namespace nary {

Algebra lie_algebra(int dim) { return Algebra(Kind::Lie, 2, dim); }

namespace {

// [[e_i,e_j],e_k]
Vec nested(const Algebra& L, int i, int j, int k) {
  Vec out(L.D);
  const Q* r = L.row({i, j});
  for (int l = 0; l < L.D; ++l) {
    if (is_zero(r[l])) continue;
    axpy(out, r[l], L.bracket_basis({l, k}));
  }
  return out;
}

}  // namespace

CheckResult check_jacobi(const Algebra& L) {
  for (const Tuple& t : combinations(L.D, 3)) {
    Vec j = nested(L, t[0], t[1], t[2]);
    axpy(j, Q(1), nested(L, t[1], t[2], t[0]));
    axpy(j, Q(1), nested(L, t[2], t[0], t[1]));
    for (int s = 0; s < L.D; ++s)
      if (!is_zero(j[s])) return CheckResult::fail({t[0], t[1], t[2], s}, "Jacobi residual");
  }
  return {};
}

QMat killing_form(const Algebra& L) {
  int r = L.D;
  QMat k(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Q acc;
      for (int l = 0; l < r; ++l)
        for (int s = 0; s < r; ++s) {
          const Q& a = L.at({i, l}, s);
          if (is_zero(a)) continue;
          const Q& b = L.at({j, s}, l);
          if (!is_zero(b)) acc += a * b;
        }
      k(i, j) = acc;
      k(j, i) = acc;
    }
  return k;
}

QMat killing_form_via_ad(const Algebra& L) {
  std::vector<QMat> ad;
  for (int i = 0; i < L.D; ++i) ad.push_back(L.ad(Tuple{i}));
  QMat k(L.D, L.D);
  for (int i = 0; i < L.D; ++i)
    for (int j = 0; j < L.D; ++j) k(i, j) = (ad[i] * ad[j]).trace();
  return k;
}

MetricReport check_metric_invariance(const Algebra& L, const QMat& g) {
  MetricReport rep;
  rep.invariant = true;
  int r = L.D;
  for (int l = 0; l < r && rep.invariant; ++l)
    for (int i = 0; i < r && rep.invariant; ++i)
      for (int j = 0; j < r; ++j) {
        Q acc;
        for (int s = 0; s < r; ++s) {
          acc += L.at({l, i}, s) * g(s, j);
          acc += L.at({l, j}, s) * g(i, s);
        }
        if (!is_zero(acc)) {
          rep.invariant = false;
          rep.where = {l, i, j};
          break;
        }
      }
  rep.nondegenerate = rank(g) == r;
  return rep;
}

Representation adjoint_rep(const Algebra& L) {
  Representation R;
  R.dV = L.D;
  for (int i = 0; i < L.D; ++i) R.rho.push_back(L.ad(Tuple{i}));
  return R;
}

Representation trivial_rep(const Algebra& L, int dV) {
  Representation R;
  R.dV = dV;
  R.rho.assign(L.D, QMat(dV, dV));
  return R;
}

CheckResult check_representation(const Algebra& L, const Representation& R) {
  if (static_cast<int>(R.rho.size()) != L.D) return CheckResult::fail({}, "wrong number of matrices");
  for (int i = 0; i < L.D; ++i)
    for (int j = i + 1; j < L.D; ++j) {
      QMat res = commutator(R.rho[i], R.rho[j]);
      for (int k = 0; k < L.D; ++k) {
        const Q& c = L.at({i, j}, k);
        if (!is_zero(c)) res -= R.rho[k] * c;
      }
      if (!res.is_zero()) return CheckResult::fail({i, j}, "closure residual");
    }
  return {};
}

QMat realify(const GMat& m) {
  int d = m.rows;
  QMat r(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      r(i, j) = m(i, j).re;
      r(d + i, d + j) = m(i, j).re;
      r(i, d + j) = -m(i, j).im;
      r(d + i, j) = m(i, j).im;
    }
  return r;
}

SunBasis sun_generators(int n) {
  if (n < 2) throw std::invalid_argument("sun_generators: n >= 2");
  SunBasis b;
  b.n = n;
  Q half(1, 2);
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      GMat s(n, n), a(n, n);
      s(j, k) = half;
      s(k, j) = half;
      a(j, k) = Gauss(Q(0), -half);
      a(k, j) = Gauss(Q(0), half);
      b.T.push_back(s);
      b.T.push_back(a);
    }
    GMat h(n, n);
    for (int j = 0; j < k; ++j) h(j, j) = half;
    h(k, k) = Q(Q(-k) * half);
    b.T.push_back(h);
  }
  int r = static_cast<int>(b.T.size());
  b.trace_form = QMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Gauss t = (b.T[i] * b.T[j]).trace();
      if (!t.is_real()) throw std::logic_error("sun_generators: complex trace form");
      b.trace_form(i, j) = t.re;
    }
  auto ginv = inverse(b.trace_form);
  if (!ginv) throw std::logic_error("sun_generators: degenerate trace form");
  b.C = lie_algebra(r);
  const Gauss minus_i(Q(0), Q(-1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      GMat cm = commutator(b.T[i], b.T[j]);
      std::vector<Q> proj(r);
      for (int l = 0; l < r; ++l) {
        Gauss t = minus_i * (cm * b.T[l]).trace();
        if (!t.is_real()) throw std::logic_error("sun_generators: complex structure constant");
        proj[l] = t.re;
      }
      Vec c = mat_vec(*ginv, proj);
      GMat check(n, n);
      for (int k = 0; k < r; ++k)
        if (!is_zero(c[k])) {
          b.C.set({i, j}, k, c[k]);
          check += b.T[k] * Gauss(Q(0), c[k]);
        }
      if (check != cm) throw std::logic_error("sun_generators: commutator does not close");
    }
  return b;
}

Representation sun_defining_real(const SunBasis& b) {
  Representation R;
  R.dV = 2 * b.n;
  const Gauss minus_i(Q(0), Q(-1));
  for (const GMat& t : b.T) R.rho.push_back(realify(t * minus_i));
  return R;
}

bool is_symmetric(const Array& k) {
  int m = k.rank();
  bool ok = true;
  for_each_tuple(m ? k.shape[0] : 0, m, [&](const Tuple& t) {
    if (!ok) return;
    for (int a = 0; a + 1 < m; ++a) {
      Tuple u = t;
      std::swap(u[a], u[a + 1]);
      if (k.at(t) != k.at(u)) { ok = false; return; }
    }
  });
  return ok;
}

namespace {

// Nondecreasing tuples of length m over 0..r-1.
void for_each_multiset(int r, int m, const std::function<void(const Tuple&)>& f) {
  Tuple t(m, 0);
  if (m == 0) { f(t); return; }
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == m) { f(t); return; }
    for (int v = lo; v < r; ++v) {
      t[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

void fill_symmetric(Array& a, const Tuple& t, const Q& v) {
  int m = static_cast<int>(t.size());
  for_each_perm(m, [&](const Tuple& p, int) {
    Tuple u(m);
    for (int k = 0; k < m; ++k) u[k] = t[p[k]];
    a.at(u) = v;
  });
}

}  // namespace

Array symmetrized_trace_poly(const std::vector<GMat>& T, int m) {
  if (m < 1) throw std::invalid_argument("symmetrized_trace_poly: m >= 1");
  int r = static_cast<int>(T.size());
  Array k(std::vector<int>(m, r));
  Q w(1, factorial(m));
  for_each_multiset(r, m, [&](const Tuple& t) {
    Gauss acc;
    for_each_perm(m, [&](const Tuple& p, int) {
      GMat prod = T[t[p[0]]];
      for (int a = 1; a < m; ++a) prod = prod * T[t[p[a]]];
      acc += prod.trace();
    });
    if (!acc.is_real()) throw std::logic_error("symmetrized trace is not real");
    fill_symmetric(k, t, acc.re * w);
  });
  return k;
}

Array symmetrize_unit(const Array& a) {
  int m = a.rank();
  int r = m ? a.shape[0] : 0;
  Array s(a.shape);
  Q w(1, factorial(m));
  for_each_multiset(r, m, [&](const Tuple& t) {
    Q acc;
    for_each_perm(m, [&](const Tuple& p, int) {
      Tuple u(m);
      for (int k = 0; k < m; ++k) u[k] = t[p[k]];
      acc += a.at(u);
    });
    fill_symmetric(s, t, acc * w);
  });
  return s;
}

CheckResult check_invariant_poly(const Algebra& L, const Array& k) {
  int m = k.rank();
  int r = L.D;
  if (!is_symmetric(k)) return CheckResult::fail({}, "not symmetric");
  CheckResult res;
  for_each_multiset(r, m, [&](const Tuple& t) {
    if (!res.ok) return;
    for (int l = 0; l < r && res.ok; ++l) {
      Q acc;
      for (int s = 0; s < m; ++s) {
        Tuple u = t;
        for (int q = 0; q < r; ++q) {
          const Q& c = L.at({l, t[s]}, q);
          if (is_zero(c)) continue;
          u[s] = q;
          acc += c * k.at(u);
        }
      }
      if (!is_zero(acc)) {
        Tuple w = t;
        w.insert(w.begin(), l);
        res = CheckResult::fail(w, "invariance residual");
      }
    }
  });
  return res;
}

namespace {

struct CEntry {
  int a, b, c;
  Q v;
};

std::vector<CEntry> nonzero_entries(const Algebra& L) {
  std::vector<CEntry> e;
  for (int a = 0; a < L.D; ++a)
    for (int b = 0; b < L.D; ++b)
      for (int c = 0; c < L.D; ++c)
        if (!is_zero(L.at({a, b}, c))) e.push_back({a, b, c, L.at({a, b}, c)});
  return e;
}

// Ω_{ρ i2…i_{2m-2} σ} at an arbitrary tuple.
Q hoce_value(const Algebra& L, const Array& k, const Tuple& t) {
  int m = k.rank();
  int len = 2 * m - 1;
  int rho = t[0], sigma = t[len - 1];
  Tuple I(t.begin() + 1, t.end() - 1);  // 2m-3 indices
  int nI = static_cast<int>(I.size());
  Q total;
  Tuple ls(m);
  ls[0] = rho;
  for_each_perm(nI, [&](const Tuple& p, int sg) {
    Tuple J(nI);
    for (int a = 0; a < nI; ++a) J[a] = I[p[a]];
    // pairs (J0,J1),…, then (J_{nI-1}, σ)
    std::function<void(int, const Q&)> rec = [&](int c, const Q& coef) {
      if (c == m - 1) {
        const Q& kv = k.at(ls);
        if (!is_zero(kv)) total += sg * coef * kv;
        return;
      }
      int x = J[2 * c];
      int y = (2 * c + 1 < nI) ? J[2 * c + 1] : sigma;
      const Q* row = L.row({x, y});
      for (int l = 0; l < L.D; ++l) {
        if (is_zero(row[l])) continue;
        ls[c + 1] = l;
        rec(c + 1, coef * row[l]);
      }
    };
    rec(0, Q(1));
  });
  return total;
}

}  // namespace

AntisymTensor cocycle_from_invariant_poly(const Algebra& L, const Array& k) {
  int m = k.rank();
  if (m < 2) throw std::invalid_argument("cocycle_from_invariant_poly: order >= 2");
  CheckResult inv = check_invariant_poly(L, k);
  if (!inv.ok) throw std::invalid_argument("polynomial is not invariant at (" + tuple_str(inv.where) + ")");
  int len = 2 * m - 1;
  AntisymTensor out(len, L.D);
  for (const Tuple& t : combinations(L.D, len)) {
    Q v = hoce_value(L, k, t);
    for (int a = 0; a + 1 < len; ++a) {
      Tuple u = t;
      std::swap(u[a], u[a + 1]);
      if (hoce_value(L, k, u) != -v)
        throw std::logic_error("cocycle_from_invariant_poly: result not antisymmetric at (" + tuple_str(t) + ")");
    }
    if (!is_zero(v)) out.set(t, v);
  }
  return out;
}

CheckResult check_cocycle(const Algebra& L, const AntisymTensor& omega) {
  int p = omega.rank();
  if (p + 1 > L.D) return {};
  for (const Tuple& J : combinations(L.D, p + 1)) {
    Q acc;
    for_each_shuffle(p + 1, 2, [&](const Tuple& S, const Tuple& R, int sg) {
      const Q* row = L.row({J[S[0]], J[S[1]]});
      Tuple u;
      for (int x : R) u.push_back(J[x]);
      u.push_back(0);
      for (int kk = 0; kk < L.D; ++kk) {
        if (is_zero(row[kk])) continue;
        u.back() = kk;
        acc += sg * row[kk] * omega.get(u);
      }
    });
    if (!is_zero(acc)) return CheckResult::fail(J, "cocycle residual");
  }
  return {};
}

CheckResult check_invariant_form(const Algebra& L, const AntisymTensor& omega) {
  int p = omega.rank();
  for (int i = 0; i < L.D; ++i)
    for (const Tuple& J : combinations(L.D, p)) {
      Q acc;
      for (int r = 0; r < p; ++r) {
        const Q* row = L.row({i, J[r]});
        Tuple u;
        for (int a = 0; a < p; ++a)
          if (a != r) u.push_back(J[a]);
        u.push_back(0);
        for (int kk = 0; kk < L.D; ++kk) {
          if (is_zero(row[kk])) continue;
          u.back() = kk;
          acc += (r % 2 ? -1 : 1) * row[kk] * omega.get(u);
        }
      }
      if (!is_zero(acc)) {
        Tuple w = J;
        w.insert(w.begin(), i);
        return CheckResult::fail(w, "invariance residual");
      }
    }
  return {};
}

Array lower_all(const Array& t, const QMat& g) {
  Array G({g.rows, g.cols});
  G.data = g.a;
  Array cur = t;
  for (int a = 0; a < t.rank(); ++a) cur = contract(cur, G, {{0, 0}});
  return cur;
}

Array invariant_poly_from_cocycle(const Algebra& L, const AntisymTensor& omega) {
  int len = omega.rank();
  if (len % 2 == 0 || len < 3) throw std::invalid_argument("invariant_poly_from_cocycle: odd order >= 3");
  int m = (len + 1) / 2;
  auto kinv = inverse(killing_form(L));
  if (!kinv) throw std::domain_error("degenerate Killing form: cannot raise indices");
  Array up = lower_all(omega.dense(), *kinv);
  std::vector<CEntry> ce = nonzero_entries(L);
  Array t(std::vector<int>(m, L.D));
  Tuple js(len), is(m);
  std::function<void(int, const Q&)> rec = [&](int c, const Q& coef) {
    if (c == m - 1) {
      for (int im = 0; im < L.D; ++im) {
        js[len - 1] = im;
        is[m - 1] = im;
        const Q& w = up.at(js);
        if (!is_zero(w)) t.at(is) += coef * w;
      }
      return;
    }
    for (const CEntry& e : ce) {
      js[2 * c] = e.a;
      js[2 * c + 1] = e.b;
      is[c] = e.c;
      rec(c + 1, coef * e.v);
    }
  };
  rec(0, Q(1));
  return t;
}

AntisymTensor poly_vanishing_form(const Algebra& L, const Array& k) {
  int m = k.rank();
  AntisymTensor out(2 * m, L.D);
  for (const Tuple& I : combinations(L.D, 2 * m)) {
    Q acc;
    Tuple ls(m);
    for_each_perm(2 * m, [&](const Tuple& p, int sg) {
      std::function<void(int, const Q&)> rec = [&](int c, const Q& coef) {
        if (c == m) {
          const Q& kv = k.at(ls);
          if (!is_zero(kv)) acc += sg * coef * kv;
          return;
        }
        const Q* row = L.row({I[p[2 * c]], I[p[2 * c + 1]]});
        for (int l = 0; l < L.D; ++l) {
          if (is_zero(row[l])) continue;
          ls[c] = l;
          rec(c + 1, coef * row[l]);
        }
      };
      rec(0, Q(1));
    });
    if (!is_zero(acc)) out.set(I, acc);
  }
  return out;
}

namespace {

Vec prod(const Algebra& P, const Vec& x, const Vec& y) { return P.bracket({x, y}); }

Vec assoc(const Algebra& P, const Vec& x, const Vec& y, const Vec& z) {
  Vec a = prod(P, prod(P, x, y), z);
  return axpy(a, Q(-1), prod(P, x, prod(P, y, z)));
}

Vec comm(const Algebra& P, const Vec& x, const Vec& y) {
  Vec a = prod(P, x, y);
  return axpy(a, Q(-1), prod(P, y, x));
}

}  // namespace

Vec antisymmetric_associator(const Algebra& P, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = assoc(P, x, y, z);
  axpy(r, Q(1), assoc(P, y, z, x));
  axpy(r, Q(1), assoc(P, z, x, y));
  axpy(r, Q(-1), assoc(P, y, x, z));
  axpy(r, Q(-1), assoc(P, x, z, y));
  axpy(r, Q(-1), assoc(P, z, y, x));
  return r;
}

Vec commutator_jacobiator(const Algebra& P, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = comm(P, comm(P, x, y), z);
  axpy(r, Q(1), comm(P, comm(P, y, z), x));
  axpy(r, Q(1), comm(P, comm(P, z, x), y));
  return r;
}

}  // namespace nary

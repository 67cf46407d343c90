#include "nary/filippov.hpp"

#include <stdexcept>

#include "nary/gla.hpp"

namespace nary {

Algebra fa_algebra(int n, int D) { return Algebra(Kind::Filippov, n, D); }

const char* fi_form_name(FiForm f) {
  switch (f) {
    case FiForm::Derivation: return "derivation";
    case FiForm::Short: return "short";
    case FiForm::Ghost: return "ghost";
  }
  return "?";
}

namespace {

Tuple cat(const Tuple& a, int x) {
  Tuple t = a;
  t.push_back(x);
  return t;
}

Tuple without(const Tuple& a, int k) {
  Tuple t;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (i != k) t.push_back(a[i]);
  return t;
}

CheckResult first_nonzero(const Vec& res, Tuple where, const char* form) {
  for (size_t s = 0; s < res.size(); ++s)
    if (!is_zero(res[s])) {
      where.push_back(static_cast<int>(s));
      return CheckResult::fail(where, std::string(form) + " FI residual " + to_string(res[s]));
    }
  return {};
}

CheckResult fi_derivation(const Algebra& F) {
  int n = F.n, D = F.D;
  Vec res(D);
  for (const Tuple& a : combinations(D, n - 1))
    for (const Tuple& b : combinations(D, n)) {
      std::fill(res.begin(), res.end(), Q(0));
      const Q* fb = F.row(b);
      Tuple al = cat(a, 0);
      for (int l = 0; l < D; ++l) {
        if (is_zero(fb[l])) continue;
        al[n - 1] = l;
        const Q* r = F.row(al);
        for (int s = 0; s < D; ++s)
          if (!is_zero(r[s])) res[s] += fb[l] * r[s];
      }
      for (int k = 0; k < n; ++k) {
        const Q* fk = F.row(cat(a, b[k]));
        Tuple bl = b;
        for (int l = 0; l < D; ++l) {
          if (is_zero(fk[l])) continue;
          bl[k] = l;
          const Q* r = F.row(bl);
          for (int s = 0; s < D; ++s)
            if (!is_zero(r[s])) res[s] -= fk[l] * r[s];
        }
      }
      Tuple w = a;
      w.insert(w.end(), b.begin(), b.end());
      CheckResult c = first_nonzero(res, w, "derivation");
      if (!c.ok) return c;
    }
  return {};
}

CheckResult fi_short(const Algebra& F) {
  int n = F.n, D = F.D;
  Vec res(D);
  for (const Tuple& J : combinations(D, n + 1))
    for (const Tuple& c : combinations(D, n - 2)) {
      std::fill(res.begin(), res.end(), Q(0));
      for (int k = 0; k <= n; ++k) {
        const Q* f1 = F.row(without(J, k));
        Tuple t{J[k]};
        t.insert(t.end(), c.begin(), c.end());
        t.push_back(0);
        int sg = ((n - k) % 2) ? -1 : 1;
        for (int l = 0; l < D; ++l) {
          if (is_zero(f1[l])) continue;
          t.back() = l;
          const Q* r = F.row(t);
          for (int s = 0; s < D; ++s)
            if (!is_zero(r[s])) res[s] += sg * f1[l] * r[s];
        }
      }
      Tuple w = J;
      w.insert(w.end(), c.begin(), c.end());
      CheckResult cr = first_nonzero(res, w, "short");
      if (!cr.ok) return cr;
    }
  return {};
}

CheckResult fi_ghost(const Algebra& F) {
  int n = F.n, D = F.D;
  std::vector<std::pair<Tuple, int>> perms;
  for_each_perm(n, [&](const Tuple& p, int s) { perms.push_back({p, s}); });
  Q w = Q((n - 1) % 2 ? -1 : 1) / Q(factorial(n - 1));
  Vec res(D);
  for (const Tuple& b : combinations(D, n - 1))
    for (const Tuple& c : combinations(D, n)) {
      std::fill(res.begin(), res.end(), Q(0));
      const Q* fc = F.row(c);
      Tuple bl = cat(b, 0);
      for (int l = 0; l < D; ++l) {
        if (is_zero(fc[l])) continue;
        bl[n - 1] = l;
        const Q* r = F.row(bl);
        for (int s = 0; s < D; ++s)
          if (!is_zero(r[s])) res[s] += fc[l] * r[s];
      }
      for (const auto& [p, sg] : perms) {
        const Q* f1 = F.row(cat(b, c[p[0]]));
        Tuple t;
        for (int k = 1; k < n; ++k) t.push_back(c[p[k]]);
        t.push_back(0);
        for (int l = 0; l < D; ++l) {
          if (is_zero(f1[l])) continue;
          t.back() = l;
          const Q* r = F.row(t);
          for (int s = 0; s < D; ++s)
            if (!is_zero(r[s])) res[s] -= w * sg * f1[l] * r[s];
        }
      }
      Tuple wh = b;
      wh.insert(wh.end(), c.begin(), c.end());
      CheckResult cr = first_nonzero(res, wh, "ghost");
      if (!cr.ok) return cr;
    }
  return {};
}

Q det(QMat m) {
  int n = m.rows;
  Q d(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return Q(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      Q f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

}  // namespace

CheckResult check_fi(const Algebra& F, FiForm form) {
  switch (form) {
    case FiForm::Derivation: return fi_derivation(F);
    case FiForm::Short: return fi_short(F);
    case FiForm::Ghost: return fi_ghost(F);
  }
  return {};
}

Algebra simple_fa(int n, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != n + 1) throw std::invalid_argument("simple_fa: need n+1 signs");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("simple_fa: signs must be +1 or -1");
  Algebra F(n == 2 ? Kind::Lie : Kind::Filippov, n, n + 1);
  for (int m = 0; m <= n; ++m) {
    Tuple a;
    for (int i = 0; i <= n; ++i)
      if (i != m) a.push_back(i);
    int e = perm_sign(cat(a, m));
    F.set(a, m, Q((n % 2 ? -1 : 1) * signs[m] * e));
  }
  return F;
}

Vec vector_product(const std::vector<Vec>& vs) {
  int n = static_cast<int>(vs.size());
  for (const Vec& v : vs)
    if (static_cast<int>(v.size()) != n + 1) throw std::invalid_argument("vector_product: need n vectors in dimension n+1");
  Vec out(n + 1);
  for (int b = 0; b <= n; ++b) {
    QMat m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0, cc = 0; c <= n; ++c) {
        if (c == b) continue;
        m(r, cc++) = vs[r][c];
      }
    out[b] = (b % 2 ? Q(-1) : Q(1)) * det(m);
  }
  return out;
}

FormalSum fundamental_compose(const Algebra& F, const FundamentalObject& X, const FundamentalObject& Y) {
  FormalSum s;
  for (size_t i = 0; i < Y.size(); ++i) {
    std::vector<Vec> args = X;
    args.push_back(Y[i]);
    FundamentalObject t = Y;
    t[i] = F.bracket(args);
    s.terms.push_back(t);
  }
  return s;
}

QMat ad_of(const Algebra& F, const FundamentalObject& X) { return F.ad(X); }

QMat ad_of(const Algebra& F, const FormalSum& s) {
  QMat m(F.D, F.D);
  for (const auto& t : s.terms) m += F.ad(t);
  return m;
}

Vec label_vector(const FundamentalObject& X) {
  int k = static_cast<int>(X.size());
  if (k == 0) return {Q(1)};
  int D = static_cast<int>(X[0].size());
  std::vector<Tuple> labels = combinations(D, k);
  Vec out(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    QMat m(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m(r, c) = X[r][labels[i][c]];
    out[i] = det(m);
  }
  return out;
}

Vec label_vector(const FormalSum& s) {
  Vec out;
  for (const auto& t : s.terms) {
    Vec v = label_vector(t);
    if (out.empty())
      out = v;
    else
      axpy(out, Q(1), v);
  }
  return out;
}

FundamentalObject basis_object(int D, const Tuple& label) {
  FundamentalObject x;
  for (int i : label) x.push_back(unit(D, i));
  return x;
}

namespace {

QVec vec_of(const QMat& m) { return m.a; }

}  // namespace

InDerAlgebra inder_lie_algebra(const Algebra& F) {
  InDerAlgebra I;
  int D = F.D;
  I.labels = combinations(D, F.n - 1);
  for (const Tuple& L : I.labels) I.ad.push_back(F.ad(L));
  int nl = static_cast<int>(I.labels.size());
  QMat V(D * D, nl);
  for (int j = 0; j < nl; ++j)
    for (int i = 0; i < D * D; ++i) V(i, j) = I.ad[j].a[i];
  std::vector<int> piv;
  rref(V, &piv);
  I.basis = piv;
  int r = static_cast<int>(piv.size());
  QMat B(D * D, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < D * D; ++i) B(i, j) = I.ad[piv[j]].a[i];
  I.projection = QMat(r, nl);
  for (int j = 0; j < nl; ++j) {
    auto x = solve(B, vec_of(I.ad[j]));
    if (!x) throw std::logic_error("inder: projection failed");
    for (int i = 0; i < r; ++i) I.projection(i, j) = (*x)[i];
  }
  I.lie = lie_algebra(r);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      QMat c = commutator(I.ad[piv[a]], I.ad[piv[b]]);
      auto x = solve(B, vec_of(c));
      if (!x) throw std::logic_error("inder: commutator leaves the span (FI fails)");
      for (int k = 0; k < r; ++k)
        if (!is_zero((*x)[k])) I.lie.set({a, b}, k, (*x)[k]);
    }
  return I;
}

Q inder_candidate_constant(const Algebra& F, const Tuple& a, const Tuple& b, const Tuple& c) {
  int m = F.n - 1;
  Q acc;
  for_each_perm(m, [&](const Tuple& sp, int ss) {
    for_each_perm(m, [&](const Tuple& tp, int ts) {
      for (int k = 1; k < m; ++k)
        if (b[sp[k]] != c[tp[k]]) return;
      acc += ss * ts * F.at(cat(a, b[sp[0]]), c[tp[0]]);
    });
  });
  return acc;
}

bool inder_candidates_antisymmetric(const Algebra& F) {
  auto labels = combinations(F.D, F.n - 1);
  for (const Tuple& a : labels)
    for (const Tuple& b : labels)
      for (const Tuple& c : labels)
        if (inder_candidate_constant(F, a, b, c) != -inder_candidate_constant(F, b, a, c)) return false;
  return true;
}

int derivation_dim(const Algebra& F) {
  int n = F.n, D = F.D;
  auto tuples = combinations(D, n);
  QMat M(static_cast<int>(tuples.size()) * D, D * D);
  // unknown Dm(i,j) at column i*D + j: D e_j = Σ_i Dm(i,j) e_i
  for (size_t t = 0; t < tuples.size(); ++t) {
    const Tuple& b = tuples[t];
    const Q* fb = F.row(b);
    for (int s = 0; s < D; ++s) {
      int row = static_cast<int>(t) * D + s;
      for (int l = 0; l < D; ++l)
        if (!is_zero(fb[l])) M(row, s * D + l) += fb[l];
      for (int k = 0; k < n; ++k) {
        Tuple bm = b;
        for (int mm = 0; mm < D; ++mm) {
          bm[k] = mm;
          const Q& v = F.at(bm, s);
          if (!is_zero(v)) M(row, mm * D + b[k]) -= v;
        }
      }
    }
  }
  return D * D - rank(M);
}

QMat kasymov_form(const Algebra& F) {
  auto labels = combinations(F.D, F.n - 1);
  int nl = static_cast<int>(labels.size());
  std::vector<QMat> ad;
  for (const Tuple& L : labels) ad.push_back(F.ad(L));
  QMat k(nl, nl);
  for (int i = 0; i < nl; ++i)
    for (int j = i; j < nl; ++j) k(i, j) = k(j, i) = (ad[i] * ad[j]).trace();
  return k;
}

bool semisimplicity_check(const Algebra& F, Vec* kernel_witness) {
  int n = F.n, D = F.D;
  auto labels = combinations(D, n - 1);
  std::vector<QMat> adY;
  for (const Tuple& L : labels) adY.push_back(F.ad(L));
  std::vector<Vec> rows;
  for_each_tuple(D, n - 2, [&](const Tuple& x) {
    std::vector<QMat> adZ;
    for (int z = 0; z < D; ++z) {
      Tuple t{z};
      t.insert(t.end(), x.begin(), x.end());
      adZ.push_back(F.ad(t));
    }
    for (const QMat& Y : adY) {
      Vec r(D);
      for (int z = 0; z < D; ++z) r[z] = (adZ[z] * Y).trace();
      if (!is_zero(r)) rows.push_back(r);
    }
  });
  QMat M(static_cast<int>(rows.size()), D);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int z = 0; z < D; ++z) M(static_cast<int>(i), z) = rows[i][z];
  QMat ns = nullspace(M);
  if (ns.cols == 0) return true;
  if (kernel_witness) {
    kernel_witness->assign(D, Q(0));
    for (int z = 0; z < D; ++z) (*kernel_witness)[z] = ns(z, 0);
  }
  return false;
}

MetricFaReport check_metric_fa(const Algebra& F, const QMat& g) {
  int n = F.n, D = F.D;
  if (g.rows != D || g.cols != D || g != g.transpose()) throw std::invalid_argument("metric must be a symmetric DxD matrix");
  if (!inverse(g)) throw std::invalid_argument("degenerate metric");
  MetricFaReport rep;
  rep.metric = true;
  for (const Tuple& a : combinations(D, n - 1))
    for (int b = 0; b < D && rep.metric; ++b)
      for (int c = b; c < D && rep.metric; ++c) {
        Q acc;
        const Q* fb = F.row(cat(a, b));
        const Q* fc = F.row(cat(a, c));
        for (int l = 0; l < D; ++l) acc += fb[l] * g(l, c) + fc[l] * g(b, l);
        if (!is_zero(acc)) rep.metric = false;
      }
  std::vector<int> shape(n + 1, D);
  Array low(shape);
  for_each_tuple(D, n + 1, [&](const Tuple& t) {
    Tuple a(t.begin(), t.end() - 1);
    const Q* r = F.row(a);
    Q acc;
    for (int l = 0; l < D; ++l) acc += r[l] * g(l, t[n]);
    low.at(t) = acc;
  });
  rep.antisymmetric = AntisymTensor::is_antisymmetric(low);
  rep.lowered = AntisymTensor::from_dense_sorted(low);
  rep.invariant = true;
  for (const Tuple& a : combinations(D, n - 1))
    for (const Tuple& b : combinations(D, n + 1)) {
      Q acc;
      for (int i = 0; i <= n; ++i) {
        const Q* fa = F.row(cat(a, b[i]));
        Tuple rest = without(b, i);
        rest.push_back(0);
        for (int l = 0; l < D; ++l) {
          if (is_zero(fa[l])) continue;
          rest.back() = l;
          acc += (i % 2 ? -1 : 1) * fa[l] * low.at(rest);
        }
      }
      if (!is_zero(acc)) {
        rep.invariant = false;
        return rep;
      }
    }
  return rep;
}

bool kasymov_invariant(const Algebra& F, const QMat& k) {
  int D = F.D;
  auto labels = combinations(D, F.n - 1);
  int nl = static_cast<int>(labels.size());
  for (int z = 0; z < nl; ++z) {
    FundamentalObject Z = basis_object(D, labels[z]);
    std::vector<Vec> zx;
    for (int x = 0; x < nl; ++x) zx.push_back(label_vector(fundamental_compose(F, Z, basis_object(D, labels[x]))));
    for (int x = 0; x < nl; ++x)
      for (int y = 0; y < nl; ++y) {
        Q acc;
        for (int u = 0; u < nl; ++u) acc += zx[x][u] * k(u, y) + zx[y][u] * k(x, u);
        if (!is_zero(acc)) return false;
      }
  }
  return true;
}

So4SplitReport k2_invariant_and_so4_split(const Algebra& F) {
  if (F.n != 3 || F.D != 4 || !(F.c == simple_fa(3, {1, 1, 1, 1}).c))
    throw std::invalid_argument("k2_invariant_and_so4_split: euclidean A4 expected");
  So4SplitReport r;
  auto labels = combinations(4, 2);
  r.k1 = kasymov_form(F);
  r.k2 = QMat(6, 6);
  MetricFaReport m = check_metric_fa(F, QMat::identity(4));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r.k2(i, j) = m.lowered.get({labels[i][0], labels[i][1], labels[j][0], labels[j][1]});
  r.k1_invariant = kasymov_invariant(F, r.k1);
  r.k2_invariant = kasymov_invariant(F, r.k2);
  r.k1_inertia = inertia(r.k1);
  r.k2_inertia = inertia(r.k2);

  InDerAlgebra I = inder_lie_algebra(F);
  if (I.basis.size() != 6) throw std::logic_error("A4: InDer is not six-dimensional");
  // label order (12)(13)(14)(23)(24)(34)
  r.P = QMat(6, 6);
  Q h(1, 2);
  for (int s = 0; s < 2; ++s) {
    Q pm = s == 0 ? h : Q(-h);
    int o = 3 * s;
    r.P(2, o) = h;     // J1 = ½(M14 ± M23)
    r.P(3, o) = pm;
    r.P(4, o + 1) = h;  // J2 = ½(M24 ∓ M13)
    r.P(1, o + 1) = -pm;
    r.P(5, o + 2) = h;  // J3 = ½(M34 ± M12)
    r.P(0, o + 2) = pm;
  }
  r.split = change_basis(I.lie, r.P);
  r.commuting = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) r.commuting &= is_zero(r.split.bracket_basis({i, j}));
  auto cyc = [&](int o, Q& lam) {
    lam = r.split.at({o, o + 1}, o + 2);
    if (is_zero(lam)) return false;
    for (int k = 0; k < 3; ++k) {
      Vec want(6);
      want[o + (k + 2) % 3] = lam;
      if (r.split.bracket_basis({o + k, o + (k + 1) % 3}) != want) return false;
    }
    return true;
  };
  r.su2_type = cyc(0, r.lambda_plus) & cyc(3, r.lambda_minus);
  auto block = [&](int o) {
    Algebra b = lie_algebra(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (i != j) b.at({i, j}, k) = r.split.at({o + i, o + j}, o + k);
    return killing_form(b);
  };
  r.killing_plus = block(0);
  r.killing_minus = block(3);
  QMat k1p = r.P.transpose() * r.k1 * r.P;
  QMat k2p = r.P.transpose() * r.k2 * r.P;
  QMat sum(6, 6), diff(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      sum(i, j) = diff(i, j) = r.killing_plus(i, j);
      sum(i + 3, j + 3) = r.killing_minus(i, j);
      diff(i + 3, j + 3) = -r.killing_minus(i, j);
    }
  bool a = proportional(k1p.a, sum.a, &r.k1_scale);
  bool b = proportional(k2p.a, diff.a, &r.k2_scale);
  r.sum_and_difference = a && b;
  return r;
}

Algebra subordinate(const Algebra& F, const Vec& A) {
  int n = F.n, D = F.D;
  if (n < 3) throw std::invalid_argument("subordinate: arity >= 3");
  if (static_cast<int>(A.size()) != D) throw std::invalid_argument("subordinate: dimension mismatch");
  Algebra S(n - 1 == 2 ? Kind::Lie : Kind::Filippov, n - 1, D);
  for (const Tuple& x : combinations(D, n - 1))
    for (int b = 0; b < D; ++b) {
      Q acc;
      for (int a = 0; a < D; ++a)
        if (!is_zero(A[a])) {
          Tuple t{a};
          t.insert(t.end(), x.begin(), x.end());
          acc += A[a] * F.at(t, b);
        }
      if (!is_zero(acc)) S.set(x, b, acc);
    }
  return S;
}

namespace {

GMat kron(const GMat& A, const GMat& B) {
  GMat out(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l) out(i * B.rows + k, j * B.cols + l) = A(i, j) * B(k, l);
  return out;
}

GMat pauli(int k) {
  GMat m(2, 2);
  if (k == 1) {
    m(0, 1) = m(1, 0) = Gauss(Q(1));
  } else if (k == 2) {
    m(0, 1) = Gauss(Q(0), Q(-1));
    m(1, 0) = Gauss(Q(0), Q(1));
  } else {
    m(0, 0) = Gauss(Q(1));
    m(1, 1) = Gauss(Q(-1));
  }
  return m;
}

// c with M = c·G, if any
std::optional<Gauss> ratio_to(const GMat& M, const GMat& G) {
  Gauss c;
  bool found = false;
  for (size_t i = 0; i < G.a.size(); ++i) {
    if (is_zero(G.a[i])) {
      if (!is_zero(M.a[i])) return std::nullopt;
      continue;
    }
    Gauss r = M.a[i] / G.a[i];
    if (!found) {
      c = r;
      found = true;
    } else if (!(r == c)) {
      return std::nullopt;
    }
  }
  if (!found) return std::nullopt;
  return c;
}

}  // namespace

std::vector<GMat> euclidean_gammas(int D, int s) {
  if (D % 2 || D < 2) throw std::invalid_argument("euclidean_gammas: even dimension");
  int k = D / 2;
  std::vector<GMat> g;
  GMat id2 = GMat::identity(2);
  for (int j = 0; j < k; ++j)
    for (int p : {1, 2}) {
      GMat m = GMat::identity(1);
      for (int t = 0; t < k; ++t) m = kron(m, t < j ? pauli(3) : (t == j ? pauli(p) : id2));
      if (s < 0) m = m * Gauss(Q(0), Q(1));
      g.push_back(m);
    }
  return g;
}

CliffordReport clifford_realization(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("clifford_realization: 3 <= n <= 5");
  CliffordReport rep;
  rep.n = n;
  int D;  // number of basis elements of the FA
  GMat top;
  bool odd = n % 2;
  if (odd) {
    D = n + 1;
    rep.gammas = euclidean_gammas(D);
    top = rep.gammas[0];
    for (int i = 1; i < D; ++i) top = top * rep.gammas[i];
  } else {
    D = n + 1;
    rep.gammas = euclidean_gammas(n, n / 2 % 2 ? -1 : 1);
    GMat prod = rep.gammas[0];
    for (int i = 1; i < n; ++i) prod = prod * rep.gammas[i];
    rep.gammas.push_back(prod);
  }
  rep.induced = Algebra(Kind::Filippov, n, D);
  rep.realizes = true;
  for (const Tuple& a : combinations(D, n)) {
    int m = 0;
    while (std::find(a.begin(), a.end(), m) != a.end()) ++m;
    std::vector<GMat> args;
    for (int i : a) args.push_back(rep.gammas[i]);
    if (odd) args.push_back(top);
    GMat M = multibracket_unit(args);
    auto c = ratio_to(M, rep.gammas[m]);
    if (!c || !c->is_real()) {
      rep.realizes = false;
      rep.sign = 0;
      continue;
    }
    rep.induced.set(a, m, c->re);
    int e = perm_sign(cat(a, m));
    int s = c->re == Q(e) ? 1 : (c->re == Q(-e) ? -1 : 0);
    if (s == 0 || (rep.sign != 0 && s != rep.sign)) rep.realizes = false;
    if (rep.sign == 0) rep.sign = s;
  }
  std::vector<int> plus(n + 1, 1);
  rep.matches_simple = rep.induced.c == simple_fa(n, plus).c;
  if (odd) {
    rep.gammas.push_back(top);
    if (n == 3) {
      rep.double_commutator_ok = true;
      const auto& g = rep.gammas;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) {
            GMat lhs = commutator(GMat(commutator(g[a], g[b]) * top), g[c]) * Gauss(Q(6));
            if (lhs != multibracket<Gauss>({top, g[a], g[b], g[c]})) rep.double_commutator_ok = false;
          }
    }
  }
  return rep;
}

Algebra trace_extension(const Algebra& F, const Vec& traces) {
  int n = F.n + 1, D = F.D;
  if (static_cast<int>(traces.size()) != D) throw std::invalid_argument("trace_extension: dimension mismatch");
  Algebra E(Kind::Filippov, n, D);
  for (const Tuple& a : combinations(D, n))
    for (int b = 0; b < D; ++b) {
      Q acc;
      for (int i = 0; i < n; ++i)
        if (!is_zero(traces[a[i]])) acc += (i % 2 ? -1 : 1) * traces[a[i]] * F.at(without(a, i), b);
      if (!is_zero(acc)) E.set(a, b, acc);
    }
  return E;
}

Algebra commutator_algebra(const std::vector<QMat>& basis) {
  int D = static_cast<int>(basis.size());
  if (D == 0) return lie_algebra(0);
  int sz = static_cast<int>(basis[0].a.size());
  QMat B(sz, D);
  for (int j = 0; j < D; ++j)
    for (int i = 0; i < sz; ++i) B(i, j) = basis[j].a[i];
  if (rank(B) != D) throw std::invalid_argument("commutator_algebra: basis is linearly dependent");
  Algebra L = lie_algebra(D);
  for (int a = 0; a < D; ++a)
    for (int b = a + 1; b < D; ++b) {
      auto x = solve(B, commutator(basis[a], basis[b]).a);
      if (!x) throw std::invalid_argument("commutator_algebra: span not closed");
      for (int k = 0; k < D; ++k)
        if (!is_zero((*x)[k])) L.set({a, b}, k, (*x)[k]);
    }
  return L;
}

FaRepresentation fa_adjoint_rep(const Algebra& F) {
  FaRepresentation R;
  R.dV = F.D;
  for (const Tuple& L : combinations(F.D, F.n - 1)) R.rho.push_back(F.ad(L));
  return R;
}

QMat fa_rho(const Algebra& F, const FaRepresentation& R, const FundamentalObject& X) {
  Vec lv = label_vector(X);
  QMat m(R.dV, R.dV);
  for (size_t i = 0; i < lv.size(); ++i)
    if (!is_zero(lv[i])) m += R.rho[i] * lv[i];
  (void)F;
  return m;
}

CheckResult check_fa_representation(const Algebra& F, const FaRepresentation& R) {
  int n = F.n, D = F.D;
  auto labels = combinations(D, n - 1);
  if (R.rho.size() != labels.size()) throw std::invalid_argument("FA representation: one matrix per label");
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = 0; b < labels.size(); ++b) {
      FormalSum s = fundamental_compose(F, basis_object(D, labels[a]), basis_object(D, labels[b]));
      QMat rhs(R.dV, R.dV);
      for (const auto& t : s.terms) rhs += fa_rho(F, R, t);
      if (commutator(R.rho[a], R.rho[b]) != rhs) {
        Tuple w = labels[a];
        w.insert(w.end(), labels[b].begin(), labels[b].end());
        return CheckResult::fail(w, "[rho(X),rho(Y)] != rho(X.Y)");
      }
    }
  CheckResult out;
  for_each_tuple(D, n - 2, [&](const Tuple& x) {
    if (!out.ok) return;
    for (const Tuple& y : combinations(D, n)) {
      FundamentalObject X = basis_object(D, x);
      X.push_back(F.bracket_basis(y));
      QMat lhs = fa_rho(F, R, X);
      QMat rhs(R.dV, R.dV);
      for (int i = 0; i < n; ++i) {
        QMat p = fa_rho(F, R, basis_object(D, without(y, i))) * fa_rho(F, R, basis_object(D, cat(x, y[i])));
        if ((n - 1 - i) % 2)
          rhs -= p;
        else
          rhs += p;
      }
      if (lhs != rhs) {
        Tuple w = x;
        w.insert(w.end(), y.begin(), y.end());
        out = CheckResult::fail(w, "rho(X,[Y]) expansion fails");
        return;
      }
    }
  });
  return out;
}

}  // namespace nary

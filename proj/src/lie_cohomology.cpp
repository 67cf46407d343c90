#include "nary/lie_cohomology.hpp"

#include <stdexcept>

namespace nary {

LieCochain::LieCochain(int order, int dim, int target) : p(order), r(dim), dV(target) {
  v.assign(static_cast<size_t>(binom(dim, order)) * target, Q(0));
}

Vec LieCochain::at(Tuple t) const {
  Vec out(dV);
  int s = sort_sign(t);
  if (s == 0) return out;
  long base = comb_rank(t, r) * dV;
  for (int A = 0; A < dV; ++A) out[A] = s > 0 ? v[base + A] : Q(-v[base + A]);
  return out;
}

void LieCochain::set(Tuple t, const Vec& val) {
  int s = sort_sign(t);
  if (s == 0) throw std::invalid_argument("LieCochain::set: repeated argument");
  long base = comb_rank(t, r) * dV;
  for (int A = 0; A < dV; ++A) v[base + A] = s > 0 ? val[A] : Q(-val[A]);
}

bool LieCochain::is_zero() const {
  for (const Q& x : v)
    if (!nary::is_zero(x)) return false;
  return true;
}

LieCochain scalar_cochain(const AntisymTensor& t) {
  LieCochain c(t.rank(), t.dim(), 1);
  for (const auto& [k, val] : t.entries()) c.v[comb_rank(k, t.dim())] = val;
  return c;
}

AntisymTensor scalar_part(const LieCochain& c) {
  AntisymTensor t(c.p, c.r);
  auto combs = combinations(c.r, c.p);
  for (size_t i = 0; i < combs.size(); ++i)
    if (!is_zero(c.v[i * c.dV])) t.set(combs[i], c.v[i * c.dV]);
  return t;
}

QVec to_column(const LieCochain& c) { return c.v; }

LieCochain coboundary(const Algebra& L, const Representation& R, const LieCochain& om) {
  int r = L.D, p = om.p, dV = om.dV;
  if (R.dV != dV || static_cast<int>(R.rho.size()) != r || om.r != r)
    throw std::invalid_argument("coboundary: representation/algebra dimension mismatch");
  LieCochain out(p + 1, r, dV);
  if (p + 1 > r) return out;
  for (const Tuple& J : combinations(r, p + 1)) {
    Vec acc(dV);
    for (int i = 0; i <= p; ++i) {
      Tuple rest;
      for (int a = 0; a <= p; ++a)
        if (a != i) rest.push_back(J[a]);
      Vec w = om.at(rest);
      if (is_zero(w)) continue;
      Vec rw = mat_vec(R.rho[J[i]], w);
      axpy(acc, Q(i % 2 ? -1 : 1), rw);
    }
    for (int j = 0; j <= p; ++j)
      for (int k = j + 1; k <= p; ++k) {
        const Q* row = L.row({J[j], J[k]});
        Tuple args{0};
        for (int a = 0; a <= p; ++a)
          if (a != j && a != k) args.push_back(J[a]);
        Q sg((j + k) % 2 ? -1 : 1);
        for (int l = 0; l < r; ++l) {
          if (is_zero(row[l])) continue;
          args[0] = l;
          axpy(acc, sg * row[l], om.at(args));
        }
      }
    out.set(J, acc);
  }
  return out;
}

AntisymTensor coboundary_coords(const Algebra& L, const AntisymTensor& om) {
  int p = om.rank(), r = L.D;
  if (p < 1) throw std::invalid_argument("coboundary_coords: order >= 1");
  AntisymTensor out(p + 1, r);
  Q w = Q(-1, 2) / Q(factorial(p - 1));
  for (const Tuple& J : combinations(r, p + 1)) {
    Q acc;
    for_each_perm(p + 1, [&](const Tuple& pi, int sg) {
      const Q* row = L.row({J[pi[0]], J[pi[1]]});
      Tuple args{0};
      for (int a = 2; a <= p; ++a) args.push_back(J[pi[a]]);
      for (int k = 0; k < r; ++k) {
        if (is_zero(row[k])) continue;
        args[0] = k;
        acc += sg * row[k] * om.get(args);
      }
    });
    out.set(J, acc * w);
  }
  return out;
}

QMat coboundary_matrix(const Algebra& L, const Representation& R, int p) {
  int r = L.D, dV = R.dV;
  long rows = binom(r, p + 1) * dV, cols = binom(r, p) * dV;
  QMat m(static_cast<int>(rows), static_cast<int>(cols));
  for (long c = 0; c < cols; ++c) {
    LieCochain e(p, r, dV);
    e.v[c] = 1;
    LieCochain s = coboundary(L, R, e);
    for (long i = 0; i < rows; ++i) m(static_cast<int>(i), static_cast<int>(c)) = s.v[i];
  }
  return m;
}

const DegreeDims& CohomologyReport::at(int p) const {
  for (const DegreeDims& d : degrees)
    if (d.p == p) return d;
  throw std::out_of_range("CohomologyReport: degree not computed");
}

CohomologyReport report_from_matrices(const std::vector<QMat>& d) {
  CohomologyReport rep;
  long prev_rank = 0;
  for (size_t p = 0; p < d.size(); ++p) {
    DegreeDims g;
    g.p = static_cast<int>(p);
    g.dimC = d[p].cols;
    long rk = d[p].rows && d[p].cols ? rank(d[p]) : 0;
    g.dimZ = g.dimC - rk;
    g.dimB = prev_rank;
    g.dimH = g.dimZ - g.dimB;
    rep.degrees.push_back(g);
    prev_rank = rk;
  }
  return rep;
}

CohomologyReport cohomology_dims(const Algebra& L, const Representation& R, int pmax) {
  std::vector<QMat> d;
  for (int p = 0; p <= pmax; ++p) d.push_back(coboundary_matrix(L, R, p));
  return report_from_matrices(d);
}

QMat casimir(const Algebra& L, const Representation& R) {
  auto kinv = inverse(killing_form(L));
  if (!kinv) throw std::domain_error("degenerate Killing form");
  QMat c(R.dV, R.dV);
  for (int i = 0; i < L.D; ++i)
    for (int j = 0; j < L.D; ++j)
      if (!is_zero((*kinv)(i, j))) c += (R.rho[i] * R.rho[j]) * (*kinv)(i, j);
  return c;
}

LieCochain homotopy_tau(const Algebra& L, const Representation& R, const LieCochain& om) {
  if (om.p < 1) throw std::invalid_argument("homotopy_tau: order >= 1");
  auto kinv = inverse(killing_form(L));
  if (!kinv) throw std::domain_error("degenerate Killing form");
  int r = L.D;
  LieCochain out(om.p - 1, r, om.dV);
  for (const Tuple& I : combinations(r, om.p - 1)) {
    Vec acc(om.dV);
    Tuple args{0};
    args.insert(args.end(), I.begin(), I.end());
    for (int j = 0; j < r; ++j) {
      args[0] = j;
      Vec w = om.at(args);
      if (is_zero(w)) continue;
      for (int i = 0; i < r; ++i)
        if (!is_zero((*kinv)(i, j))) axpy(acc, (*kinv)(i, j), mat_vec(R.rho[i], w));
    }
    out.set(I, acc);
  }
  return out;
}

LieCochain whitehead_homotopy(const Algebra& L, const Representation& R, const LieCochain& om) {
  QMat I2 = casimir(L, R);
  auto I2inv = inverse(I2);
  if (!I2inv) throw std::domain_error("singular Casimir operator");
  LieCochain t = homotopy_tau(L, R, om);
  for (size_t b = 0; b < t.v.size(); b += t.dV) {
    Vec w(t.v.begin() + b, t.v.begin() + b + t.dV);
    Vec x = mat_vec(*I2inv, w);
    for (int A = 0; A < t.dV; ++A) t.v[b + A] = x[A];
  }
  return t;
}

Algebra central_extension(const Algebra& L, const AntisymTensor& omega2) {
  int r = L.D;
  Algebra E = lie_algebra(r + 1);
  for (const Tuple& t : combinations(r, 2))
    for (int k = 0; k < r; ++k)
      if (!is_zero(L.at(t, k))) E.set(t, k, L.at(t, k));
  for (const auto& [t, v] : omega2.entries()) E.set(t, r, v);
  return E;
}

Trivialization trivialize_extension(const Algebra& L, const AntisymTensor& omega2) {
  Trivialization tr;
  int r = L.D;
  Representation R0 = trivial_rep(L, 1);
  QMat s1 = coboundary_matrix(L, R0, 1);
  auto x = solve(s1, to_column(scalar_cochain(omega2)));
  if (!x) return tr;
  tr.trivial = true;
  tr.omega1 = *x;
  QMat P = QMat::identity(r + 1);
  for (int i = 0; i < r; ++i) P(r, i) = -(*x)[i];
  tr.split = change_basis(central_extension(L, omega2), P);
  return tr;
}

DeformationReport deformation_check(const Algebra& L, const LieCochain& alpha) {
  DeformationReport rep;
  int r = L.D;
  if (alpha.p != 2 || alpha.dV != r) throw std::invalid_argument("deformation_check: algebra-valued 2-cochain expected");
  Representation ad = adjoint_rep(L);
  rep.is_cocycle = coboundary(L, ad, alpha).is_zero();
  QMat s1 = coboundary_matrix(L, ad, 1);
  rep.is_coboundary = solve(s1, to_column(alpha)).has_value();
  rep.gamma = LieCochain(3, r, r);
  auto a2 = [&](int x, const Vec& y) {
    Vec out(r);
    for (int l = 0; l < r; ++l)
      if (!is_zero(y[l])) axpy(out, y[l], alpha.at({x, l}));
    return out;
  };
  if (r >= 3) {
    for (const Tuple& t : combinations(r, 3)) {
      Vec g = a2(t[0], alpha.at({t[1], t[2]}));
      axpy(g, Q(1), a2(t[1], alpha.at({t[2], t[0]})));
      axpy(g, Q(1), a2(t[2], alpha.at({t[0], t[1]})));
      rep.gamma.set(t, g);
    }
  }
  rep.gamma_is_cocycle = coboundary(L, ad, rep.gamma).is_zero();
  QMat s2 = coboundary_matrix(L, ad, 2);
  auto pre = solve(s2, to_column(rep.gamma));
  rep.gamma_trivial = pre.has_value();
  if (pre) {
    rep.gamma_primitive = LieCochain(2, r, r);
    rep.gamma_primitive.v = *pre;
  }
  return rep;
}

}  // namespace nary

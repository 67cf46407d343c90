#include "nary/poisson.hpp"

#include <stdexcept>

#include "nary/gla.hpp"
#include "nary/nary_cohomology.hpp"

namespace nary {

namespace {

bool disjoint_union(const Tuple& I, const Tuple& J, Tuple& K, int& sign) {
  K = I;
  K.insert(K.end(), J.begin(), J.end());
  sign = sort_sign(K);
  return sign != 0;
}

Tuple drop_at(const Tuple& t, size_t pos) {
  Tuple r;
  for (size_t k = 0; k < t.size(); ++k)
    if (k != pos) r.push_back(t[k]);
  return r;
}

// Σ_σ sign(σ) Π_a ∂_{I_σ(a)} f_a
Poly minor(const std::vector<std::vector<Poly>>& df, const Tuple& I, int nvars) {
  int p = static_cast<int>(I.size());
  Poly acc(nvars);
  for_each_perm(p, [&](const Tuple& s, int sg) {
    Poly term = Poly::constant(nvars, Q(sg));
    for (int a = 0; a < p && !term.is_zero(); ++a) term = term * df[a][I[s[a]]];
    acc += term;
  });
  return acc;
}

std::vector<std::vector<Poly>> gradients(const std::vector<Poly>& fs, int m) {
  std::vector<std::vector<Poly>> df;
  for (const Poly& f : fs) {
    if (f.nvars() != m) throw std::invalid_argument("apply: variable count");
    std::vector<Poly> g;
    for (int i = 0; i < m; ++i) g.push_back(f.derivative(i));
    df.push_back(std::move(g));
  }
  return df;
}

void check_dims(const PolyMultivector& A, const PolyMultivector& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("multivectors on different dimensions");
}

}  // namespace

PolyMultivector PolyMultivector::constant(const AntisymTensor& t) {
  PolyMultivector r(t.rank(), t.dim());
  for (const auto& [I, v] : t.entries()) r.c_[I] = Poly::constant(t.dim(), v);
  return r;
}

PolyMultivector PolyMultivector::basis(int dim, const Tuple& idx) {
  PolyMultivector r(static_cast<int>(idx.size()), dim);
  r.set(idx, Poly::constant(dim, Q(1)));
  return r;
}

PolyMultivector PolyMultivector::vector_field(const std::vector<Poly>& comps) {
  int m = static_cast<int>(comps.size());
  PolyMultivector r(1, m);
  for (int i = 0; i < m; ++i) r.set({i}, comps[i]);
  return r;
}

Poly PolyMultivector::get(Tuple t) const {
  int s = sort_sign(t);
  if (s == 0) return Poly(m_);
  auto it = c_.find(t);
  if (it == c_.end()) return Poly(m_);
  return s > 0 ? it->second : -it->second;
}

void PolyMultivector::set(Tuple t, const Poly& v) {
  if (static_cast<int>(t.size()) != p_) throw std::invalid_argument("multivector: index count");
  for (int i : t)
    if (i < 0 || i >= m_) throw std::out_of_range("multivector: index");
  int s = sort_sign(t);
  if (s == 0) {
    if (!v.is_zero()) throw std::invalid_argument("multivector: repeated index");
    return;
  }
  if (v.is_zero())
    c_.erase(t);
  else
    c_[t] = s > 0 ? v : -v;
}

void PolyMultivector::add(Tuple t, const Poly& v) {
  int s = sort_sign(t);
  if (s == 0 || v.is_zero()) return;
  auto it = c_.find(t);
  if (it == c_.end()) {
    c_.emplace(t, s > 0 ? v : -v);
    return;
  }
  if (s > 0)
    it->second += v;
  else
    it->second -= v;
  if (it->second.is_zero()) c_.erase(it);
}

bool PolyMultivector::is_constant() const {
  for (const auto& [I, v] : c_)
    if (v.degree() > 0) return false;
  return true;
}

std::optional<AntisymTensor> PolyMultivector::constant_part() const {
  if (!is_constant()) return std::nullopt;
  AntisymTensor t(p_, m_);
  for (const auto& [I, v] : c_) t.set(I, v.terms().begin()->second);
  return t;
}

int PolyMultivector::degree() const {
  int d = -1;
  for (const auto& [I, v] : c_) d = std::max(d, v.degree());
  return d;
}

Poly PolyMultivector::apply(const std::vector<Poly>& fs) const {
  if (static_cast<int>(fs.size()) != p_) throw std::invalid_argument("apply: argument count");
  auto df = gradients(fs, m_);
  Poly acc(m_);
  if (p_ == 0) {
    auto it = c_.find(Tuple{});
    return it == c_.end() ? acc : it->second;
  }
  for (const auto& [I, w] : c_) acc += w * minor(df, I, m_);
  return acc;
}

PolyMultivector& PolyMultivector::operator+=(const PolyMultivector& o) {
  check_dims(*this, o);
  if (p_ != o.p_) throw std::invalid_argument("multivector orders differ");
  for (const auto& [I, v] : o.c_) add(I, v);
  return *this;
}

PolyMultivector& PolyMultivector::operator*=(const Q& s) {
  if (nary::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& [I, v] : c_) v *= s;
  return *this;
}

PolyMultivector operator+(PolyMultivector a, const PolyMultivector& b) { return a += b; }
PolyMultivector operator-(PolyMultivector a, const PolyMultivector& b) { return a += b * Q(-1); }
PolyMultivector operator*(PolyMultivector a, const Q& s) { return a *= s; }

PolyMultivector wedge(const PolyMultivector& A, const PolyMultivector& B) {
  check_dims(A, B);
  PolyMultivector r(A.order() + B.order(), A.dim());
  for (const auto& [I, a] : A.components())
    for (const auto& [J, b] : B.components()) {
      Tuple K;
      int s;
      if (!disjoint_union(I, J, K, s)) continue;
      r.add(K, (a * b) * Q(s));
    }
  return r;
}

// [A,B]^K = ε^K_{IJ} A^{νI} ∂_ν B^J / ((p−1)! q!) + (−1)^p ε^K_{IJ} B^{νJ} ∂_ν A^I / (p! (q−1)!)
PolyMultivector schouten_bracket(const PolyMultivector& A, const PolyMultivector& B) {
  check_dims(A, B);
  int p = A.order(), q = B.order(), m = A.dim();
  if (p + q == 0) return PolyMultivector(0, m);
  PolyMultivector r(p + q - 1, m);
  auto half = [&](const PolyMultivector& X, const PolyMultivector& Y, bool first, Q sg) {
    for (const auto& [Ix, x] : X.components())
      for (size_t pos = 0; pos < Ix.size(); ++pos) {
        int nu = Ix[pos];
        Tuple rest = drop_at(Ix, pos);
        // X^{ν rest} = (−1)^pos X^{Ix}
        Q s0 = (pos % 2) ? Q(-sg) : sg;
        for (const auto& [Iy, y] : Y.components()) {
          Poly dy = y.derivative(nu);
          if (dy.is_zero()) continue;
          Tuple K;
          int s;
          // the first term orders K as (rest of A, B), the second as (A, rest of B)
          bool ok = first ? disjoint_union(rest, Iy, K, s) : disjoint_union(Iy, rest, K, s);
          if (!ok) continue;
          r.add(K, (x * dy) * (s0 * s));
        }
      }
  };
  half(A, B, true, Q(1));
  half(B, A, false, (p % 2) ? Q(-1) : Q(1));
  return r;
}

PolyMultivector linear_multivector(const Algebra& G) {
  int n = G.n, m = G.D;
  PolyMultivector r(n, m);
  for (const Tuple& I : combinations(m, n)) {
    Poly w(m);
    for (int s = 0; s < m; ++s) {
      const Q& c = G.at(I, s);
      if (!is_zero(c)) w += Poly::var(m, s) * c;
    }
    r.set(I, w);
  }
  return r;
}

PolyMultivector lie_poisson_bivector(const Algebra& L) {
  if (L.n != 2) throw std::invalid_argument("lie_poisson_bivector: binary bracket expected");
  return linear_multivector(L);
}

PolyMultivector linear_gps_from_cocycle(const Algebra& L, const AntisymTensor& omega) {
  return linear_multivector(gla_from_cocycle(L, omega));
}

GpsReport gps_check(const PolyMultivector& L) {
  int p = L.order(), m = L.dim();
  if (p % 2 != 0 || p == 0) throw std::invalid_argument("gps_check: even order expected");
  GpsReport rep;
  PolyMultivector s = schouten_bracket(L, L);
  rep.schouten_zero = s.is_zero();
  if (!rep.schouten_zero) rep.where = s.components().begin()->first;

  // ω_{σ[J1} ∂^σ ω_{J2]} over the splits of each sorted K
  rep.coordinate_zero = true;
  int N = 2 * p - 1;
  for (const Tuple& K : combinations(m, N)) {
    Poly acc(m);
    for_each_shuffle(N, p - 1, [&](const Tuple& a, const Tuple& b, int sg) {
      Tuple I, J;
      for (int k : a) I.push_back(K[k]);
      for (int k : b) J.push_back(K[k]);
      Poly wJ = L.get(J);
      if (wJ.is_zero()) return;
      for (int sigma = 0; sigma < m; ++sigma) {
        Tuple Is = I;
        Is.push_back(sigma);
        Poly w = L.get(Is);
        if (w.is_zero()) continue;
        acc += (w * wJ.derivative(sigma)) * Q(sg);
      }
    });
    if (!acc.is_zero()) {
      rep.coordinate_zero = false;
      break;
    }
  }
  rep.ok = rep.schouten_zero && rep.coordinate_zero;
  return rep;
}

Decomposition decompose(const AntisymTensor& t) {
  int p = t.rank(), m = t.dim();
  Decomposition d;
  if (t.is_zero()) {
    d.decomposable = true;
    d.factors.assign(p, QVec(m));
    return d;
  }
  const auto& [I0, c] = *t.entries().begin();
  for (int a = 0; a < p; ++a) {
    QVec v(m);
    for (int k = 0; k < m; ++k) {
      Tuple I = I0;
      I[a] = k;
      v[k] = t.get(I);
    }
    d.factors.push_back(v);
  }
  // v_a has entry c at I0[a]; the wedge of the v_a is c^{p−1} t when t is decomposable
  Q scale = Q(1);
  for (int a = 1; a < p; ++a) scale /= c;
  for (auto& x : d.factors[0]) x *= scale;

  PolyMultivector w = PolyMultivector::vector_field([&] {
    std::vector<Poly> comps;
    for (const Q& x : d.factors[0]) comps.push_back(Poly::constant(m, x));
    return comps;
  }());
  for (int a = 1; a < p; ++a) {
    std::vector<Poly> comps;
    for (const Q& x : d.factors[a]) comps.push_back(Poly::constant(m, x));
    w = wedge(w, PolyMultivector::vector_field(comps));
  }
  if (w == PolyMultivector::constant(t)) {
    d.decomposable = true;
    return d;
  }
  d.factors.clear();
  for (const Tuple& I : combinations(m, p - 1))
    for (const Tuple& J : combinations(m, p + 1)) {
      Q acc;
      for (int k = 0; k <= p; ++k) {
        Tuple Ij = I;
        Ij.push_back(J[k]);
        Q v = t.get(Ij);
        if (is_zero(v)) continue;
        Q term = v * t.get(drop_at(J, k));
        if (k % 2)
          acc -= term;
        else
          acc += term;
      }
      if (!is_zero(acc)) {
        d.plucker_I = I;
        d.plucker_J = J;
        return d;
      }
    }
  return d;
}

NPReport np_check(const PolyMultivector& L) {
  int n = L.order(), m = L.dim();
  NPReport rep;
  if (n < 1) throw std::invalid_argument("np_check: order >= 1 expected");
  if (n == 1) {
    rep.np_ok = true;
    return rep;
  }
  // η_{iρ}∂^ρ η_J − Σ_k η_{j1…ρ…jn} ∂^ρ η_{i jk}
  auto eta = [&](const Tuple& t) { return L.get(t); };
  for (const Tuple& I : combinations(m, n - 1)) {
    for (const Tuple& J : combinations(m, n)) {
      Poly acc(m);
      for (int rho = 0; rho < m; ++rho) {
        Tuple Ir = I;
        Ir.push_back(rho);
        Poly a = eta(Ir);
        if (!a.is_zero()) acc += a * eta(J).derivative(rho);
        for (int k = 0; k < n; ++k) {
          Tuple Jr = J;
          Jr[k] = rho;
          Poly b = eta(Jr);
          if (b.is_zero()) continue;
          Tuple Ij = I;
          Ij.push_back(J[k]);
          acc -= b * eta(Ij).derivative(rho);
        }
      }
      if (!acc.is_zero()) {
        rep.differential_ok = false;
        rep.differential_where = I;
        rep.differential_where.insert(rep.differential_where.end(), J.begin(), J.end());
        rep.differential_monomial = acc.terms().begin()->first;
        break;
      }
    }
    if (!rep.differential_ok) break;
  }

  if (n > 2) {
    // Σ_{i j} = η_i η_j − Σ_k η_{i1…i(n−1) jk} η_{j1…(in at k)…jn}
    auto sigma = [&](const Tuple& i, const Tuple& j) {
      Poly acc = eta(i) * eta(j);
      Tuple head(i.begin(), i.end() - 1);
      for (int k = 0; k < n; ++k) {
        Tuple h = head;
        h.push_back(j[k]);
        Poly a = eta(h);
        if (a.is_zero()) continue;
        Tuple jj = j;
        jj[k] = i.back();
        acc -= a * eta(jj);
      }
      return acc;
    };
    // Σ + PΣ is antisymmetric in i2…i(n−1) and in j2…jn
    auto mids = combinations(m, n - 2 > 0 ? n - 2 : 0);
    auto tails = combinations(m, n - 1);
    bool done = false;
    for (int i1 = 0; i1 < m && !done; ++i1)
      for (const Tuple& mid : mids) {
        if (done) break;
        for (int in = 0; in < m && !done; ++in)
          for (int j1 = 0; j1 < m && !done; ++j1)
            for (const Tuple& tail : tails) {
              Tuple i{i1};
              i.insert(i.end(), mid.begin(), mid.end());
              i.push_back(in);
              Tuple j{j1};
              j.insert(j.end(), tail.begin(), tail.end());
              Poly s = sigma(i, j);
              if (rep.sigma_zero && !s.is_zero()) rep.sigma_zero = false;
              Tuple pi = i, pj = j;
              std::swap(pi[0], pj[0]);
              if (!(s + sigma(pi, pj)).is_zero()) {
                rep.algebraic_ok = false;
                rep.sigma_zero = false;
                rep.algebraic_where = i;
                rep.algebraic_where.insert(rep.algebraic_where.end(), j.begin(), j.end());
                done = true;
                break;
              }
            }
      }
  }
  rep.np_ok = rep.differential_ok && rep.algebraic_ok;
  if (auto c = L.constant_part()) rep.decomposable_hint = decompose(*c);
  return rep;
}

bool np_even_implies_gps(const PolyMultivector& L) {
  if (L.order() % 2 != 0) throw std::invalid_argument("np_even_implies_gps: even order expected");
  if (!np_check(L).np_ok) throw std::invalid_argument("np_even_implies_gps: not a Nambu-Poisson tensor");
  return gps_check(L).ok;
}

Poly nambu_bracket(const std::vector<Poly>& fs, const Q& e) {
  if (is_zero(e)) throw std::invalid_argument("nambu_bracket: zero density");
  int n = static_cast<int>(fs.size());
  if (n == 0) throw std::invalid_argument("nambu_bracket: no arguments");
  Tuple all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto df = gradients(fs, n);
  return minor(df, all, n) * (Q(1) / e);
}

Poly nhw_bracket(int N, const Poly& f1, const Poly& f2, const Poly& f3) {
  int m = 3 * N;
  auto df = gradients({f1, f2, f3}, m);
  Poly acc(m);
  for (int a = 0; a < N; ++a) acc += minor(df, {a, N + a, 2 * N + a}, m);
  return acc;
}

bool nhw_realization_check(int N) {
  int m = 3 * N;
  Algebra A = nhw_algebra(N);
  for (const Tuple& t : combinations(m, 3)) {
    Poly b = nhw_bracket(N, Poly::var(m, t[0]), Poly::var(m, t[1]), Poly::var(m, t[2]));
    if (b.degree() > 0) return false;
    Q v = b.is_zero() ? Q(0) : b.terms().begin()->second;
    for (int k = 0; k < m; ++k)
      if (!is_zero(A.at(t, k))) return false;
    if (A.at(t, m) != v) return false;
  }
  return true;
}

Poly hamiltonian_derivation_residual(const PolyMultivector& L, const std::vector<Poly>& hs,
                                     const std::vector<Poly>& gs) {
  int n = L.order();
  if (static_cast<int>(hs.size()) != n - 1 || static_cast<int>(gs.size()) != n)
    throw std::invalid_argument("hamiltonian_derivation_residual: argument count");
  auto X = [&](const Poly& F) {
    std::vector<Poly> a = hs;
    a.push_back(F);
    return L.apply(a);
  };
  Poly r = X(L.apply(gs));
  for (int i = 0; i < n; ++i) {
    std::vector<Poly> a = gs;
    a[i] = X(gs[i]);
    r -= L.apply(a);
  }
  return r;
}

}  // namespace nary

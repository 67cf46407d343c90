#include "nary/nary_cohomology.hpp"

#include <stdexcept>

namespace nary {

const char* ncomplex_name(NComplex c) {
  switch (c) {
    case NComplex::Trivial: return "trivial";
    case NComplex::Module: return "module";
    case NComplex::Deformation: return "deformation";
  }
  return "?";
}

std::optional<NComplex> ncomplex_from_name(const std::string& s) {
  if (s == "trivial") return NComplex::Trivial;
  if (s == "module") return NComplex::Module;
  if (s == "deformation") return NComplex::Deformation;
  return std::nullopt;
}

namespace {

using Obj = std::vector<Vec>;

std::vector<int> block_sizes(NComplex c, int n, int p, bool raw) {
  int slots = c == NComplex::Module ? p * (n - 1) : p * (n - 1) + 1;
  if (raw) return std::vector<int>(slots, 1);
  std::vector<int> b;
  if (c == NComplex::Module) return std::vector<int>(p, n - 1);
  if (p == 0) return {1};
  for (int i = 0; i + 1 < p; ++i) b.push_back(n - 1);
  b.push_back(n);
  return b;
}

Tuple comb_unrank(long r, int d, int k) {
  Tuple t;
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      long c = binom(d - x - 1, k - i - 1);
      if (r < c) break;
      r -= c;
      ++x;
    }
    t.push_back(x++);
  }
  return t;
}

// Canonical form of t for the given blocks: sorted inside each block.
int canonicalize(Tuple& t, const std::vector<int>& blocks) {
  int sign = 1, pos = 0;
  for (int s : blocks) {
    Tuple seg(t.begin() + pos, t.begin() + pos + s);
    int sg = sort_sign(seg);
    if (sg == 0) return 0;
    sign *= sg;
    std::copy(seg.begin(), seg.end(), t.begin() + pos);
    pos += s;
  }
  return sign;
}

void expand(const std::vector<Vec>& args, const std::function<void(const Tuple&, const Q&)>& f) {
  Tuple t(args.size());
  std::function<void(size_t, const Q&)> rec = [&](size_t k, const Q& c) {
    if (k == args.size()) {
      f(t, c);
      return;
    }
    for (size_t i = 0; i < args[k].size(); ++i) {
      if (is_zero(args[k][i])) continue;
      t[k] = static_cast<int>(i);
      rec(k + 1, c * args[k][i]);
    }
  };
  rec(0, Q(1));
}

std::vector<Vec> flatten(const std::vector<Obj>& objs, const Vec* Z) {
  std::vector<Vec> out;
  for (const Obj& o : objs) out.insert(out.end(), o.begin(), o.end());
  if (Z) out.push_back(*Z);
  return out;
}

Vec mv(const QMat& m, const Vec& v) { return mat_vec(m, v); }

Vec act(const Algebra& F, const Obj& X, const Vec& v) {
  std::vector<Vec> a = X;
  a.push_back(v);
  return F.bracket(a);
}

std::vector<Obj> objects_of(const Tuple& t, int n, int count, int D) {
  std::vector<Obj> o(count);
  for (int i = 0; i < count; ++i)
    for (int k = 0; k < n - 1; ++k) o[i].push_back(unit(D, t[i * (n - 1) + k]));
  return o;
}

template <class T>
std::vector<T> drop(const std::vector<T>& v, size_t i) {
  std::vector<T> o = v;
  o.erase(o.begin() + i);
  return o;
}

Vec sgn(int s, Vec v) {
  if (s < 0)
    for (auto& x : v) x = -x;
  return v;
}

// Σ_{i<j} (−1)^i α(…𝒳̂i…𝒳i·𝒳j…, Z) and Σ_i (−1)^i α(…𝒳̂i…, 𝒳i·Z), 1-based signs.
void trivial_terms(const Algebra& F, const NCochain& a, const std::vector<Obj>& objs, const Vec* Z, Vec& acc) {
  int m = static_cast<int>(objs.size());
  for (int i = 0; i < m; ++i) {
    int s = (i + 1) % 2 ? -1 : 1;
    for (int j = i + 1; j < m; ++j) {
      FormalSum fs = fundamental_compose(F, objs[i], objs[j]);
      for (const Obj& term : fs.terms) {
        std::vector<Obj> o = objs;
        o[j] = term;
        o.erase(o.begin() + i);
        axpy(acc, Q(s), a.eval(flatten(o, Z)));
      }
    }
    if (Z) {
      Vec z = act(F, objs[i], *Z);
      if (!is_zero(z)) axpy(acc, Q(s), a.eval(flatten(drop(objs, i), &z)));
    }
  }
}

enum class Mode { Trivial, Module, Deformation };

NCochain delta(const Algebra& F, const NCochain& a, Mode mode, const FaRepresentation* R) {
  if (a.n != F.n || a.D != F.D) throw std::invalid_argument("cochain does not match the algebra");
  NCochain out(F, a.complex, a.p + 1, a.dV);
  out.raw = a.raw;
  out.v.assign(out.num_args() * out.dV, Q(0));
  int n = F.n, D = F.D, m = a.p + 1;
  for (long k = 0; k < out.num_args(); ++k) {
    Tuple t = out.args_of(k);
    std::vector<Obj> objs = objects_of(t, n, m, D);
    Vec acc(a.dV);
    if (mode == Mode::Module) {
      trivial_terms(F, a, objs, nullptr, acc);
      for (int i = 0; i < m; ++i) {
        Vec val = a.eval(flatten(drop(objs, i), nullptr));
        if (is_zero(val)) continue;
        axpy(acc, Q(i % 2 ? -1 : 1), mv(fa_rho(F, *R, objs[i]), val));
      }
    } else {
      Vec Z = unit(D, t.back());
      trivial_terms(F, a, objs, &Z, acc);
      if (mode == Mode::Deformation) {
        for (int j = 0; j < m; ++j) {
          Vec val = a.eval(flatten(drop(objs, j), &Z));
          if (is_zero(val)) continue;
          axpy(acc, Q(j % 2 ? -1 : 1), act(F, objs[j], val));
        }
        // (−1)^p (α(𝒳1…𝒳p, )·𝒳p+1)·Z
        std::vector<Obj> head(objs.begin(), objs.end() - 1);
        const Obj& Y = objs.back();
        for (int i = 0; i < n - 1; ++i) {
          std::vector<Vec> args = flatten(head, &Y[i]);
          Vec val = a.eval(args);
          if (is_zero(val)) continue;
          Obj Yi = Y;
          Yi[i] = val;
          axpy(acc, Q(a.p % 2 ? -1 : 1), act(F, Yi, Z));
        }
      }
    }
    for (int A = 0; A < a.dV; ++A) out.v[k * a.dV + A] = acc[A];
  }
  return out;
}

NCochain unit_cochain(const NCochain& shape, long i) {
  NCochain u = shape;
  u.v.assign(shape.v.size(), Q(0));
  u.v[i] = Q(1);
  return u;
}

}  // namespace

NCochain::NCochain(const Algebra& F, NComplex c, int order, int target)
    : complex(c), n(F.n), D(F.D), p(order), dV(target), raw(!F.antisymmetric_kind()) {
  if (order < 0 || target < 0) throw std::invalid_argument("negative order or target");
  v.assign(num_args() * dV, Q(0));
}

int NCochain::slots() const { return complex == NComplex::Module ? p * (n - 1) : p * (n - 1) + 1; }

std::vector<int> NCochain::blocks() const { return block_sizes(complex, n, p, raw); }

long NCochain::num_args() const {
  long N = 1;
  for (int s : blocks()) N *= binom(D, s);
  return N;
}

Tuple NCochain::args_of(long k) const {
  auto b = blocks();
  std::vector<long> radix;
  for (int s : b) radix.push_back(binom(D, s));
  Tuple t;
  std::vector<long> idx(b.size());
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    idx[i] = k % radix[i];
    k /= radix[i];
  }
  for (size_t i = 0; i < b.size(); ++i) {
    Tuple s = comb_unrank(idx[i], D, b[i]);
    t.insert(t.end(), s.begin(), s.end());
  }
  return t;
}

std::pair<long, int> NCochain::locate(const Tuple& t0) const {
  if (static_cast<int>(t0.size()) != slots()) throw std::invalid_argument("cochain: wrong number of arguments");
  Tuple t = t0;
  auto b = blocks();
  int sign = canonicalize(t, b);
  if (sign == 0) return {0, 0};
  long idx = 0;
  int pos = 0;
  for (int s : b) {
    Tuple seg(t.begin() + pos, t.begin() + pos + s);
    idx = idx * binom(D, s) + comb_rank(seg, D);
    pos += s;
  }
  return {idx, sign};
}

Vec NCochain::at(const Tuple& t) const {
  Vec out(dV);
  auto [i, s] = locate(t);
  if (s == 0) return out;
  for (int A = 0; A < dV; ++A) out[A] = s * v[i * dV + A];
  return out;
}

void NCochain::set(const Tuple& t, const Vec& val) {
  if (static_cast<int>(val.size()) != dV) throw std::invalid_argument("cochain: value size");
  auto [i, s] = locate(t);
  if (s == 0) {
    if (!nary::is_zero(val)) throw std::invalid_argument("cochain: nonzero value on a vanishing argument");
    return;
  }
  for (int A = 0; A < dV; ++A) v[i * dV + A] = s * val[A];
}

Vec NCochain::eval(const std::vector<Vec>& args) const {
  Vec out(dV);
  expand(args, [&](const Tuple& t, const Q& c) {
    auto [i, s] = locate(t);
    if (s == 0) return;
    for (int A = 0; A < dV; ++A)
      if (!nary::is_zero(v[i * dV + A])) out[A] += c * s * v[i * dV + A];
  });
  return out;
}

bool NCochain::is_zero() const { return nary::is_zero(v); }

NCochain fa_coboundary_trivial(const Algebra& F, const NCochain& a) { return delta(F, a, Mode::Trivial, nullptr); }

NCochain fa_coboundary_module(const Algebra& F, const FaRepresentation& R, const NCochain& a) {
  if (!F.antisymmetric_kind()) throw std::invalid_argument("module complex: Filippov algebras only");
  if (a.dV != R.dV) throw std::invalid_argument("module complex: target dimension mismatch");
  CheckResult c = check_fa_representation(F, R);
  if (!c.ok) throw std::invalid_argument("not an FA representation at (" + tuple_str(c.where) + "): " + c.detail);
  return delta(F, a, Mode::Module, &R);
}

NCochain fa_coboundary_deformation(const Algebra& F, const NCochain& a) {
  if (a.dV != F.D) throw std::invalid_argument("deformation complex: cochains are algebra-valued");
  return delta(F, a, Mode::Deformation, nullptr);
}

NCochain fa_coboundary(const Algebra& F, const NCochain& a, const FaRepresentation* R) {
  switch (a.complex) {
    case NComplex::Trivial: return fa_coboundary_trivial(F, a);
    case NComplex::Module:
      if (!R) throw std::invalid_argument("module complex needs a representation");
      return fa_coboundary_module(F, *R, a);
    case NComplex::Deformation: return fa_coboundary_deformation(F, a);
  }
  return {};
}

QMat fa_coboundary_matrix(const Algebra& F, NComplex c, int p, int dV, const FaRepresentation* R) {
  if (c == NComplex::Module) {
    if (!R) throw std::invalid_argument("module complex needs a representation");
    dV = R->dV;
    CheckResult ok = check_fa_representation(F, *R);
    if (!ok.ok) throw std::invalid_argument("not an FA representation: " + ok.detail);
  }
  if (c == NComplex::Deformation) dV = F.D;
  NCochain shape(F, c, p, dV);
  NCochain next(F, c, p + 1, dV);
  QMat M(static_cast<int>(next.v.size()), static_cast<int>(shape.v.size()));
  Mode mode = c == NComplex::Trivial ? Mode::Trivial : (c == NComplex::Module ? Mode::Module : Mode::Deformation);
  for (size_t j = 0; j < shape.v.size(); ++j) {
    NCochain d = delta(F, unit_cochain(shape, static_cast<long>(j)), mode, R);
    for (size_t i = 0; i < d.v.size(); ++i)
      if (!is_zero(d.v[i])) M(static_cast<int>(i), static_cast<int>(j)) = d.v[i];
  }
  return M;
}

CohomologyReport fa_cohomology_dims(const Algebra& F, NComplex c, int pmax, int dV, const FaRepresentation* R) {
  std::vector<QMat> d;
  for (int p = 0; p <= pmax; ++p) d.push_back(fa_coboundary_matrix(F, c, p, dV, R));
  return report_from_matrices(d);
}

QVec to_column(const NCochain& a) { return a.v; }

NCochain from_column(const NCochain& shape, const QVec& x) {
  if (x.size() != shape.v.size()) throw std::invalid_argument("from_column: size mismatch");
  NCochain c = shape;
  c.v = x;
  return c;
}

std::optional<NCochain> fa_primitive(const Algebra& F, const NCochain& a, const FaRepresentation* R) {
  if (a.p == 0) {
    if (a.is_zero()) return a;
    return std::nullopt;
  }
  QMat M = fa_coboundary_matrix(F, a.complex, a.p - 1, a.dV, R);
  auto x = solve(M, a.v);
  if (!x) return std::nullopt;
  NCochain b(F, a.complex, a.p - 1, a.dV);
  b.raw = a.raw;
  b.v = *x;
  return b;
}

void NChain::add(const Tuple& t0, const Q& c) {
  if (nary::is_zero(c)) return;
  Tuple t = t0;
  int s = canonicalize(t, block_sizes(NComplex::Trivial, n, p, false));
  if (s == 0) return;
  Q& slot = terms[t];
  slot += s * c;
  if (nary::is_zero(slot)) terms.erase(t);
}

NChain fa_homology_boundary(const Algebra& F, const NChain& c) {
  if (c.p < 1) throw std::invalid_argument("boundary of a 0-chain");
  int n = F.n, D = F.D, m = c.p;
  NChain out{n, D, c.p - 1, {}};
  for (const auto& [t, coef] : c.terms) {
    std::vector<Obj> objs = objects_of(t, n, m, D);
    Vec Z = unit(D, t.back());
    auto emit = [&](const std::vector<Vec>& args, const Q& w) {
      expand(args, [&](const Tuple& u, const Q& x) { out.add(u, w * x); });
    };
    for (int i = 0; i < m; ++i) {
      Q s = coef * ((i + 1) % 2 ? -1 : 1);
      for (int j = i + 1; j < m; ++j)
        for (const Obj& term : fundamental_compose(F, objs[i], objs[j]).terms) {
          std::vector<Obj> o = objs;
          o[j] = term;
          o.erase(o.begin() + i);
          emit(flatten(o, &Z), s);
        }
      Vec z = act(F, objs[i], Z);
      emit(flatten(drop(objs, i), &z), s);
    }
  }
  return out;
}

Vec pair(const NCochain& a, const NChain& c) {
  Vec out(a.dV);
  for (const auto& [t, coef] : c.terms) axpy(out, coef, a.at(t));
  return out;
}

Algebra fa_central_extension(const Algebra& F, const NCochain& alpha1) {
  if (alpha1.complex != NComplex::Trivial || alpha1.p != 1 || alpha1.dV != 1 || alpha1.D != F.D || alpha1.n != F.n)
    throw std::invalid_argument("central extension: scalar trivial 1-cochain expected");
  int D = F.D;
  Algebra E(F.kind, F.n, D + 1);
  if (F.antisymmetric_kind()) {
    for (const Tuple& a : combinations(D, F.n)) {
      for (int b = 0; b < D; ++b)
        if (!is_zero(F.at(a, b))) E.set(a, b, F.at(a, b));
      Q x = alpha1.at(a)[0];
      if (!is_zero(x)) E.set(a, D, x);
    }
  } else {
    for_each_tuple(D, F.n, [&](const Tuple& a) {
      for (int b = 0; b < D; ++b) E.at(a, b) = F.at(a, b);
      E.at(a, D) = alpha1.at(a)[0];
    });
  }
  return E;
}

FaExtensionReport fa_extension_check(const Algebra& F, const NCochain& alpha1) {
  FaExtensionReport r;
  r.ext = fa_central_extension(F, alpha1);
  r.cocycle = fa_coboundary_trivial(F, alpha1).is_zero();
  r.fi = F.antisymmetric_kind() ? check_fi(r.ext) : check_leibniz(r.ext);
  auto b = fa_primitive(F, alpha1);
  if (b) {
    r.trivial = true;
    r.beta = *b;
    QMat P = QMat::identity(F.D + 1);
    for (int i = 0; i < F.D; ++i) P(F.D, i) = -b->v[i];
    r.split = change_basis(r.ext, P);
  }
  return r;
}

NCochain nhw_cocycle(int N) {
  if (N < 1) throw std::invalid_argument("nhw: N >= 1");
  NCochain a(abelian(Kind::Filippov, 3, 3 * N), NComplex::Trivial, 1, 1);
  for (int k = 0; k < N; ++k) a.set({k, N + k, 2 * N + k}, {Q(1)});
  return a;
}

Algebra nhw_algebra(int N) { return fa_central_extension(abelian(Kind::Filippov, 3, 3 * N), nhw_cocycle(N)); }

FaObstruction fa_deformation_obstruction(const Algebra& F, const NCochain& a1) {
  if (a1.complex != NComplex::Deformation || a1.p != 1) throw std::invalid_argument("obstruction: deformation 1-cochain expected");
  if (!fa_coboundary_deformation(F, a1).is_zero()) throw std::invalid_argument("obstruction: alpha is not a 1-cocycle");
  FaObstruction r;
  r.alpha_coboundary = fa_primitive(F, a1).has_value();
  int n = F.n, D = F.D;
  r.gamma = NCochain(F, NComplex::Deformation, 2, D);
  for (long k = 0; k < r.gamma.num_args(); ++k) {
    Tuple t = r.gamma.args_of(k);
    std::vector<Obj> o = objects_of(t, n, 2, D);
    const Obj &X = o[0], &Y = o[1];
    Vec Z = unit(D, t.back());
    Vec acc(D);
    Vec yz = a1.eval(flatten({Y}, &Z));
    axpy(acc, Q(1), a1.eval(flatten({X}, &yz)));
    for (int i = 0; i < n - 1; ++i) {
      Obj Yi = Y;
      Yi[i] = a1.eval(flatten({X}, &Y[i]));
      if (is_zero(Yi[i])) continue;
      axpy(acc, Q(-1), a1.eval(flatten({Yi}, &Z)));
    }
    Vec xz = a1.eval(flatten({X}, &Z));
    axpy(acc, Q(-1), a1.eval(flatten({Y}, &xz)));
    for (int A = 0; A < D; ++A) r.gamma.v[k * D + A] = acc[A];
  }
  r.gamma_cocycle = fa_coboundary_deformation(F, r.gamma).is_zero();
  auto b = fa_primitive(F, r.gamma);
  if (b) {
    r.gamma_trivial = true;
    r.alpha2 = *b;
    for (auto& x : r.alpha2.v) x = -x;
  }
  return r;
}

Algebra deformed(const Algebra& F, const NCochain& a, const Q& t) {
  if (a.complex != NComplex::Deformation || a.p != 1) throw std::invalid_argument("deformed: deformation 1-cochain expected");
  Algebra G = F;
  if (F.antisymmetric_kind()) {
    for (const Tuple& x : combinations(F.D, F.n)) {
      Vec v = a.at(x);
      for (int b = 0; b < F.D; ++b) G.set(x, b, F.at(x, b) + t * v[b]);
    }
  } else {
    for_each_tuple(F.D, F.n, [&](const Tuple& x) {
      Vec v = a.at(x);
      for (int b = 0; b < F.D; ++b) G.at(x, b) += t * v[b];
    });
  }
  return G;
}

CheckResult check_leibniz(const Algebra& L) {
  int n = L.n, D = L.D;
  CheckResult out;
  for_each_tuple(D, n - 1, [&](const Tuple& x) {
    if (!out.ok) return;
    Obj X;
    for (int i : x) X.push_back(unit(D, i));
    for_each_tuple(D, n, [&](const Tuple& y) {
      if (!out.ok) return;
      Obj Y;
      for (int i : y) Y.push_back(unit(D, i));
      Vec r = act(L, X, L.bracket(Y));
      for (int i = 0; i < n; ++i) {
        Obj Yi = Y;
        Yi[i] = act(L, X, Y[i]);
        axpy(r, Q(-1), L.bracket(Yi));
      }
      if (!is_zero(r)) {
        Tuple w = x;
        w.insert(w.end(), y.begin(), y.end());
        out = CheckResult::fail(w, "left Leibniz identity fails");
      }
    });
  });
  return out;
}

LeibnizRep leibniz_adjoint(const Algebra& L) {
  if (L.n != 2) throw std::invalid_argument("Leibniz representations: binary brackets only");
  LeibnizRep R;
  R.dV = L.D;
  for (int a = 0; a < L.D; ++a) {
    QMat l(L.D, L.D), r(L.D, L.D);
    for (int b = 0; b < L.D; ++b)
      for (int k = 0; k < L.D; ++k) {
        l(k, b) = L.at({a, b}, k);
        r(k, b) = L.at({b, a}, k);
      }
    R.left.push_back(l);
    R.right.push_back(r);
  }
  return R;
}

LeibnizRep leibniz_trivial(const Algebra& L, int dV) {
  return {dV, std::vector<QMat>(L.D, QMat(dV, dV)), std::vector<QMat>(L.D, QMat(dV, dV))};
}

LeibnizRep leibniz_symmetric(const Representation& R) {
  LeibnizRep out;
  out.dV = R.dV;
  out.left = R.rho;
  for (const QMat& m : R.rho) out.right.push_back(m * Q(-1));
  return out;
}

CheckResult check_leibniz_rep(const Algebra& L, const LeibnizRep& R) {
  int D = L.D;
  if (L.n != 2 || static_cast<int>(R.left.size()) != D || static_cast<int>(R.right.size()) != D)
    throw std::invalid_argument("Leibniz representation: one left and one right matrix per basis element");
  auto comb = [&](const std::vector<QMat>& ms, int a, int b) {
    QMat m(R.dV, R.dV);
    for (int k = 0; k < D; ++k)
      if (!is_zero(L.at({a, b}, k))) m += ms[k] * L.at({a, b}, k);
    return m;
  };
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      if (R.left[a] * R.left[b] - R.left[b] * R.left[a] != comb(R.left, a, b))
        return CheckResult::fail({a, b}, "left-left condition");
      if (R.left[a] * R.right[b] - R.right[b] * R.left[a] != comb(R.right, a, b))
        return CheckResult::fail({a, b}, "left-right condition");
      if (comb(R.right, a, b) != R.right[b] * R.right[a] + R.left[a] * R.right[b])
        return CheckResult::fail({a, b}, "right-right condition");
    }
  return {};
}

NCochain leibniz_cochain(const Algebra& L, int p, int dV) {
  if (L.n != 2) throw std::invalid_argument("Leibniz cochains: binary brackets only");
  NCochain c(L, NComplex::Module, p, dV);
  c.raw = true;
  c.v.assign(c.num_args() * dV, Q(0));
  return c;
}

NCochain leibniz_coboundary(const Algebra& L, const LeibnizRep& R, const NCochain& w) {
  CheckResult ok = check_leibniz_rep(L, R);
  if (!ok.ok) throw std::invalid_argument("not a Leibniz representation: " + ok.detail);
  if (w.dV != R.dV || w.D != L.D || w.complex != NComplex::Module) throw std::invalid_argument("Leibniz cochain shape");
  int D = L.D, p = w.p;
  NCochain out = leibniz_cochain(L, p + 1, w.dV);
  for (long k = 0; k < out.num_args(); ++k) {
    Tuple t = out.args_of(k);
    std::vector<Vec> X;
    for (int i : t) X.push_back(unit(D, i));
    Vec acc(w.dV);
    for (int i = 0; i < p; ++i) {
      Vec val = w.eval(drop(X, i));
      if (!is_zero(val)) axpy(acc, Q(i % 2 ? -1 : 1), mv(R.left[t[i]], val));
    }
    for (int i = 0; i < p + 1; ++i)
      for (int j = i + 1; j < p + 1; ++j) {
        std::vector<Vec> Y = X;
        Y[j] = L.bracket({X[i], X[j]});
        if (is_zero(Y[j])) continue;
        axpy(acc, Q((i + 1) % 2 ? -1 : 1), w.eval(drop(Y, i)));
      }
    {
      std::vector<Vec> head(X.begin(), X.end() - 1);
      Vec val = w.eval(head);
      if (!is_zero(val)) axpy(acc, Q((p + 1) % 2 ? -1 : 1), mv(R.right[t.back()], val));
    }
    for (int A = 0; A < w.dV; ++A) out.v[k * w.dV + A] = acc[A];
  }
  return out;
}

CohomologyReport leibniz_cohomology_dims(const Algebra& L, const LeibnizRep& R, int pmax) {
  std::vector<QMat> d;
  for (int p = 0; p <= pmax; ++p) {
    NCochain shape = leibniz_cochain(L, p, R.dV);
    NCochain next = leibniz_cochain(L, p + 1, R.dV);
    QMat M(static_cast<int>(next.v.size()), static_cast<int>(shape.v.size()));
    for (size_t j = 0; j < shape.v.size(); ++j) {
      NCochain c = leibniz_coboundary(L, R, unit_cochain(shape, static_cast<long>(j)));
      for (size_t i = 0; i < c.v.size(); ++i) M(static_cast<int>(i), static_cast<int>(j)) = c.v[i];
    }
    d.push_back(M);
  }
  return report_from_matrices(d);
}

Algebra leibniz_extension(const Algebra& L, const LeibnizRep& R, const NCochain& w2) {
  if (w2.p != 2) throw std::invalid_argument("Leibniz extension: 2-cochain expected");
  if (!leibniz_coboundary(L, R, w2).is_zero()) throw std::invalid_argument("Leibniz extension: not a 2-cocycle");
  int r = L.D, m = R.dV;
  Algebra E(Kind::Leibniz, 2, r + m);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int k = 0; k < r; ++k) E.at({a, b}, k) = L.at({a, b}, k);
      Vec w = w2.at({a, b});
      for (int A = 0; A < m; ++A) E.at({a, b}, r + A) = w[A];
    }
    for (int B = 0; B < m; ++B)
      for (int A = 0; A < m; ++A) {
        E.at({a, r + B}, r + A) = R.left[a](A, B);
        E.at({r + B, a}, r + A) = R.right[a](A, B);
      }
  }
  return E;
}

QMat leibniz_section_change(const Algebra& L, const NCochain& w1) {
  if (w1.p != 1) throw std::invalid_argument("section change: 1-cochain expected");
  QMat P = QMat::identity(L.D + w1.dV);
  for (int i = 0; i < L.D; ++i) {
    Vec w = w1.at({i});
    for (int A = 0; A < w1.dV; ++A) P(L.D + A, i) = w[A];
  }
  return P;
}

Algebra as_leibniz(const Algebra& F) {
  Algebra L = F;
  L.kind = Kind::Leibniz;
  return L;
}

}  // namespace nary

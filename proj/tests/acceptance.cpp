// Acceptance run: one PASS/FAIL line per criterion. Reads catalog/ from the
// working directory. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nary.h"
#include "nary/filippov.hpp"
#include "nary/gla.hpp"
#include "nary/io.hpp"
#include "nary/lie.hpp"
#include "nary/lie_cohomology.hpp"
#include "nary/nary_cohomology.hpp"
#include "nary/poisson.hpp"

using namespace nary;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Algebra load_alg(const std::string& name) { return parse_algebra(read_file("catalog/" + name)); }
PolyMultivector load_mv(const std::string& name) { return parse_multivector(read_file("catalog/" + name)); }

std::vector<int> plus(int n) { return std::vector<int>(n + 1, 1); }

// True when the defining identity of the algebra's kind holds. For Filippov
// algebras the three residual forms must also agree.
bool identity_ok(const Algebra& A, bool* forms_agree = nullptr) {
  switch (A.kind) {
    case Kind::Lie:
      return check_jacobi(A).ok && check_gji(A).ok;
    case Kind::GLA:
      return check_gji(A).ok;
    case Kind::Filippov: {
      bool d = check_fi(A, FiForm::Derivation).ok;
      bool s = check_fi(A, FiForm::Short).ok;
      bool g = check_fi(A, FiForm::Ghost).ok;
      if (forms_agree) *forms_agree = d == s && s == g;
      return d && s && g;
    }
    case Kind::Leibniz:
      return check_leibniz(A).ok;
  }
  return false;
}

// A single sign flip of a stored constant that breaks the identity, or when
// every flip gives an algebra of the same type, one added constant that does.
std::pair<Algebra, bool> negative_control(const Algebra& A) {
  auto tuples = combinations(A.D, A.n);
  for (const Tuple& t : tuples)
    for (int k = 0; k < A.D; ++k) {
      if (is_zero(A.at(t, k))) continue;
      Algebra B = A;
      B.set(t, k, -A.at(t, k));
      if (!identity_ok(B)) return {B, true};
    }
  for (const Tuple& t : tuples)
    for (int k = 0; k < A.D; ++k) {
      if (!is_zero(A.at(t, k))) continue;
      Algebra B = A;
      B.set(t, k, Q(1));
      if (!identity_ok(B)) return {B, false};
    }
  throw std::runtime_error("no negative control for " + tuple_str({A.n, A.D}));
}

Outcome identity_suite() {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<std::string> names{"su2.alg", "su3.alg",       "su4.alg",  "a4.alg",       "a13.alg",
                                       "a5.alg",  "heisenberg.alg", "nhw2.alg", "su3_gla4.alg"};
  int flips = 0, added = 0;
  for (const auto& name : names) {
    Algebra A = load_alg(name);
    bool agree = true;
    o.require(identity_ok(A, &agree), name + " fails its identity");
    o.require(agree, name + ": FI forms disagree");
    auto [B, flip] = negative_control(A);
    (flip ? flips : added)++;
    bool agree_b = true;
    o.require(!identity_ok(B, &agree_b), name + ": negative control passes");
    o.require(agree_b, name + ": FI forms disagree on the negative control");
  }
  for (const char* extra : {"r2_abelian.alg", "clifford3.alg"})
    o.require(identity_ok(load_alg(extra)), std::string(extra) + " fails its identity");
  Algebra broken = load_alg("a4_broken.alg");
  for (FiForm f : {FiForm::Derivation, FiForm::Short, FiForm::Ghost})
    o.require(!check_fi(broken, f).ok, std::string("a4_broken passes ") + fi_form_name(f));
  double s = seconds_since(t0);
  o.require(s < 10, "took " + std::to_string(s) + " s");
  std::ostringstream d;
  d << names.size() << " algebras, controls: " << flips << " sign flips, " << added << " added constants; " << s
    << " s";
  if (o.ok) o.detail = d.str();
  return o;
}

QMat eps_dual(const Algebra& F, int a1, int a2) {
  // M^{a1 a2} = 1/2 ε^{a1 a2 b1 b2} ad(X_{b1 b2})
  QMat M(4, 4);
  for (int b1 = 0; b1 < 4; ++b1)
    for (int b2 = 0; b2 < 4; ++b2) {
      Tuple t{a1, a2, b1, b2};
      Tuple s = t;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
      M += F.ad({b1, b2}) * Q(perm_sign(t), 2);
    }
  return M;
}

Outcome classification() {
  Outcome o;
  for (int n : {3, 4, 5}) {
    Algebra F = simple_fa(n, plus(n));
    for (FiForm f : {FiForm::Derivation, FiForm::Short, FiForm::Ghost})
      o.require(check_fi(F, f).ok, "simple_fa(" + std::to_string(n) + ") fails " + fi_form_name(f));
    int want = (n + 1) * n / 2;
    o.require(static_cast<int>(inder_lie_algebra(F).basis.size()) == want, "dim InDer wrong for n=" + std::to_string(n));
    o.require(derivation_dim(F) == want, "dim Der wrong for n=" + std::to_string(n));
  }

  // The relation holds as written for the orientation f = +ε; for f = −ε the
  // duals satisfy it with the opposite overall sign.
  Algebra A4 = simple_fa(3, plus(3));
  Algebra A4p = A4;
  for (auto& x : A4p.c) x = -x;
  o.require(A4p.at({0, 1, 2}, 3) == Q(1) && check_fi(A4p).ok, "orientation-reversed A4 is wrong");
  auto d = [](int i, int j) { return Q(i == j ? 1 : 0); };
  int entries = 0;
  for (const auto& [F, sign] : std::vector<std::pair<const Algebra*, int>>{{&A4p, 1}, {&A4, -1}}) {
    QMat M[4][4];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) M[a][b] = eps_dual(*F, a, b);
    for (int a1 = 0; a1 < 4; ++a1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b1 = 0; b1 < 4; ++b1)
          for (int b2 = 0; b2 < 4; ++b2) {
            QMat lhs = commutator(M[a1][a2], M[b1][b2]);
            QMat rhs = M[a2][b1] * Q(-d(a1, b2)) - M[a1][b2] * d(a2, b1) + M[a2][b2] * d(a1, b1) +
                       M[a1][b1] * d(a2, b2);
            o.require(lhs == rhs * Q(sign), "so(4) relation fails at " + tuple_str({a1, a2, b1, b2}));
            if (sign == 1 && !lhs.is_zero()) entries += 16;
          }
  }

  QMat k = kasymov_form(A4);
  bool diag = true;
  for (int i = 0; i < k.rows; ++i)
    for (int j = 0; j < k.cols; ++j) diag &= (i == j) != is_zero(k(i, j));
  o.require(diag, "Kasymov form of A4 not diagonal with nonzero diagonal");
  QMat ks = kasymov_form(load_alg("su2.alg"));
  Q r;
  o.require(proportional(ks.a, QMat::identity(3).a, &r) && r < 0, "su(2) Kasymov form not a negative multiple of I");
  if (o.ok) o.detail = "n=3,4,5 FI and InDer; " + std::to_string(entries) + " nonzero so(4) matrix entries; Kasymov A4 diag " +
                       k(0, 0).get_str() + ", su(2) " + ks(0, 0).get_str() + "*I";
  return o;
}

Outcome cohomology_numbers() {
  Outcome o;
  auto t0 = Clock::now();
  long widest = 0;
  auto note = [&](const CohomologyReport& r) {
    for (const auto& g : r.degrees) widest = std::max(widest, g.dimC);
    return r;
  };
  Algebra R2 = abelian(Kind::Lie, 2, 2);
  auto ab = note(cohomology_dims(R2, trivial_rep(R2), 2));
  o.require(ab.at(2).dimH == 1, "H^2_0(R^2) = " + std::to_string(ab.at(2).dimH));
  Algebra su2 = load_alg("su2.alg");
  auto s = note(cohomology_dims(su2, adjoint_rep(su2), 2));
  o.require(s.at(1).dimH == 0 && s.at(2).dimH == 0, "su(2) adjoint H^1 or H^2 nonzero");
  Algebra A4 = load_alg("a4.alg");
  auto tr = note(fa_cohomology_dims(A4, NComplex::Trivial, 1));
  o.require(tr.at(1).dimH == 0, "A4 trivial H^1 = " + std::to_string(tr.at(1).dimH));
  auto de = note(fa_cohomology_dims(A4, NComplex::Deformation, 1));
  o.require(de.at(1).dimH == 0, "A4 deformation H^1 = " + std::to_string(de.at(1).dimH));
  double sec = seconds_since(t0);
  o.require(sec < 60, "took " + std::to_string(sec) + " s");
  if (o.ok) o.detail = "widest cochain space " + std::to_string(widest) + "; " + std::to_string(sec) + " s";
  return o;
}

Array killing_array(const Algebra& L) {
  Array k({L.D, L.D});
  k.data = killing_form(L).a;
  return k;
}

Outcome polynomial_bridge() {
  Outcome o;
  SunBasis s3 = sun_generators(3);
  const Algebra& C = s3.C;
  Array d = symmetrized_trace_poly(s3.T, 3);
  AntisymTensor o5 = cocycle_from_invariant_poly(C, d);
  o.require(!o5.is_zero(), "d-symbol cocycle vanishes");
  o.require(check_cocycle(C, o5).ok, "d-symbol 5-form is not a cocycle");
  // coordinate cocycle condition by explicit alternation over S6
  for (const Tuple& J : combinations(8, 6)) {
    Q res;
    for_each_perm(6, [&](const Tuple& p, int sg) {
      Tuple u(6);
      for (int i = 0; i < 6; ++i) u[i] = J[p[i]];
      for (int k = 0; k < 8; ++k) {
        const Q& c = C.at({u[0], u[1]}, k);
        if (!is_zero(c)) res += sg * c * o5.get({u[2], u[3], u[4], u[5], k});
      }
    });
    if (!is_zero(res)) {
      o.fail("alternated cocycle condition nonzero at " + tuple_str(J));
      break;
    }
  }

  Array gg({8, 8, 8, 8});
  for_each_tuple(8, 4, [&](const Tuple& t) { gg.at(t) = s3.trace_form(t[0], t[1]) * s3.trace_form(t[2], t[3]); });
  o.require(cocycle_from_invariant_poly(C, symmetrize_unit(gg)).is_zero(), "symmetrized delta delta gives a cocycle");

  QMat kill = killing_form(C);
  Array back = lower_all(invariant_poly_from_cocycle(C, o5), kill);
  Q ratio;
  o.require(proportional(back.data, d.data, &ratio) && !is_zero(ratio), "round trip misses the d polynomial");
  Array k2 = killing_array(C);
  Array back2 = lower_all(invariant_poly_from_cocycle(C, cocycle_from_invariant_poly(C, k2)), kill);
  Q ratio2;
  o.require(proportional(back2.data, k2.data, &ratio2) && !is_zero(ratio2), "round trip misses the Killing form");

  o.require(poly_vanishing_form(C, k2).is_zero(), "vanishing identity fails for the Killing form");
  o.require(poly_vanishing_form(C, d).is_zero(), "vanishing identity fails for d");
  if (o.ok) o.detail = "round trip scales " + ratio.get_str() + " (d), " + ratio2.get_str() + " (Killing)";
  return o;
}

Form random_form(std::mt19937_64& rng, int p, int r) {
  std::uniform_int_distribution<int> u(-3, 3);
  Form t(p, r);
  for (const Tuple& J : combinations(r, p)) t.set(J, Q(u(rng)));
  return t;
}

Outcome gla_machinery() {
  Outcome o;
  SunBasis s3 = sun_generators(3);
  const Algebra& C = s3.C;
  AntisymTensor om3 = cocycle_from_invariant_poly(C, symmetrized_trace_poly(s3.T, 2));
  AntisymTensor om5 = cocycle_from_invariant_poly(C, symmetrized_trace_poly(s3.T, 3));
  Algebra G4 = gla_from_cocycle(C, om5);
  o.require(G4 == load_alg("su3_gla4.alg"), "catalog su3_gla4 differs from the generated bracket");
  o.require(check_gji(G4).ok, "GJI fails");
  o.require(check_mgji(C, G4).ok && check_mgji(G4, C).ok, "mixed GJI fails");

  int mono = 0;
  for (const Tuple& t : combinations(8, 7)) {
    ++mono;
    o.require(coderivation(G4, coderivation(G4, wedge_basis(8, t))).is_zero(), "coderivation squared nonzero at " + tuple_str(t));
  }

  std::mt19937_64 rng(2024);
  int leib = 0;
  for (const Algebra* G : std::vector<const Algebra*>{&C, &G4}) {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
      Form a = random_form(rng, p, 8), b = random_form(rng, q, 8);
      Form lhs = higher_exterior_derivative(*G, wedge(a, b));
      Form rhs = wedge(higher_exterior_derivative(*G, a), b);
      Form t2 = wedge(a, higher_exterior_derivative(*G, b));
      t2 *= Q(p % 2 ? -1 : 1);
      rhs += t2;
      o.require(lhs == rhs, "Leibniz rule fails");
      ++leib;
    }
    for (int q = 1; q <= 3; ++q) {
      Form a = random_form(rng, q, 8);
      o.require(higher_exterior_derivative(*G, higher_exterior_derivative(*G, a)).is_zero(), "d~ squared nonzero");
    }
  }

  BrstReport br = brst_nilpotency(C, {om3, om5});
  o.require(br.ok, "BRST anticommutator nonzero on monomial " + std::to_string(br.monomial));
  if (o.ok)
    o.detail = std::to_string(mono) + " 7-monomials, " + std::to_string(leib) + " Leibniz pairs, 256 ghost monomials";
  return o;
}

Outcome fi_forms_agree() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2), pick(0, 3);
  std::bernoulli_distribution sparse(0.15);
  int trues = 0, falses = 0, disagree = 0;
  for (int it = 0; it < 1000; ++it) {
    int D = it % 2 ? 5 : 4;
    Algebra F(Kind::Filippov, 3, D);
    switch (pick(rng)) {
      case 0:  // dense random
        for (const Tuple& t : combinations(D, 3))
          for (int k = 0; k < D; ++k) F.set(t, k, Q(coef(rng)));
        break;
      case 1:  // sparse random
        for (const Tuple& t : combinations(D, 3))
          for (int k = 0; k < D; ++k)
            if (sparse(rng)) F.set(t, k, Q(coef(rng)));
        break;
      default: {  // random basis change of a Filippov algebra
        std::vector<int> sg(4);
        for (int& s : sg) s = coef(rng) < 0 ? -1 : 1;
        Algebra base = simple_fa(3, sg);
        if (D == 5) base = direct_sum(base, abelian(Kind::Filippov, 3, 1));
        QMat P(D, D);
        do {
          for (auto& x : P.a) x = Q(coef(rng));
        } while (rank(P) < D);
        F = change_basis(base, P);
        break;
      }
    }
    bool a = check_fi(F, FiForm::Derivation).ok, b = check_fi(F, FiForm::Short).ok, c = check_fi(F, FiForm::Ghost).ok;
    if (a != b || b != c) ++disagree;
    (a ? trues : falses)++;
  }
  o.require(disagree == 0, std::to_string(disagree) + " disagreements");
  o.require(trues > 0 && falses > 0, "samples are one-sided");
  if (o.ok)
    o.detail = "1000 tensors, " + std::to_string(trues) + " satisfy FI, " + std::to_string(falses) + " violate, 0 disagree";
  return o;
}

Outcome poisson_suite() {
  Outcome o;
  PolyMultivector lp = lie_poisson_bivector(load_alg("su2.alg"));
  GpsReport g2 = gps_check(lp);
  o.require(g2.schouten_zero && g2.coordinate_zero, "su(2) Lie-Poisson bracket not zero");
  o.require(lp == load_mv("su2_lie_poisson.mv"), "catalog su2_lie_poisson differs");

  SunBasis s3 = sun_generators(3);
  AntisymTensor om5 = cocycle_from_invariant_poly(s3.C, symmetrized_trace_poly(s3.T, 3));
  PolyMultivector l4 = linear_gps_from_cocycle(s3.C, om5);
  GpsReport g4 = gps_check(l4);
  o.require(g4.schouten_zero && g4.coordinate_zero, "su(3) linear 4-vector not GPS");
  o.require(g4.schouten_zero == g4.coordinate_zero, "GPS computation paths disagree");
  o.require(l4 == load_mv("su3_gps4.mv"), "catalog su3_gps4 differs");

  PolyMultivector nb = load_mv("nambu3.mv");
  o.require(nb.order() == 3 && nb.dim() == 3, "nambu3 has the wrong shape");
  NPReport n3 = np_check(nb);
  o.require(n3.differential_ok && n3.algebraic_ok, "canonical 3-vector fails NP conditions");
  PolyMultivector a4 = linear_multivector(load_alg("a4.alg"));
  o.require(a4 == load_mv("a4_linear.mv"), "catalog a4_linear differs");
  NPReport na = np_check(a4);
  o.require(na.differential_ok && na.algebraic_ok, "A4 linear tensor fails NP conditions");
  NPReport ns = np_check(load_mv("sum6.mv"));
  o.require(!ns.algebraic_ok, "R^6 direct sum passes the algebraic condition");

  std::mt19937_64 rng(17);
  auto rp = [&] { return random_poly(3, 3, rng, 2, 0.4); };
  auto br = [](const Poly& a, const Poly& b, const Poly& c) { return nambu_bracket({a, b, c}); };
  int nonzero_inputs = 0;
  for (int it = 0; it < 100; ++it) {
    Poly f1 = rp(), f2 = rp(), g1 = rp(), g2 = rp(), g3 = rp();
    if (!br(f1, f2, br(g1, g2, g3)).is_zero()) ++nonzero_inputs;
    Poly res = br(f1, f2, br(g1, g2, g3)) - br(br(f1, f2, g1), g2, g3) - br(g1, br(f1, f2, g2), g3) -
               br(g1, g2, br(f1, f2, g3));
    if (!res.is_zero()) {
      o.fail("FI residual nonzero at sample " + std::to_string(it));
      break;
    }
  }
  o.require(nonzero_inputs > 50, "random samples mostly trivial");
  if (o.ok) o.detail = "SNB and coordinate GPS paths agree; 100 Jacobian samples, " + std::to_string(nonzero_inputs) + " nontrivial";
  return o;
}

GMat bracket4(const std::vector<GMat>& x) {
  GMat acc(x[0].rows, x[0].cols);
  for_each_perm(4, [&](const Tuple& p, int s) {
    acc += x[p[0]] * x[p[1]] * x[p[2]] * x[p[3]] * Gauss(Q(s));
  });
  return acc;
}

Outcome clifford() {
  Outcome o;
  CliffordReport rep = clifford_realization(3);
  o.require(rep.realizes && rep.sign == -1, "realization sign is not -1");
  auto g = euclidean_gammas(4);
  GMat g5 = g[0] * g[1] * g[2] * g[3];
  o.require(g5 * g5 == GMat::identity(g5.rows), "gamma5 does not square to one");
  int triples = 0;
  for (const Tuple& t : combinations(4, 3)) {
    int d = 6 - t[0] - t[1] - t[2];
    GMat br = bracket4({g[t[0]], g[t[1]], g[t[2]], g5}) * Gauss(Q(1, 24));
    GMat want = g[d] * Gauss(Q(-perm_sign({t[0], t[1], t[2], d})));
    o.require(br == want, "triple " + tuple_str(t) + " is not -eps gamma");
    ++triples;
  }
  int dc = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        GMat ab = g[a] * g[b] - g[b] * g[a];
        GMat inner = ab * g5;
        GMat lhs = (inner * g[c] - g[c] * inner) * Gauss(Q(6));
        o.require(lhs == bracket4({g5, g[a], g[b], g[c]}), "double commutator fails at " + tuple_str({a, b, c}));
        ++dc;
      }
  if (o.ok) o.detail = std::to_string(triples) + " triples, " + std::to_string(dc) + " double commutators";
  return o;
}

std::string take(char* s) {
  std::string r = s ? s : "";
  nary_string_free(s);
  return r;
}

Outcome serialization() {
  Outcome o;
  const std::map<std::string, nary_status> algs{
      {"su2.alg", NARY_OK},        {"su3.alg", NARY_OK},       {"su4.alg", NARY_OK},  {"a4.alg", NARY_OK},
      {"a13.alg", NARY_OK},        {"a5.alg", NARY_OK},        {"heisenberg.alg", NARY_OK},
      {"nhw2.alg", NARY_OK},       {"su3_gla4.alg", NARY_OK},  {"r2_abelian.alg", NARY_OK},
      {"clifford3.alg", NARY_OK},  {"a4_broken.alg", NARY_FAIL}};
  const std::map<std::string, std::pair<const char*, nary_status>> mvs{
      {"nambu3.mv", {"np", NARY_OK}},
      {"a4_linear.mv", {"np", NARY_OK}},
      {"sum6.mv", {"np", NARY_FAIL}},
      {"su2_lie_poisson.mv", {"gps", NARY_OK}},
      {"su3_gps4.mv", {"gps", NARY_OK}}};
  int files = 0;
  for (const auto& [name, want] : algs) {
    std::string text = read_file("catalog/" + name);
    nary_algebra* a = nullptr;
    if (nary_algebra_parse(text.c_str(), &a) != NARY_OK) {
      o.fail(name + ": " + nary_last_error());
      continue;
    }
    char* e = nullptr;
    nary_algebra_emit(a, &e);
    std::string out = take(e);
    nary_algebra_free(a);
    o.require(out == text, name + " does not round-trip");
    nary_algebra* b = nullptr;
    o.require(nary_algebra_parse(out.c_str(), &b) == NARY_OK, name + ": emitted text does not parse");
    char* r = nullptr;
    int passed = 0;
    nary_status s = nary_check(b, "all", &r, &passed);
    take(r);
    nary_algebra_free(b);
    o.require(s == want && passed == (want == NARY_OK), name + ": suite verdict changed");
    ++files;
  }
  for (const auto& [name, spec] : mvs) {
    std::string text = read_file("catalog/" + name);
    nary_tensor* t = nullptr;
    if (nary_tensor_parse(text.c_str(), &t) != NARY_OK) {
      o.fail(name + ": " + nary_last_error());
      continue;
    }
    char* e = nullptr;
    nary_tensor_emit(t, &e);
    std::string out = take(e);
    nary_tensor_free(t);
    o.require(out == text, name + " does not round-trip");
    nary_tensor* u = nullptr;
    o.require(nary_tensor_parse(out.c_str(), &u) == NARY_OK, name + ": emitted text does not parse");
    char* r = nullptr;
    int passed = 0;
    nary_status s = nary_poisson(u, spec.first, &r, &passed);
    take(r);
    nary_tensor_free(u);
    o.require(s == spec.second && passed == (spec.second == NARY_OK), name + ": suite verdict changed");
    ++files;
  }
  if (o.ok) o.detail = std::to_string(files) + " files byte-identical after parse/emit";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"identity suite on the catalog", identity_suite},
      {"classification spot-checks", classification},
      {"cohomology dimensions", cohomology_numbers},
      {"cocycle and invariant polynomial bridge", polynomial_bridge},
      {"GLA machinery", gla_machinery},
      {"FI residual forms agree", fi_forms_agree},
      {"Poisson suite", poisson_suite},
      {"Clifford realization", clifford},
      {"serialization round trip", serialization},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", i, name, seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed;
}

#include "doctest.h"
#include "helpers.hpp"
#include "nary/gla.hpp"
#include "nary/lie_cohomology.hpp"

using namespace nary;
using namespace testutil;

namespace {

struct Su3Fixture {
  SunBasis b = sun_generators(3);
  AntisymTensor om3, om5;
  Algebra G4;
  Su3Fixture() {
    om3 = cocycle_from_invariant_poly(b.C, symmetrized_trace_poly(b.T, 2));
    om5 = cocycle_from_invariant_poly(b.C, symmetrized_trace_poly(b.T, 3));
    G4 = gla_from_cocycle(b.C, om5);
  }
};

const Su3Fixture& su3() {
  static Su3Fixture f;
  return f;
}

Form random_form(std::mt19937_64& rng, int p, int r) {
  Form t(p, r);
  for (const Tuple& J : combinations(r, p)) t.set(J, rnd(rng));
  return t;
}

Algebra random_antisym(std::mt19937_64& rng, int n, int D) {
  Algebra G(n == 2 ? Kind::Lie : Kind::GLA, n, D);
  for (const Tuple& t : combinations(D, n))
    for (int j = 0; j < D; ++j) G.set(t, j, rnd(rng));
  return G;
}

}  // namespace

TEST_CASE("multibracket of matrices") {
  std::mt19937_64 rng(1);
  std::vector<QMat> X;
  for (int i = 0; i < 5; ++i) X.push_back(rmat(rng, 3, 3));
  CHECK(multibracket<Q>({X[0], X[1]}) == commutator(X[0], X[1]));
  // three and four entries against the recursive expansion
  CHECK(multibracket<Q>({X[0], X[1], X[2]}) ==
        X[0] * commutator(X[1], X[2]) - X[1] * commutator(X[0], X[2]) + X[2] * commutator(X[0], X[1]));
  CHECK(multibracket<Q>({X[0], X[1], X[2]}) ==
        commutator(X[1], X[2]) * X[0] - commutator(X[0], X[2]) * X[1] + commutator(X[0], X[1]) * X[2]);
  auto b3 = [&](int a, int b, int c) { return multibracket<Q>({X[a], X[b], X[c]}); };
  QMat four = multibracket<Q>({X[0], X[1], X[2], X[3]});
  CHECK(four == X[0] * b3(1, 2, 3) - X[1] * b3(0, 2, 3) + X[2] * b3(0, 1, 3) - X[3] * b3(0, 1, 2));
  CHECK(four == b3(0, 2, 3) * X[1] - b3(1, 2, 3) * X[0] - b3(0, 1, 3) * X[2] + b3(0, 1, 2) * X[3]);
  // transpositions flip the sign
  CHECK(multibracket<Q>({X[1], X[0], X[2], X[3]}) == four * Q(-1));
  CHECK(multibracket<Q>({X[0], X[3], X[2], X[1]}) == four * Q(-1));
  CHECK(multibracket_unit<Q>({X[0], X[1], X[2], X[3]}) * Q(24) == four);
  CHECK_THROWS_AS(multibracket<Q>({X[0], rmat(rng, 2, 2)}), std::invalid_argument);
  // complex entries
  std::vector<GMat> Z{rgmat(rng, 2), rgmat(rng, 2)};
  CHECK(multibracket(Z) == commutator(Z[0], Z[1]));
}

TEST_CASE("alternated double brackets: even vanish, odd give n times the big bracket") {
  std::mt19937_64 rng(2);
  std::vector<QMat> X;
  for (int i = 0; i < 7; ++i) X.push_back(rmat(rng, 3, 3));
  std::vector<QMat> X3(X.begin(), X.begin() + 3), X5(X.begin(), X.begin() + 5);
  CHECK(alternated_double_bracket(X3, 2).is_zero());
  CHECK(alternated_double_bracket(X, 4).is_zero());
  QMat odd = alternated_double_bracket(X5, 3);
  CHECK(odd == multibracket(X5) * Q(3));
  CHECK_FALSE(odd.is_zero());
  // the literal S_5 alternation is n!(n−1)! times the shuffle sum
  QMat literal(3, 3);
  for_each_perm(5, [&](const Tuple& p, int s) {
    QMat v = multibracket<Q>({multibracket<Q>({X5[p[0]], X5[p[1]], X5[p[2]]}), X5[p[3]], X5[p[4]]});
    literal += v * Q(s);
  });
  CHECK(literal == odd * Q(12));
}

TEST_CASE("even bracket resolution") {
  auto t4 = even_resolution_terms(4);
  REQUIRE(t4.size() == 6);
  using P = std::vector<std::pair<int, int>>;
  std::vector<std::pair<int, P>> want{{1, {{0, 1}, {2, 3}}},  {-1, {{0, 2}, {1, 3}}}, {1, {{0, 3}, {1, 2}}},
                                      {1, {{1, 2}, {0, 3}}},  {-1, {{1, 3}, {0, 2}}}, {1, {{2, 3}, {0, 1}}}};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(t4[i].sign == want[i].first);
    CHECK(t4[i].pairs == want[i].second);
  }
  CHECK(even_resolution_terms(2).size() == 1);
  CHECK(even_resolution_terms(6).size() == 90);
  std::mt19937_64 rng(3);
  for (int n : {2, 4, 6}) {
    std::vector<QMat> X;
    for (int i = 0; i < n; ++i) X.push_back(rmat(rng, 3, 3));
    CHECK(resolve_even_bracket(X).matches);
  }
  std::vector<GMat> Z;
  for (int i = 0; i < 4; ++i) Z.push_back(rgmat(rng, 2));
  CHECK(resolve_even_bracket(Z).matches);
}

TEST_CASE("GJI and mixed GJI") {
  std::mt19937_64 rng(4);
  for (const Algebra& L : {su2_eps(), heisenberg(), random_antisym(rng, 2, 3), random_antisym(rng, 2, 4)})
    CHECK(check_gji(L).ok == check_jacobi(L).ok);
  CHECK_FALSE(check_gji(random_antisym(rng, 2, 4)).ok);

  const auto& f = su3();
  CHECK(f.G4.kind == Kind::GLA);
  CHECK(f.G4.n == 4);
  CHECK(f.G4.is_antisymmetric());
  CHECK_FALSE(f.G4.is_abelian());
  CHECK(check_gji(f.G4).ok);
  CHECK(check_mgji(f.b.C, f.G4).ok);
  CHECK(check_mgji(f.G4, f.b.C).ok);
  CHECK(check_mgji(f.b.C, f.b.C).ok);
  // seven antisymmetrized indices need r >= 7; at r = 6 the identity is empty
  CHECK(check_gji(random_antisym(rng, 4, 6)).ok);
  CHECK_FALSE(check_gji(random_antisym(rng, 4, 7)).ok);
  Algebra R2 = random_antisym(rng, 2, 8);
  CHECK_FALSE(check_mgji(f.G4, R2).ok);
  CHECK_FALSE(check_mgji(R2, f.G4).ok);
}

TEST_CASE("GLAs from cocycles") {
  Algebra L = su2_eps();
  AntisymTensor o3 = cocycle_from_invariant_poly(L, [&] {
    Array k({3, 3});
    k.data = killing_form(L).a;
    return k;
  }());
  Algebra back = gla_from_cocycle(L, o3);
  CHECK(back.kind == Kind::Lie);
  CHECK(proportional(back.c, L.c));

  // the 4-bracket of the defining Hermitian matrices has these structure constants
  const auto& f = su3();
  QMat ginv = *inverse(f.b.trace_form);
  Algebra G(Kind::GLA, 4, 8);
  for (const Tuple& t : combinations(8, 4)) {
    GMat M = multibracket<Gauss>({f.b.T[t[0]], f.b.T[t[1]], f.b.T[t[2]], f.b.T[t[3]]});
    for (int s = 0; s < 8; ++s) {
      Q acc;
      for (int u = 0; u < 8; ++u) {
        Gauss tr = (M * f.b.T[u]).trace();
        REQUIRE(tr.is_real());
        acc += tr.re * ginv(u, s);
      }
      if (!is_zero(acc)) G.set(t, s, acc);
    }
    // nothing outside the span
    GMat rest = M;
    for (int s = 0; s < 8; ++s) rest -= f.b.T[s] * Gauss(G.at(t, s));
    CHECK(rest.is_zero());
  }
  Q ratio;
  CHECK(proportional(G.c, f.G4.c, &ratio));
  CHECK(check_gji(G).ok);

  CHECK_THROWS_AS(gla_from_cocycle(heisenberg(), AntisymTensor(3, 3)), std::domain_error);
}

TEST_CASE("su(4) 4-bracket from the cubic Casimir" * doctest::timeout(120)) {
  SunBasis b = sun_generators(4);
  AntisymTensor om5 = cocycle_from_invariant_poly(b.C, symmetrized_trace_poly(b.T, 3));
  Algebra G = gla_from_cocycle(b.C, om5);
  CHECK_FALSE(G.is_abelian());
  CHECK(check_gji(G).ok);
}

TEST_CASE("coderivations") {
  Algebra L = su2_eps();
  // ∂(X1∧X2∧X3) = [X1,X2]∧X3 − [X1,X3]∧X2 + [X2,X3]∧X1 for arbitrary vectors
  std::mt19937_64 rng(5);
  Algebra A = random_antisym(rng, 2, 4);
  for (const Tuple& t : combinations(4, 3)) {
    Multivector want(2, 4);
    auto term = [&](int a, int b, int c, int sg) {
      for (int l = 0; l < 4; ++l)
        if (l != t[c] && !is_zero(A.at({t[a], t[b]}, l))) want.add({l, t[c]}, sg * A.at({t[a], t[b]}, l));
    };
    term(0, 1, 2, 1);
    term(0, 2, 1, -1);
    term(1, 2, 0, 1);
    CHECK(coderivation(A, wedge_basis(4, t)) == want);
  }
  CHECK(coderivation(L, wedge_basis(3, {0, 1})) == [&] {
    Multivector m(1, 3);
    m.set({2}, Q(1));
    return m;
  }());
  CHECK(coderivation(L, coderivation(L, wedge_basis(3, {0, 1, 2}))).is_zero());
  CHECK(coderivation(L, wedge_basis(3, {0})).is_zero());
  // nilpotency fails exactly when Jacobi fails
  Algebra bad = random_antisym(rng, 2, 3);
  bool nil = true;
  for (const Tuple& t : combinations(3, 3)) nil &= coderivation(bad, coderivation(bad, wedge_basis(3, t))).is_zero();
  CHECK(nil == check_jacobi(bad).ok);

  const auto& f = su3();
  for (int q = 4; q <= 8; ++q)
    for (const Tuple& t : combinations(8, q)) {
      Multivector once = coderivation(f.G4, wedge_basis(8, t));
      CHECK(once.rank() == q - 3);
      CHECK(coderivation(f.G4, once).is_zero());
    }
  for (int q = 2; q <= 8; ++q)
    for (const Tuple& t : combinations(8, q)) CHECK(coderivation(f.b.C, coderivation(f.b.C, wedge_basis(8, t))).is_zero());
  CHECK(coderivation(f.G4, wedge_basis(8, {0, 1, 2})).is_zero());
}

TEST_CASE("higher exterior derivative") {
  std::mt19937_64 rng(6);
  const auto& f = su3();
  // m = 2 is minus the CE coboundary with trivial action
  for (int q = 1; q <= 3; ++q) {
    Form a = random_form(rng, q, 8);
    Form d2 = higher_exterior_derivative(f.b.C, a);
    d2 *= Q(-1);
    CHECK(d2 == coboundary_coords(f.b.C, a));
    CHECK(d2 == scalar_part(coboundary(f.b.C, trivial_rep(f.b.C, 1), scalar_cochain(a))));
  }
  // d̃ ω^σ has coordinates Ω^σ
  for (int sg = 0; sg < 8; ++sg) {
    Form w(1, 8);
    w.set({sg}, Q(1));
    Form dw = higher_exterior_derivative(f.G4, w);
    for (const Tuple& t : combinations(8, 4)) CHECK(dw.get(t) == f.G4.at(t, sg));
  }
  // Leibniz rule and nilpotency
  for (const Algebra* G : {&f.b.C, &f.G4}) {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
      Form a = random_form(rng, p, 8), b = random_form(rng, q, 8);
      Form lhs = higher_exterior_derivative(*G, wedge(a, b));
      Form rhs = wedge(higher_exterior_derivative(*G, a), b);
      Form t2 = wedge(a, higher_exterior_derivative(*G, b));
      t2 *= Q(p % 2 ? -1 : 1);
      rhs += t2;
      CHECK(lhs == rhs);
    }
    for (int q = 1; q <= 2; ++q) {
      Form a = random_form(rng, q, 8);
      CHECK(higher_exterior_derivative(*G, higher_exterior_derivative(*G, a)).is_zero());
    }
  }
  // duality with the coderivation: d̃α on ∧X_I = ((p+2m−3)!/p!) α(∂ ∧X_I)
  for (int p = 1; p <= 3; ++p) {
    Form a = random_form(rng, p, 8);
    Form da = higher_exterior_derivative(f.G4, a);
    int N = p + 3;
    for (const Tuple& t : combinations(8, N)) {
      Multivector x = wedge_basis(8, t);
      CHECK(pair(da, x) * Q(factorial(p)) == pair(a, coderivation(f.G4, x)) * Q(factorial(N)));
    }
  }
}

TEST_CASE("complete BRST operator") {
  Algebra L = su2_eps();
  AntisymTensor eps(3, 3);
  eps.set({0, 1, 2}, Q(1));
  CHECK(brst_nilpotency(L, {eps}).ok);
  // s c^1 = −C_{23}^1 c^2 c^3
  GhostElem s1 = apply_brst(L, ghost_monomial({0}));
  CHECK(s1 == GhostElem{{0b110u, Q(-1)}});

  const auto& f = su3();
  CHECK(brst_nilpotency(f.b.C, {f.om3, f.om5}).ok);
  std::mt19937_64 rng(7);
  AntisymTensor junk = random_form(rng, 5, 8);
  BrstReport r = brst_nilpotency(f.b.C, {f.om3, junk});
  CHECK_FALSE(r.ok);
  CHECK(r.b == 1);
}

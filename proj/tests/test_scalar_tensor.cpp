#include "doctest.h"
#include "nary/poly.hpp"
#include "nary/tensor.hpp"
#include "nary/matrix.hpp"

#include <random>

using namespace nary;

namespace {

using Vec = std::vector<Q>;

// Leibniz-formula determinant of the δ-matrix, independent of gen_kronecker.
Q delta_det(const Tuple& up, const Tuple& lo) {
  int p = static_cast<int>(up.size());
  Q acc;
  for_each_perm(p, [&](const Tuple& s, int sg) {
    for (int k = 0; k < p; ++k)
      if (up[k] != lo[s[k]]) return;
    acc += sg;
  });
  return acc;
}

Q det3(const Vec& x, const Vec& y, const Vec& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

}  // namespace

TEST_CASE("scalars parse and print exactly") {
  CHECK(parse_q("3/6").value() == Q(1, 2));
  CHECK(parse_q("-4").value() == Q(-4));
  CHECK_FALSE(parse_q("1/0").has_value());
  CHECK_FALSE(parse_q("1.5").has_value());
  Gauss g = parse_gauss("1/2+3/4 i").value();
  CHECK(g.re == Q(1, 2));
  CHECK(g.im == Q(3, 4));
  CHECK(parse_gauss(to_string(Gauss(Q(-1, 3), Q(-2)))).value() == Gauss(Q(-1, 3), Q(-2)));
  CHECK(Gauss::I() * Gauss::I() == Gauss(-1));
  CHECK((Gauss(Q(1), Q(2)) / Gauss(Q(3), Q(-1))) * Gauss(Q(3), Q(-1)) == Gauss(Q(1), Q(2)));
}

TEST_CASE("gen_kronecker") {
  CHECK(gen_kronecker({0, 1}, {0, 1}) == 1);
  CHECK(gen_kronecker({0, 1}, {1, 0}) == -1);
  CHECK(gen_kronecker({0, 1, 2}, {0, 1, 3}) == 0);
  CHECK_THROWS(gen_kronecker({0}, {0, 1}));
  for_each_tuple(3, 3, [](const Tuple& up) {
    for_each_tuple(3, 3, [&](const Tuple& lo) { CHECK(gen_kronecker(up, lo) == delta_det(up, lo)); });
  });
}

TEST_CASE("antisymmetric storage sign tracking") {
  AntisymTensor t(3, 4);
  t.set({2, 0, 1}, Q(5));
  CHECK(t.nnz() == 1);
  CHECK(t.entries().begin()->first == Tuple{0, 1, 2});
  CHECK(t.get({0, 1, 2}) == 5);
  for_each_perm(3, [&](const Tuple& p, int s) {
    Tuple u{p[0], p[1], p[2]};
    CHECK(t.get(u) == 5 * s);
  });
  CHECK(t.get({0, 0, 1}) == 0);
  t.add({1, 0, 2}, Q(5));
  CHECK(t.is_zero());
  CHECK_THROWS(t.set({1, 1, 2}, Q(1)));
}

TEST_CASE("antisymmetrize conventions") {
  Array e({2, 2});
  e.at({0, 1}) = 1;
  AntisymTensor a = antisymmetrize(e);
  CHECK(a.get({0, 1}) == 1);
  CHECK(a.get({1, 0}) == -1);

  Array sym({3, 3});
  sym.at({0, 1}) = 2;
  sym.at({1, 0}) = 2;
  sym.at({2, 2}) = 7;
  CHECK(antisymmetrize(sym).is_zero());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x(3), y(3), z(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
      z[i] = u(rng);
    }
    Array t({3, 3, 3});
    for_each_tuple(3, 3, [&](const Tuple& k) { t.at(k) = x[k[0]] * y[k[1]] * z[k[2]]; });
    AntisymTensor A = antisymmetrize(t);
    Q d = det3(x, y, z);
    for_each_tuple(3, 3, [&](const Tuple& k) { CHECK(A.get(k) == d * gen_kronecker({0, 1, 2}, k)); });

    // A∘A = n! A
    Array twice = A.dense();
    AntisymTensor AA = antisymmetrize(twice);
    AntisymTensor A6 = A;
    A6 *= Q(6);
    CHECK(AA == A6);
    AntisymTensor unit = antisymmetrize_unit(twice);
    CHECK(unit == A);
  }
}

TEST_CASE("contraction examples") {
  // ε^{ij}_{kl} δ^k_i at d=3 -> 2 δ^j_l
  Array eps = kronecker_array(2, 3);
  Array r = contract(eps, delta_array(3), {{0, 1}, {2, 0}});
  // remaining axes: j (eps axis 1), l (eps axis 3)
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) CHECK(r.at({j, l}) == (j == l ? 2 : 0));

  // full self contraction of ε at rank d = d -> d!
  for (int d = 1; d <= 4; ++d) {
    Array e = kronecker_array(d, d);
    std::vector<std::pair<int, int>> pr;
    for (int k = 0; k < d; ++k) pr.push_back({k, d + k});
    Array s = self_contract(e, pr);
    CHECK(s.data.size() == 1);
    CHECK(s.data[0] == factorial(d));
  }

  // two-index peeling of ε for p = 2, d = 3 by explicit index sums
  int d = 3, p1 = 3;
  for_each_tuple(d, p1, [&](const Tuple& i) {
    for_each_tuple(d, p1, [&](const Tuple& j) {
      Q lhs;
      for (int s = 0; s < p1; ++s)
        for (int t = s + 1; t < p1; ++t) {
          Tuple rest;
          for (int k = 0; k < p1; ++k)
            if (k != s && k != t) rest.push_back(i[k]);
          int sg = ((s + t + 3) % 2 == 0) ? 1 : -1;
          lhs += sg * gen_kronecker({j[0], j[1]}, {i[s], i[t]}) * gen_kronecker({j[2]}, rest);
        }
      CHECK(lhs == gen_kronecker(j, i));
    });
  });

  CHECK_THROWS(contract(Array({2, 3}), Array({2, 2}), {{1, 0}}));
}

TEST_CASE("contraction is associative across chained pairings") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> u(-3, 3);
  auto rnd = [&](std::vector<int> sh) {
    Array a(sh);
    for (Q& x : a.data) x = u(rng);
    return a;
  };
  Array A = rnd({3, 2}), B = rnd({2, 4}), C = rnd({4, 3});
  Array AB_C = contract(contract(A, B, {{1, 0}}), C, {{1, 0}});
  Array A_BC = contract(A, contract(B, C, {{1, 0}}), {{1, 0}});
  CHECK(AB_C == A_BC);
}

TEST_CASE("ε recursion identities") {
  CHECK(eps_identities_check(2, 2).ok);
  CHECK(eps_identities_check(4, 4).ok);
  CHECK(eps_identities_check(3, 5).ok);
  CHECK(eps_identities_check(1, 3).ok);
}

TEST_CASE("exact linear algebra") {
  QMat m(3, 3);
  int v[] = {1, 2, 3, 2, 4, 6, 1, 0, 1};
  for (int k = 0; k < 9; ++k) m.a[k] = v[k];
  CHECK(rank(m) == 2);
  QMat ns = nullspace(m);
  CHECK(ns.cols == 1);
  QMat prod = m * ns;
  CHECK(prod.is_zero());
  CHECK_FALSE(inverse(m).has_value());
  auto x = solve(m, {Q(1), Q(2), Q(0)});
  REQUIRE(x.has_value());
  CHECK(mat_vec(m, *x) == std::vector<Q>{1, 2, 0});
  CHECK_FALSE(solve(m, {Q(1), Q(0), Q(0)}).has_value());
  QMat g(3, 3);
  g(0, 1) = g(1, 0) = 1;
  g(2, 2) = -2;
  Inertia in = inertia(g);
  CHECK(in.pos == 1);
  CHECK(in.neg == 2);
  CHECK(in.zero == 0);
}

TEST_CASE("polynomials") {
  Poly x = Poly::var(3, 0), y = Poly::var(3, 1);
  Poly p = x * x * y + y * Q(3);
  CHECK(p.derivative(0) == x * y * Q(2));
  CHECK(p.derivative(2).is_zero());
  CHECK(p.eval({Q(2), Q(1), Q(9)}) == 7);
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 3);
}

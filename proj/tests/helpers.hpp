#pragma once
#include "nary/algebra.hpp"
#include "nary/lie.hpp"

#include <random>

namespace testutil {

using namespace nary;

inline Algebra su2_eps() {
  Algebra L = lie_algebra(3);
  L.set({0, 1}, 2, Q(1));
  L.set({1, 2}, 0, Q(1));
  L.set({2, 0}, 1, Q(1));
  return L;
}

inline Algebra heisenberg() {
  Algebra L = lie_algebra(3);
  L.set({0, 1}, 2, Q(1));
  return L;
}

inline Q rnd(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  return Q(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Vec rvec(std::mt19937_64& rng, int D) {
  Vec v(D);
  for (auto& x : v) x = rnd(rng);
  return v;
}

inline QMat rmat(std::mt19937_64& rng, int r, int c) {
  QMat m(r, c);
  for (auto& x : m.a) x = rnd(rng);
  return m;
}

inline GMat rgmat(std::mt19937_64& rng, int d) {
  GMat m(d, d);
  for (auto& x : m.a) x = Gauss(rnd(rng), rnd(rng));
  return m;
}

// Σ_σ sign(σ) f(σ(J)) over every permutation of J: independent ε oracle.
template <class F>
Q alternate(const Tuple& J, F f) {
  Q acc;
  for_each_perm(static_cast<int>(J.size()), [&](const Tuple& p, int s) {
    Tuple u(J.size());
    for (size_t k = 0; k < J.size(); ++k) u[k] = J[p[k]];
    acc += s * f(u);
  });
  return acc;
}

inline std::vector<Q> flat(const Array& a) { return a.data; }

}  // namespace testutil

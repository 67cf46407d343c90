#pragma once
// Even-order generalized Lie algebras: multibrackets of matrices, the GJI and
// mixed GJI, ε resolutions into commutators, GLAs built from Lie algebra
// cocycles, coderivations, the higher exterior derivatives d̃_m and the
// complete BRST operator on the ghost algebra.

#include <cstdint>
#include <map>

#include "nary/lie.hpp"

namespace nary {

// Σ_σ sign(σ) X_σ(1)…X_σ(n), no weight.
template <class T>
Mat<T> multibracket(const std::vector<Mat<T>>& xs) {
  if (xs.empty()) throw std::invalid_argument("multibracket: no entries");
  int d = xs[0].rows;
  for (const auto& x : xs)
    if (x.rows != d || x.cols != d) throw std::invalid_argument("multibracket: size mismatch");
  Mat<T> out(d, d);
  for_each_perm(static_cast<int>(xs.size()), [&](const Tuple& p, int s) {
    Mat<T> prod = xs[p[0]];
    for (size_t k = 1; k < p.size(); ++k) prod = prod * xs[p[k]];
    if (s > 0)
      out += prod;
    else
      out -= prod;
  });
  return out;
}

template <class T>
Mat<T> multibracket_unit(const std::vector<Mat<T>>& xs) {
  Mat<T> m = multibracket(xs);
  return m * T(Q(1, factorial(static_cast<int>(xs.size()))));
}

// Σ over (n, n−1) shuffles of sign [[X_S], X_rest] for 2n−1 matrices. Equals
// the full S_{2n−1} alternation divided by n!(n−1)!.
template <class T>
Mat<T> alternated_double_bracket(const std::vector<Mat<T>>& xs, int n) {
  if (static_cast<int>(xs.size()) != 2 * n - 1) throw std::invalid_argument("alternated_double_bracket: need 2n-1 entries");
  Mat<T> out(xs[0].rows, xs[0].cols);
  for_each_shuffle(2 * n - 1, n, [&](const Tuple& S, const Tuple& R, int s) {
    std::vector<Mat<T>> inner, outer_args;
    for (int i : S) inner.push_back(xs[i]);
    outer_args.push_back(multibracket(inner));
    for (int i : R) outer_args.push_back(xs[i]);
    Mat<T> v = multibracket(outer_args);
    if (s > 0)
      out += v;
    else
      out -= v;
  });
  return out;
}

// One term sign·[X_a1,X_b1][X_a2,X_b2]… of an ε resolution.
struct ResolutionTerm {
  int sign = 1;
  std::vector<std::pair<int, int>> pairs;
};
std::vector<ResolutionTerm> even_resolution_terms(int n);

template <class T>
struct Resolution {
  std::vector<ResolutionTerm> terms;
  Mat<T> value;
  bool matches = false;
};

template <class T>
Resolution<T> resolve_even_bracket(const std::vector<Mat<T>>& xs) {
  int n = static_cast<int>(xs.size());
  if (n % 2 || n < 2 || n > 6) throw std::invalid_argument("resolve_even_bracket: 2, 4 or 6 entries");
  Resolution<T> res;
  res.terms = even_resolution_terms(n);
  res.value = Mat<T>(xs[0].rows, xs[0].cols);
  for (const auto& t : res.terms) {
    Mat<T> prod = Mat<T>::identity(xs[0].rows);
    for (auto [a, b] : t.pairs) prod = prod * commutator(xs[a], xs[b]);
    if (t.sign > 0)
      res.value += prod;
    else
      res.value -= prod;
  }
  res.matches = res.value == multibracket(xs);
  return res;
}

// Fully antisymmetric n-ary algebra (kind GLA) with zero bracket.
Algebra gla_algebra(int n, int dim);

// C_{[j1…jn}^l C_{jn+1…j2n−1]l}^s = 0
CheckResult check_gji(const Algebra& G);
// ε^{i1…i(n+m−1)} C_{i1…in}^l C'_{i(n+1)…l}^s = 0 with G1 inside.
CheckResult check_mgji(const Algebra& inner, const Algebra& outer);

// C_{i1…i(2m−2)}^j = Ω_{i1…i(2m−2)ρ} k^{ρj}. No cocycle check is made.
// Throws std::domain_error on a degenerate Killing form.
Algebra gla_from_cocycle(const Algebra& L, const AntisymTensor& omega);

// Multivectors are stored as coefficients of X_{I1}∧…∧X_{Iq}, I sorted.
using Multivector = AntisymTensor;
Multivector wedge_basis(int dim, const Tuple& idx);
// ∂_s with the weights 1/s! 1/(q−s)! on an unweighted ε sum.
Multivector coderivation(const Algebra& G, const Multivector& x);

// Coordinates α_{i1…ip} of a p-form.
using Form = AntisymTensor;
// (α∧β)_I = (1/p!q!) ε α β
Form wedge(const Form& a, const Form& b);
Form higher_exterior_derivative(const Algebra& G, const Form& alpha);
// α(X_{J1}∧…∧X_{Jp}) with the unweighted wedge, extended linearly.
Q pair(const Form& alpha, const Multivector& x);

// Ghost polynomials: bit i of the key is c^i; monomials are ordered by index.
using GhostElem = std::map<uint32_t, Q>;
GhostElem ghost_monomial(const Tuple& sorted_idx);
// s = −(1/n!) c^{i1}…c^{in} C_{i1…in}^σ ∂/∂c^σ
GhostElem apply_brst(const Algebra& G, const GhostElem& x);

struct BrstReport {
  bool ok = true;
  int a = -1, b = -1;      // offending pair of operators
  uint32_t monomial = 0;   // first monomial where {s_a, s_b} ≠ 0
};
BrstReport brst_nilpotency(const std::vector<Algebra>& ops);
// One operator per cocycle, each through gla_from_cocycle.
BrstReport brst_nilpotency(const Algebra& L, const std::vector<AntisymTensor>& cocycles);

}  // namespace nary

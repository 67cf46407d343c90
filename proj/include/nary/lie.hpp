#pragma once
// Ordinary Lie algebras: Jacobi identity, Killing form, metrics, su(n)
// bases, representations, invariant symmetric polynomials and the
// polynomial <-> cocycle correspondence.

#include "nary/algebra.hpp"

namespace nary {

Algebra lie_algebra(int dim);  // zero bracket, kind Lie, arity 2

CheckResult check_jacobi(const Algebra& L);

// k_ij = C_il^s C_js^l
QMat killing_form(const Algebra& L);
// Tr(ad_i ad_j) from explicit ad matrices
QMat killing_form_via_ad(const Algebra& L);

struct MetricReport {
  bool invariant = false;
  bool nondegenerate = false;
  Tuple where;  // (l, i, j) of the first nonzero residual
};
MetricReport check_metric_invariance(const Algebra& L, const QMat& g);

struct Representation {
  int dV = 0;
  std::vector<QMat> rho;  // one dV×dV matrix per basis element
};

Representation adjoint_rep(const Algebra& L);
Representation trivial_rep(const Algebra& L, int dV = 1);
// [ρ_i, ρ_j] = C_ij^k ρ_k entrywise
CheckResult check_representation(const Algebra& L, const Representation& R);
// Complex matrices A + iB as real 2d×2d blocks [[A,-B],[B,A]].
QMat realify(const GMat& m);

// Hermitian Gell-Mann pattern matrices T_i (off-diagonal pairs, then a new
// diagonal generator, column by column) with [T_i,T_j] = i C_ij^k T_k.
struct SunBasis {
  int n = 0;
  std::vector<GMat> T;
  Algebra C;
  QMat trace_form;  // Tr(T_i T_j)
};
SunBasis sun_generators(int n);
// ρ_i = -i T_i, realified to 2n×2n rational matrices.
Representation sun_defining_real(const SunBasis& b);

// Symmetric tensors are dense arrays of shape (r,…,r).
Array symmetrized_trace_poly(const std::vector<GMat>& T, int m);
Array symmetrize_unit(const Array& a);
// Σ_s C_{l i_s}^t k_{…t…} = 0 for every l
CheckResult check_invariant_poly(const Algebra& L, const Array& k);
bool is_symmetric(const Array& k);

// Ω_{ρ i_2…i_{2m-2} σ} built from an invariant symmetric polynomial of order m.
// Throws std::invalid_argument if k is not invariant or the result is not
// antisymmetric.
AntisymTensor cocycle_from_invariant_poly(const Algebra& L, const Array& k);

// C_{[j1 j2}^k Ω_{j3…]k} = 0
CheckResult check_cocycle(const Algebra& L, const AntisymTensor& omega);
// C_{i[j1}^k Ω_{j2…]k} = 0
CheckResult check_invariant_form(const Algebra& L, const AntisymTensor& omega);

// t^{i1…im} from a (2m-1)-cocycle, indices raised with the inverse Killing
// form. Throws std::domain_error when the Killing form is degenerate.
Array invariant_poly_from_cocycle(const Algebra& L, const AntisymTensor& omega);
// Lowers every index of a contravariant tensor with g.
Array lower_all(const Array& t, const QMat& g);

// ε^{j1…j2m}_{i1…i2m} C^{l1}_{j1j2}…C^{lm}_{j2m-1 j2m} k_{l1…lm} as a 2m-form.
AntisymTensor poly_vanishing_form(const Algebra& L, const Array& k);

// (X,Y,Z)+(Y,Z,X)+(Z,X,Y)-(Y,X,Z)-(X,Z,Y)-(Z,Y,X) for a bilinear product
// given as a raw (Leibniz-kind) algebra, and the Jacobiator of its commutator.
Vec antisymmetric_associator(const Algebra& P, const Vec& x, const Vec& y, const Vec& z);
Vec commutator_jacobiator(const Algebra& P, const Vec& x, const Vec& y, const Vec& z);

}  // namespace nary

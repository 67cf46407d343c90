#pragma once
// Chevalley–Eilenberg cohomology of a Lie algebra with values in a
// representation, on the basis ω^{I1}∧…∧ω^{Ip}, I1<…<Ip.

#include "nary/lie.hpp"

namespace nary {

struct LieCochain {
  int p = 0;
  int r = 0;   // algebra dimension
  int dV = 1;  // target dimension
  std::vector<Q> v;  // v[comb_rank(I) * dV + A]

  LieCochain() = default;
  LieCochain(int order, int dim, int target);
  size_t size() const { return v.size(); }
  // Value at an arbitrary argument tuple (antisymmetry applied).
  Vec at(Tuple t) const;
  void set(Tuple t, const Vec& val);
  bool is_zero() const;
  bool operator==(const LieCochain& o) const { return p == o.p && r == o.r && dV == o.dV && v == o.v; }
};

LieCochain scalar_cochain(const AntisymTensor& t);
AntisymTensor scalar_part(const LieCochain& c);

// s on cochains, argument form.
LieCochain coboundary(const Algebra& L, const Representation& R, const LieCochain& om);
// Coordinates form for the trivial action: −½ (1/(p−1)!) ε C_{j1j2}^k Ω_{k j3…}.
AntisymTensor coboundary_coords(const Algebra& L, const AntisymTensor& om);

QMat coboundary_matrix(const Algebra& L, const Representation& R, int p);

struct DegreeDims {
  int p = 0;
  long dimC = 0, dimZ = 0, dimB = 0, dimH = 0;
};
struct CohomologyReport {
  std::vector<DegreeDims> degrees;
  const DegreeDims& at(int p) const;
};
// Builds a report from coboundary matrices d_0..d_pmax (d_p : C^p → C^{p+1}).
CohomologyReport report_from_matrices(const std::vector<QMat>& d);
CohomologyReport cohomology_dims(const Algebra& L, const Representation& R, int pmax);

// τΩ(X_I) = k^{ij} ρ_i Ω(X_j, X_I) and the Casimir I₂ = k^{ij} ρ_i ρ_j.
LieCochain homotopy_tau(const Algebra& L, const Representation& R, const LieCochain& om);
QMat casimir(const Algebra& L, const Representation& R);
// For a cocycle Ω returns a cochain whose coboundary is Ω. Throws
// std::domain_error if the Killing form or the Casimir is singular.
LieCochain whitehead_homotopy(const Algebra& L, const Representation& R, const LieCochain& om);

// [X̃_i, X̃_j] = C_ij^k X̃_k + Ω_ij Ξ with Ξ the last basis vector.
Algebra central_extension(const Algebra& L, const AntisymTensor& omega2);
struct Trivialization {
  bool trivial = false;
  Vec omega1;      // Ω² = sΩ¹
  Algebra split;   // the extension in the basis X̃' = X̃ − Ω¹(X)Ξ
};
Trivialization trivialize_extension(const Algebra& L, const AntisymTensor& omega2);

// First-order deformation data for an algebra-valued 2-cochain α.
struct DeformationReport {
  bool is_cocycle = false;
  bool is_coboundary = false;
  LieCochain gamma;             // α(X,α(Y,Z)) + cyclic
  bool gamma_is_cocycle = false;
  bool gamma_trivial = false;   // γ ∈ B³_ad
  LieCochain gamma_primitive;   // β with sβ = γ when gamma_trivial
};
DeformationReport deformation_check(const Algebra& L, const LieCochain& alpha);

// Matrix column of a cochain and back.
QVec to_column(const LieCochain& c);

}  // namespace nary

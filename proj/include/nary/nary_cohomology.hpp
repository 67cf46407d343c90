#pragma once
// Cohomology of Filippov and n-Leibniz algebras: the trivial-action
// (central extension) complex and its dual homology, the module complex,
// the deformation complex, and the n = 2 Leibniz complex with extensions.

#include <map>

#include "nary/filippov.hpp"
#include "nary/lie_cohomology.hpp"

namespace nary {

enum class NComplex { Trivial, Module, Deformation };
const char* ncomplex_name(NComplex c);
std::optional<NComplex> ncomplex_from_name(const std::string& s);

// A p-cochain. Arguments are p fundamental objects, plus a solitary element
// for the trivial and deformation complexes. For antisymmetric kinds each
// fundamental object is stored on sorted labels and the last object is
// stored jointly with the solitary element; Leibniz kinds are stored raw.
struct NCochain {
  NComplex complex = NComplex::Trivial;
  int n = 2, D = 0, p = 0, dV = 1;
  bool raw = false;
  std::vector<Q> v;  // v[arg_index * dV + A]

  NCochain() = default;
  NCochain(const Algebra& F, NComplex c, int order, int target);

  int slots() const;  // number of algebra arguments
  std::vector<int> blocks() const;
  long num_args() const;
  Tuple args_of(long k) const;
  // Canonical index and sign of an argument tuple; sign 0 when it vanishes.
  std::pair<long, int> locate(const Tuple& t) const;
  Vec at(const Tuple& t) const;
  void set(const Tuple& t, const Vec& val);
  Vec eval(const std::vector<Vec>& args) const;
  bool is_zero() const;
  bool operator==(const NCochain& o) const {
    return complex == o.complex && n == o.n && D == o.D && p == o.p && dV == o.dV && raw == o.raw && v == o.v;
  }
};

// (δα)(𝒳1…𝒳p+1,Z) = Σ_{i<j} (−1)^i α(…𝒳̂i…𝒳i·𝒳j…,Z) + Σ_i (−1)^i α(…𝒳̂i…,𝒳i·Z)
NCochain fa_coboundary_trivial(const Algebra& F, const NCochain& a);
// Throws std::invalid_argument when R fails the representation identities.
NCochain fa_coboundary_module(const Algebra& F, const FaRepresentation& R, const NCochain& a);
NCochain fa_coboundary_deformation(const Algebra& F, const NCochain& a);
NCochain fa_coboundary(const Algebra& F, const NCochain& a, const FaRepresentation* R = nullptr);

// Matrix of δ : C^p → C^{p+1} on the stored coordinates.
QMat fa_coboundary_matrix(const Algebra& F, NComplex c, int p, int dV = 1, const FaRepresentation* R = nullptr);
// dV is the target dimension of the trivial complex; the module complex takes
// it from R and the deformation complex uses D.
CohomologyReport fa_cohomology_dims(const Algebra& F, NComplex c, int pmax = 2, int dV = 1,
                                    const FaRepresentation* R = nullptr);
// Solves δβ = α on C^{p−1}; nullopt when α is not a coboundary.
std::optional<NCochain> fa_primitive(const Algebra& F, const NCochain& a, const FaRepresentation* R = nullptr);
QVec to_column(const NCochain& a);
NCochain from_column(const NCochain& shape, const QVec& x);

// Chains of the trivial complex, keyed by canonical argument tuples.
struct NChain {
  int n = 2, D = 0, p = 0;
  std::map<Tuple, Q> terms;
  void add(const Tuple& t, const Q& c);  // canonicalizes with sign
  bool is_zero() const { return terms.empty(); }
};
NChain fa_homology_boundary(const Algebra& F, const NChain& c);
Vec pair(const NCochain& a, const NChain& c);

// [X̃…] = f X̃ + α(…) Ξ with Ξ appended last; α a scalar trivial 1-cochain.
Algebra fa_central_extension(const Algebra& F, const NCochain& alpha1);
struct FaExtensionReport {
  Algebra ext;
  bool cocycle = false;
  CheckResult fi;
  bool trivial = false;
  NCochain beta;  // α = δβ when trivial
  Algebra split;  // ext in the basis X̃' = X̃ − β(X)Ξ
};
FaExtensionReport fa_extension_check(const Algebra& F, const NCochain& alpha1);
// α(X_a,Y_a,Z_a) = 1 on the abelian 3N-dimensional 3-algebra, basis X…, Y…, Z….
NCochain nhw_cocycle(int N);
Algebra nhw_algebra(int N);

struct FaObstruction {
  bool alpha_coboundary = false;
  NCochain gamma;  // α(𝒳,α(𝒴,Z)) − α(α(𝒳, )·𝒴,Z) − α(𝒴,α(𝒳,Z))
  bool gamma_cocycle = false;
  bool gamma_trivial = false;
  NCochain alpha2;  // second-order term −β with δβ = γ, when gamma_trivial
};
// Throws std::invalid_argument if α1 is not a deformation 1-cocycle.
FaObstruction fa_deformation_obstruction(const Algebra& F, const NCochain& alpha1);
// F + t α as structure constants (α a deformation 1-cochain).
Algebra deformed(const Algebra& F, const NCochain& alpha, const Q& t);

// n-ary left Leibniz identity on raw tuples (the FI without antisymmetry).
CheckResult check_leibniz(const Algebra& L);

// Left and right actions of a Leibniz algebra on A: ρ(X)A = left·A, Aρ(X) = right·A.
struct LeibnizRep {
  int dV = 0;
  std::vector<QMat> left, right;
};
LeibnizRep leibniz_adjoint(const Algebra& L);
LeibnizRep leibniz_trivial(const Algebra& L, int dV);
// left = ρ, right = −ρ
LeibnizRep leibniz_symmetric(const Representation& R);
CheckResult check_leibniz_rep(const Algebra& L, const LeibnizRep& R);

// Raw cochains ⊗^p L* ⊗ A for n = 2 (complex tag Module, raw storage).
NCochain leibniz_cochain(const Algebra& L, int p, int dV);
// Throws std::invalid_argument when the representation conditions fail.
NCochain leibniz_coboundary(const Algebra& L, const LeibnizRep& R, const NCochain& w);
CohomologyReport leibniz_cohomology_dims(const Algebra& L, const LeibnizRep& R, int pmax = 2);
// Basis e_1…e_r of L then e_1…e_dV of A. Throws when ω² is not a cocycle.
Algebra leibniz_extension(const Algebra& L, const LeibnizRep& R, const NCochain& w2);
// e'_i = e_i + ω¹(e_i): takes the extension by ω² to the one by ω² + sω¹.
QMat leibniz_section_change(const Algebra& L, const NCochain& w1);

// Copy of F with kind Leibniz (same constants).
Algebra as_leibniz(const Algebra& F);

}  // namespace nary

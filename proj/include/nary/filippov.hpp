#pragma once
// Filippov n-Lie algebras: Filippov identity in several forms, the simple
// algebras, fundamental objects and InDer, Kasymov's form, metric FAs,
// subordinated algebras, Clifford and trace realizations.

#include "nary/lie.hpp"

namespace nary {

Algebra fa_algebra(int n, int D);  // zero bracket, kind Filippov

enum class FiForm { Derivation, Short, Ghost };
const char* fi_form_name(FiForm f);
CheckResult check_fi(const Algebra& F, FiForm form = FiForm::Derivation);

// f_{a1…an}^{a(n+1)} = (−1)^n ε_{a(n+1)} ε_{a1…a(n+1)}
Algebra simple_fa(int n, const std::vector<int>& signs);
// e_b ε^b_{a1…an} v1^{a1}…vn^{an}
Vec vector_product(const std::vector<Vec>& vs);

// (n−1) vectors; acts on Z as [X1,…,X(n−1),Z].
using FundamentalObject = std::vector<Vec>;
struct FormalSum {
  std::vector<FundamentalObject> terms;  // all with coefficient one
};
FormalSum fundamental_compose(const Algebra& F, const FundamentalObject& X, const FundamentalObject& Y);
QMat ad_of(const Algebra& F, const FundamentalObject& X);
QMat ad_of(const Algebra& F, const FormalSum& s);
// Coordinates on the sorted wedge labels (combinations(D, n−1)).
Vec label_vector(const FundamentalObject& X);
Vec label_vector(const FormalSum& s);
FundamentalObject basis_object(int D, const Tuple& label);

struct InDerAlgebra {
  std::vector<Tuple> labels;   // combinations(D, n−1)
  std::vector<QMat> ad;        // ad matrix per label
  std::vector<int> basis;      // indices into labels, lexicographic pivots
  Algebra lie;                 // structure constants on the chosen basis
  QMat projection;             // column j: coordinates of ad[labels[j]] in the basis
};
InDerAlgebra inder_lie_algebra(const Algebra& F);
// f_{a[b1}^{[c1} δ_{b2}^{c2}…δ_{b(n−1)]}^{c(n−1)]}, unweighted, on sorted labels.
Q inder_candidate_constant(const Algebra& F, const Tuple& a, const Tuple& b, const Tuple& c);
// True when the constants above are antisymmetric under a ↔ b on all labels.
bool inder_candidates_antisymmetric(const Algebra& F);
// Dimension of the solution space of D[X…] = Σ[…DX_i…].
int derivation_dim(const Algebra& F);

// k(𝒳,𝒴) = Tr(ad_𝒳 ad_𝒴) on sorted labels.
QMat kasymov_form(const Algebra& F);
bool semisimplicity_check(const Algebra& F, Vec* kernel_witness = nullptr);

struct MetricFaReport {
  bool metric = false;      // f_{a…b}^l g_lc + f_{a…c}^l g_bl = 0
  bool antisymmetric = false;
  bool invariant = false;   // f_{a…[b1}^l f_{b2…b(n+1)]l} = 0
  AntisymTensor lowered;    // f_{a1…a(n+1)}
};
// Throws std::invalid_argument for a degenerate or non-symmetric g.
MetricFaReport check_metric_fa(const Algebra& F, const QMat& g);

struct So4SplitReport {
  QMat k1, k2;                    // on labels (12),(13),(14),(23),(24),(34)
  bool k1_invariant = false, k2_invariant = false;
  Inertia k1_inertia, k2_inertia;
  QMat P;                          // columns: J+_1..3, J−_1..3 in label coordinates
  Algebra split;                   // InDer in the ± basis
  bool commuting = false;          // [J+, J−] = 0
  Q lambda_plus, lambda_minus;     // [J±_1, J±_2] = λ± J±_3 and cyclic
  bool su2_type = false;
  QMat killing_plus, killing_minus;
  Q k1_scale, k2_scale;            // k1' = c1 (K+ ⊕ K−), k2' = c2 (K+ ⊕ −K−)
  bool sum_and_difference = false;
};
// Requires the euclidean A4 with basis as simple_fa(3, {1,1,1,1}).
So4SplitReport k2_invariant_and_so4_split(const Algebra& F);
// k(𝒵·𝒳, 𝒴) + k(𝒳, 𝒵·𝒴) on every basis triple.
bool kasymov_invariant(const Algebra& F, const QMat& k);

Algebra subordinate(const Algebra& F, const Vec& A);

struct CliffordReport {
  int n = 0;
  std::vector<GMat> gammas;   // basis of the realization, γ_{D+1} last where relevant
  int sign = 0;               // bracket = sign · ε γ (0 when not a multiple)
  bool realizes = false;      // every basis bracket is sign·ε·γ
  Algebra induced;            // structure constants read off the realization
  bool matches_simple = false;  // induced equals simple_fa(n, +…+)
  bool double_commutator_ok = false;  // n = 3: 3![[γa,γb]γ5,γc] = [γ5,γa,γb,γc]
};
// Euclidean γ matrices with {γa,γb} = 2s δ_ab, built from Pauli blocks.
std::vector<GMat> euclidean_gammas(int D, int s = 1);
CliffordReport clifford_realization(int n);

// [A1…An] = Σ (−1)^{i−1} t(A_i) [A1…Âi…An]
Algebra trace_extension(const Algebra& F, const Vec& traces);
// Lie algebra of the commutator on a basis of matrices closed under it.
Algebra commutator_algebra(const std::vector<QMat>& basis);

// Kasymov representations: ρ given per sorted label.
struct FaRepresentation {
  int dV = 0;
  std::vector<QMat> rho;  // indexed like combinations(D, n−1)
};
FaRepresentation fa_adjoint_rep(const Algebra& F);
QMat fa_rho(const Algebra& F, const FaRepresentation& R, const FundamentalObject& X);
// [ρ(𝒳),ρ(𝒴)] = ρ(𝒳·𝒴) and ρ(X…,[Y…]) = Σ (−1)^{n−i} ρ(Y…Ŷi…) ρ(X…,Yi)
CheckResult check_fa_representation(const Algebra& F, const FaRepresentation& R);

}  // namespace nary

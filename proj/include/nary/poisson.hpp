#pragma once
// Polynomial multivector fields on R^m: Schouten–Nijenhuis bracket, Poisson,
// generalized Poisson and Nambu–Poisson conditions, Nambu brackets.

#include <optional>

#include "nary/algebra.hpp"
#include "nary/poly.hpp"
#include "nary/tensor.hpp"

namespace nary {

// Λ = Σ_{I sorted} ω^I ∂_{I1}∧…∧∂_{Ip}, i.e. (1/p!) ω^{i1…ip} ∂_{i1}∧…∧∂_{ip}.
class PolyMultivector {
 public:
  PolyMultivector() = default;
  PolyMultivector(int order, int dim) : p_(order), m_(dim) {}
  static PolyMultivector constant(const AntisymTensor& t);
  // ∂_{I1}∧…∧∂_{Ip} (any order, sign absorbed)
  static PolyMultivector basis(int dim, const Tuple& idx);
  // Vector field with the given components.
  static PolyMultivector vector_field(const std::vector<Poly>& comps);

  int order() const { return p_; }
  int dim() const { return m_; }
  const std::map<Tuple, Poly>& components() const { return c_; }

  Poly get(Tuple t) const;
  void set(Tuple t, const Poly& v);
  void add(Tuple t, const Poly& v);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  std::optional<AntisymTensor> constant_part() const;  // nullopt unless constant
  int degree() const;
  // Λ(df1,…,dfp) = ω^{i1…ip} ∂_{i1}f1 … ∂_{ip}fp
  Poly apply(const std::vector<Poly>& fs) const;

  PolyMultivector& operator+=(const PolyMultivector& o);
  PolyMultivector& operator*=(const Q& s);
  bool operator==(const PolyMultivector& o) const { return p_ == o.p_ && m_ == o.m_ && c_ == o.c_; }
  bool operator!=(const PolyMultivector& o) const { return !(*this == o); }

 private:
  int p_ = 0, m_ = 0;
  std::map<Tuple, Poly> c_;
};

PolyMultivector operator+(PolyMultivector a, const PolyMultivector& b);
PolyMultivector operator-(PolyMultivector a, const PolyMultivector& b);
PolyMultivector operator*(PolyMultivector a, const Q& s);
PolyMultivector wedge(const PolyMultivector& A, const PolyMultivector& B);

// Throws std::invalid_argument on a dimension mismatch.
PolyMultivector schouten_bracket(const PolyMultivector& A, const PolyMultivector& B);

// ω^{I} = c_I^σ x_σ for the fully antisymmetric constants of G (arity = order).
PolyMultivector linear_multivector(const Algebra& G);
// ½ C_ij^k x_k ∂_i∧∂_j
PolyMultivector lie_poisson_bivector(const Algebra& L);
// Λ built from C_{i1…i(2m−2)}^σ = Ω_{i1…i(2m−2)ρ} k^{ρσ}.
PolyMultivector linear_gps_from_cocycle(const Algebra& L, const AntisymTensor& omega);

struct GpsReport {
  bool ok = false;
  bool schouten_zero = false;  // [Λ,Λ] = 0
  bool coordinate_zero = false;  // ω_{σ[j1…j(2s−1)} ∂^σ ω_{j2s…j4s−1]} = 0
  Tuple where;  // first nonzero component of [Λ,Λ]
};
// Throws std::invalid_argument for odd order.
GpsReport gps_check(const PolyMultivector& L);

struct Decomposition {
  bool decomposable = false;
  std::vector<QVec> factors;  // Λ = v1∧…∧vp when decomposable
  Tuple plucker_I, plucker_J;  // violated Σ_k (−1)^k ω^{I jk} ω^{J∖jk} when not
};
Decomposition decompose(const AntisymTensor& t);

struct NPReport {
  bool np_ok = false;
  bool differential_ok = true;
  Tuple differential_where;  // i1…i(n−1) | j1…jn
  Poly::Exp differential_monomial;
  bool algebraic_ok = true;
  Tuple algebraic_where;  // i1…in | j1…jn
  bool sigma_zero = true;  // Σ itself vanishes
  std::optional<Decomposition> decomposable_hint;  // constant inputs
};
NPReport np_check(const PolyMultivector& L);

// gps_check on a tensor that passes np_check. Throws std::invalid_argument
// when the order is odd or np_check fails.
bool np_even_implies_gps(const PolyMultivector& L);

// det ∂(f1…fn)/∂(x1…xn) divided by the constant density e.
Poly nambu_bracket(const std::vector<Poly>& fs, const Q& e = Q(1));
// Σ_a ∂(f1,f2,f3)/∂(x^a,y^a,z^a) on R^{3N}, variables x^1…x^N, y^1…, z^1….
Poly nhw_bracket(int N, const Poly& f1, const Poly& f2, const Poly& f3);
// Coordinate brackets against the Nambu–Heisenberg–Weyl 3-algebra.
bool nhw_realization_check(int N);

// X = Λ(dH1,…,dH(n−1), d·): X{g1…gn} − Σ_i {g1…Xgi…gn}
Poly hamiltonian_derivation_residual(const PolyMultivector& L, const std::vector<Poly>& hs,
                                     const std::vector<Poly>& gs);

}  // namespace nary

#pragma once
// Canonical antisymmetric tensors, dense arrays, generalized Kronecker
// symbols and the contraction engine. Indices are 0-based in C++; the C API
// and the file format shift them to 1-based.

#include "nary/combinat.hpp"
#include "nary/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nary {

struct Array {
  std::vector<int> shape;
  std::vector<Q> data;

  Array() = default;
  explicit Array(std::vector<int> s);
  long offset(const Tuple& t) const;
  Q& at(const Tuple& t) { return data[offset(t)]; }
  const Q& at(const Tuple& t) const { return data[offset(t)]; }
  int rank() const { return static_cast<int>(shape.size()); }
  bool is_zero() const;
  bool operator==(const Array& o) const { return shape == o.shape && data == o.data; }
};

class AntisymTensor {
 public:
  AntisymTensor() = default;
  AntisymTensor(int rank, int dim) : rank_(rank), dim_(dim) {}

  int rank() const { return rank_; }
  int dim() const { return dim_; }

  // Value at an arbitrary tuple: sign(sorting permutation) times the stored entry.
  Q get(Tuple t) const;
  // Sets the value at t (any order); the stored canonical entry absorbs the sign.
  void set(Tuple t, const Q& v);
  void add(Tuple t, const Q& v);

  const std::map<Tuple, Q>& entries() const { return e_; }
  size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }

  Array dense() const;
  // Reads sorted positions of a dense array; does not verify antisymmetry.
  static AntisymTensor from_dense_sorted(const Array& a);
  // True if the dense array is antisymmetric in every slot pair.
  static bool is_antisymmetric(const Array& a);

  AntisymTensor& operator*=(const Q& s);
  AntisymTensor& operator+=(const AntisymTensor& o);
  bool operator==(const AntisymTensor& o) const {
    return rank_ == o.rank_ && dim_ == o.dim_ && e_ == o.e_;
  }
  bool operator!=(const AntisymTensor& o) const { return !(*this == o); }

 private:
  int rank_ = 0, dim_ = 0;
  std::map<Tuple, Q> e_;
};

// det[δ^{upper_a}_{lower_b}]
int gen_kronecker_int(const Tuple& upper, const Tuple& lower);
Q gen_kronecker(const Tuple& upper, const Tuple& lower);

// Σ_σ sign(σ) T_{σ(1)…σ(n)}; requires a cubical array.
AntisymTensor antisymmetrize(const Array& t);
// Same divided by n!.
AntisymTensor antisymmetrize_unit(const Array& t);

// Sums over the paired axes (axis of A, axis of B); the result carries A's free
// axes followed by B's free axes, each in original order.
Array contract(const Array& A, const Array& B, const std::vector<std::pair<int, int>>& pairs);
// Sums over pairs of axes of one array.
Array self_contract(const Array& A, const std::vector<std::pair<int, int>>& pairs);
Array outer(const Array& A, const Array& B);
Array kronecker_array(int p, int d);  // ε^{i1..ip}_{j1..jp} with upper axes first
Array delta_array(int d);

struct EpsReport {
  bool ok = true;
  std::string first_failure;
};
// Checks the first-row / last-row expansions and the two-index peeling of ε.
EpsReport eps_identities_check(int n, int d);

}  // namespace nary

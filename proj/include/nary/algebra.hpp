#pragma once
// Structure-constant container shared by Lie, GLA, Filippov and Leibniz
// algebras: an n-linear bracket on a D-dimensional space,
//   [e_{a1},…,e_{an}] = c_{a1…an}^b e_b.

#include "nary/matrix.hpp"
#include "nary/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nary {

enum class Kind { Lie, GLA, Filippov, Leibniz };

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& s);

using Vec = std::vector<Q>;

Vec unit(int D, int i);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Q& a, const Vec& x);  // y += a x

struct Algebra {
  Kind kind = Kind::Lie;
  int n = 2;  // bracket arity
  int D = 0;
  std::vector<Q> c;  // c[flat(a1..an) * D + b]
  std::optional<QMat> metric;

  Algebra() = default;
  Algebra(Kind k, int arity, int dim);

  bool antisymmetric_kind() const { return kind != Kind::Leibniz; }

  const Q& at(const Tuple& a, int b) const { return c[flat_index(a, D) * D + b]; }
  Q& at(const Tuple& a, int b) { return c[flat_index(a, D) * D + b]; }
  const Q* row(const Tuple& a) const { return &c[flat_index(a, D) * D]; }

  // Sets c_{a}^b and, for antisymmetric kinds, every permuted slot with its sign.
  void set(const Tuple& a, int b, const Q& v);

  Vec bracket_basis(const Tuple& a) const;
  // Multilinear bracket of arbitrary vectors.
  Vec bracket(const std::vector<Vec>& args) const;

  bool is_antisymmetric(Tuple* witness = nullptr) const;
  bool is_abelian() const;
  // c_{..}^b viewed as an antisymmetric tensor in the lower slots.
  AntisymTensor slice(int b) const;
  // ad_{a1..a_{n-1}} acting on the last slot: (ad)^l_b = c_{a..b}^l.
  QMat ad(const Tuple& a) const;
  QMat ad(const std::vector<Vec>& x) const;

  bool operator==(const Algebra& o) const {
    return kind == o.kind && n == o.n && D == o.D && c == o.c && metric == o.metric;
  }
};

// New basis e'_i = Σ_j P(j,i) e_j; P must be invertible.
Algebra change_basis(const Algebra& A, const QMat& P);
// Block direct sum (same arity).
Algebra direct_sum(const Algebra& A, const Algebra& B);
Algebra abelian(Kind k, int n, int D);

}  // namespace nary

namespace nary {

// Outcome of an exact residual scan. `where` holds the first failing index
// tuple (0-based) when ok is false.
struct CheckResult {
  bool ok = true;
  Tuple where;
  std::string detail;

  static CheckResult fail(Tuple w, std::string d = {}) { return {false, std::move(w), std::move(d)}; }
};

std::string tuple_str(const Tuple& t);  // 1-based, space separated

}  // namespace nary

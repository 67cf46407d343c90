#pragma once
// Multivariate polynomials with rational coefficients in x_1..x_m.

#include "nary/scalar.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace nary {

class Poly {
 public:
  using Exp = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : m_(nvars) {}
  static Poly constant(int nvars, const Q& c);
  static Poly var(int nvars, int i);  // x_i, 0-based

  int nvars() const { return m_; }
  const std::map<Exp, Q>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;

  void add_term(const Exp& e, const Q& c);
  Poly derivative(int i) const;
  Q eval(const std::vector<Q>& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& s);
  bool operator==(const Poly& o) const { return m_ == o.m_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int m_ = 0;
  std::map<Exp, Q> t_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(Poly a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Q& s);

// Random polynomial of total degree <= deg with small integer coefficients.
Poly random_poly(int nvars, int deg, std::mt19937_64& rng, int coeff_range = 3, double density = 0.5);

}  // namespace nary

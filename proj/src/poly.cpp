#include "nary/poly.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace nary {

Poly Poly::constant(int nvars, const Q& c) {
  Poly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

Poly Poly::var(int nvars, int i) {
  Poly p(nvars);
  Exp e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Q(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add_term(const Exp& e, const Q& c) {
  if (nary::is_zero(c)) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (nary::is_zero(it->second)) t_.erase(it);
}

Poly Poly::derivative(int i) const {
  Poly r(m_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Exp f = e;
    --f[i];
    r.t_.emplace(f, c * e[i]);
  }
  return r;
}

Q Poly::eval(const std::vector<Q>& x) const {
  Q s;
  for (const auto& [e, c] : t_) {
    Q term = c;
    for (int k = 0; k < m_; ++k)
      for (int j = 0; j < e[k]; ++j) term *= x[k];
    s += term;
  }
  return s;
}

Poly& Poly::operator+=(const Poly& o) {
  if (m_ == 0) m_ = o.m_;
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (m_ == 0) m_ = o.m_;
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& s) {
  if (nary::is_zero(s)) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= s;
  return *this;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) s += " + ";
    first = false;
    s += c.get_str();
    for (int k = 0; k < m_; ++k) {
      if (e[k] == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
  }
  return s;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(Poly a) { return a *= Q(-1); }
Poly operator*(Poly a, const Q& s) { return a *= s; }

Poly operator*(const Poly& a, const Poly& b) {
  int m = std::max(a.nvars(), b.nvars());
  Poly r(m);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Poly::Exp e(m, 0);
      for (int k = 0; k < m; ++k) e[k] = (k < (int)ea.size() ? ea[k] : 0) + (k < (int)eb.size() ? eb[k] : 0);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly random_poly(int nvars, int deg, std::mt19937_64& rng, int coeff_range, double density) {
  Poly p(nvars);
  std::uniform_int_distribution<int> coef(-coeff_range, coeff_range);
  std::bernoulli_distribution keep(density);
  Poly::Exp e(nvars, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == nvars) {
      if (keep(rng)) p.add_term(e, Q(coef(rng)));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[k] = a;
      rec(k + 1, left - a);
    }
    e[k] = 0;
  };
  rec(0, deg);
  return p;
}

}  // namespace nary

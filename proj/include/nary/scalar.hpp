#pragma once
// Exact scalars: rationals (GMP) and Gaussian rationals a + b i.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nary {

using Q = mpq_class;

inline Q qv(long p, long q = 1) {
  Q r(p, q);
  r.canonicalize();
  return r;
}

struct Gauss {
  Q re, im;

  Gauss() = default;
  Gauss(const Q& r) : re(r) {}  // NOLINT implicit
  Gauss(long r) : re(r) {}      // NOLINT implicit
  Gauss(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  static Gauss I() { return Gauss(Q(0), Q(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gauss conj() const { return Gauss(re, -im); }

  Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
  Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
  Gauss& operator*=(const Gauss& o) {
    Q r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    Q n = o.re * o.re + o.im * o.im;
    Q r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
};

inline Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
inline Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
inline Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
inline Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
inline Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im); }
inline bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline bool is_zero(const Gauss& x) { return x.is_zero(); }

// Text forms: "p/q" for rationals, "a+b i" with rational a, b for Gaussians.
std::string to_string(const Q& x);
std::string to_string(const Gauss& x);
std::optional<Q> parse_q(std::string_view s);
std::optional<Gauss> parse_gauss(std::string_view s);

std::ostream& operator<<(std::ostream& os, const Gauss& g);

}  // namespace nary

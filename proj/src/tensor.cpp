#include "nary/tensor.hpp"

#include <stdexcept>

namespace nary {

Array::Array(std::vector<int> s) : shape(std::move(s)) {
  long n = 1;
  for (int x : shape) n *= x;
  data.assign(n, Q(0));
}

long Array::offset(const Tuple& t) const {
  long r = 0;
  for (size_t k = 0; k < shape.size(); ++k) r = r * shape[k] + t[k];
  return r;
}

bool Array::is_zero() const {
  for (const Q& x : data)
    if (!nary::is_zero(x)) return false;
  return true;
}

Q AntisymTensor::get(Tuple t) const {
  int s = sort_sign(t);
  if (s == 0) return Q(0);
  auto it = e_.find(t);
  if (it == e_.end()) return Q(0);
  return s > 0 ? it->second : Q(-it->second);
}

void AntisymTensor::set(Tuple t, const Q& v) {
  int s = sort_sign(t);
  if (s == 0) {
    if (!nary::is_zero(v)) throw std::invalid_argument("nonzero value on a repeated index tuple");
    return;
  }
  if (nary::is_zero(v)) {
    e_.erase(t);
    return;
  }
  e_[t] = s > 0 ? v : Q(-v);
}

void AntisymTensor::add(Tuple t, const Q& v) {
  if (nary::is_zero(v)) return;
  int s = sort_sign(t);
  if (s == 0) throw std::invalid_argument("nonzero value on a repeated index tuple");
  Q& x = e_[t];
  if (s > 0) x += v; else x -= v;
  if (nary::is_zero(x)) e_.erase(t);
}

Array AntisymTensor::dense() const {
  Array a(std::vector<int>(rank_, dim_));
  for (const auto& [t, v] : e_) {
    for_each_perm(rank_, [&](const Tuple& p, int s) {
      Tuple u(rank_);
      for (int k = 0; k < rank_; ++k) u[k] = t[p[k]];
      a.at(u) = s > 0 ? v : Q(-v);
    });
  }
  return a;
}

AntisymTensor AntisymTensor::from_dense_sorted(const Array& a) {
  int r = a.rank();
  int d = r ? a.shape[0] : 0;
  AntisymTensor t(r, d);
  for (const Tuple& c : combinations(d, r)) {
    const Q& v = a.at(c);
    if (!nary::is_zero(v)) t.e_[c] = v;
  }
  return t;
}

bool AntisymTensor::is_antisymmetric(const Array& a) {
  int r = a.rank();
  if (r < 2) return true;
  int d = a.shape[0];
  bool ok = true;
  for_each_tuple(d, r, [&](const Tuple& t) {
    if (!ok) return;
    for (int k = 0; k + 1 < r; ++k) {
      Tuple u = t;
      std::swap(u[k], u[k + 1]);
      if (a.at(t) != -a.at(u)) { ok = false; return; }
    }
  });
  return ok;
}

AntisymTensor& AntisymTensor::operator*=(const Q& s) {
  if (nary::is_zero(s)) {
    e_.clear();
    return *this;
  }
  for (auto& kv : e_) kv.second *= s;
  return *this;
}

AntisymTensor& AntisymTensor::operator+=(const AntisymTensor& o) {
  for (const auto& [t, v] : o.e_) add(t, v);
  return *this;
}

int gen_kronecker_int(const Tuple& upper, const Tuple& lower) {
  if (upper.size() != lower.size()) throw std::invalid_argument("gen_kronecker: length mismatch");
  // det of a 0/1 matrix with at most one 1 per row when upper is repeat-free
  Tuple u = upper, l = lower;
  int su = sort_sign(u), sl = sort_sign(l);
  if (su == 0 || sl == 0) return 0;
  return u == l ? su * sl : 0;
}

Q gen_kronecker(const Tuple& upper, const Tuple& lower) { return Q(gen_kronecker_int(upper, lower)); }

AntisymTensor antisymmetrize(const Array& t) {
  int r = t.rank();
  int d = r ? t.shape[0] : 0;
  for (int x : t.shape)
    if (x != d) throw std::invalid_argument("antisymmetrize: array is not cubical");
  AntisymTensor out(r, d);
  for (const Tuple& c : combinations(d, r)) {
    Q acc;
    for_each_perm(r, [&](const Tuple& p, int s) {
      Tuple u(r);
      for (int k = 0; k < r; ++k) u[k] = c[p[k]];
      if (s > 0) acc += t.at(u); else acc -= t.at(u);
    });
    out.set(c, acc);
  }
  return out;
}

AntisymTensor antisymmetrize_unit(const Array& t) {
  AntisymTensor a = antisymmetrize(t);
  a *= Q(1, factorial(t.rank()));
  return a;
}

Array contract(const Array& A, const Array& B, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> usedA(A.rank(), false), usedB(B.rank(), false);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= A.rank() || b < 0 || b >= B.rank() || usedA[a] || usedB[b])
      throw std::invalid_argument("contract: bad axis pairing");
    if (A.shape[a] != B.shape[b]) throw std::invalid_argument("contract: dimension mismatch");
    usedA[a] = usedB[b] = true;
  }
  std::vector<int> freeA, freeB, shape;
  for (int k = 0; k < A.rank(); ++k)
    if (!usedA[k]) { freeA.push_back(k); shape.push_back(A.shape[k]); }
  for (int k = 0; k < B.rank(); ++k)
    if (!usedB[k]) { freeB.push_back(k); shape.push_back(B.shape[k]); }
  Array out(shape);
  std::vector<int> pshape;
  for (auto [a, b] : pairs) pshape.push_back(A.shape[a]);
  Tuple ia(A.rank()), ib(B.rank());
  long nout = static_cast<long>(out.data.size());
  long npair = 1;
  for (int x : pshape) npair *= x;
  for (long o = 0; o < nout; ++o) {
    long rem = o;
    for (int k = static_cast<int>(shape.size()) - 1; k >= 0; --k) {
      int v = static_cast<int>(rem % shape[k]);
      rem /= shape[k];
      if (k < static_cast<int>(freeA.size())) ia[freeA[k]] = v; else ib[freeB[k - freeA.size()]] = v;
    }
    Q acc;
    for (long q = 0; q < npair; ++q) {
      long r2 = q;
      for (int k = static_cast<int>(pairs.size()) - 1; k >= 0; --k) {
        int v = static_cast<int>(r2 % pshape[k]);
        r2 /= pshape[k];
        ia[pairs[k].first] = v;
        ib[pairs[k].second] = v;
      }
      const Q& x = A.at(ia);
      if (is_zero(x)) continue;
      const Q& y = B.at(ib);
      if (is_zero(y)) continue;
      acc += x * y;
    }
    out.data[o] = acc;
  }
  return out;
}

Array self_contract(const Array& A, const std::vector<std::pair<int, int>>& pairs) {
  Array one(std::vector<int>{});
  one.data[0] = 1;
  // contract against ones: build δ for each pair and contract
  Array cur = A;
  std::vector<std::pair<int, int>> todo = pairs;
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (cur.shape[a] != cur.shape[b]) throw std::invalid_argument("self_contract: dimension mismatch");
    Array d = delta_array(cur.shape[a]);
    Array next = contract(cur, d, {{a, 0}, {b, 1}});
    int lo = std::min(a, b), hi = std::max(a, b);
    for (auto& pr : todo) {
      auto fix = [&](int& x) { x -= (x > lo) + (x > hi); };
      fix(pr.first);
      fix(pr.second);
    }
    cur = std::move(next);
  }
  return cur;
}

Array outer(const Array& A, const Array& B) { return contract(A, B, {}); }

Array kronecker_array(int p, int d) {
  Array a(std::vector<int>(2 * p, d));
  for (const Tuple& c : combinations(d, p)) {
    for_each_perm(p, [&](const Tuple& pu, int su) {
      for_each_perm(p, [&](const Tuple& pl, int sl) {
        Tuple t(2 * p);
        for (int k = 0; k < p; ++k) {
          t[k] = c[pu[k]];
          t[p + k] = c[pl[k]];
        }
        a.at(t) = su * sl;
      });
    });
  }
  return a;
}

Array delta_array(int d) {
  Array a({d, d});
  for (int i = 0; i < d; ++i) a.at({i, i}) = 1;
  return a;
}

namespace {

Tuple drop(const Tuple& t, int k) {
  Tuple r;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (i != k) r.push_back(t[i]);
  return r;
}

std::string show(const Tuple& up, const Tuple& lo) {
  std::string s = "upper=(";
  for (int x : up) s += std::to_string(x + 1) + " ";
  s += ") lower=(";
  for (int x : lo) s += std::to_string(x + 1) + " ";
  return s + ")";
}

}  // namespace

EpsReport eps_identities_check(int n, int d) {
  EpsReport rep;
  // Cap the enumeration: beyond ~2e6 pairs only repeat-free upper tuples are scanned.
  bool full = ipow(d, 2 * n) <= 2000000;
  for_each_tuple(d, n, [&](const Tuple& up) {
    if (!rep.ok) return;
    if (!full && perm_sign(up) == 0) return;
    for_each_tuple(d, n, [&](const Tuple& lo) {
      if (!rep.ok) return;
      int lhs = gen_kronecker_int(up, lo);
      int first = 0, last = 0;
      for (int s = 0; s < n; ++s) {
        int sg = (s % 2 == 0) ? 1 : -1;
        if (up[0] == lo[s]) first += sg * gen_kronecker_int(drop(up, 0), drop(lo, s));
        int sg2 = ((s + 1 + n) % 2 == 0) ? 1 : -1;
        if (up[n - 1] == lo[s]) last += sg2 * gen_kronecker_int(drop(up, n - 1), drop(lo, s));
      }
      int peel = lhs;
      if (n >= 2) {
        peel = 0;
        Tuple rest_up(up.begin() + 2, up.end());
        for (int s = 0; s < n; ++s)
          for (int t = s + 1; t < n; ++t) {
            int sg = ((s + 1 + t + 1 + 1) % 2 == 0) ? 1 : -1;
            int e2 = gen_kronecker_int({up[0], up[1]}, {lo[s], lo[t]});
            if (e2 == 0) continue;
            Tuple rl;
            for (int k = 0; k < n; ++k)
              if (k != s && k != t) rl.push_back(lo[k]);
            peel += sg * e2 * (rest_up.empty() ? 1 : gen_kronecker_int(rest_up, rl));
          }
      }
      if (lhs != first || lhs != last || lhs != peel) {
        rep.ok = false;
        rep.first_failure = show(up, lo);
      }
    });
  });
  return rep;
}

}  // namespace nary

#include "nary/combinat.hpp"

#include <algorithm>
#include <numeric>

namespace nary {

int sort_sign(Tuple& t) {
  int s = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    for (size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      s = -s;
    }
  }
  return s;
}

int perm_sign(const Tuple& t) {
  Tuple c = t;
  return sort_sign(c);
}

std::vector<Tuple> combinations(int d, int k) {
  std::vector<Tuple> out;
  if (k < 0 || k > d) return out;
  Tuple t(k);
  std::iota(t.begin(), t.end(), 0);
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == d - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long comb_rank(const Tuple& t, int d) {
  long r = 0;
  int k = static_cast<int>(t.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) r += binom(d - v - 1, k - i - 1);
    prev = t[i];
  }
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void for_each_perm(int n, const std::function<void(const Tuple&, int)>& f) {
  Tuple p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p, perm_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

void for_each_shuffle(int N, int k, const std::function<void(const Tuple&, const Tuple&, int)>& f) {
  for (const Tuple& a : combinations(N, k)) {
    Tuple b;
    b.reserve(N - k);
    size_t j = 0;
    long inv = 0;
    for (int x = 0; x < N; ++x) {
      if (j < a.size() && a[j] == x) {
        ++j;
      } else {
        b.push_back(x);
        inv += static_cast<long>(a.size() - j);
      }
    }
    f(a, b, (inv % 2) ? -1 : 1);
  }
}

void for_each_tuple(int d, int k, const std::function<void(const Tuple&)>& f) {
  Tuple t(k, 0);
  if (d <= 0 && k > 0) return;
  while (true) {
    f(t);
    int i = k - 1;
    while (i >= 0 && t[i] == d - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long flat_index(const Tuple& t, int d) {
  long r = 0;
  for (int x : t) r = r * d + x;
  return r;
}

Tuple unflatten(long idx, int d, int k) {
  Tuple t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % d);
    idx /= d;
  }
  return t;
}

}  // namespace nary

#include "nary/gla.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace nary {

namespace {

void resolve_rec(const Tuple& items, int sign, std::vector<std::pair<int, int>>& acc,
                 std::vector<ResolutionTerm>& out) {
  if (items.empty()) {
    out.push_back({sign, acc});
    return;
  }
  int m = static_cast<int>(items.size());
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      Tuple rest;
      for (int k = 0; k < m; ++k)
        if (k != s && k != t) rest.push_back(items[k]);
      // (−1)^{s+t+1} with 1-based s,t
      int sg = ((s + t + 3) % 2) ? -1 : 1;
      acc.push_back({items[s], items[t]});
      resolve_rec(rest, sign * sg, acc, out);
      acc.pop_back();
    }
}

}  // namespace

std::vector<ResolutionTerm> even_resolution_terms(int n) {
  Tuple items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  std::vector<ResolutionTerm> out;
  std::vector<std::pair<int, int>> acc;
  resolve_rec(items, 1, acc, out);
  return out;
}

Algebra gla_algebra(int n, int dim) { return Algebra(Kind::GLA, n, dim); }

namespace {

// Scan over sorted index sets J of size n+m−1 of Σ_shuffles sign C_S^l C'_{rest,l}^s.
CheckResult nested_scan(const Algebra& in, const Algebra& out, const char* what) {
  if (in.D != out.D) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  int n = in.n, m = out.n, D = in.D, N = n + m - 1;
  if (N > D) return {};
  std::vector<std::pair<Tuple, Tuple>> shuffles;
  std::vector<int> signs;
  for_each_shuffle(N, n, [&](const Tuple& S, const Tuple& R, int s) {
    shuffles.push_back({S, R});
    signs.push_back(s);
  });
  Tuple a(n), b(m);
  Vec res(D);
  for (const Tuple& J : combinations(D, N)) {
    std::fill(res.begin(), res.end(), Q(0));
    for (size_t k = 0; k < shuffles.size(); ++k) {
      for (int i = 0; i < n; ++i) a[i] = J[shuffles[k].first[i]];
      for (int i = 0; i < m - 1; ++i) b[i] = J[shuffles[k].second[i]];
      const Q* ra = in.row(a);
      for (int l = 0; l < D; ++l) {
        if (is_zero(ra[l])) continue;
        b[m - 1] = l;
        const Q* rb = out.row(b);
        Q f = signs[k] * ra[l];
        for (int s = 0; s < D; ++s)
          if (!is_zero(rb[s])) res[s] += f * rb[s];
      }
    }
    for (int s = 0; s < D; ++s)
      if (!is_zero(res[s])) {
        Tuple w = J;
        w.push_back(s);
        return CheckResult::fail(w, std::string(what) + " residual " + to_string(res[s]));
      }
  }
  return {};
}

}  // namespace

CheckResult check_gji(const Algebra& G) { return nested_scan(G, G, "GJI"); }

CheckResult check_mgji(const Algebra& inner, const Algebra& outer) { return nested_scan(inner, outer, "MGJI"); }

Algebra gla_from_cocycle(const Algebra& L, const AntisymTensor& omega) {
  auto kinv = inverse(killing_form(L));
  if (!kinv) throw std::domain_error("degenerate Killing form");
  int n = omega.rank() - 1, D = L.D;
  if (n < 1 || omega.dim() != D) throw std::invalid_argument("gla_from_cocycle: rank/dimension");
  Algebra G(n == 2 ? Kind::Lie : Kind::GLA, n, D);
  for (const auto& [t, v] : omega.entries()) {
    // every lower slot of a sorted entry may play the role of ρ
    for (int pos = 0; pos <= n; ++pos) {
      Tuple args;
      for (int k = 0; k <= n; ++k)
        if (k != pos) args.push_back(t[k]);
      // Ω_{args ρ} = (−1)^{n−pos} Ω_t
      Q sv = ((n - pos) % 2) ? Q(-v) : v;
      for (int j = 0; j < D; ++j) {
        const Q& kk = (*kinv)(t[pos], j);
        if (!is_zero(kk)) G.at(args, j) += sv * kk;
      }
    }
  }
  // fill the remaining permutations from the sorted ones
  for (const Tuple& t : combinations(D, n))
    for (int j = 0; j < D; ++j) {
      Q v = G.at(t, j);
      if (!is_zero(v)) G.set(t, j, v);
    }
  return G;
}

Multivector wedge_basis(int dim, const Tuple& idx) {
  Multivector m(static_cast<int>(idx.size()), dim);
  Tuple t = idx;
  if (sort_sign(t) != 0) m.set(idx, Q(1));
  return m;
}

Multivector coderivation(const Algebra& G, const Multivector& x) {
  int s = G.n, q = x.rank(), D = G.D;
  if (q < s) return Multivector(std::max(q - s + 1, 0), D);
  Multivector out(q - s + 1, D);
  std::vector<std::pair<Tuple, Tuple>> sh;
  std::vector<int> sg;
  for_each_shuffle(q, s, [&](const Tuple& S, const Tuple& R, int k) {
    sh.push_back({S, R});
    sg.push_back(k);
  });
  Tuple a(s), b(q - s + 1);
  for (const auto& [I, coef] : x.entries()) {
    for (size_t k = 0; k < sh.size(); ++k) {
      for (int i = 0; i < s; ++i) a[i] = I[sh[k].first[i]];
      for (int i = 0; i < q - s; ++i) b[i + 1] = I[sh[k].second[i]];
      const Q* row = G.row(a);
      for (int l = 0; l < D; ++l) {
        if (is_zero(row[l])) continue;
        b[0] = l;
        Tuple c = b;
        int ss = sort_sign(c);
        if (ss == 0) continue;
        out.add(b, sg[k] * coef * row[l]);
      }
    }
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  int p = a.rank(), q = b.rank(), D = a.dim();
  Form out(p + q, D);
  if (p + q > D) return out;
  for (const auto& [ia, va] : a.entries())
    for (const auto& [ib, vb] : b.entries()) {
      Tuple t = ia;
      t.insert(t.end(), ib.begin(), ib.end());
      Tuple c = t;
      if (sort_sign(c) == 0) continue;
      out.add(t, va * vb);
    }
  return out;
}

Form higher_exterior_derivative(const Algebra& G, const Form& alpha) {
  int s = G.n, q = alpha.rank(), D = G.D;
  if (q < 1) throw std::invalid_argument("higher_exterior_derivative: order >= 1");
  int N = q + s - 1;
  Form out(N, D);
  if (N > D) return out;
  std::vector<std::pair<Tuple, Tuple>> sh;
  std::vector<int> sg;
  for_each_shuffle(N, s, [&](const Tuple& S, const Tuple& R, int k) {
    sh.push_back({S, R});
    sg.push_back(k);
  });
  Tuple a(s), b(q);
  for (const Tuple& I : combinations(D, N)) {
    Q acc;
    for (size_t k = 0; k < sh.size(); ++k) {
      for (int i = 0; i < s; ++i) a[i] = I[sh[k].first[i]];
      for (int i = 0; i < q - 1; ++i) b[i + 1] = I[sh[k].second[i]];
      const Q* row = G.row(a);
      for (int r = 0; r < D; ++r) {
        if (is_zero(row[r])) continue;
        b[0] = r;
        acc += sg[k] * row[r] * alpha.get(b);
      }
    }
    if (!is_zero(acc)) out.set(I, acc);
  }
  return out;
}

Q pair(const Form& alpha, const Multivector& x) {
  if (alpha.rank() != x.rank()) throw std::invalid_argument("pair: order mismatch");
  Q acc;
  for (const auto& [t, v] : x.entries()) acc += v * alpha.get(t);
  return acc * Q(factorial(alpha.rank()));
}

GhostElem ghost_monomial(const Tuple& sorted_idx) {
  uint32_t m = 0;
  for (int i : sorted_idx) m |= (1u << i);
  return {{m, Q(1)}};
}

namespace {

// sign of moving c^I (sorted) in front of c^K: c^I c^K = sign c^{I∪K}
int merge_sign(uint32_t I, uint32_t K) {
  int inv = 0;
  while (I) {
    int i = std::countr_zero(I);
    I &= I - 1;
    inv += std::popcount(K & ((1u << i) - 1));
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace

GhostElem apply_brst(const Algebra& G, const GhostElem& x) {
  int n = G.n, D = G.D;
  if (D > 31) throw std::invalid_argument("apply_brst: dimension above 31");
  GhostElem out;
  std::vector<Tuple> combs = combinations(D, n);
  std::vector<uint32_t> cm;
  for (const Tuple& I : combs) {
    uint32_t m = 0;
    for (int i : I) m |= 1u << i;
    cm.push_back(m);
  }
  for (const auto& [K, coef] : x) {
    uint32_t rest = K;
    while (rest) {
      int sgm = std::countr_zero(rest);
      rest &= rest - 1;
      int dsign = std::popcount(K & ((1u << sgm) - 1)) % 2 ? -1 : 1;
      uint32_t K2 = K & ~(1u << sgm);
      for (size_t c = 0; c < combs.size(); ++c) {
        if (cm[c] & K2) continue;
        const Q& v = G.at(combs[c], sgm);
        if (is_zero(v)) continue;
        // the 1/n! cancels against the n! orderings of the sorted I
        Q add = -v * coef;
        if (dsign * merge_sign(cm[c], K2) < 0) add = -add;
        Q& slot = out[cm[c] | K2];
        slot += add;
        if (is_zero(slot)) out.erase(cm[c] | K2);
      }
    }
  }
  return out;
}

namespace {

GhostElem add(GhostElem a, const GhostElem& b) {
  for (const auto& [k, v] : b) {
    Q& s = a[k];
    s += v;
    if (is_zero(s)) a.erase(k);
  }
  return a;
}

}  // namespace

BrstReport brst_nilpotency(const std::vector<Algebra>& ops) {
  BrstReport rep;
  if (ops.empty()) return rep;
  int D = ops[0].D;
  for (uint32_t m = 0; m < (1u << D); ++m) {
    GhostElem x{{m, Q(1)}};
    std::vector<GhostElem> once;
    for (const Algebra& G : ops) once.push_back(apply_brst(G, x));
    for (size_t a = 0; a < ops.size(); ++a)
      for (size_t b = a; b < ops.size(); ++b) {
        GhostElem ac = add(apply_brst(ops[a], once[b]), apply_brst(ops[b], once[a]));
        if (!ac.empty()) {
          rep.ok = false;
          rep.a = static_cast<int>(a);
          rep.b = static_cast<int>(b);
          rep.monomial = m;
          return rep;
        }
      }
  }
  return rep;
}

BrstReport brst_nilpotency(const Algebra& L, const std::vector<AntisymTensor>& cocycles) {
  std::vector<Algebra> ops;
  for (const AntisymTensor& c : cocycles) ops.push_back(gla_from_cocycle(L, c));
  return brst_nilpotency(ops);
}

}  // namespace nary

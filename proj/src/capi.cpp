#include "nary.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <json.hpp>
#include <string>

#include "nary/filippov.hpp"
#include "nary/gla.hpp"
#include "nary/io.hpp"
#include "nary/lie.hpp"
#include "nary/lie_cohomology.hpp"
#include "nary/nary_cohomology.hpp"
#include "nary/poisson.hpp"

struct nary_algebra {
  nary::Algebra a;
};
struct nary_tensor {
  nary::PolyMultivector t;
};

namespace {

using nary::Algebra;
using nary::Kind;
using nary::Q;
using nary::Tuple;
using json = nlohmann::json;

thread_local std::string last_error;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nary_status guard(const std::function<nary_status()>& f) {
  last_error.clear();
  try {
    return f();
  } catch (const nary::ParseError& e) {
    last_error = e.what();
    return NARY_EINPUT;
  } catch (const InputError& e) {
    last_error = e.what();
    return NARY_EINPUT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return NARY_EINPUT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return NARY_EINPUT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return NARY_EINPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NARY_EINTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return NARY_EINTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string("null ") + what);
}

void cap(int dim) {
  if (dim > nary_max_dim())
    throw InputError("dimension " + std::to_string(dim) + " exceeds the cap " + std::to_string(nary_max_dim()) +
                     " (set NARY_MAX_DIM)");
}

json one_based(const Tuple& t) {
  json j = json::array();
  for (int i : t) j.push_back(i + 1);
  return j;
}

std::string monomial_str(const nary::Poly::Exp& e) {
  std::string s;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

struct Report {
  std::string lines;
  bool all = true;
  void add(json j, bool counts = true) {
    if (counts && j.contains("ok") && !j["ok"].get<bool>()) all = false;
    lines += j.dump() + "\n";
  }
};

template <class F>
json timed(const std::string& name, F f) {
  auto t0 = std::chrono::steady_clock::now();
  json j = f();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  j["check"] = name;
  j["ms"] = std::round(ms * 1000) / 1000;
  return j;
}

json from_check(const nary::CheckResult& r) {
  json j{{"ok", r.ok}};
  if (!r.ok) {
    j["where"] = one_based(r.where);
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j;
}

void identity_suite(const Algebra& A, Report& rep) {
  switch (A.kind) {
    case Kind::Lie:
      rep.add(timed("identity.jacobi", [&] { return from_check(nary::check_jacobi(A)); }));
      break;
    case Kind::GLA:
      rep.add(timed("identity.gji", [&] { return from_check(nary::check_gji(A)); }));
      break;
    case Kind::Filippov:
      for (auto f : {nary::FiForm::Derivation, nary::FiForm::Short, nary::FiForm::Ghost})
        rep.add(timed(std::string("identity.fi.") + nary::fi_form_name(f),
                      [&] { return from_check(nary::check_fi(A, f)); }));
      break;
    case Kind::Leibniz:
      rep.add(timed("identity.leibniz", [&] { return from_check(nary::check_leibniz(A)); }));
      break;
  }
}

void metric_suite(const Algebra& A, Report& rep) {
  if (!A.metric) {
    rep.add(json{{"check", "metric"}, {"ok", true}, {"skipped", "no metric block"}});
    return;
  }
  rep.add(timed("metric", [&]() -> json {
    if (A.kind == Kind::Lie) {
      auto m = nary::check_metric_invariance(A, *A.metric);
      json j{{"ok", m.invariant && m.nondegenerate}, {"invariant", m.invariant}, {"nondegenerate", m.nondegenerate}};
      if (!m.invariant) j["where"] = one_based(m.where);
      return j;
    }
    if (A.kind == Kind::Filippov) {
      try {
        auto m = nary::check_metric_fa(A, *A.metric);
        return json{{"ok", m.metric && m.invariant}, {"metric", m.metric}, {"invariant", m.invariant}};
      } catch (const std::invalid_argument& e) {
        return json{{"ok", false}, {"detail", e.what()}};
      }
    }
    return json{{"ok", true}, {"skipped", "no metric check for this kind"}};
  }));
}

bool product_zero(const nary::QMat& d1, const nary::QMat& d0) { return (d1 * d0).is_zero(); }

void cohomology_suite(const Algebra& A, Report& rep) {
  if (A.kind == Kind::Lie) {
    for (const char* r : {"ad", "trivial"}) {
      rep.add(timed(std::string("cohomology.d2.") + r, [&] {
        auto R = std::strcmp(r, "ad") == 0 ? nary::adjoint_rep(A) : nary::trivial_rep(A);
        return json{{"ok", product_zero(nary::coboundary_matrix(A, R, 1), nary::coboundary_matrix(A, R, 0))}};
      }));
    }
  } else if (A.kind == Kind::Filippov) {
    for (auto c : {nary::NComplex::Trivial, nary::NComplex::Deformation}) {
      rep.add(timed(std::string("cohomology.d2.") + nary::ncomplex_name(c), [&] {
        return json{{"ok", product_zero(nary::fa_coboundary_matrix(A, c, 1, c == nary::NComplex::Trivial ? 1 : A.D),
                                        nary::fa_coboundary_matrix(A, c, 0, c == nary::NComplex::Trivial ? 1 : A.D))}};
      }));
    }
  } else if (A.kind == Kind::Leibniz && A.n == 2) {
    rep.add(timed("cohomology.d2.ad", [&]() -> json {
      try {
        auto R = nary::leibniz_adjoint(A);
        for (int p = 0; p <= 1; ++p) {
          nary::NCochain w = nary::leibniz_cochain(A, p, R.dV);
          for (size_t k = 0; k < w.v.size(); ++k) {
            nary::NCochain u = w;
            u.v[k] = Q(1);
            if (!nary::leibniz_coboundary(A, R, nary::leibniz_coboundary(A, R, u)).is_zero())
              return json{{"ok", false}, {"detail", "s^2 != 0 in degree " + std::to_string(p)}};
          }
        }
        return json{{"ok", true}};
      } catch (const std::invalid_argument& e) {
        return json{{"ok", false}, {"detail", e.what()}};
      }
    }));
  } else {
    rep.add(json{{"check", "cohomology"}, {"ok", true}, {"skipped", "no complex for this kind"}});
  }
}

nary::FaRepresentation fa_trivial_rep(const Algebra& F) {
  nary::FaRepresentation R;
  R.dV = 1;
  R.rho.assign(nary::combinations(F.D, F.n - 1).size(), nary::QMat(1, 1));
  return R;
}

std::string cohomology_lines(const nary::CohomologyReport& r, const std::string& complex, const std::string& rep) {
  std::string s;
  for (const auto& d : r.degrees)
    s += json{{"complex", complex}, {"rep", rep},     {"p", d.p},         {"dimC", d.dimC},
              {"dimZ", d.dimZ},       {"dimB", d.dimB}, {"dimH", d.dimH}}.dump() + "\n";
  return s;
}

Kind parse_kind(const char* s) {
  need(s, "kind");
  auto k = nary::kind_from_name(s);
  if (!k) throw InputError(std::string("unknown kind '") + s + "'");
  return *k;
}

nary_status emit_algebra(Algebra A, nary_algebra** out) {
  need(out, "output");
  *out = new nary_algebra{std::move(A)};
  return NARY_OK;
}

}  // namespace

extern "C" {

const char* nary_last_error(void) { return last_error.c_str(); }

void nary_string_free(char* s) { std::free(s); }

int nary_max_dim(void) {
  if (const char* e = std::getenv("NARY_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return 16;
}

nary_status nary_algebra_parse(const char* text, nary_algebra** out) {
  return guard([&] {
    need(text, "text");
    Algebra A = nary::parse_algebra(text);
    cap(A.D);
    return emit_algebra(std::move(A), out);
  });
}

nary_status nary_algebra_load(const char* path, nary_algebra** out) {
  return guard([&] {
    need(path, "path");
    std::string text;
    try {
      text = nary::read_file(path);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    try {
      Algebra A = nary::parse_algebra(text);
      cap(A.D);
      return emit_algebra(std::move(A), out);
    } catch (const nary::ParseError& e) {
      throw InputError(std::string(path) + ":" + e.what());
    }
  });
}

nary_status nary_algebra_emit(const nary_algebra* a, char** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    *out = dup(nary::emit_algebra(a->a));
    return NARY_OK;
  });
}

void nary_algebra_free(nary_algebra* a) { delete a; }

const char* nary_algebra_kind(const nary_algebra* a) { return a ? nary::kind_name(a->a.kind) : ""; }
int nary_algebra_arity(const nary_algebra* a) { return a ? a->a.n : 0; }
int nary_algebra_dim(const nary_algebra* a) { return a ? a->a.D : 0; }

nary_status nary_algebra_get(const nary_algebra* a, const int* idx, int k, char** value) {
  return guard([&] {
    need(a, "algebra");
    need(idx, "indices");
    need(value, "output");
    Tuple t;
    for (int i = 0; i < a->a.n; ++i) {
      if (idx[i] < 1 || idx[i] > a->a.D) throw InputError("index out of range");
      t.push_back(idx[i] - 1);
    }
    if (k < 1 || k > a->a.D) throw InputError("index out of range");
    *value = dup(nary::to_string(a->a.at(t, k - 1)));
    return NARY_OK;
  });
}

nary_status nary_algebra_set(nary_algebra* a, const int* idx, int k, const char* value) {
  return guard([&] {
    need(a, "algebra");
    need(idx, "indices");
    need(value, "value");
    Tuple t;
    for (int i = 0; i < a->a.n; ++i) {
      if (idx[i] < 1 || idx[i] > a->a.D) throw InputError("index out of range");
      t.push_back(idx[i] - 1);
    }
    if (k < 1 || k > a->a.D) throw InputError("index out of range");
    auto q = nary::parse_q(value);
    if (!q) throw InputError(std::string("bad rational '") + value + "'");
    Tuple s = t;
    if (a->a.antisymmetric_kind() && nary::sort_sign(s) == 0 && !nary::is_zero(*q))
      throw InputError("repeated index in an antisymmetric slot");
    a->a.set(t, k - 1, *q);
    return NARY_OK;
  });
}

nary_status nary_generate_simple_fa(int n, const char* signs, nary_algebra** out) {
  return guard([&] {
    need(signs, "signs");
    if (n < 2) throw InputError("simple-fa needs n >= 2");
    cap(n + 1);
    std::string s(signs);
    if (static_cast<int>(s.size()) != n + 1) throw InputError("signs must have n+1 characters");
    std::vector<int> sg;
    for (char c : s) {
      if (c != '+' && c != '-') throw InputError("signs are '+' or '-'");
      sg.push_back(c == '+' ? 1 : -1);
    }
    Algebra A = nary::simple_fa(n, sg);
    A.metric = nary::QMat(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) (*A.metric)(i, i) = Q(sg[i]);
    return emit_algebra(std::move(A), out);
  });
}

nary_status nary_generate_su(int n, nary_algebra** out) {
  return guard([&] {
    if (n < 2) throw InputError("su(n) needs n >= 2");
    cap(n * n - 1);
    Algebra A = nary::sun_generators(n).C;
    A.metric = nary::killing_form(A);
    return emit_algebra(std::move(A), out);
  });
}

nary_status nary_generate_gla_from_su(int n, int m, nary_algebra** out) {
  return guard([&] {
    if (n < 2) throw InputError("su(n) needs n >= 2");
    if (m < 2 || m > n) throw InputError("gla-from-su needs 2 <= m <= n");
    cap(n * n - 1);
    auto b = nary::sun_generators(n);
    auto om = nary::cocycle_from_invariant_poly(b.C, nary::symmetrized_trace_poly(b.T, m));
    if (om.is_zero()) throw InputError("the cocycle vanishes");
    return emit_algebra(nary::gla_from_cocycle(b.C, om), out);
  });
}

nary_status nary_generate_heisenberg(int N, nary_algebra** out) {
  return guard([&] {
    if (N < 1) throw InputError("heisenberg needs N >= 1");
    cap(2 * N + 1);
    Algebra A = nary::lie_algebra(2 * N + 1);
    for (int a = 0; a < N; ++a) A.set({a, N + a}, 2 * N, Q(1));
    return emit_algebra(std::move(A), out);
  });
}

nary_status nary_generate_nhw(int N, nary_algebra** out) {
  return guard([&] {
    if (N < 1) throw InputError("nhw needs N >= 1");
    cap(3 * N + 1);
    return emit_algebra(nary::nhw_algebra(N), out);
  });
}

nary_status nary_generate_clifford(int n, nary_algebra** out) {
  return guard([&] {
    if (n < 3 || n > 5) throw InputError("clifford needs 3 <= n <= 5");
    auto r = nary::clifford_realization(n);
    if (!r.realizes) throw InputError("no realization");
    return emit_algebra(r.induced, out);
  });
}

nary_status nary_generate_abelian(const char* kind, int arity, int dim, nary_algebra** out) {
  return guard([&] {
    Kind k = parse_kind(kind);
    if (dim < 0) throw InputError("negative dimension");
    cap(dim);
    if (arity < 2 || (k == Kind::Lie && arity != 2) || (k == Kind::GLA && arity % 2))
      throw InputError("arity does not fit the kind");
    return emit_algebra(nary::abelian(k, arity, dim), out);
  });
}

nary_status nary_check(const nary_algebra* a, const char* suite, char** report, int* passed) {
  return guard([&] {
    need(a, "algebra");
    need(report, "output");
    std::string s = suite ? suite : "all";
    if (s != "identity" && s != "metric" && s != "cohomology" && s != "all")
      throw InputError("unknown suite '" + s + "'");
    Report rep;
    if (s == "identity" || s == "all") identity_suite(a->a, rep);
    if (s == "metric" || s == "all") metric_suite(a->a, rep);
    if (s == "cohomology" || s == "all") cohomology_suite(a->a, rep);
    *report = dup(rep.lines);
    if (passed) *passed = rep.all ? 1 : 0;
    return rep.all ? NARY_OK : NARY_FAIL;
  });
}

nary_status nary_cohomology(const nary_algebra* a, const char* complex, const char* rep, int pmax, char** report) {
  return guard([&] {
    need(a, "algebra");
    need(report, "output");
    if (pmax < 0 || pmax > 6) throw InputError("pmax must be in 0..6");
    const Algebra& A = a->a;
    std::string c = complex ? complex : "", r = rep ? rep : "";
    if (!c.empty() && c != "trivial" && c != "module" && c != "deformation")
      throw InputError("unknown complex '" + c + "'");
    if (!r.empty() && r != "ad" && r != "trivial") throw InputError("unknown representation '" + r + "'");
    if (c == "trivial" && r == "ad") throw InputError("the trivial complex takes the trivial representation");
    if (c == "deformation" && r == "trivial") throw InputError("the deformation complex takes the adjoint representation");
    if (A.kind == Kind::Lie || (A.kind == Kind::Leibniz && A.n == 2)) {
      std::string use = c == "trivial" ? "trivial" : (r.empty() ? "ad" : r);
      if (A.kind == Kind::Lie) {
        auto R = use == "ad" ? nary::adjoint_rep(A) : nary::trivial_rep(A);
        *report = dup(cohomology_lines(nary::cohomology_dims(A, R, pmax), "ce", use));
      } else {
        auto R = use == "ad" ? nary::leibniz_adjoint(A) : nary::leibniz_trivial(A, 1);
        *report = dup(cohomology_lines(nary::leibniz_cohomology_dims(A, R, pmax), "leibniz", use));
      }
      return NARY_OK;
    }
    if (A.kind == Kind::Filippov) {
      if (c.empty()) c = r.empty() ? "trivial" : "module";
      if (c == "trivial") {
        *report = dup(cohomology_lines(nary::fa_cohomology_dims(A, nary::NComplex::Trivial, pmax), c, "trivial"));
      } else if (c == "deformation") {
        *report = dup(cohomology_lines(nary::fa_cohomology_dims(A, nary::NComplex::Deformation, pmax), c, "ad"));
      } else {
        std::string use = r.empty() ? "ad" : r;
        auto R = use == "ad" ? nary::fa_adjoint_rep(A) : fa_trivial_rep(A);
        *report = dup(cohomology_lines(nary::fa_cohomology_dims(A, nary::NComplex::Module, pmax, 1, &R), c, use));
      }
      return NARY_OK;
    }
    throw InputError(std::string("no cohomology for ") + nary::kind_name(A.kind) + " of arity " + std::to_string(A.n));
  });
}

nary_status nary_tensor_parse(const char* text, nary_tensor** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output");
    auto t = nary::parse_multivector(text);
    cap(t.dim());
    *out = new nary_tensor{std::move(t)};
    return NARY_OK;
  });
}

nary_status nary_tensor_load(const char* path, nary_tensor** out) {
  return guard([&] {
    need(path, "path");
    need(out, "output");
    std::string text;
    try {
      text = nary::read_file(path);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    try {
      auto t = nary::parse_multivector(text);
      cap(t.dim());
      *out = new nary_tensor{std::move(t)};
    } catch (const nary::ParseError& e) {
      throw InputError(std::string(path) + ":" + e.what());
    }
    return NARY_OK;
  });
}

nary_status nary_tensor_emit(const nary_tensor* t, char** out) {
  return guard([&] {
    need(t, "tensor");
    need(out, "output");
    *out = dup(nary::emit_multivector(t->t));
    return NARY_OK;
  });
}

void nary_tensor_free(nary_tensor* t) { delete t; }
int nary_tensor_order(const nary_tensor* t) { return t ? t->t.order() : 0; }
int nary_tensor_dim(const nary_tensor* t) { return t ? t->t.dim() : 0; }

nary_status nary_tensor_linear(const nary_algebra* a, nary_tensor** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    if (!a->a.antisymmetric_kind()) throw InputError("linear tensors need an antisymmetric bracket");
    *out = new nary_tensor{nary::linear_multivector(a->a)};
    return NARY_OK;
  });
}

nary_status nary_tensor_nambu(int n, int dim, nary_tensor** out) {
  return guard([&] {
    need(out, "output");
    if (n < 1 || n > dim) throw InputError("nambu tensor needs 1 <= n <= dim");
    cap(dim);
    Tuple t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    *out = new nary_tensor{nary::PolyMultivector::basis(dim, t)};
    return NARY_OK;
  });
}

nary_status nary_poisson(const nary_tensor* t, const char* check, char** report, int* passed) {
  return guard([&] {
    need(t, "tensor");
    need(check, "check");
    need(report, "output");
    std::string c = check;
    Report rep;
    const auto& L = t->t;
    if (c == "gps") {
      if (L.order() % 2 || L.order() == 0)
        throw InputError("gps needs an even order (the self bracket of an odd multivector vanishes identically)");
      auto g = nary::gps_check(L);
      json a{{"condition", "snb"}, {"ok", g.schouten_zero}};
      if (!g.schouten_zero) a["where"] = one_based(g.where);
      rep.add(a);
      rep.add(json{{"condition", "gpsl"}, {"ok", g.coordinate_zero}});
    } else if (c == "np") {
      auto r = nary::np_check(L);
      json d{{"condition", "differential"}, {"ok", r.differential_ok}};
      if (!r.differential_ok) {
        d["where"] = one_based(r.differential_where);
        d["monomial"] = monomial_str(r.differential_monomial);
      }
      rep.add(d);
      json al{{"condition", "algebraic"}, {"ok", r.algebraic_ok}, {"sigma_zero", r.sigma_zero}};
      if (L.order() <= 2) al["vacuous"] = true;
      if (!r.algebraic_ok) al["where"] = one_based(r.algebraic_where);
      rep.add(al);
      if (r.decomposable_hint) {
        json h{{"condition", "decomposable"}, {"value", r.decomposable_hint->decomposable}};
        if (r.decomposable_hint->decomposable) {
          json f = json::array();
          for (const auto& v : r.decomposable_hint->factors) {
            json col = json::array();
            for (const Q& x : v) col.push_back(nary::to_string(x));
            f.push_back(col);
          }
          h["factors"] = f;
        } else {
          h["plucker_I"] = one_based(r.decomposable_hint->plucker_I);
          h["plucker_J"] = one_based(r.decomposable_hint->plucker_J);
        }
        rep.add(h, false);
      }
    } else if (c == "snb-self") {
      auto s = nary::schouten_bracket(L, L);
      json j{{"condition", "snb-self"}, {"ok", s.is_zero()}};
      if (!s.is_zero()) {
        j["where"] = one_based(s.components().begin()->first);
        j["monomial"] = monomial_str(s.components().begin()->second.terms().begin()->first);
      }
      rep.add(j);
    } else {
      throw InputError("unknown check '" + c + "'");
    }
    *report = dup(rep.lines);
    if (passed) *passed = rep.all ? 1 : 0;
    return rep.all ? NARY_OK : NARY_FAIL;
  });
}

}  // extern "C"

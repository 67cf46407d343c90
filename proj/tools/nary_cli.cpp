// nary: command-line front end over the C API.
//   nary check FILE [--suite identity|metric|cohomology|all]
//   nary generate GENERATOR [params] [-o OUT]
//   nary cohomology FILE [--complex C] [--rep R] [--pmax P]
//   nary poisson FILE --check gps|np|snb-self
//   nary emit FILE
// Reports go to stdout as JSON lines, summaries to stderr.
// Exit status: 0 all pass, 1 check failure, 2 input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "nary.h"

namespace {

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return 2;
}

int status_exit(nary_status s) { return s == NARY_OK ? 0 : s == NARY_FAIL ? 1 : 2; }

std::string take(char* s) {
  std::string r = s ? s : "";
  nary_string_free(s);
  return r;
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return input_error("cannot write " + path);
  f << text;
  return 0;
}

void summarize(const std::string& lines, const char* key) {
  std::istringstream in(lines);
  std::string l;
  int pass = 0, fail = 0;
  while (std::getline(in, l)) {
    auto j = nlohmann::json::parse(l, nullptr, false);
    if (j.is_discarded() || !j.contains("ok")) continue;
    if (j["ok"].get<bool>()) {
      ++pass;
    } else {
      ++fail;
      std::cerr << "FAIL " << j.value(key, std::string("?"));
      if (j.contains("where")) std::cerr << " at " << j["where"].dump();
      std::cerr << '\n';
    }
  }
  std::cerr << pass << " passed, " << fail << " failed\n";
}

struct AlgebraHandle {
  nary_algebra* a = nullptr;
  ~AlgebraHandle() { nary_algebra_free(a); }
};
struct TensorHandle {
  nary_tensor* t = nullptr;
  ~TensorHandle() { nary_tensor_free(t); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-ary Lie structures: identities, cohomology and Poisson checks"};
  app.require_subcommand(1);

  std::string file, suite = "all", out, complex, rep, check, kind, signs, from, akind = "filippov";
  int pmax = 2, n = 3, m = 3, N = 1, arity = 3, dim = 3;

  auto* c_check = app.add_subcommand("check", "run identity, metric and cohomology suites on an .alg file");
  c_check->add_option("file", file)->required();
  c_check->add_option("--suite", suite)->check(CLI::IsMember({"identity", "metric", "cohomology", "all"}));

  auto* c_gen = app.add_subcommand("generate", "emit a catalog algebra or tensor");
  c_gen->add_option("generator", kind)
      ->required()
      ->check(CLI::IsMember({"simple-fa", "su", "gla-from-su", "heisenberg", "nhw", "clifford", "abelian",
                             "linear-tensor", "nambu-tensor"}));
  c_gen->add_option("--n", n, "arity parameter / su(n)");
  c_gen->add_option("--m", m, "invariant polynomial order for gla-from-su");
  c_gen->add_option("--N", N, "copies for heisenberg and nhw");
  c_gen->add_option("--signs", signs, "metric signs for simple-fa, e.g. ++++");
  c_gen->add_option("--kind", akind, "kind for abelian");
  c_gen->add_option("--arity", arity, "arity for abelian");
  c_gen->add_option("--dim", dim, "dimension for abelian and nambu-tensor");
  c_gen->add_option("--from", from, "algebra file for linear-tensor");
  c_gen->add_option("-o,--output", out);

  auto* c_coh = app.add_subcommand("cohomology", "cohomology dimensions");
  c_coh->add_option("file", file)->required();
  c_coh->add_option("--complex", complex)->check(CLI::IsMember({"trivial", "module", "deformation"}));
  c_coh->add_option("--rep", rep)->check(CLI::IsMember({"ad", "trivial"}));
  c_coh->add_option("--pmax", pmax);

  auto* c_poi = app.add_subcommand("poisson", "Poisson, GPS and Nambu-Poisson checks on an .mv file");
  c_poi->add_option("file", file)->required();
  c_poi->add_option("--check", check)->required()->check(CLI::IsMember({"gps", "np", "snb-self"}));

  auto* c_emit = app.add_subcommand("emit", "re-emit a file in canonical form");
  c_emit->add_option("file", file)->required();
  c_emit->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*c_check) {
    AlgebraHandle h;
    if (nary_algebra_load(file.c_str(), &h.a) != NARY_OK) return input_error(nary_last_error());
    char* r = nullptr;
    int passed = 0;
    nary_status s = nary_check(h.a, suite.c_str(), &r, &passed);
    if (s != NARY_OK && s != NARY_FAIL) return input_error(nary_last_error());
    std::string lines = take(r);
    std::cout << lines;
    summarize(lines, "check");
    return status_exit(s);
  }

  if (*c_gen) {
    nary_status s;
    std::string text;
    if (kind == "linear-tensor" || kind == "nambu-tensor") {
      TensorHandle t;
      if (kind == "linear-tensor") {
        if (from.empty()) return input_error("linear-tensor needs --from");
        AlgebraHandle h;
        if (nary_algebra_load(from.c_str(), &h.a) != NARY_OK) return input_error(nary_last_error());
        s = nary_tensor_linear(h.a, &t.t);
      } else {
        s = nary_tensor_nambu(n, dim, &t.t);
      }
      if (s != NARY_OK) return input_error(nary_last_error());
      char* e = nullptr;
      if (nary_tensor_emit(t.t, &e) != NARY_OK) return input_error(nary_last_error());
      text = take(e);
    } else {
      AlgebraHandle h;
      if (kind == "simple-fa") {
        if (signs.empty()) signs = std::string(n + 1, '+');
        s = nary_generate_simple_fa(n, signs.c_str(), &h.a);
      } else if (kind == "su") {
        s = nary_generate_su(n, &h.a);
      } else if (kind == "gla-from-su") {
        s = nary_generate_gla_from_su(n, m, &h.a);
      } else if (kind == "heisenberg") {
        s = nary_generate_heisenberg(N, &h.a);
      } else if (kind == "nhw") {
        s = nary_generate_nhw(N, &h.a);
      } else if (kind == "clifford") {
        s = nary_generate_clifford(n, &h.a);
      } else {
        s = nary_generate_abelian(akind.c_str(), arity, dim, &h.a);
      }
      if (s != NARY_OK) return input_error(nary_last_error());
      char* e = nullptr;
      if (nary_algebra_emit(h.a, &e) != NARY_OK) return input_error(nary_last_error());
      text = take(e);
    }
    return write_out(text, out);
  }

  if (*c_coh) {
    AlgebraHandle h;
    if (nary_algebra_load(file.c_str(), &h.a) != NARY_OK) return input_error(nary_last_error());
    char* r = nullptr;
    nary_status s = nary_cohomology(h.a, complex.empty() ? nullptr : complex.c_str(), rep.empty() ? nullptr : rep.c_str(),
                                    pmax, &r);
    if (s != NARY_OK) return input_error(nary_last_error());
    std::string lines = take(r);
    std::cout << lines;
    std::istringstream in(lines);
    std::string l;
    while (std::getline(in, l)) {
      auto j = nlohmann::json::parse(l);
      std::cerr << "H^" << j["p"] << " = " << j["dimH"] << '\n';
    }
    return 0;
  }

  if (*c_poi) {
    TensorHandle t;
    if (nary_tensor_load(file.c_str(), &t.t) != NARY_OK) return input_error(nary_last_error());
    char* r = nullptr;
    int passed = 0;
    nary_status s = nary_poisson(t.t, check.c_str(), &r, &passed);
    if (s != NARY_OK && s != NARY_FAIL) return input_error(nary_last_error());
    std::string lines = take(r);
    std::cout << lines;
    summarize(lines, "condition");
    return status_exit(s);
  }

  if (*c_emit) {
    std::string head;
    {
      std::ifstream f(file);
      if (!f) return input_error("cannot open " + file);
      while (std::getline(f, head)) {
        auto p = head.find_first_not_of(" \t");
        if (p != std::string::npos && head[p] != '#') {
          head = head.substr(p);
          break;
        }
      }
    }
    char* e = nullptr;
    if (head.rfind("multivector", 0) == 0) {
      TensorHandle t;
      if (nary_tensor_load(file.c_str(), &t.t) != NARY_OK || nary_tensor_emit(t.t, &e) != NARY_OK)
        return input_error(nary_last_error());
    } else {
      AlgebraHandle h;
      if (nary_algebra_load(file.c_str(), &h.a) != NARY_OK || nary_algebra_emit(h.a, &e) != NARY_OK)
        return input_error(nary_last_error());
    }
    return write_out(take(e), out);
  }
  return 2;
}

#include "nary/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nary {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

struct Line {
  int no;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string s;
  int no = 0;
  while (std::getline(in, s)) {
    ++no;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    size_t f = s.find_first_not_of(" \t");
    if (f == std::string::npos || s[f] == '#') continue;
    out.push_back({no, s});
  }
  return out;
}

// Whitespace-separated words with their 1-based columns.
std::vector<std::pair<std::string, int>> words(const std::string& s, size_t from = 0, size_t to = std::string::npos) {
  std::vector<std::pair<std::string, int>> w;
  if (to == std::string::npos) to = s.size();
  size_t i = from;
  while (i < to) {
    while (i < to && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= to) break;
    size_t j = i;
    while (j < to && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    w.emplace_back(s.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return w;
}

int parse_int(const std::pair<std::string, int>& w, int line, const char* what) {
  const std::string& s = w.first;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw ParseError(line, w.second, std::string("expected ") + what + ", got '" + s + "'");
  return std::stoi(s);
}

Q parse_value(const std::string& s, int line, int col, bool gaussian) {
  if (gaussian) {
    auto g = parse_gauss(s);
    if (!g) throw ParseError(line, col, "bad gaussian rational '" + s + "'");
    if (!g->is_real()) throw ParseError(line, col, "nonzero imaginary part is not supported by real algebras");
    return g->re;
  }
  auto q = parse_q(s);
  if (!q) throw ParseError(line, col, "bad rational '" + s + "'");
  return *q;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header");
  const Line& h = lines[0];
  auto hw = words(h.text);
  if (hw.size() != 4) throw ParseError(h.no, 1, "header must be 'kind arity dim scalar'");
  auto kind = kind_from_name(hw[0].first);
  if (!kind) throw ParseError(h.no, hw[0].second, "unknown kind '" + hw[0].first + "'");
  int n = parse_int(hw[1], h.no, "arity"), D = parse_int(hw[2], h.no, "dimension");
  if (n < 2) throw ParseError(h.no, hw[1].second, "arity must be at least 2");
  if (*kind == Kind::Lie && n != 2) throw ParseError(h.no, hw[1].second, "lie algebras have arity 2");
  if (*kind == Kind::GLA && n % 2) throw ParseError(h.no, hw[1].second, "gla arity must be even");
  bool gaussian;
  if (hw[3].first == "rational")
    gaussian = false;
  else if (hw[3].first == "gaussian")
    gaussian = true;
  else
    throw ParseError(h.no, hw[3].second, "scalar must be 'rational' or 'gaussian'");

  Algebra A(*kind, n, D);
  std::set<std::pair<Tuple, int>> seen;
  std::set<std::pair<int, int>> seen_metric;
  bool in_metric = false;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& L = lines[li];
    if (trim(L.text) == "metric") {
      if (in_metric) throw ParseError(L.no, 1, "second metric block");
      in_metric = true;
      A.metric = QMat(D, D);
      continue;
    }
    size_t colon = L.text.find(':');
    if (colon == std::string::npos) throw ParseError(L.no, 1, "expected ':'");
    std::string val = trim(L.text.substr(colon + 1));
    int vcol = static_cast<int>(L.text.find_first_not_of(" \t", colon + 1)) + 1;
    if (val.empty()) throw ParseError(L.no, static_cast<int>(colon) + 2, "missing value");
    Q v = parse_value(val, L.no, vcol, gaussian);
    if (in_metric) {
      auto w = words(L.text, 0, colon);
      if (w.size() != 2) throw ParseError(L.no, 1, "metric entries are 'i j : value'");
      int i = parse_int(w[0], L.no, "index"), j = parse_int(w[1], L.no, "index");
      if (i < 1 || i > D) throw ParseError(L.no, w[0].second, "index out of range");
      if (j < 1 || j > D) throw ParseError(L.no, w[1].second, "index out of range");
      if (i > j) throw ParseError(L.no, w[0].second, "metric entries need i <= j");
      if (!seen_metric.insert({i, j}).second) throw ParseError(L.no, 1, "duplicate metric entry");
      (*A.metric)(i - 1, j - 1) = v;
      (*A.metric)(j - 1, i - 1) = v;
      continue;
    }
    size_t arrow = L.text.find("->");
    if (arrow == std::string::npos || arrow > colon) throw ParseError(L.no, 1, "expected 'i1 ... in -> k : value'");
    auto lw = words(L.text, 0, arrow);
    auto rw = words(L.text, arrow + 2, colon);
    if (static_cast<int>(lw.size()) != n) throw ParseError(L.no, 1, "expected " + std::to_string(n) + " lower indices");
    if (rw.size() != 1) throw ParseError(L.no, static_cast<int>(arrow) + 3, "expected one upper index");
    Tuple t;
    for (const auto& w : lw) {
      int i = parse_int(w, L.no, "index");
      if (i < 1 || i > D) throw ParseError(L.no, w.second, "index out of range");
      t.push_back(i - 1);
    }
    int k = parse_int(rw[0], L.no, "index");
    if (k < 1 || k > D) throw ParseError(L.no, rw[0].second, "index out of range");
    if (A.antisymmetric_kind()) {
      for (size_t a = 1; a < t.size(); ++a)
        if (t[a - 1] >= t[a])
          throw ParseError(L.no, lw[a].second, "tuple " + tuple_str(t) + " is not strictly increasing");
    }
    if (!seen.insert({t, k - 1}).second) throw ParseError(L.no, 1, "duplicate entry " + tuple_str(t) + " -> " + std::to_string(k));
    A.set(t, k - 1, v);
  }
  return A;
}

std::string emit_algebra(const Algebra& A) {
  std::ostringstream o;
  o << kind_name(A.kind) << ' ' << A.n << ' ' << A.D << " rational\n";
  auto row = [&](const Tuple& t) {
    for (int k = 0; k < A.D; ++k) {
      const Q& v = A.at(t, k);
      if (is_zero(v)) continue;
      for (int i : t) o << i + 1 << ' ';
      o << "-> " << k + 1 << " : " << to_string(v) << '\n';
    }
  };
  if (A.antisymmetric_kind()) {
    for (const Tuple& t : combinations(A.D, A.n)) row(t);
  } else {
    for_each_tuple(A.D, A.n, row);
  }
  if (A.metric) {
    o << "metric\n";
    for (int i = 0; i < A.D; ++i)
      for (int j = i; j < A.D; ++j)
        if (!is_zero((*A.metric)(i, j))) o << i + 1 << ' ' << j + 1 << " : " << to_string((*A.metric)(i, j)) << '\n';
  }
  return o.str();
}

// Terms separated by + or − at the top level; each term is an optional
// coefficient followed by *x<i>[^e] factors.
Poly parse_poly(const std::string& src, int m) {
  std::string s;
  for (char c : src)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError(0, 1, "empty polynomial");
  Poly p(m);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError(0, static_cast<int>(i) + 1, "empty term");
    Q c(sign);
    Poly::Exp e(m, 0);
    size_t k = 0;
    bool have_coef = false;
    while (k < term.size()) {
      size_t star = term.find('*', k);
      std::string f = term.substr(k, star == std::string::npos ? std::string::npos : star - k);
      if (f.empty()) throw ParseError(0, static_cast<int>(i + k) + 1, "empty factor");
      if (f[0] == 'x') {
        size_t caret = f.find('^');
        std::string idx = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        int pw = 1;
        if (caret != std::string::npos) {
          std::string ps = f.substr(caret + 1);
          if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos || ps.size() > 4)
            throw ParseError(0, static_cast<int>(i + k) + 1, "bad exponent in '" + f + "'");
          pw = std::stoi(ps);
        }
        if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos || idx.size() > 6)
          throw ParseError(0, static_cast<int>(i + k) + 1, "bad variable '" + f + "'");
        int v = std::stoi(idx);
        if (v < 1 || v > m) throw ParseError(0, static_cast<int>(i + k) + 1, "variable out of range '" + f + "'");
        e[v - 1] += pw;
      } else {
        if (have_coef || k != 0) throw ParseError(0, static_cast<int>(i + k) + 1, "misplaced coefficient '" + f + "'");
        auto q = parse_q(f);
        if (!q) throw ParseError(0, static_cast<int>(i + k) + 1, "bad coefficient '" + f + "'");
        c *= *q;
        have_coef = true;
      }
      if (star == std::string::npos) break;
      k = star + 1;
      if (k == term.size()) throw ParseError(0, static_cast<int>(i + k) + 1, "trailing '*'");
    }
    p.add_term(e, c);
    i = j;
  }
  return p;
}

PolyMultivector parse_multivector(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header");
  const Line& h = lines[0];
  auto hw = words(h.text);
  if (hw.size() != 3 || hw[0].first != "multivector") throw ParseError(h.no, 1, "header must be 'multivector order dim'");
  int p = parse_int(hw[1], h.no, "order"), m = parse_int(hw[2], h.no, "dimension");
  if (p > m) throw ParseError(h.no, hw[1].second, "order exceeds dimension");
  PolyMultivector L(p, m);
  std::set<Tuple> seen;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& Ln = lines[li];
    size_t colon = Ln.text.find(':');
    if (colon == std::string::npos) throw ParseError(Ln.no, 1, "expected ':'");
    auto w = words(Ln.text, 0, colon);
    if (static_cast<int>(w.size()) != p) throw ParseError(Ln.no, 1, "expected " + std::to_string(p) + " indices");
    Tuple t;
    for (const auto& x : w) {
      int i = parse_int(x, Ln.no, "index");
      if (i < 1 || i > m) throw ParseError(Ln.no, x.second, "index out of range");
      if (!t.empty() && t.back() >= i - 1)
        throw ParseError(Ln.no, x.second, "indices must be strictly increasing");
      t.push_back(i - 1);
    }
    if (!seen.insert(t).second) throw ParseError(Ln.no, 1, "duplicate component " + tuple_str(t));
    Poly v;
    try {
      v = parse_poly(Ln.text.substr(colon + 1), m);
    } catch (const ParseError& e) {
      throw ParseError(Ln.no, static_cast<int>(colon) + 1 + e.col, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    L.set(t, v);
  }
  return L;
}

std::string emit_multivector(const PolyMultivector& L) {
  std::ostringstream o;
  o << "multivector " << L.order() << ' ' << L.dim() << '\n';
  for (const auto& [I, v] : L.components()) {
    for (size_t k = 0; k < I.size(); ++k) o << (k ? " " : "") << I[k] + 1;
    o << " : " << v.str() << '\n';
  }
  return o.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace nary

#include "nary/scalar.hpp"

#include <cctype>

namespace nary {

std::string to_string(const Q& x) { return x.get_str(); }

std::string to_string(const Gauss& x) {
  if (x.is_real()) return to_string(x.re);
  std::string s = to_string(x.re);
  if (sgn(x.im) >= 0) s += "+";
  s += to_string(x.im) + " i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << to_string(g); }

std::optional<Q> parse_q(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  bool slash = false, digit = false;
  for (size_t k = i; k < s.size(); ++k) {
    char c = s[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c == '/' && !slash && digit && k + 1 < s.size()) {
      slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!digit) return std::nullopt;
  std::string str(s[0] == '+' ? s.substr(1) : s);
  Q r;
  if (r.set_str(str, 10) != 0) return std::nullopt;
  if (sgn(r.get_den()) == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::optional<Gauss> parse_gauss(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty() || s.back() != 'i') {
    auto q = parse_q(s);
    if (!q) return std::nullopt;
    return Gauss(*q);
  }
  s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  // split at the last sign that is not leading
  size_t cut = std::string_view::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') { cut = k; break; }
  }
  if (cut == std::string_view::npos) {
    auto im = parse_q(s);
    if (!im) return std::nullopt;
    return Gauss(Q(0), *im);
  }
  auto re = parse_q(s.substr(0, cut));
  auto im = parse_q(s.substr(cut));
  if (!re || !im) return std::nullopt;
  return Gauss(*re, *im);
}

}  // namespace nary

#pragma once
// Text formats. Algebras (.alg):
//   kind arity dim scalar
//   i1 … in -> k : value        (1-based, canonical tuple order)
//   metric                      (optional block)
//   i j : value                 (i <= j)
// Multivectors (.mv):
//   multivector order dim
//   i1 … ip : polynomial         (sorted indices, terms like -3/2*x1^2*x3)
// Blank lines and lines starting with '#' are ignored.

#include <stdexcept>
#include <string>

#include "nary/algebra.hpp"
#include "nary/poisson.hpp"

namespace nary {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int l, int c, const std::string& msg);
};

Algebra parse_algebra(const std::string& text);
std::string emit_algebra(const Algebra& A);

Poly parse_poly(const std::string& s, int nvars);  // throws ParseError with line 0
PolyMultivector parse_multivector(const std::string& text);
std::string emit_multivector(const PolyMultivector& L);

std::string read_file(const std::string& path);  // throws std::runtime_error

}  // namespace nary

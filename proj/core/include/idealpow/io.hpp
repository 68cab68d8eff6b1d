// Text front end: ring and polynomial parsing, problem files, and the
// canonical renderers the CLI and tests share.
//
// Problem files look like
//
//   ring Q[x,y,z,w]
//   I = (x*w - y*z, x^2, z^2)
//   m = maximal
//
// Polynomials use integer coefficients with + - * ^ and parentheses;
// multiplication is always explicit. The names s, t0, t1, ... are reserved
// for internal homogenizing and elimination variables and are rejected as
// ring variables.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idealpow/groebner.hpp"

namespace idealpow {

// Grammar: ('Q' | 'F' digits) '[' ident (',' ident)* ']' ['order=' name]
// with name in {lex, degrevlex}. DegRevLex is the default.
Ring parse_ring(std::string_view text);

Poly parse_polynomial(std::string_view text, const Ring& ring);

struct ProblemFile {
  Ring ring;
  std::vector<std::pair<std::string, Ideal>> ideals;  // declaration order

  const Ideal* find(std::string_view name) const;
};

ProblemFile parse_problem_file(std::string_view text);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Poly& f);
// Generators joined in decreasing leading-monomial order: "(x^2, x*y, y^5)".
std::string to_string(const Ideal& ideal);

}  // namespace idealpow

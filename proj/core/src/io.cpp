#include "idealpow/io.hpp"

#include <algorithm>
#include <cctype>

namespace idealpow {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool take(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!take(c)) throw ParseError(Errc::SyntaxError, pos, std::string("expected ") + what);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
    }
    if (start == pos) throw ParseError(Errc::SyntaxError, pos, "expected an identifier");
    return std::string(text.substr(start, pos - start));
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(Errc::SyntaxError, pos, "expected a number");
    return std::string(text.substr(start, pos - start));
  }
};

bool reserved_name(const std::string& name) {
  if (name == "s") return true;
  if (name.size() >= 2 && name[0] == 't' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  return false;
}

std::uint32_t parse_exponent(Cursor& cur) {
  std::size_t at = cur.pos;
  std::string ds = cur.digits();
  if (ds.size() > 9) throw ParseError(Errc::Overflow, at, "exponent out of range");
  unsigned long e = std::stoul(ds);
  if (e == 0) throw ParseError(Errc::SyntaxError, at, "exponents must be positive");
  return static_cast<std::uint32_t>(e);
}

Poly parse_expr(Cursor& cur, const Ring& ring);

Poly parse_atom(Cursor& cur, const Ring& ring) {
  char c = cur.peek();
  if (c == '(') {
    cur.take('(');
    Poly inner = parse_expr(cur, ring);
    cur.expect(')', "')'");
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string ds = cur.digits();
    return Poly::constant(ring, FieldElement::from_integer(ring.field(), mpz_class(ds)));
  }
  std::size_t at = cur.pos;
  std::string name = cur.ident();
  auto index = ring.variable_index(name);
  if (!index)
    throw ParseError(Errc::UnknownVariable, at, "unknown variable '" + name + "'");
  return Poly::variable(ring, *index);
}

Poly parse_factor(Cursor& cur, const Ring& ring) {
  Poly base = parse_atom(cur, ring);
  if (cur.take('^')) return base.pow(parse_exponent(cur));
  return base;
}

Poly parse_term(Cursor& cur, const Ring& ring) {
  Poly acc = parse_factor(cur, ring);
  while (cur.take('*')) acc = acc * parse_factor(cur, ring);
  return acc;
}

Poly parse_expr(Cursor& cur, const Ring& ring) {
  bool negate = cur.take('-');
  Poly acc = parse_term(cur, ring);
  if (negate) acc = acc.negated();
  for (;;) {
    if (cur.take('+')) {
      acc = acc + parse_term(cur, ring);
    } else if (cur.take('-')) {
      acc = acc - parse_term(cur, ring);
    } else {
      return acc;
    }
  }
}

}  // namespace

Ring parse_ring(std::string_view text) {
  Cursor cur{text};
  std::size_t at = cur.pos;
  FieldSpec field = FieldSpec::rationals();
  char c = cur.peek();
  if (c == 'Q') {
    cur.take('Q');
  } else if (c == 'F') {
    cur.take('F');
    std::size_t digits_at = cur.pos;
    std::string ds = cur.digits();
    if (ds.size() > 9) throw ParseError(Errc::Overflow, digits_at, "characteristic out of range");
    unsigned long p = std::stoul(ds);
    if (p > 2147483647ul)
      throw ParseError(Errc::Overflow, digits_at, "characteristic out of range");
    field = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
  } else {
    throw ParseError(Errc::SyntaxError, at, "expected a field (Q or F<p>)");
  }

  cur.expect('[', "'['");
  std::vector<std::string> vars;
  for (;;) {
    std::size_t name_at = cur.pos;
    std::string name = cur.ident();
    if (reserved_name(name))
      throw ParseError(Errc::ReservedVariableName, name_at,
                       "variable name '" + name + "' is reserved");
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      throw ParseError(Errc::SyntaxError, name_at, "duplicate variable '" + name + "'");
    vars.push_back(std::move(name));
    if (cur.take(',')) continue;
    cur.expect(']', "']' or ','");
    break;
  }

  MonomialOrder order = MonomialOrder::degrevlex();
  if (!cur.eof()) {
    std::size_t word_at = cur.pos;
    std::string word = cur.ident();
    cur.expect('=', "'='");
    std::string which = cur.ident();
    if (word != "order")
      throw ParseError(Errc::SyntaxError, word_at, "expected order=<name>");
    if (which == "lex") {
      order = MonomialOrder::lex();
    } else if (which == "degrevlex") {
      order = MonomialOrder::degrevlex();
    } else {
      throw ParseError(Errc::SyntaxError, word_at, "unknown order '" + which + "'");
    }
  }
  if (!cur.eof())
    throw ParseError(Errc::SyntaxError, cur.pos, "unexpected trailing input");
  return Ring(field, std::move(vars), order);
}

Poly parse_polynomial(std::string_view text, const Ring& ring) {
  Cursor cur{text};
  Poly p = parse_expr(cur, ring);
  if (!cur.eof())
    throw ParseError(Errc::SyntaxError, cur.pos, "unexpected trailing input");
  return p;
}

const Ideal* ProblemFile::find(std::string_view name) const {
  for (const auto& [ideal_name, ideal] : ideals)
    if (ideal_name == name) return &ideal;
  return nullptr;
}

namespace {

Ideal parse_ideal_body(Cursor& cur, const Ring& ring) {
  if (cur.peek() != '(') {
    std::size_t at = cur.pos;
    std::string word = cur.ident();
    if (word == "maximal") {
      std::vector<Poly> vars;
      for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(Poly::variable(ring, i));
      return Ideal(ring, std::move(vars));
    }
    throw ParseError(Errc::SyntaxError, at, "expected '(' or 'maximal'");
  }
  cur.expect('(', "'('");
  std::vector<Poly> gens;
  for (;;) {
    gens.push_back(parse_expr(cur, ring));
    if (cur.take(',')) continue;
    cur.expect(')', "')' or ','");
    break;
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;  // content, offset
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) lines.emplace_back(line, start);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty())
    throw ParseError(Errc::SyntaxError, 0, "empty problem file");

  auto rethrow_global = [](const ParseError& e, std::size_t line_offset) {
    throw ParseError(e.code(), line_offset + e.position(), e.what());
  };

  // First line: ring declaration.
  auto [first_line, first_offset] = lines[0];
  Cursor head{first_line};
  std::string keyword;
  try {
    keyword = head.ident();
  } catch (const ParseError& e) {
    rethrow_global(e, first_offset);
  }
  if (keyword != "ring")
    throw ParseError(Errc::SyntaxError, first_offset, "problem files start with a ring line");
  Ring ring = [&] {
    try {
      return parse_ring(first_line.substr(head.pos));
    } catch (const ParseError& e) {
      throw ParseError(e.code(), first_offset + head.pos + e.position(), e.what());
    }
  }();

  ProblemFile file{ring, {}};
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto [line, offset] = lines[li];
    try {
      Cursor cur{line};
      std::size_t name_at = cur.pos;
      std::string name = cur.ident();
      if (name == "ring")
        throw ParseError(Errc::SyntaxError, name_at, "duplicate ring line");
      if (file.find(name))
        throw ParseError(Errc::SyntaxError, name_at, "duplicate ideal '" + name + "'");
      cur.expect('=', "'='");
      Ideal ideal = parse_ideal_body(cur, ring);
      if (!cur.eof())
        throw ParseError(Errc::SyntaxError, cur.pos, "unexpected trailing input");
      file.ideals.emplace_back(std::move(name), std::move(ideal));
    } catch (const ParseError& e) {
      rethrow_global(e, offset);
    }
  }
  return file;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variable_name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = f.ring();
  const bool rationals = ring.field().kind == FieldKind::Rationals;
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = rationals && t.coeff.rat() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    FieldElement magnitude = negative ? t.coeff.negated() : t.coeff;
    if (t.mono.is_one()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += to_string(t.mono, ring);
    }
    first = false;
  }
  return out;
}

std::string to_string(const Ideal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::vector<Poly> gens = ideal.generators();
  const MonomialOrder& ord = ideal.ring().order();
  std::stable_sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += to_string(gens[i]);
  }
  out += ")";
  return out;
}

}  // namespace idealpow

#include "idealpow/poly.hpp"

#include <algorithm>
#include <map>

namespace idealpow {

Ring::Ring(FieldSpec field, std::vector<std::string> variables, MonomialOrder order) {
  if (order.kind == OrderKind::Elimination && order.block > variables.size())
    throw MathError(Errc::LengthMismatch, "elimination block wider than the ring");
  rep_ = std::make_shared<const Rep>(Rep{field, std::move(variables), order});
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  const auto& vars = rep_->variables;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

Ring Ring::with_order(MonomialOrder order) const {
  return Ring(rep_->field, rep_->variables, order);
}

bool Ring::operator==(const Ring& rhs) const {
  if (rep_ == rhs.rep_) return true;
  return rep_->field == rhs.rep_->field && rep_->variables == rhs.rep_->variables &&
         rep_->order == rhs.rep_->order;
}

std::string Ring::to_string() const {
  std::string s = rep_->field.to_string() + "[";
  for (std::size_t i = 0; i < rep_->variables.size(); ++i) {
    if (i) s += ",";
    s += rep_->variables[i];
  }
  s += "] " + rep_->order.to_string();
  return s;
}

Poly Poly::constant(const Ring& ring, const FieldElement& c) {
  if (!(c.spec() == ring.field()))
    throw MathError(Errc::MixedFields, "constant from a different field");
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{c, Monomial(ring.nvars())});
  return p;
}

Poly Poly::from_int(const Ring& ring, long n) {
  return constant(ring, FieldElement::from_integer(ring.field(), n));
}

Poly Poly::variable(const Ring& ring, std::size_t i) {
  Poly p(ring);
  p.terms_.push_back(Term{FieldElement::one(ring.field()), Monomial::variable(ring.nvars(), i)});
  return p;
}

Poly Poly::term(const Ring& ring, const FieldElement& c, const Monomial& m) {
  if (m.nvars() != ring.nvars())
    throw MathError(Errc::LengthMismatch, "monomial from a different ring");
  Poly p = constant(ring, c);
  if (!p.terms_.empty()) p.terms_[0].mono = m;
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring.order();
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return monomial_compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
  });
  Poly p(ring);
  for (auto& t : terms) {
    if (!(t.coeff.spec() == ring.field()))
      throw MathError(Errc::MixedFields, "coefficient from a different field");
    if (t.mono.nvars() != ring.nvars())
      throw MathError(Errc::LengthMismatch, "monomial from a different ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw MathError(Errc::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Poly::total_degree() const {
  if (terms_.empty()) throw MathError(Errc::ZeroPolynomial, "zero polynomial has no degree");
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_[0].mono.total_degree();
  for (const auto& t : terms_)
    if (t.mono.total_degree() != d) return false;
  return true;
}

void Poly::require_same_ring(const Poly& rhs) const {
  if (!(ring_ == rhs.ring_))
    throw MathError(Errc::MixedRings,
                    "operands from different rings: " + ring_.to_string() + " and " +
                        rhs.ring_.to_string());
}

Poly Poly::operator+(const Poly& rhs) const {
  require_same_ring(rhs);
  const MonomialOrder& ord = ring_.order();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    auto cmp = monomial_compare(terms_[i].mono, rhs.terms_[j].mono, ord);
    if (cmp == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      FieldElement c = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back(Term{std::move(c), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + rhs.negated(); }

Poly Poly::negated() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = t.coeff.negated();
  return r;
}

Poly Poly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Poly Poly::times_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono.times(m)});
  return r;
}

Poly Poly::operator*(const Poly& rhs) const {
  require_same_ring(rhs);
  const MonomialOrder& ord = ring_.order();
  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, ord) == std::strong_ordering::greater;
  };
  std::map<Monomial, FieldElement, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Monomial m = a.mono.times(b.mono);
      FieldElement c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  Poly r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back(Term{c, m});
  return r;
}

Poly Poly::monic() const {
  return scaled(leading().coeff.inverse());
}

Poly Poly::pow(std::uint32_t k) const {
  Poly base(*this);
  Poly acc = Poly::from_int(ring_, 1);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

bool Poly::operator==(const Poly& rhs) const {
  if (!(ring_ == rhs.ring_) || terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].coeff == rhs.terms_[i].coeff) || !(terms_[i].mono == rhs.terms_[i].mono))
      return false;
  return true;
}

Poly substitute(const Poly& f, const Ring& target, const std::vector<Poly>& images) {
  if (images.size() != f.ring().nvars())
    throw MathError(Errc::MissingImage, "expected one image per source variable");
  if (!(f.ring().field() == target.field()))
    throw MathError(Errc::MixedFields, "substitution must preserve the coefficient field");
  for (const auto& im : images)
    if (!(im.ring() == target)) throw MathError(Errc::MixedRings, "image outside the target ring");
  Poly result(target);
  for (const auto& t : f.terms()) {
    Poly part = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e) part = part * images[i].pow(e);
    }
    result = result + part;
  }
  return result;
}

Poly transplant(const Poly& f, const Ring& target, const std::vector<std::size_t>& var_map) {
  if (var_map.size() != f.ring().nvars())
    throw MathError(Errc::MissingImage, "expected one target slot per source variable");
  if (!(f.ring().field() == target.field()))
    throw MathError(Errc::MixedFields, "transplant must preserve the coefficient field");
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m(target.nvars());
    std::vector<std::uint32_t> exps(target.nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target.nvars())
        throw MathError(Errc::BadVariableSet, "variable map exceeds the target ring");
      exps[var_map[i]] += t.mono.exponent(i);
    }
    terms.push_back(Term{t.coeff, Monomial(std::move(exps))});
  }
  return Poly::from_terms(target, std::move(terms));
}

}  // namespace idealpow

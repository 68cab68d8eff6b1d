// Rings and polynomials.
//
// A Ring is an immutable value (field, named variables, term order) held
// behind a shared representation so polynomials can carry their ring
// cheaply. A Poly is a strictly descending list of nonzero terms in its
// ring's order; all constructors normalize to that invariant.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealpow/field.hpp"
#include "idealpow/monomial.hpp"

namespace idealpow {

class Ring {
public:
  Ring(FieldSpec field, std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::degrevlex());

  const FieldSpec& field() const noexcept { return rep_->field; }
  std::size_t nvars() const noexcept { return rep_->variables.size(); }
  const std::vector<std::string>& variables() const noexcept { return rep_->variables; }
  const std::string& variable_name(std::size_t i) const { return rep_->variables.at(i); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const MonomialOrder& order() const noexcept { return rep_->order; }

  Ring with_order(MonomialOrder order) const;

  bool operator==(const Ring& rhs) const;
  std::string to_string() const;  // e.g. "Q[x,y,z] degrevlex"

private:
  struct Rep {
    FieldSpec field;
    std::vector<std::string> variables;
    MonomialOrder order;
  };
  std::shared_ptr<const Rep> rep_;
};

struct Term {
  FieldElement coeff;
  Monomial mono;
};

class Poly {
public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}  // zero

  static Poly zero(const Ring& ring) { return Poly(ring); }
  static Poly constant(const Ring& ring, const FieldElement& c);
  static Poly from_int(const Ring& ring, long n);
  static Poly variable(const Ring& ring, std::size_t i);
  static Poly term(const Ring& ring, const FieldElement& c, const Monomial& m);
  // Normalizes: sorts descending, merges equal monomials, drops zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  const Term& leading() const;  // ZeroPolynomial on zero
  const Monomial& leading_monomial() const { return leading().mono; }
  const FieldElement& leading_coefficient() const { return leading().coeff; }
  std::uint64_t total_degree() const;  // max term degree; ZeroPolynomial on zero
  bool is_homogeneous() const;         // zero counts as homogeneous

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly negated() const;
  Poly scaled(const FieldElement& c) const;
  Poly times_term(const FieldElement& c, const Monomial& m) const;
  Poly monic() const;  // ZeroPolynomial on zero
  Poly pow(std::uint32_t k) const;

  bool operator==(const Poly& rhs) const;

private:
  Ring ring_;
  std::vector<Term> terms_;  // strictly descending, no zero coefficients

  void require_same_ring(const Poly& rhs) const;
};

// Ring homomorphism fixing the coefficient field: variable i of f's ring is
// sent to images[i], a polynomial in `target`. images.size() must equal the
// source variable count (MissingImage), and the fields must agree
// (MixedFields).
Poly substitute(const Poly& f, const Ring& target, const std::vector<Poly>& images);

// Exponent-preserving injection of f into `target`: source variable i
// becomes target variable var_map[i]. Cheaper than substitute and exact for
// ring extensions and permutations.
Poly transplant(const Poly& f, const Ring& target, const std::vector<std::size_t>& var_map);

}  // namespace idealpow

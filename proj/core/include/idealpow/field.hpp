// Exact coefficient arithmetic: the rationals, or a prime field F_p.
//
// FieldElement is a self-describing value: every element knows its field,
// and mixing elements from different fields raises MixedFields. Rationals
// are kept in lowest terms with positive denominator; prime-field values
// are residues in [0, p).

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "idealpow/errors.hpp"

namespace idealpow {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;  // 0 for the rationals, p otherwise

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  // p must be prime; raises NonPrimeCharacteristic otherwise.
  static FieldSpec prime_field(std::uint32_t p);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  std::string to_string() const;
};

class FieldElement {
public:
  FieldElement() : spec_(FieldSpec::rationals()) {}  // 0 in Q

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement from_integer(const FieldSpec& spec, const mpz_class& n);
  static FieldElement from_integer(const FieldSpec& spec, long n);
  // Rationals only; canonicalizes. Raises DivisionByZero when den = 0.
  static FieldElement rational(const mpz_class& num, const mpz_class& den);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;  // DivisionByZero
  FieldElement negated() const;
  FieldElement inverse() const;  // DivisionByZero

  bool operator==(const FieldElement& rhs) const;

  // Lowest-terms "n" or "n/d" over Q; canonical residue over F_p.
  std::string to_string() const;

  const mpq_class& rat() const { return rat_; }
  std::uint64_t residue() const { return res_; }

private:
  FieldSpec spec_;
  mpq_class rat_;          // used when kind == Rationals
  std::uint64_t res_ = 0;  // used when kind == PrimeField

  void require_same_field(const FieldElement& rhs) const;
};

}  // namespace idealpow

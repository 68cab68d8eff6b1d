#include "idealpow/field.hpp"

namespace idealpow {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Inverse of a mod p via extended Euclid; a in [1, p).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p))
    throw ParseError(Errc::NonPrimeCharacteristic, 0,
                     "characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(characteristic);
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
  FieldElement e;
  e.spec_ = spec;
  return e;
}

FieldElement FieldElement::one(const FieldSpec& spec) {
  return from_integer(spec, 1);
}

FieldElement FieldElement::from_integer(const FieldSpec& spec, const mpz_class& n) {
  FieldElement e;
  e.spec_ = spec;
  if (spec.kind == FieldKind::Rationals) {
    e.rat_ = mpq_class(n);
  } else {
    mpz_class r = n % spec.characteristic;
    if (r < 0) r += spec.characteristic;
    e.res_ = r.get_ui();
  }
  return e;
}

FieldElement FieldElement::from_integer(const FieldSpec& spec, long n) {
  return from_integer(spec, mpz_class(n));
}

FieldElement FieldElement::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw MathError(Errc::DivisionByZero, "rational with zero denominator");
  FieldElement e;
  e.spec_ = FieldSpec::rationals();
  e.rat_ = mpq_class(num, den);
  e.rat_.canonicalize();
  return e;
}

bool FieldElement::is_zero() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(spec_ == rhs.spec_))
    throw MathError(Errc::MixedFields, "operands from different fields: " +
                                           spec_.to_string() + " and " + rhs.spec_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  FieldElement r;
  r.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals) {
    r.rat_ = rat_ + rhs.rat_;
  } else {
    std::uint64_t s = res_ + rhs.res_;
    if (s >= spec_.characteristic) s -= spec_.characteristic;
    r.res_ = s;
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return *this + rhs.negated();
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  FieldElement r;
  r.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals) {
    r.rat_ = rat_ * rhs.rat_;
  } else {
    // p < 2^32, so the product fits in 64 bits.
    r.res_ = (res_ * rhs.res_) % spec_.characteristic;
  }
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return *this * rhs.inverse();
}

FieldElement FieldElement::negated() const {
  FieldElement r;
  r.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals) {
    r.rat_ = -rat_;
  } else {
    r.res_ = res_ == 0 ? 0 : spec_.characteristic - res_;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw MathError(Errc::DivisionByZero, "inverse of zero");
  FieldElement r;
  r.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals) {
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = mod_inverse(res_, spec_.characteristic);
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  if (!(spec_ == rhs.spec_)) return false;
  return spec_.kind == FieldKind::Rationals ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string FieldElement::to_string() const {
  if (spec_.kind == FieldKind::Rationals) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace idealpow

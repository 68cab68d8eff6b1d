// Monomials as dense exponent vectors, plus the three term orders used
// throughout: Lex, DegRevLex, and a block elimination order (first block
// eliminated, DegRevLex within each block).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idealpow/errors.hpp"

namespace idealpow {

class Monomial {
public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t total_degree() const;
  bool is_one() const;

  Monomial times(const Monomial& rhs) const;  // Overflow on exponent wrap
  bool divides(const Monomial& rhs) const;
  Monomial divided_by(const Monomial& rhs) const;  // rhs must divide *this

  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint32_t> exps_;

  void require_same_length(const Monomial& rhs) const;
};

enum class OrderKind { Lex, DegRevLex, Elimination };

struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block = 0;  // Elimination only: size of the leading (eliminated) block

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {OrderKind::Elimination, block}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  std::string to_string() const;
};

// Total order on monomials of equal length; LengthMismatch otherwise.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order);

}  // namespace idealpow

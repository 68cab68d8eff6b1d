// Ideals, Buchberger's algorithm, normal forms, initial ideals.
//
// Every Ideal owns a write-once cache of its reduced Groebner basis,
// shared across copies; computing the basis through one copy makes it
// visible to all. The reduced basis is canonical (monic, inter-reduced,
// sorted by decreasing leading monomial), so recomputation is
// reproducible bit for bit.

#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "idealpow/poly.hpp"

namespace idealpow {

class Ideal {
public:
  // Zero generators are dropped; generators must share `ring`.
  Ideal(Ring ring, std::vector<Poly> generators);

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Poly::from_int(ring, 1)}); }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  // Reduced Groebner basis in the ring's order; cached, thread-safe.
  const std::vector<Poly>& groebner_basis() const;

  bool contains(const Poly& f) const;
  bool contains_one() const;

private:
  Ring ring_;
  std::vector<Poly> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };
  std::shared_ptr<Cache> cache_;
};

// Reduced Groebner basis of the span of `gens` (normal selection strategy,
// coprime and chain criteria). Standalone entry point; Ideal wraps it.
std::vector<Poly> buchberger(const Ring& ring, const std::vector<Poly>& gens);

// Remainder of f on division by `basis` (every term of the result is
// irreducible). Deterministic: divisors are tried in basis order.
Poly normal_form(const Poly& f, std::span<const Poly> basis);
Poly normal_form(const Poly& f, const Ideal& ideal);

class MonomialIdeal {
public:
  // Minimalizes: divisible generators are dropped, duplicates collapse.
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const noexcept { return ring_; }
  // Sorted decreasing in the ring's order; empty for the zero ideal.
  const std::vector<Monomial>& minimal_generators() const noexcept { return min_gens_; }
  bool is_zero() const noexcept { return min_gens_.empty(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& rhs) const;

private:
  Ring ring_;
  std::vector<Monomial> min_gens_;
};

// Ideal of leading monomials. ZeroIdeal on the zero ideal.
MonomialIdeal initial_ideal(const Ideal& ideal);

// Mutual containment via normal forms. MixedRings if the rings differ.
bool equal_ideals(const Ideal& a, const Ideal& b);

// The generators viewed as monomials, when every generator has one term.
// Returns nothing otherwise.
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal);

bool is_monomial_ideal(const Ideal& ideal);

}  // namespace idealpow

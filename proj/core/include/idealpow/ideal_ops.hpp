// Ideal calculus: powers, intersections, colons, saturations, variable
// elimination.
//
// Saturation follows the classical aux-variable route (adjoin t, eliminate
// it from I + (1 - t f)); intersections eliminate t from t I + (1 - t) J.
// Auxiliary variables live in internal scratch rings with a block
// elimination order; results always come back in the caller's ring. Ideals
// of monomials take exponent-arithmetic shortcuts, and every shortcut has a
// generic counterpart exercised against it in the tests.

#pragma once

#include <cstdint>
#include <vector>

#include "idealpow/groebner.hpp"

namespace idealpow {

// I^k; k = 0 gives the unit ideal. Generators are all k-fold products of
// the given generators (multisets, no dedup beyond zero dropping).
Ideal power(const Ideal& ideal, std::uint32_t k);

Ideal intersect(const Ideal& a, const Ideal& b);

// I : f. A zero f raises ZeroDivisor.
Ideal colon(const Ideal& ideal, const Poly& f);

// I : J, as the intersection of the one-generator colons. ZeroIdeal when J
// is zero.
Ideal colon(const Ideal& ideal, const Ideal& by);

// I : f^inf. A zero f raises ZeroDivisor.
Ideal saturate(const Ideal& ideal, const Poly& f);

// I : J^inf = the intersection of I : g^inf over generators g of J.
// ZeroIdeal when J is zero; UnitIdeal when J is visibly improper.
Ideal saturate(const Ideal& ideal, const Ideal& by);

// Same value as saturate(I, J), computed as the stabilizing colon chain
// I : J : J : ... Kept as an independent route for cross-checking.
Ideal saturate_by_colon_chain(const Ideal& ideal, const Ideal& by);

// I ∩ K[remaining variables], returned in the smaller ring. `vars` must be
// a nonempty proper subset of the variable indices (BadVariableSet).
Ideal eliminate(const Ideal& ideal, std::vector<std::size_t> vars);

// Same ideal, inclusion-minimal generating set: every generator lying in
// the ideal of the others is dropped (largest leading monomials first).
// For homogeneous input the survivors form a minimal generating set.
Ideal drop_redundant_generators(const Ideal& ideal);

}  // namespace idealpow

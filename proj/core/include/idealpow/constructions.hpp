// The constructions this library exists for: generalized symbolic powers
// I^k : J^inf, saturated powers, ideals of leading forms via the
// homogenizing sharp map, Rees algebra presentations, analytic spread, and
// the finite-generation probes and growth tables built on top of them.
//
// Probe and table rows for independent k values may be computed in
// parallel; IDEALPOW_THREADS caps the worker count. Results are assembled
// in k order, so output is deterministic either way.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "idealpow/ideal_ops.hpp"
#include "idealpow/invariants.hpp"

namespace idealpow {

// All pairwise generator products.
Ideal multiply(const Ideal& a, const Ideal& b);

// I^k : J^inf.
Ideal symbolic_power(const Ideal& ideal, const Ideal& by, std::uint32_t k);

// I^k : m^inf, with m the ideal of the ring's variables.
Ideal saturated_power(const Ideal& ideal, std::uint32_t k);

// The homogeneous component of least degree. ZeroPolynomial on zero.
Poly leading_form(const Poly& f);

// The ring with one fresh homogenizing variable "s" appended after the
// existing variables. BadVariableSet if the name is taken.
Ring sharp_extension(const Ring& ring);

// f with each component pushed to its s-weight: a term of degree d picks
// up s^(d - ord f), so the least-degree part survives at s = 0.
// `extended` must be sharp_extension(f.ring()).
Poly sharp_map(const Poly& f, const Ring& extended);

// I-sharp = (sharp images of the generators) : s^inf, inside the extended
// ring. Generators must vanish at the origin (UnitIdeal otherwise);
// ZeroIdeal on the zero ideal. Output generators are monic.
Ideal sharp_ideal(const Ideal& ideal);

// The ideal of leading forms I* in the original ring, read off from
// sharp_ideal by setting s = 0. Output generators are monic.
Ideal form_ideal(const Ideal& ideal);

// Defining ideal of the Rees algebra R[It]: the kernel of
// K[x, y1..ym] -> R[t], y_i -> t f_i, with one fiber variable per
// generator. The fiber variables are named y1..ym (prefixed with extra
// 'y's on collision). ZeroIdeal on the zero ideal.
Ideal rees_presentation(const Ideal& ideal);

// Analytic spread: the dimension of the special fiber, computed from the
// Rees presentation with the base variables sent to zero.
std::size_t analytic_spread(const Ideal& ideal);

struct ProbeRow {
  std::uint32_t k = 0;
  bool pass = false;
  std::optional<Poly> witness;  // a generator of the larger side, on failure
};

struct ProbeReport {
  std::vector<ProbeRow> rows;            // k = 2 .. kmax
  std::optional<std::uint32_t> fail_at;  // least failing k; empty = all pass
};

// Compares (I^d : J^inf)^k with I^(dk) : J^inf for k = 2..kmax. Witnesses
// come from the symbolic side.
ProbeReport veronese_probe(const Ideal& ideal, const Ideal& by, std::uint32_t d,
                           std::uint32_t kmax);

// Compares (I^k)* with sum of (I^a)* (I^(k-a))*, k = 2..kmax: a failing k
// exhibits a fresh degree-k generator of the form algebra, delivered as the
// witness.
ProbeReport form_algebra_probe(const Ideal& ideal, std::uint32_t kmax);

struct GrowthRow {
  std::uint32_t k = 0;
  std::uint64_t length = 0;
  mpq_class ratio;  // length / k^e, exact
};

struct GrowthTable {
  std::string subject;
  std::uint32_t exponent = 0;
  std::vector<GrowthRow> rows;  // k = 1 .. kmax
};

// Lengths lambda((I^k : J^inf) / I^k) for k = 1..kmax with ratios against
// k^e. Raises InfiniteLengthError at the least k with an infinite row.
GrowthTable growth_table(const Ideal& ideal, const Ideal& by, std::uint32_t e,
                         std::uint32_t kmax);

}  // namespace idealpow

// Numerical invariants: standard monomial counts, Hilbert series of
// monomial quotients, Krull dimension, colengths, quotient lengths,
// minimal generator degrees.
//
// Possibly-infinite counts are std::optional<std::uint64_t>, where nullopt
// means infinite.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "idealpow/groebner.hpp"

namespace idealpow {

// Number of monomials outside M; nullopt when infinite (some variable has
// no pure power in M).
std::optional<std::uint64_t> std_monomial_count(const MonomialIdeal& m);

struct HilbertData {
  std::vector<mpz_class> numerator;  // numerator[i] is the coefficient of t^i
  std::size_t ambient_dim = 0;       // n: series = numerator / (1-t)^n
  std::size_t dimension = 0;         // pole order after cancellation
  mpz_class multiplicity;            // reduced numerator at t = 1

  std::string numerator_string() const;  // "1 - t^2 - t^3 + t^5"
};

// Hilbert series of R/M by pivot recursion
//   N(M) = N(M + (x)) + t * N(M : x),
// with coprime-generator and empty/unit base cases.
HilbertData hilbert_series(const MonomialIdeal& m);

// dim R/I via the initial ideal: n minus a minimum vertex cover of the
// supports of its minimal generators. UnitIdeal on the improper ideal.
std::size_t krull_dimension(const Ideal& ideal);

// The length of R/I when ini(I) is primary to the irrelevant maximal
// ideal; NotMPrimary otherwise.
std::uint64_t local_colength(const Ideal& ideal);

// The length of outer/inner as a module, by slicewise comparison of the
// two initial ideals; nullopt when infinite. NotContained unless
// inner is contained in outer.
std::optional<std::uint64_t> quotient_length(const Ideal& inner, const Ideal& outer);

// Degrees of a minimal homogeneous generating set, as a sorted multiset.
// Every supplied generator must be homogeneous (NotHomogeneous).
std::vector<std::uint64_t> generator_degrees(const Ideal& ideal);

}  // namespace idealpow

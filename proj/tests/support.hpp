// Shared helpers for the test binaries: standard rings, parsing shortcuts,
// data file access, and the seeded random generators used by the property
// suites.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "idealpow/groebner.hpp"
#include "idealpow/io.hpp"

#ifndef IDEALPOW_DATA_DIR
#define IDEALPOW_DATA_DIR "."
#endif

namespace testsupport {

using namespace idealpow;

inline std::string data_file(const std::string& name) {
  return std::string(IDEALPOW_DATA_DIR) + "/" + name;
}

inline Ring qring(const std::string& text) { return parse_ring(text); }

inline Poly pp(const Ring& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline Ideal ii(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Poly> polys;
  polys.reserve(gens.size());
  for (const std::string& g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(polys));
}

inline Ideal maximal(const Ring& ring) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

// Random polynomial with terms of total degree in [1, maxdeg] and small
// integer coefficients; may not be the zero polynomial.
inline Poly random_poly(std::mt19937& rng, const Ring& ring, std::uint32_t maxdeg,
                        std::size_t max_terms) {
  std::uniform_int_distribution<std::uint32_t> deg_dist(1, maxdeg);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  std::uniform_int_distribution<std::size_t> nterms_dist(1, max_terms);
  std::uniform_int_distribution<std::size_t> var_dist(0, ring.nvars() - 1);

  std::vector<Term> terms;
  std::size_t want = nterms_dist(rng);
  for (std::size_t t = 0; t < want; ++t) {
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    Monomial m(ring.nvars());
    std::uint32_t degree = deg_dist(rng);
    for (std::uint32_t step = 0; step < degree; ++step) {
      m = m.times(Monomial::variable(ring.nvars(), var_dist(rng)));
    }
    terms.push_back(Term{FieldElement::from_integer(ring.field(), c), m});
  }
  Poly f = Poly::from_terms(ring, std::move(terms));
  if (f.is_zero()) return Poly::variable(ring, 0);
  return f;
}

inline Ideal random_ideal(std::mt19937& rng, const Ring& ring, std::size_t max_gens,
                          std::uint32_t maxdeg) {
  std::uniform_int_distribution<std::size_t> ngens_dist(1, max_gens);
  std::vector<Poly> gens;
  std::size_t want = ngens_dist(rng);
  for (std::size_t i = 0; i < want; ++i) {
    gens.push_back(random_poly(rng, ring, maxdeg, 3));
  }
  return Ideal(ring, std::move(gens));
}

// All monomials in nvars variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

// Exact K-linear span of polynomials, independent of the Groebner code
// paths: membership is settled by scalar elimination on leading monomials
// alone, never by monomial multiples.
class LinearSpan {
public:
  void add(Poly f) {
    f = reduce(std::move(f));
    if (!f.is_zero()) basis_.push_back(std::move(f));
  }

  Poly reduce(Poly f) const {
    bool changed = true;
    while (!f.is_zero() && changed) {
      changed = false;
      for (const Poly& b : basis_) {
        if (b.leading_monomial() == f.leading_monomial()) {
          f = f - b.scaled(f.leading_coefficient() / b.leading_coefficient());
          changed = true;
          break;
        }
      }
    }
    return f;
  }

  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  std::size_t dimension() const { return basis_.size(); }

private:
  std::vector<Poly> basis_;  // pairwise distinct leading monomials
};

// Degree-d slice of a homogeneous ideal, spanned by monomial multiples of
// the original generators.
inline LinearSpan homogeneous_slice(const Ideal& ideal, std::uint32_t d) {
  LinearSpan span;
  const Ring& ring = ideal.ring();
  FieldElement one = FieldElement::one(ring.field());
  for (const Poly& g : ideal.generators()) {
    std::uint64_t gd = g.total_degree();
    if (gd > d) continue;
    for (const Monomial& u : monomials_of_degree(ring.nvars(), d - (std::uint32_t)gd)) {
      span.add(g.times_term(one, u));
    }
  }
  return span;
}

// Membership by brute linear algebra. Homogeneous f: exact. Otherwise the
// span runs over all multiplier monomials with deg(g*u) <= bound, so a
// `true` is always sound and `false` is sound once bound is generous.
inline bool oracle_member(const Ideal& ideal, const Poly& f, std::uint32_t bound) {
  if (f.is_zero()) return true;
  const Ring& ring = ideal.ring();
  FieldElement one = FieldElement::one(ring.field());
  if (f.is_homogeneous()) {
    bool homogeneous_ideal = true;
    for (const Poly& g : ideal.generators()) {
      if (!g.is_homogeneous()) homogeneous_ideal = false;
    }
    if (homogeneous_ideal) {
      return homogeneous_slice(ideal, (std::uint32_t)f.total_degree()).contains(f);
    }
  }
  LinearSpan span;
  for (const Poly& g : ideal.generators()) {
    std::uint64_t gd = g.total_degree();
    if (gd > bound) continue;
    for (std::uint32_t d = 0; d + (std::uint32_t)gd <= bound; ++d) {
      for (const Monomial& u : monomials_of_degree(ring.nvars(), d)) {
        span.add(g.times_term(one, u));
      }
    }
  }
  return span.contains(f);
}

}  // namespace testsupport

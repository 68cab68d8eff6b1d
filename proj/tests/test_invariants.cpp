// Numerical invariants, checked against worked values, brute staircase
// enumeration, and a power-series expansion oracle for Hilbert data.

#include <doctest.h>

#include <random>

#include "idealpow/ideal_ops.hpp"
#include "idealpow/invariants.hpp"
#include "support.hpp"

using namespace idealpow;
using namespace testsupport;

namespace {

MonomialIdeal mono_ideal(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const std::string& g : gens) ms.push_back(pp(ring, g).leading_monomial());
  return MonomialIdeal(ring, std::move(ms));
}

MonomialIdeal random_monomial_ideal(std::mt19937& rng, const Ring& ring, std::size_t max_gens,
                                    std::uint32_t maxexp) {
  std::uniform_int_distribution<std::size_t> ngens(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> exp(0, maxexp);
  std::vector<Monomial> gens;
  std::size_t want = ngens(rng);
  while (gens.size() < want) {
    std::vector<std::uint32_t> e(ring.nvars());
    std::uint32_t total = 0;
    for (auto& v : e) total += (v = exp(rng));
    if (total == 0) continue;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

// Coefficients of numerator / (1-t)^ambient up to degree D.
std::vector<mpz_class> expand_series(const HilbertData& h, std::size_t D) {
  std::vector<mpz_class> c(D + 1, 0);
  for (std::size_t i = 0; i < h.numerator.size() && i <= D; ++i) c[i] = h.numerator[i];
  for (std::size_t rep = 0; rep < h.ambient_dim; ++rep) {
    for (std::size_t d = 1; d <= D; ++d) c[d] += c[d - 1];
  }
  return c;
}

std::uint64_t standard_count_in_degree(const MonomialIdeal& m, std::uint32_t d) {
  std::uint64_t out = 0;
  for (const Monomial& mono : monomials_of_degree(m.ring().nvars(), d)) {
    if (!m.contains(mono)) ++out;
  }
  return out;
}

}  // namespace

TEST_CASE("standard monomial counts") {
  Ring R = qring("Q[x,y]");
  CHECK(std_monomial_count(mono_ideal(R, {"x^2", "y^3"})) == 6);
  CHECK(std_monomial_count(mono_ideal(R, {"x", "y"})) == 1);
  CHECK(std_monomial_count(mono_ideal(R, {"x^2"})) == std::nullopt);
  CHECK(std_monomial_count(mono_ideal(R, {"1"})) == 0);
}

TEST_CASE("standard monomial counts agree with brute enumeration") {
  std::mt19937 rng(313370);
  for (int trial = 0; trial < 40; ++trial) {
    Ring R = qring(trial % 2 == 0 ? "Q[x,y]" : "Q[x,y,z]");
    MonomialIdeal M = random_monomial_ideal(rng, R, 4, 4);
    // With exponents <= 4 in <= 3 variables every standard monomial has
    // degree < 12, and infiniteness shows as a standard pure 12th power.
    std::uint64_t seen = 0;
    bool infinite = false;
    for (std::uint32_t d = 0; d <= 12; ++d) seen += standard_count_in_degree(M, d);
    for (std::size_t i = 0; i < R.nvars(); ++i) {
      if (!M.contains(Monomial::variable(R.nvars(), i, 12))) infinite = true;
    }
    auto got = std_monomial_count(M);
    if (infinite) {
      CHECK(got == std::nullopt);
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == seen);
    }
  }
}

TEST_CASE("Hilbert data of a monomial complete intersection") {
  Ring R = qring("Q[x,y]");
  HilbertData h = hilbert_series(mono_ideal(R, {"x^2", "y^3"}));
  CHECK(h.numerator_string() == "1 - t^2 - t^3 + t^5");
  CHECK(h.ambient_dim == 2);
  CHECK(h.dimension == 0);
  CHECK(h.multiplicity == 6);
}

TEST_CASE("Hilbert data of the zero ideal and the coordinate axes") {
  Ring R3 = qring("Q[x,y,z]");
  HilbertData zero = hilbert_series(MonomialIdeal(R3, {}));
  CHECK(zero.numerator_string() == "1");
  CHECK(zero.dimension == 3);
  CHECK(zero.multiplicity == 1);

  HilbertData axes = hilbert_series(mono_ideal(R3, {"x*y", "x*z", "y*z"}));
  CHECK(axes.dimension == 1);
  CHECK(axes.multiplicity == 3);
}

TEST_CASE("Hilbert series expands to the staircase counts") {
  std::mt19937 rng(99173);
  for (int trial = 0; trial < 20; ++trial) {
    Ring R = qring(trial % 2 == 0 ? "Q[x,y]" : "Q[x,y,z]");
    MonomialIdeal M = random_monomial_ideal(rng, R, 4, 3);
    HilbertData h = hilbert_series(M);
    std::vector<mpz_class> series = expand_series(h, 10);
    for (std::uint32_t d = 0; d <= 10; ++d) {
      CHECK(series[d] == standard_count_in_degree(M, d));
    }
  }
}

TEST_CASE("complete intersection multiplicity is the product of the degrees") {
  std::mt19937 rng(40427);
  std::uniform_int_distribution<std::uint32_t> exp(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Ring R = qring("Q[x,y,z]");
    std::uint32_t a = exp(rng), b = exp(rng), c = exp(rng);
    std::vector<Monomial> gens = {Monomial::variable(3, 0, a), Monomial::variable(3, 1, b),
                                  Monomial::variable(3, 2, c)};
    HilbertData h = hilbert_series(MonomialIdeal(R, std::move(gens)));
    CHECK(h.dimension == 0);
    CHECK(h.multiplicity == mpz_class(a) * b * c);
  }
}

TEST_CASE("Krull dimension") {
  Ring R2 = qring("Q[x,y]");
  Ring R3 = qring("Q[x,y,z]");
  CHECK(krull_dimension(ii(R2, {"x^2", "y^3"})) == 0);
  CHECK(krull_dimension(maximal(R2)) == 0);
  CHECK(krull_dimension(Ideal::zero(R3)) == 3);
  CHECK(krull_dimension(ii(R3, {"x*y", "x*z", "y*z"})) == 1);
  CHECK(krull_dimension(ii(R2, {"x^2 - y"})) == 1);
  CHECK_THROWS_AS(krull_dimension(Ideal::unit(R2)), MathError);
}

TEST_CASE("local colength") {
  Ring R2 = qring("Q[x,y]");
  Ring R3 = qring("Q[x,y,z]");
  CHECK(local_colength(ii(R2, {"x^2", "y^3"})) == 6);
  CHECK(local_colength(ii(R3, {"x^3", "y^3", "z^2"})) == 18);
  CHECK(local_colength(maximal(R2)) == 1);
  CHECK(local_colength(ii(R2, {"x - y", "y^2"})) == 2);
  CHECK_THROWS_AS(local_colength(ii(R2, {"x"})), MathError);
}

TEST_CASE("quotient lengths") {
  Ring R = qring("Q[x,y]");
  Ideal I = ii(R, {"x^2", "y^3 - x*y"});
  // I is primary to the irrelevant ideal, so its saturation is the whole
  // ring and the quotient is all of R/I.
  Ideal Itilde = saturate(I, maximal(R));
  CHECK(quotient_length(I, Itilde) == 6);
  CHECK(quotient_length(ii(R, {"x^2", "x*y"}), ii(R, {"x"})) == 1);
  CHECK(quotient_length(I, I) == 0);
  CHECK(quotient_length(ii(R, {"x^3", "y^3"}), ii(R, {"x", "y^2"})) == 7);
  // Finiteness is not decided by any single degree slice.
  CHECK(quotient_length(ii(R, {"x^2", "y^2"}), ii(R, {"x", "y"})) == 3);
  CHECK(quotient_length(ii(R, {"x*y"}), ii(R, {"x"})) == std::nullopt);
  CHECK_THROWS_AS(quotient_length(ii(R, {"x"}), ii(R, {"y"})), MathError);
}

TEST_CASE("quotient length is additive along chains") {
  std::mt19937 rng(808011);
  std::uniform_int_distribution<std::uint32_t> exp(0, 4);
  Ring R = qring("Q[x,y]");
  for (int trial = 0; trial < 15; ++trial) {
    auto random_extra = [&] {
      std::vector<std::uint32_t> e = {exp(rng), exp(rng)};
      if (e[0] + e[1] == 0) e[0] = 1;
      return Poly::term(R, FieldElement::one(R.field()), Monomial(e));
    };
    std::vector<Poly> base = {pp(R, "x^5"), pp(R, "y^5")};
    std::vector<Poly> mid = base;
    mid.push_back(random_extra());
    std::vector<Poly> top = mid;
    top.push_back(random_extra());
    Ideal A(R, std::move(base));
    Ideal B(R, std::move(mid));
    Ideal C(R, std::move(top));
    auto ab = quotient_length(A, B);
    auto bc = quotient_length(B, C);
    auto ac = quotient_length(A, C);
    REQUIRE(ab.has_value());
    REQUIRE(bc.has_value());
    REQUIRE(ac.has_value());
    CHECK(*ac == *ab + *bc);
    CHECK(*ab == local_colength(A) - local_colength(B));
  }
}

TEST_CASE("minimal generator degrees") {
  Ring R2 = qring("Q[x,y]");
  Ring R3 = qring("Q[x,y,z]");
  using degs = std::vector<std::uint64_t>;
  CHECK(generator_degrees(ii(R2, {"x^2", "x*y", "y^2"})) == degs{2, 2, 2});
  CHECK(generator_degrees(ii(R2, {"x^2", "x*y", "y^5"})) == degs{2, 2, 5});
  CHECK(generator_degrees(ii(R3, {"x*y", "x*z", "y*z"})) == degs{2, 2, 2});
  CHECK(generator_degrees(maximal(R2)) == degs{1, 1});
  // Redundant generators do not inflate the answer.
  CHECK(generator_degrees(ii(R2, {"x^2", "x*y", "y^2", "x^2 + x*y"})) == degs{2, 2, 2});
  CHECK(generator_degrees(ii(R2, {"x^2", "x^3"})) == degs{2});
  CHECK_THROWS_AS(generator_degrees(ii(R2, {"x + x^2"})), MathError);
}

// Groebner engine: worked bases, normal forms, initial ideals, and the
// invariant suite on random ideals. Membership answers are cross-checked
// against a pure linear-algebra oracle that never multiplies by monomials
// inside the Groebner code paths.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "idealpow/groebner.hpp"
#include "support.hpp"

using namespace idealpow;
using namespace testsupport;

TEST_CASE("lex basis of (x^2, y^3 - x*y)") {
  Ring R = qring("Q[x,y] order=lex");
  Ideal I = ii(R, {"x^2", "y^3 - x*y"});
  const std::vector<Poly>& gb = I.groebner_basis();
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == pp(R, "x^2"));
  CHECK(gb[1] == pp(R, "x*y - y^3"));
  CHECK(gb[2] == pp(R, "y^5"));
}

TEST_CASE("linear generators reduce to the variables") {
  Ring R = qring("Q[x,y]");
  Ideal I = ii(R, {"x + y", "x - y"});
  const std::vector<Poly>& gb = I.groebner_basis();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == pp(R, "x"));
  CHECK(gb[1] == pp(R, "y"));
}

TEST_CASE("a principal ideal is its own reduced basis, made monic") {
  Ring R = qring("Q[x,y]");
  Ideal I = ii(R, {"2*x^2 - 4*y"});
  REQUIRE(I.groebner_basis().size() == 1);
  CHECK(I.groebner_basis()[0] == pp(R, "x^2 - 2*y"));
}

TEST_CASE("normal forms against the lex basis") {
  Ring R = qring("Q[x,y] order=lex");
  Ideal I = ii(R, {"x^2", "y^3 - x*y"});
  CHECK(normal_form(pp(R, "y^5"), I).is_zero());
  CHECK(normal_form(pp(R, "y^4"), I) == pp(R, "y^4"));
  CHECK(normal_form(pp(R, "x^2*y + y"), I) == pp(R, "y"));
  CHECK(I.contains(pp(R, "y^5")));
  CHECK(!I.contains(pp(R, "y^4")));
  CHECK(!I.contains_one());
  CHECK(Ideal::unit(R).contains_one());
  CHECK(Ideal::zero(R).contains(Poly::zero(R)));
  CHECK(!Ideal::zero(R).contains(pp(R, "x")));
}

TEST_CASE("initial ideal of the lex example") {
  Ring R = qring("Q[x,y] order=lex");
  Ideal I = ii(R, {"x^2", "y^3 - x*y"});
  MonomialIdeal ini = initial_ideal(I);
  MonomialIdeal want(R, {pp(R, "x^2").leading_monomial(), pp(R, "x*y").leading_monomial(),
                         pp(R, "y^5").leading_monomial()});
  CHECK(ini == want);
  CHECK(ini.contains(pp(R, "x^2*y^7").leading_monomial()));
  CHECK(!ini.contains(pp(R, "y^4").leading_monomial()));
  CHECK_THROWS_AS(initial_ideal(Ideal::zero(R)), MathError);
}

TEST_CASE("monomial ideal minimalization") {
  Ring R = qring("Q[x,y]");
  MonomialIdeal M(R, {pp(R, "x^2").leading_monomial(), pp(R, "x^3").leading_monomial(),
                      pp(R, "x^2").leading_monomial(), pp(R, "y").leading_monomial()});
  REQUIRE(M.minimal_generators().size() == 2);
  CHECK(M == MonomialIdeal(R, {pp(R, "x^2").leading_monomial(), pp(R, "y").leading_monomial()}));
}

TEST_CASE("equal_ideals by mutual containment") {
  Ring R = qring("Q[x,y]");
  CHECK(equal_ideals(ii(R, {"x + y", "x - y"}), ii(R, {"x", "y"})));
  CHECK(!equal_ideals(ii(R, {"x"}), ii(R, {"x^2"})));
  Ring S = qring("Q[x,y,z]");
  CHECK_THROWS_AS(equal_ideals(ii(R, {"x"}), ii(S, {"x"})), MathError);
}

TEST_CASE("monomial ideal detection") {
  Ring R = qring("Q[x,y]");
  CHECK(is_monomial_ideal(ii(R, {"x^2", "3*y"})));
  CHECK(!is_monomial_ideal(ii(R, {"x^2 + y"})));
  CHECK(as_monomial_ideal(ii(R, {"x^2 + y"})) == std::nullopt);
  auto M = as_monomial_ideal(ii(R, {"x^2", "x^3"}));
  REQUIRE(M.has_value());
  CHECK(M->minimal_generators().size() == 1);
}

TEST_CASE("degreewise ranks match the initial ideal") {
  // For a homogeneous ideal the number of standard monomials in each degree
  // is determined by the initial ideal; compare against brute spans of the
  // original generators.
  Ring R = qring("Q[x,y,z,w]");
  Ideal I = ii(R, {"x*w - y*z", "x^2", "z^2"});
  MonomialIdeal ini = initial_ideal(I);
  for (std::uint32_t d = 1; d <= 6; ++d) {
    std::size_t staircase = 0;
    for (const Monomial& m : monomials_of_degree(4, d)) {
      if (ini.contains(m)) ++staircase;
    }
    CHECK(homogeneous_slice(I, d).dimension() == staircase);
  }
}

namespace {

// Every monomial up to maxdeg: Ideal::contains must agree with the linear
// oracle built from multiplier degree `bound`.
void check_membership(const Ideal& ideal, std::uint32_t maxdeg, std::uint32_t bound) {
  const Ring& ring = ideal.ring();
  FieldElement one = FieldElement::one(ring.field());
  bool homogeneous = true;
  for (const Poly& g : ideal.generators()) {
    if (!g.is_homogeneous()) homogeneous = false;
  }
  if (homogeneous) {
    for (std::uint32_t d = 0; d <= maxdeg; ++d) {
      LinearSpan span = homogeneous_slice(ideal, d);
      for (const Monomial& m : monomials_of_degree(ring.nvars(), d)) {
        CHECK(ideal.contains(Poly::term(ring, one, m)) == span.contains(Poly::term(ring, one, m)));
      }
    }
    return;
  }
  LinearSpan span;
  for (const Poly& g : ideal.generators()) {
    for (std::uint32_t d = 0; d <= bound; ++d) {
      if (g.total_degree() + d > bound) continue;
      for (const Monomial& u : monomials_of_degree(ring.nvars(), d)) {
        span.add(g.times_term(one, u));
      }
    }
  }
  for (std::uint32_t d = 0; d <= maxdeg; ++d) {
    for (const Monomial& m : monomials_of_degree(ring.nvars(), d)) {
      CHECK(ideal.contains(Poly::term(ring, one, m)) == span.contains(Poly::term(ring, one, m)));
    }
  }
}

}  // namespace

TEST_CASE("membership agrees with the linear oracle on the worked ideals") {
  Ring lex2 = qring("Q[x,y] order=lex");
  check_membership(ii(lex2, {"x^2", "y^3 - x*y"}), 8, 12);
  check_membership(ii(lex2, {"x^2", "x*y - y^3"}), 8, 12);

  Ring q2 = qring("Q[x,y]");
  check_membership(ii(q2, {"x^2 + y^2", "x*y + y^2 + y^3"}), 8, 12);

  Ring q4 = qring("Q[x,y,z,w]");
  check_membership(ii(q4, {"x*w - y*z", "x^2", "z^2"}), 8, 12);

  Ring q3 = qring("Q[x,y,z]");
  check_membership(ii(q3, {"x*y", "x*z", "y*z"}), 6, 8);
}

TEST_CASE("random ideals: basis invariants, canonicity, normal form laws") {
  std::mt19937 rng(20260819);
  const char* rings[] = {"Q[x,y]", "F5[x,y]", "Q[x,y,z]"};
  for (int trial = 0; trial < 100; ++trial) {
    Ring R = qring(rings[trial % 3]);
    Ideal I = random_ideal(rng, R, 3, 3);
    const std::vector<Poly>& gb = I.groebner_basis();

    // Monic, strictly decreasing leading monomials, inter-reduced.
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].leading_coefficient().is_one());
      if (i + 1 < gb.size()) {
        CHECK(monomial_compare(gb[i].leading_monomial(), gb[i + 1].leading_monomial(),
                               R.order()) == std::strong_ordering::greater);
      }
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        for (const Term& t : gb[i].terms()) {
          CHECK(!gb[j].leading_monomial().divides(t.mono));
        }
      }
    }

    // The basis presents the same ideal: generators reduce to zero, and
    // every S-polynomial of basis pairs reduces to zero.
    for (const Poly& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
    FieldElement one = FieldElement::one(R.field());
    for (std::size_t i = 0; i < gb.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        Monomial l = Monomial::lcm(gb[i].leading_monomial(), gb[j].leading_monomial());
        Poly s = gb[i].times_term(one, l.divided_by(gb[i].leading_monomial())) -
                 gb[j].times_term(one, l.divided_by(gb[j].leading_monomial()));
        CHECK(normal_form(s, gb).is_zero());
      }
    }

    // Canonical under generator shuffling.
    std::vector<Poly> shuffled = I.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(Ideal(R, std::move(shuffled)).groebner_basis() == gb);

    // Normal form is linear and idempotent; f - NF(f) lands in the ideal.
    Poly f = random_poly(rng, R, 4, 3);
    Poly g = random_poly(rng, R, 4, 3);
    CHECK(normal_form(normal_form(f, gb), gb) == normal_form(f, gb));
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
    CHECK(I.contains(f - normal_form(f, gb)));
    if (!I.generators().empty()) {
      CHECK(normal_form(f * I.generators()[0], gb).is_zero());
    }
  }
}

TEST_CASE("basis elements belong to the ideal by the linear oracle") {
  // The hard direction of correctness, checked where the oracle is cheap.
  std::mt19937 rng(424243);
  Ring R = qring("Q[x,y]");
  for (int trial = 0; trial < 12; ++trial) {
    Ideal I = random_ideal(rng, R, 2, 3);
    for (const Poly& b : I.groebner_basis()) {
      CHECK(oracle_member(I, b, (std::uint32_t)b.total_degree() + 9));
    }
  }
}

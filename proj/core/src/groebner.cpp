#include "idealpow/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace idealpow {

Ideal::Ideal(Ring ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (!(g.ring() == ring_))
      throw MathError(Errc::MixedRings, "generator outside the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(ring_, gens_); });
  return cache_->basis;
}

bool Ideal::contains(const Poly& f) const {
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains_one() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
  const Ring& ring = f.ring();
  Poly rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    bool reduced = false;
    for (const Poly& g : basis) {
      const Term& glt = g.leading();
      if (glt.mono.divides(lt.mono)) {
        FieldElement c = lt.coeff / glt.coeff;
        Monomial m = lt.mono.divided_by(glt.mono);
        rest = rest - g.times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Leading term is irreducible; move it to the remainder.
      remainder.push_back(lt);
      rest = rest - Poly::term(ring, lt.coeff, lt.mono);
    }
  }
  // Terms were peeled in decreasing order, so no merging happens here.
  return Poly::from_terms(ring, std::move(remainder));
}

Poly normal_form(const Poly& f, const Ideal& ideal) {
  if (!(f.ring() == ideal.ring()))
    throw MathError(Errc::MixedRings, "normal form in a different ring");
  return normal_form(f, ideal.groebner_basis());
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Term& fl = f.leading();
  const Term& gl = g.leading();
  Monomial l = Monomial::lcm(fl.mono, gl.mono);
  Poly a = f.times_term(fl.coeff.inverse(), l.divided_by(fl.mono));
  Poly b = g.times_term(gl.coeff.inverse(), l.divided_by(gl.mono));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t degree;
};

// Final clean-up: minimalize, tail-reduce, normalize, sort.
std::vector<Poly> reduce_basis(const Ring& ring, std::vector<Poly> basis) {
  const MonomialOrder& ord = ring.order();

  // Keep only elements whose leading monomial no other survivor divides.
  std::vector<Poly> minimal;
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::less;
  });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < i && !redundant; ++j)
      if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) redundant = true;
    // Equal leading monomials sort adjacently; the first survives.
    if (!redundant) minimal.push_back(basis[i].monic());
  }

  // Tail-reduce each element against all the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others).monic();
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  return minimal;
}

}  // namespace

std::vector<Poly> buchberger(const Ring& ring, const std::vector<Poly>& gens) {
  std::vector<Poly> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return {};

  const MonomialOrder& ord = ring.order();

  std::list<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.push_back(Pair{i, j, l, l.total_degree()});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  // done(i,j): the pair has been consumed (reduced or discarded).
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto is_done = [&](std::size_t i, std::size_t j) { return done.contains({i, j}); };

  while (!queue.empty()) {
    // Normal strategy: smallest lcm degree first, then oldest.
    auto best = queue.begin();
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it)
      if (it->degree < best->degree) best = it;
    Pair p = *best;
    queue.erase(best);
    done.insert({p.i, p.j});

    const Poly& f = basis[p.i];
    const Poly& g = basis[p.j];

    // Buchberger's first criterion: coprime leading monomials.
    if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;

    // Chain criterion: some k with LT(k) | lcm(i,j) and both side pairs done.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto lo1 = std::minmax(p.i, k);
      auto lo2 = std::minmax(p.j, k);
      if (is_done(lo1.first, lo1.second) && is_done(lo2.first, lo2.second)) chained = true;
    }
    if (chained) continue;

    Poly s = normal_form(s_polynomial(f, g), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    push_pairs(basis.size() - 1);
  }

  return reduce_basis(ring, std::move(basis));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& m : gens)
    if (m.nvars() != ring_.nvars())
      throw MathError(Errc::LengthMismatch, "monomial from a different ring");
  // Divisibility-minimal set: sort by degree so divisors precede multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& kept : min_gens_)
      if (kept.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) min_gens_.push_back(m);
  }
  const MonomialOrder& ord = ring_.order();
  std::sort(min_gens_.begin(), min_gens_.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, ord) == std::strong_ordering::greater;
  });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : min_gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::operator==(const MonomialIdeal& rhs) const {
  return ring_ == rhs.ring_ && min_gens_ == rhs.min_gens_;
}

MonomialIdeal initial_ideal(const Ideal& ideal) {
  if (ideal.is_zero())
    throw MathError(Errc::ZeroIdeal, "the zero ideal has no initial ideal here");
  std::vector<Monomial> lms;
  for (const auto& g : ideal.groebner_basis()) lms.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.ring(), std::move(lms));
}

bool equal_ideals(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw MathError(Errc::MixedRings, "comparing ideals from different rings");
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.term_count() != 1) return std::nullopt;
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool is_monomial_ideal(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.term_count() != 1) return false;
  return true;
}

}  // namespace idealpow

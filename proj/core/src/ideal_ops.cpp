#include "idealpow/ideal_ops.hpp"

#include <algorithm>
#include <set>

namespace idealpow {

namespace {

// Names for scratch variables: t0, t1, ... skipping anything the base ring
// already uses. The parser reserves these, so user input never collides.
std::vector<std::string> scratch_names(const Ring& base, std::size_t count) {
  std::vector<std::string> names;
  std::size_t next = 0;
  while (names.size() < count) {
    std::string candidate = "t" + std::to_string(next++);
    if (!base.variable_index(candidate)) names.push_back(candidate);
  }
  return names;
}

// Scratch ring [aux..., base...] under Elimination(aux count), plus the map
// from base variable i to its slot in the scratch ring.
struct Scratch {
  Ring big;
  std::vector<std::size_t> from_base;
};

Scratch make_scratch(const Ring& base, std::size_t aux_count) {
  std::vector<std::string> vars = scratch_names(base, aux_count);
  for (const auto& v : base.variables()) vars.push_back(v);
  Ring big(base.field(), std::move(vars), MonomialOrder::elimination(aux_count));
  std::vector<std::size_t> from_base(base.nvars());
  for (std::size_t i = 0; i < base.nvars(); ++i) from_base[i] = aux_count + i;
  return Scratch{std::move(big), std::move(from_base)};
}

// Generators of (gens) ∩ K[non-aux variables], mapped into `result`.
// `big` must carry Elimination(block); slot block+i of big corresponds to
// variable i of result.
std::vector<Poly> eliminate_front_block(const Ring& big, std::size_t block,
                                        const std::vector<Poly>& gens, const Ring& result) {
  std::vector<Poly> kept;
  std::vector<std::size_t> down(big.nvars(), 0);
  for (std::size_t i = block; i < big.nvars(); ++i) down[i] = i - block;
  for (const Poly& g : buchberger(big, gens)) {
    // Under the block order a term with an aux variable dominates every
    // aux-free term, so checking the leading monomial suffices.
    bool aux_free = true;
    for (std::size_t i = 0; i < block && aux_free; ++i)
      if (g.leading_monomial().exponent(i) != 0) aux_free = false;
    if (aux_free) kept.push_back(transplant(g, result, down));
  }
  return kept;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw MathError(Errc::MixedRings, "ideals live in different rings");
}

void require_same_ring(const Ideal& a, const Poly& f) {
  if (!(a.ring() == f.ring()))
    throw MathError(Errc::MixedRings, "polynomial outside the ideal's ring");
}

Ideal from_monomials(const Ring& ring, std::vector<Monomial> gens) {
  MonomialIdeal minimal(ring, std::move(gens));
  std::vector<Poly> polys;
  polys.reserve(minimal.minimal_generators().size());
  for (const auto& m : minimal.minimal_generators())
    polys.push_back(Poly::term(ring, FieldElement::one(ring.field()), m));
  return Ideal(ring, std::move(polys));
}

// Exact quotient h / f; h must lie in (f).
Poly divide_exact(const Poly& h, const Poly& f) {
  Poly rest = h;
  std::vector<Term> quotient;
  const Term& fl = f.leading();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!fl.mono.divides(lt.mono))
      throw MathError(Errc::DivisionByZero, "inexact polynomial division");
    Term q{lt.coeff / fl.coeff, lt.mono.divided_by(fl.mono)};
    rest = rest - f.times_term(q.coeff, q.mono);
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(h.ring(), std::move(quotient));
}

}  // namespace

Ideal power(const Ideal& ideal, std::uint32_t k) {
  const Ring& ring = ideal.ring();
  if (k == 0) return Ideal::unit(ring);
  if (ideal.is_zero()) return Ideal::zero(ring);
  const auto& gens = ideal.generators();
  std::vector<Poly> products;
  // Multisets i1 <= i2 <= ... <= ik, sharing partial products down the tree.
  auto descend = [&](auto&& self, std::size_t from, std::uint32_t left, const Poly& acc) -> void {
    if (left == 0) {
      products.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) self(self, i, left - 1, acc * gens[i]);
  };
  descend(descend, 0, k, Poly::from_int(ring, 1));
  if (is_monomial_ideal(ideal)) {
    std::vector<Monomial> monos;
    monos.reserve(products.size());
    for (const auto& p : products) monos.push_back(p.leading_monomial());
    return from_monomials(ring, std::move(monos));
  }
  return Ideal(ring, std::move(products));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

  if (is_monomial_ideal(a) && is_monomial_ideal(b)) {
    std::vector<Monomial> gens;
    for (const auto& f : a.generators())
      for (const auto& g : b.generators())
        gens.push_back(Monomial::lcm(f.leading_monomial(), g.leading_monomial()));
    return from_monomials(ring, std::move(gens));
  }

  Scratch scratch = make_scratch(ring, 1);
  Poly t = Poly::variable(scratch.big, 0);
  Poly one_minus_t = Poly::from_int(scratch.big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * transplant(f, scratch.big, scratch.from_base));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * transplant(g, scratch.big, scratch.from_base));
  return Ideal(ring, eliminate_front_block(scratch.big, 1, gens, ring));
}

Ideal colon(const Ideal& ideal, const Poly& f) {
  require_same_ring(ideal, f);
  if (f.is_zero()) throw MathError(Errc::ZeroDivisor, "colon by the zero polynomial");
  const Ring& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal::zero(ring);
  if (f.is_constant()) return ideal;

  if (is_monomial_ideal(ideal) && f.term_count() == 1) {
    const Monomial& m = f.leading_monomial();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      const Monomial& gm = g.leading_monomial();
      // g : m = g / gcd(g, m), computed exponentwise.
      std::vector<std::uint32_t> exps(ring.nvars());
      for (std::size_t i = 0; i < ring.nvars(); ++i) {
        std::uint32_t ge = gm.exponent(i), me = m.exponent(i);
        exps[i] = ge > me ? ge - me : 0;
      }
      gens.push_back(Monomial(std::move(exps)));
    }
    return from_monomials(ring, std::move(gens));
  }

  Ideal meet = intersect(ideal, Ideal(ring, {f}));
  std::vector<Poly> quotients;
  quotients.reserve(meet.generators().size());
  for (const auto& h : meet.generators()) quotients.push_back(divide_exact(h, f));
  return Ideal(ring, std::move(quotients));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero()) throw MathError(Errc::ZeroIdeal, "colon by the zero ideal");
  Ideal acc = colon(ideal, by.generators()[0]);
  for (std::size_t i = 1; i < by.generators().size(); ++i)
    acc = intersect(acc, colon(ideal, by.generators()[i]));
  return acc;
}

Ideal saturate(const Ideal& ideal, const Poly& f) {
  require_same_ring(ideal, f);
  if (f.is_zero()) throw MathError(Errc::ZeroDivisor, "saturation by the zero polynomial");
  const Ring& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal::zero(ring);
  if (f.is_constant()) return ideal;

  if (is_monomial_ideal(ideal) && f.term_count() == 1) {
    const Monomial& m = f.leading_monomial();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      // g : m^inf zeroes the exponents supported on m.
      std::vector<std::uint32_t> exps(g.leading_monomial().exponents());
      for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (m.exponent(i) != 0) exps[i] = 0;
      gens.push_back(Monomial(std::move(exps)));
    }
    return from_monomials(ring, std::move(gens));
  }

  Scratch scratch = make_scratch(ring, 1);
  Poly t = Poly::variable(scratch.big, 0);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transplant(g, scratch.big, scratch.from_base));
  gens.push_back(Poly::from_int(scratch.big, 1) - t * transplant(f, scratch.big, scratch.from_base));
  return Ideal(ring, eliminate_front_block(scratch.big, 1, gens, ring));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero()) throw MathError(Errc::ZeroIdeal, "saturation by the zero ideal");
  for (const auto& g : by.generators())
    if (g.is_constant())
      throw MathError(Errc::UnitIdeal, "saturation by an improper ideal");
  Ideal acc = saturate(ideal, by.generators()[0]);
  for (std::size_t i = 1; i < by.generators().size(); ++i)
    acc = intersect(acc, saturate(ideal, by.generators()[i]));
  return acc;
}

Ideal saturate_by_colon_chain(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero()) throw MathError(Errc::ZeroIdeal, "saturation by the zero ideal");
  Ideal current = ideal;
  for (;;) {
    Ideal next = colon(current, by);
    if (equal_ideals(next, current)) return current;
    current = next;
  }
}

Ideal eliminate(const Ideal& ideal, std::vector<std::size_t> vars) {
  const Ring& ring = ideal.ring();
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty() || vars.size() >= ring.nvars())
    throw MathError(Errc::BadVariableSet, "eliminate needs a nonempty proper subset of variables");
  for (auto v : vars)
    if (v >= ring.nvars())
      throw MathError(Errc::BadVariableSet, "variable index out of range");

  std::set<std::size_t> dropped(vars.begin(), vars.end());
  // Scratch layout: eliminated variables first, survivors after, both in
  // their original relative order.
  std::vector<std::string> big_vars;
  std::vector<std::string> kept_names;
  std::vector<std::size_t> from_base(ring.nvars());
  for (auto v : vars) big_vars.push_back(ring.variable_name(v));
  std::size_t aux_at = 0, kept_at = 0;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (dropped.contains(i)) {
      from_base[i] = aux_at++;
    } else {
      from_base[i] = vars.size() + kept_at++;
      kept_names.push_back(ring.variable_name(i));
    }
  }
  for (const auto& name : kept_names) big_vars.push_back(name);
  Ring big(ring.field(), std::move(big_vars), MonomialOrder::elimination(vars.size()));

  OrderKind kind = ring.order().kind == OrderKind::Elimination ? OrderKind::DegRevLex
                                                               : ring.order().kind;
  Ring result(ring.field(), kept_names, MonomialOrder{kind, 0});

  std::vector<Poly> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(transplant(g, big, from_base));
  return Ideal(result, eliminate_front_block(big, vars.size(), gens, result));
}

Ideal drop_redundant_generators(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<Poly> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ring.order()) ==
           std::strong_ordering::less;
  });
  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens.size() == 1) break;
    std::vector<Poly> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (Ideal(ring, std::move(others)).contains(gens[i])) gens.erase(gens.begin() + i);
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace idealpow

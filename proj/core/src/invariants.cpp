#include "idealpow/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace idealpow {

namespace {

bool any_is_one(const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.is_one()) return true;
  return false;
}

// All monomials of total degree d in n variables, in a fixed (recursive
// lexicographic) enumeration order.
void enumerate_degree(std::size_t n, std::uint32_t d,
                      const std::function<void(const Monomial&)>& visit) {
  std::vector<std::uint32_t> exps(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      exps[i] = left;
      visit(Monomial(exps));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
    exps[i] = 0;
  };
  if (n == 0) return;
  rec(0, d);
}

}  // namespace

std::optional<std::uint64_t> std_monomial_count(const MonomialIdeal& m) {
  const std::size_t n = m.ring().nvars();
  const auto& gens = m.minimal_generators();
  if (any_is_one(gens)) return 0;  // unit ideal: empty quotient
  if (m.is_zero()) return n == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;

  // Finite iff every variable has a pure power among the generators; the
  // least such powers bound the box holding all standard monomials.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gens) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.exponent(i) != 0) {
        ++support;
        var = i;
      }
    if (support == 1) {
      std::uint32_t e = g.exponent(var);
      if (bound[var] == 0 || e < bound[var]) bound[var] = e;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0) return std::nullopt;

  std::uint64_t count = 0;
  std::vector<std::uint32_t> exps(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      Monomial candidate{std::vector<std::uint32_t>(exps)};
      if (!m.contains(candidate)) ++count;
      return;
    }
    for (exps[i] = 0; exps[i] < bound[i]; ++exps[i]) walk(i + 1);
    exps[i] = 0;
  };
  walk(0);
  return count;
}

namespace {

using Numerator = std::vector<mpz_class>;  // coefficient list in t

Numerator num_add(const Numerator& a, const Numerator& b) {
  Numerator r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

Numerator num_shift(Numerator a, std::uint64_t by) {
  if (a.size() == 1 && a[0] == 0) return a;
  a.insert(a.begin(), by, mpz_class(0));
  return a;
}

Numerator num_mul(const Numerator& a, const Numerator& b) {
  Numerator r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime_with(gens[j])) return false;
  return true;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  return out;
}

Numerator hilbert_numerator(std::vector<Monomial> gens, std::size_t n) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {mpz_class(1)};
  if (any_is_one(gens)) return {mpz_class(0)};
  if (pairwise_coprime(gens)) {
    Numerator acc{mpz_class(1)};
    for (const auto& g : gens) {
      Numerator factor(g.total_degree() + 1, mpz_class(0));
      factor[0] = 1;
      factor[g.total_degree()] = -1;
      acc = num_mul(acc, factor);
    }
    return acc;
  }
  // Pivot on the most shared variable: N(M) = N(M + (x)) + t N(M : x).
  std::vector<std::size_t> uses(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g.exponent(i) != 0) ++uses[i];
  std::size_t pivot = std::max_element(uses.begin(), uses.end()) - uses.begin();

  std::vector<Monomial> plus;  // M + (x_pivot)
  plus.push_back(Monomial::variable(n, pivot));
  std::vector<Monomial> quo;  // M : x_pivot
  for (const auto& g : gens) {
    if (g.exponent(pivot) == 0) {
      plus.push_back(g);
      quo.push_back(g);
    } else {
      std::vector<std::uint32_t> exps(g.exponents());
      exps[pivot] -= 1;
      quo.push_back(Monomial(std::move(exps)));
    }
  }
  return num_add(hilbert_numerator(std::move(plus), n),
                 num_shift(hilbert_numerator(std::move(quo), n), 1));
}

// Exact division by (1 - t); the caller guarantees divisibility.
Numerator divide_one_minus_t(const Numerator& a) {
  Numerator q(a.size() > 1 ? a.size() - 1 : 1, mpz_class(0));
  mpz_class carry(0);
  // a = (1 - t) q  =>  q_i = a_i + q_{i-1}
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    carry = a[i] + carry;
    q[i] = carry;
  }
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

mpz_class eval_at_one(const Numerator& a) {
  mpz_class s(0);
  for (const auto& c : a) s += c;
  return s;
}

}  // namespace

std::string HilbertData::numerator_string() const {
  if (numerator.size() == 1 && numerator[0] == 0) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    mpz_class c = numerator[i];
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    mpz_class a = abs(c);
    bool show_coeff = a != 1 || i == 0;
    if (show_coeff) s += a.get_str();
    if (i > 0) {
      if (show_coeff) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return s.empty() ? "0" : s;
}

HilbertData hilbert_series(const MonomialIdeal& m) {
  const std::size_t n = m.ring().nvars();
  HilbertData data;
  data.ambient_dim = n;
  data.numerator = hilbert_numerator(m.minimal_generators(), n);

  Numerator reduced = data.numerator;
  std::size_t cancels = 0;
  while (!(reduced.size() == 1 && reduced[0] == 0) && eval_at_one(reduced) == 0) {
    reduced = divide_one_minus_t(reduced);
    ++cancels;
  }
  if (reduced.size() == 1 && reduced[0] == 0) {
    data.dimension = 0;  // unit ideal: the quotient is the zero ring
    data.multiplicity = 0;
    return data;
  }
  data.dimension = n - cancels;
  data.multiplicity = eval_at_one(reduced);
  return data;
}

std::size_t krull_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring().nvars();
  if (ideal.is_zero()) return n;
  if (ideal.contains_one()) throw MathError(Errc::UnitIdeal, "the unit ideal has no dimension");

  MonomialIdeal ini = initial_ideal(ideal);
  std::vector<std::uint64_t> supports;  // bitmask per minimal generator
  for (const auto& g : ini.minimal_generators()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.exponent(i) != 0) mask |= std::uint64_t(1) << i;
    supports.push_back(mask);
  }
  // Smallest variable set meeting every support; n is small enough for a
  // popcount-ordered scan of subsets.
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << n); ++subset) {
      if (static_cast<std::size_t>(__builtin_popcountll(subset)) != size) continue;
      bool covers = true;
      for (auto s : supports)
        if ((s & subset) == 0) {
          covers = false;
          break;
        }
      if (covers) return n - size;
    }
  }
  return 0;
}

std::uint64_t local_colength(const Ideal& ideal) {
  if (ideal.is_zero())
    throw MathError(Errc::NotMPrimary, "the zero ideal has infinite colength");
  auto count = std_monomial_count(initial_ideal(ideal));
  if (!count) throw MathError(Errc::NotMPrimary, "initial ideal is not primary to the maximal ideal");
  return *count;
}

std::optional<std::uint64_t> quotient_length(const Ideal& inner, const Ideal& outer) {
  if (!(inner.ring() == outer.ring()))
    throw MathError(Errc::MixedRings, "quotient of ideals from different rings");
  for (const auto& g : inner.generators())
    if (!outer.contains(g))
      throw MathError(Errc::NotContained, "inner ideal is not contained in the outer ideal");

  if (inner.is_zero() && outer.is_zero()) return 0;
  if (inner.is_zero()) return std::nullopt;

  MonomialIdeal m_in = initial_ideal(inner);
  MonomialIdeal m_out = initial_ideal(outer);
  const std::size_t n = inner.ring().nvars();

  std::uint64_t outer_max_degree = 0;
  for (const auto& g : m_out.minimal_generators())
    outer_max_degree = std::max(outer_max_degree, g.total_degree());

  // If the quotient is finite, any monomial of m_out \ m_in has all its
  // variable multiples inside m_in, which caps its exponents below the
  // per-variable maxima of m_in's generators. Past that cap an empty slice
  // must have appeared, so a full scan without one proves infiniteness.
  std::uint64_t socle_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t maxexp = 0;
    for (const auto& g : m_in.minimal_generators())
      maxexp = std::max(maxexp, g.exponent(i));
    if (maxexp > 0) socle_bound += maxexp - 1;
  }
  const std::uint64_t limit = std::max(outer_max_degree, socle_bound + 1);

  std::uint64_t total = 0;
  for (std::uint64_t d = 0; d <= limit; ++d) {
    std::uint64_t slice = 0;
    enumerate_degree(n, static_cast<std::uint32_t>(d), [&](const Monomial& m) {
      if (m_out.contains(m) && !m_in.contains(m)) ++slice;
    });
    // An empty slice at or above m_out's top generator degree propagates
    // upward: every higher monomial of m_out has a divisor in that slice.
    if (slice == 0 && d >= outer_max_degree) return total;
    total += slice;
  }
  return std::nullopt;
}

namespace {

// Incremental exact Gaussian elimination; rows are kept in echelon form
// ordered by lead column, so each new row reduces front to back.
struct DegreeSlice {
  std::vector<std::vector<FieldElement>> echelon;
  std::vector<std::size_t> leads;  // lead column per echelon row
  std::size_t rank = 0;

  void insert(std::vector<FieldElement> row) {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      std::size_t lead = leads[r];
      if (!row[lead].is_zero()) {
        FieldElement factor = row[lead] / echelon[r][lead];
        for (std::size_t c = lead; c < row.size(); ++c)
          row[c] = row[c] - echelon[r][c] * factor;
      }
    }
    std::size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) return;
    auto at = std::upper_bound(leads.begin(), leads.end(), lead) - leads.begin();
    leads.insert(leads.begin() + at, lead);
    echelon.insert(echelon.begin() + at, std::move(row));
    ++rank;
  }
};

}  // namespace

std::vector<std::uint64_t> generator_degrees(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous())
      throw MathError(Errc::NotHomogeneous, "generator degrees need homogeneous generators");
  if (ideal.is_zero()) return {};

  std::uint64_t dmin = ideal.generators()[0].total_degree(), dmax = dmin;
  for (const auto& g : ideal.generators()) {
    dmin = std::min(dmin, g.total_degree());
    dmax = std::max(dmax, g.total_degree());
  }

  std::vector<std::uint64_t> degrees;
  for (std::uint64_t d = dmin; d <= dmax; ++d) {
    // Row space of all products m * g of degree d; the subspace with
    // deg m >= 1 is (R_1 * I)_d. The rank gap counts minimal generators.
    std::size_t columns_total = 0;
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    auto column_of = [&](const Monomial& m) {
      auto [it, fresh] = index.emplace(m.exponents(), columns_total);
      if (fresh) ++columns_total;
      return it->second;
    };
    // Pre-index all degree-d monomials so rows share a column layout.
    enumerate_degree(n, static_cast<std::uint32_t>(d), [&](const Monomial& m) { column_of(m); });

    auto row_of = [&](const Poly& p) {
      std::vector<FieldElement> row(columns_total, FieldElement::zero(ring.field()));
      for (const auto& t : p.terms()) row[column_of(t.mono)] = t.coeff;
      return row;
    };

    DegreeSlice full, shifted;
    for (const auto& g : ideal.generators()) {
      std::uint64_t gd = g.total_degree();
      if (gd > d) continue;
      enumerate_degree(n, static_cast<std::uint32_t>(d - gd), [&](const Monomial& m) {
        Poly product = g.times_term(FieldElement::one(ring.field()), m);
        full.insert(row_of(product));
        if (!m.is_one()) shifted.insert(row_of(product));
      });
    }
    std::uint64_t fresh = full.rank - shifted.rank;
    for (std::uint64_t c = 0; c < fresh; ++c) degrees.push_back(d);
  }
  return degrees;
}

}  // namespace idealpow

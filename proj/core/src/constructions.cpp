#include "idealpow/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

namespace idealpow {

namespace {

// Run body(0..count-1), possibly across threads. Worker count comes from
// IDEALPOW_THREADS (default: hardware concurrency), clamped to count. The
// lowest-index exception wins, so failures are as deterministic as the
// serial loop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  std::size_t workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("IDEALPOW_THREADS")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1) workers = parsed;
  }
  workers = std::max<std::size_t>(1, std::min(workers, count));

  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Generators sorted by decreasing leading monomial, for canonical witness
// selection and rendering.
std::vector<Poly> sorted_generators(const Ideal& ideal) {
  std::vector<Poly> gens = ideal.generators();
  const MonomialOrder& ord = ideal.ring().order();
  std::stable_sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  return gens;
}

std::optional<Poly> first_missing_generator(const Ideal& larger, const Ideal& smaller) {
  for (const auto& g : sorted_generators(larger))
    if (!smaller.contains(g)) return g;
  return std::nullopt;
}

Ideal maximal_ideal(const Ring& ring) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

}  // namespace

Ideal multiply(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw MathError(Errc::MixedRings, "multiplying ideals from different rings");
  std::vector<Poly> products;
  products.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) products.push_back(f * g);
  return Ideal(a.ring(), std::move(products));
}

Ideal symbolic_power(const Ideal& ideal, const Ideal& by, std::uint32_t k) {
  return saturate(power(ideal, k), by);
}

Ideal saturated_power(const Ideal& ideal, std::uint32_t k) {
  return symbolic_power(ideal, maximal_ideal(ideal.ring()), k);
}

Poly leading_form(const Poly& f) {
  if (f.is_zero()) throw MathError(Errc::ZeroPolynomial, "leading form of zero");
  std::uint64_t low = f.terms()[0].mono.total_degree();
  for (const auto& t : f.terms()) low = std::min(low, t.mono.total_degree());
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (t.mono.total_degree() == low) kept.push_back(t);
  return Poly::from_terms(f.ring(), std::move(kept));
}

Ring sharp_extension(const Ring& ring) {
  if (ring.variable_index("s"))
    throw MathError(Errc::BadVariableSet, "the ring already uses the homogenizing name s");
  std::vector<std::string> vars = ring.variables();
  vars.push_back("s");
  return Ring(ring.field(), std::move(vars), ring.order());
}

Poly sharp_map(const Poly& f, const Ring& extended) {
  if (f.is_zero()) throw MathError(Errc::ZeroPolynomial, "sharp of zero");
  const Ring& ring = f.ring();
  if (extended.nvars() != ring.nvars() + 1 || !(extended.field() == ring.field()))
    throw MathError(Errc::MixedRings, "target is not the sharp extension of the source ring");
  std::uint64_t low = f.terms()[0].mono.total_degree();
  for (const auto& t : f.terms()) low = std::min(low, t.mono.total_degree());
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> exps = t.mono.exponents();
    exps.push_back(static_cast<std::uint32_t>(t.mono.total_degree() - low));
    terms.push_back(Term{t.coeff, Monomial(std::move(exps))});
  }
  return Poly::from_terms(extended, std::move(terms));
}

Ideal sharp_ideal(const Ideal& ideal) {
  if (ideal.is_zero()) throw MathError(Errc::ZeroIdeal, "sharp of the zero ideal");
  for (const auto& g : ideal.generators())
    for (const auto& t : g.terms())
      if (t.mono.is_one())
        throw MathError(Errc::UnitIdeal, "sharp needs generators vanishing at the origin");
  Ring extended = sharp_extension(ideal.ring());
  std::vector<Poly> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(sharp_map(g, extended));
  Ideal raw(extended, std::move(gens));
  Ideal saturated = saturate(raw, Poly::variable(extended, extended.nvars() - 1));
  std::vector<Poly> monic;
  monic.reserve(saturated.generators().size());
  for (const auto& g : saturated.generators()) monic.push_back(g.monic());
  return drop_redundant_generators(Ideal(extended, std::move(monic)));
}

Ideal form_ideal(const Ideal& ideal) {
  Ideal sharp = sharp_ideal(ideal);
  const Ring& ring = ideal.ring();
  std::size_t s_index = sharp.ring().nvars() - 1;
  std::vector<Poly> forms;
  for (const auto& g : sharp.generators()) {
    // Evaluate at s = 0: keep the s-free terms.
    std::vector<Term> kept;
    for (const auto& t : g.terms()) {
      if (t.mono.exponent(s_index) != 0) continue;
      std::vector<std::uint32_t> exps(t.mono.exponents().begin(),
                                      t.mono.exponents().end() - 1);
      kept.push_back(Term{t.coeff, Monomial(std::move(exps))});
    }
    Poly form = Poly::from_terms(ring, std::move(kept));
    if (!form.is_zero()) forms.push_back(form.monic());
  }
  return drop_redundant_generators(Ideal(ring, std::move(forms)));
}

namespace {

// Fiber variable names y1..ym, growing the prefix until nothing collides.
std::vector<std::string> fiber_names(const Ring& ring, std::size_t count) {
  std::string prefix = "y";
  for (;;) {
    bool clash = false;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count && !clash; ++i) {
      names.push_back(prefix + std::to_string(i));
      if (ring.variable_index(names.back())) clash = true;
    }
    if (!clash) return names;
    prefix += "y";
  }
}

// Kernel generators straight off the elimination basis; cheaper than the
// pruned public presentation, which is all the fiber computation needs.
Ideal rees_kernel_raw(const Ideal& ideal) {
  if (ideal.is_zero()) throw MathError(Errc::ZeroIdeal, "Rees presentation of the zero ideal");
  const Ring& ring = ideal.ring();
  const auto& gens = ideal.generators();
  std::vector<std::string> names = ring.variables();
  for (const auto& y : fiber_names(ring, gens.size())) names.push_back(y);
  Ring target(ring.field(), names, MonomialOrder::degrevlex());

  // Scratch ring [t | x, y] with t eliminated from (y_i - t f_i).
  std::vector<std::string> big_names;
  std::string t_name = "t0";
  for (std::size_t i = 0; ring.variable_index(t_name); ++i) t_name = "t" + std::to_string(i + 1);
  big_names.push_back(t_name);
  for (const auto& v : names) big_names.push_back(v);
  Ring big(ring.field(), big_names, MonomialOrder::elimination(1));

  std::vector<std::size_t> base_to_big(ring.nvars());
  for (std::size_t i = 0; i < ring.nvars(); ++i) base_to_big[i] = i + 1;
  Poly t = Poly::variable(big, 0);
  std::vector<Poly> relations;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Poly y_i = Poly::variable(big, 1 + ring.nvars() + i);
    relations.push_back(y_i - t * transplant(gens[i], big, base_to_big));
  }

  std::vector<Poly> kernel;
  std::vector<std::size_t> down(big.nvars());
  for (std::size_t i = 1; i < big.nvars(); ++i) down[i] = i - 1;
  for (const Poly& g : buchberger(big, relations)) {
    if (g.leading_monomial().exponent(0) != 0) continue;
    kernel.push_back(transplant(g, target, down));
  }
  return Ideal(target, std::move(kernel));
}

}  // namespace

Ideal rees_presentation(const Ideal& ideal) {
  return drop_redundant_generators(rees_kernel_raw(ideal));
}

std::size_t analytic_spread(const Ideal& ideal) {
  Ideal presentation = rees_kernel_raw(ideal);
  const Ring& big = presentation.ring();
  std::size_t n = ideal.ring().nvars();
  std::size_t m = big.nvars() - n;

  std::vector<std::string> fiber_vars(big.variables().begin() + n, big.variables().end());
  Ring fiber(big.field(), std::move(fiber_vars), MonomialOrder::degrevlex());

  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::zero(fiber));
  for (std::size_t j = 0; j < m; ++j) images.push_back(Poly::variable(fiber, j));

  std::vector<Poly> fiber_gens;
  for (const auto& g : presentation.generators()) {
    Poly image = substitute(g, fiber, images);
    if (!image.is_zero()) fiber_gens.push_back(image);
  }
  return krull_dimension(Ideal(fiber, std::move(fiber_gens)));
}

ProbeReport veronese_probe(const Ideal& ideal, const Ideal& by, std::uint32_t d,
                           std::uint32_t kmax) {
  if (d < 1) throw std::invalid_argument("veronese probe needs d >= 1");
  if (kmax < 2) throw std::invalid_argument("veronese probe needs kmax >= 2");
  Ideal base = symbolic_power(ideal, by, d);

  ProbeReport report;
  report.rows.resize(kmax - 1);
  parallel_for(kmax - 1, [&](std::size_t slot) {
    std::uint32_t k = static_cast<std::uint32_t>(slot) + 2;
    Ideal plain = power(base, k);
    Ideal symbolic = symbolic_power(ideal, by, d * k);
    ProbeRow row;
    row.k = k;
    row.witness = first_missing_generator(symbolic, plain);
    row.pass = !row.witness.has_value();
    report.rows[slot] = std::move(row);
  });
  for (const auto& row : report.rows)
    if (!row.pass) {
      report.fail_at = row.k;
      break;
    }
  return report;
}

ProbeReport form_algebra_probe(const Ideal& ideal, std::uint32_t kmax) {
  if (kmax < 2) throw std::invalid_argument("form algebra probe needs kmax >= 2");
  std::vector<Ideal> forms;  // forms[a-1] = (I^a)*, a = 1..kmax
  for (std::uint32_t a = 1; a <= kmax; ++a) forms.push_back(Ideal::zero(ideal.ring()));
  parallel_for(kmax, [&](std::size_t slot) {
    forms[slot] = form_ideal(power(ideal, static_cast<std::uint32_t>(slot) + 1));
  });

  ProbeReport report;
  for (std::uint32_t k = 2; k <= kmax; ++k) {
    std::vector<Poly> products;
    for (std::uint32_t a = 1; a < k; ++a) {
      Ideal part = multiply(forms[a - 1], forms[k - a - 1]);
      for (const auto& g : part.generators()) products.push_back(g);
    }
    Ideal lower(ideal.ring(), std::move(products));
    ProbeRow row;
    row.k = k;
    row.witness = first_missing_generator(forms[k - 1], lower);
    row.pass = !row.witness.has_value();
    report.rows.push_back(std::move(row));
    if (!report.rows.back().pass && !report.fail_at) report.fail_at = k;
  }
  return report;
}

GrowthTable growth_table(const Ideal& ideal, const Ideal& by, std::uint32_t e,
                         std::uint32_t kmax) {
  if (kmax < 1) throw std::invalid_argument("growth table needs kmax >= 1");
  GrowthTable table;
  table.subject = "lambda((I^k : J^inf) / I^k)";
  table.exponent = e;
  table.rows.resize(kmax);

  std::vector<std::optional<std::uint64_t>> lengths(kmax);
  parallel_for(kmax, [&](std::size_t slot) {
    std::uint32_t k = static_cast<std::uint32_t>(slot) + 1;
    Ideal plain = power(ideal, k);
    Ideal saturated = saturate(plain, by);
    lengths[slot] = quotient_length(plain, saturated);
  });

  for (std::uint32_t k = 1; k <= kmax; ++k) {
    auto len = lengths[k - 1];
    if (!len)
      throw InfiniteLengthError(k, "infinite length at k = " + std::to_string(k));
    GrowthRow row;
    row.k = k;
    row.length = *len;
    mpz_class den = 1;
    for (std::uint32_t i = 0; i < e; ++i) den *= k;
    row.ratio = mpq_class(mpz_class(static_cast<unsigned long>(*len)), den);
    row.ratio.canonicalize();
    table.rows[k - 1] = std::move(row);
  }
  return table;
}

}  // namespace idealpow

// Wall-clock benchmarks for the hot paths: Groebner bases, saturation,
// form ideals, and a full growth-table row.

#include <benchmark/benchmark.h>

#include "idealpow/constructions.hpp"
#include "idealpow/ideal_ops.hpp"
#include "idealpow/invariants.hpp"
#include "idealpow/io.hpp"

namespace {

using namespace idealpow;

Ideal parse_ideal(const char* ring_text, const std::vector<const char*>& gens) {
  Ring ring = parse_ring(ring_text);
  std::vector<Poly> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(polys));
}

Ideal binomial_ideal() {
  return parse_ideal("Q[x,y,z,w]", {"x*w - y*z", "x^2", "z^2"});
}

Ideal planar_ideal() { return parse_ideal("Q[x,y]", {"x^2", "y^3 - x*y"}); }

Ideal cover_ideal() { return parse_ideal("Q[x,y,z]", {"x*y", "x*z", "y*z"}); }

void bench_buchberger(benchmark::State& state) {
  Ideal ideal = binomial_ideal();
  for (auto _ : state) {
    std::vector<Poly> basis = buchberger(ideal.ring(), ideal.generators());
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(bench_buchberger);

void bench_saturate_power2(benchmark::State& state) {
  Ideal ideal = binomial_ideal();
  Ideal square = power(ideal, 2);
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ideal.ring().nvars(); ++i)
    vars.push_back(Poly::variable(ideal.ring(), i));
  Ideal m(ideal.ring(), vars);
  for (auto _ : state) {
    Ideal sat = saturate(square, m);
    benchmark::DoNotOptimize(sat);
  }
}
BENCHMARK(bench_saturate_power2);

void bench_form_ideal_cube(benchmark::State& state) {
  Ideal ideal = planar_ideal();
  for (auto _ : state) {
    Ideal forms = form_ideal(power(ideal, 3));
    benchmark::DoNotOptimize(forms);
  }
}
BENCHMARK(bench_form_ideal_cube);

void bench_growth_row4(benchmark::State& state) {
  Ideal ideal = binomial_ideal();
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ideal.ring().nvars(); ++i)
    vars.push_back(Poly::variable(ideal.ring(), i));
  Ideal m(ideal.ring(), vars);
  for (auto _ : state) {
    Ideal sym = symbolic_power(ideal, m, 4);
    auto len = quotient_length(power(ideal, 4), sym);
    benchmark::DoNotOptimize(len);
  }
}
BENCHMARK(bench_growth_row4);

void bench_monomial_symbolic6(benchmark::State& state) {
  Ideal ideal = cover_ideal();
  for (auto _ : state) {
    Ideal sat = saturated_power(ideal, 6);
    benchmark::DoNotOptimize(sat);
  }
}
BENCHMARK(bench_monomial_symbolic6);

}  // namespace

BENCHMARK_MAIN();

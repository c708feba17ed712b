#include "uaw/delta.hpp"
#include "uaw/lambda_rep.hpp"
#include "uaw/morphism.hpp"
#include "uaw/rewrite.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace uaw;

namespace {

// deterministic mid-size inputs, built once
DeltaElement fixed_element(std::uint64_t seed, int max_deg) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  DeltaElement x;
  for (int t = 0; t < 3; ++t) {
    PBWMonomial m;
    int* slot[6] = {&m.i, &m.j, &m.k, &m.r, &m.s, &m.t};
    for (int b = 0, d = draw(max_deg + 1); b < d; ++b) ++*slot[draw(6)];
    LaurentQ p;
    p.add_term(draw(5) - 2, draw(7) - 3 ? draw(7) - 3 : 1);
    if (p.is_zero()) p.add_term(0, 1);
    x.add_term(m, RatFuncQ(p));
  }
  return x;
}

void BM_ReduceWord(benchmark::State& state) {
  Word w(static_cast<std::size_t>(state.range(0)));
  for (std::size_t p = 0; p < w.size(); ++p) w[p] = kLetters[(w.size() - p) % 3];  // ...CBACBA
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word(w));
}
BENCHMARK(BM_ReduceWord)->Arg(3)->Arg(6)->Arg(9);

void BM_Multiply(benchmark::State& state) {
  DeltaElement x = fixed_element(11, static_cast<int>(state.range(0)));
  DeltaElement y = fixed_element(12, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(3)->Arg(4);

void BM_Commutator(benchmark::State& state) {
  DeltaElement x = fixed_element(21, 3), y = fixed_element(22, 3);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(x, y));
}
BENCHMARK(BM_Commutator);

void BM_CasimirSquare(benchmark::State& state) {
  DeltaElement om = casimir();
  for (auto _ : state) benchmark::DoNotOptimize(om * om);
}
BENCHMARK(BM_CasimirSquare);

void BM_OmegaBasis(benchmark::State& state) {
  DeltaElement x = fixed_element(31, 4);
  for (auto _ : state) benchmark::DoNotOptimize(to_omega_basis(x));
}
BENCHMARK(BM_OmegaBasis);

void BM_PiMap(benchmark::State& state) {
  DeltaElement x = fixed_element(41, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pi_map(x));
}
BENCHMARK(BM_PiMap);

void BM_Abelianize(benchmark::State& state) {
  DeltaElement x = fixed_element(51, 4);
  for (auto _ : state) benchmark::DoNotOptimize(abelianize(x));
}
BENCHMARK(BM_Abelianize);

void BM_Rho(benchmark::State& state) {
  DeltaElement x = fixed_element(61, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rho(x));
}
BENCHMARK(BM_Rho);

void BM_RatFuncArith(benchmark::State& state) {
  LaurentQ n1, d1, n2, d2;
  for (int e = -3; e <= 3; ++e) {
    n1.add_term(e, e + 4);
    d1.add_term(e + 3, 2 * e + 7);
    n2.add_term(e - 1, e * e + 1);
    d2.add_term(e + 2, e + 5);
  }
  RatFuncQ a(n1, d1), b(n2, d2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a);
}
BENCHMARK(BM_RatFuncArith);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mi/closure.hpp"
#include "mi/complex.hpp"
#include "mi/generate.hpp"
#include "mi/ideal.hpp"

namespace {

using namespace mi;

MonomialIdeal rand_ideal(std::mt19937_64& rng, int n, int max_deg, int max_gens) {
    std::vector<Monomial> raw;
    int g = 1 + static_cast<int>(rng() % max_gens);
    for (int t = 0; t < g; ++t) {
        std::vector<int> e(n, 0);
        int d = 1 + static_cast<int>(rng() % max_deg);
        for (int s = 0; s < d; ++s) ++e[rng() % n];
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(raw));
}

void BM_power(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    auto I = gen_ideal(IdealClass::StronglyStable, 4, 4, 4, 11);
    for (auto _ : state) benchmark::DoNotOptimize(power(I, k));
}
BENCHMARK(BM_power)->Arg(2)->Arg(3)->Arg(4);

void BM_minimal_transversals(benchmark::State& state) {
    std::mt19937_64 rng(17);
    int families = static_cast<int>(state.range(0));
    std::vector<VarSet> family;
    for (int i = 0; i < families; ++i) {
        VarSet s;
        for (int j = 0; j < 8; ++j)
            if (rng() % 3 == 0) s.add(j);
        if (s.empty()) s.add(static_cast<int>(rng() % 8));
        family.push_back(s);
    }
    for (auto _ : state) benchmark::DoNotOptimize(minimal_transversals(family));
}
BENCHMARK(BM_minimal_transversals)->Arg(4)->Arg(8)->Arg(12);

void BM_min_primes(benchmark::State& state) {
    std::mt19937_64 rng(23);
    auto I = rand_ideal(rng, 6, 4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(min_primes(I));
}
BENCHMARK(BM_min_primes);

void BM_integral_closure(benchmark::State& state) {
    auto I = gen_ideal(IdealClass::BorelType, 4, 4, 3, 29);
    for (auto _ : state) benchmark::DoNotOptimize(integral_closure(I));
}
BENCHMARK(BM_integral_closure);

}  // namespace

BENCHMARK_MAIN();

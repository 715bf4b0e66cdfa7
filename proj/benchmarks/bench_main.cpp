#include <benchmark/benchmark.h>

#include <random>

#include "sldecomp/factor.hpp"
#include "sldecomp/harness.hpp"
#include "sldecomp/residue.hpp"
#include "sldecomp/search.hpp"

using namespace sldecomp;

namespace {

Poly random_poly(std::uint32_t q, std::size_t deg, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(deg + 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % q);
    c.back() = 1;
    return Poly(q, c);
}

void BM_PolyMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto deg = static_cast<std::size_t>(state.range(0));
    const Poly a = random_poly(5, deg, rng), b = random_poly(5, deg, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(64)->Arg(256);

void BM_Gcd(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto deg = static_cast<std::size_t>(state.range(0));
    const Poly a = random_poly(7, deg, rng), b = random_poly(7, deg - 1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(16)->Arg(128);

void BM_IsIrreducible(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto deg = static_cast<std::size_t>(state.range(0));
    std::vector<Poly> fs;
    for (int i = 0; i < 64; ++i) fs.push_back(random_poly(3, deg, rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(fs[i++ % fs.size()]));
}
BENCHMARK(BM_IsIrreducible)->Arg(8)->Arg(32);

void BM_Factor(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const Poly f = random_poly(5, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(factor(f, 9));
}
BENCHMARK(BM_Factor)->Arg(12)->Arg(40);

void BM_PowerResidueSymbol(benchmark::State& state) {
    std::mt19937_64 rng(5);
    Poly p(13);
    do p = random_poly(13, static_cast<std::size_t>(state.range(0)), rng);
    while (!is_irreducible(p));
    const PrimeElem prime(p);
    const Poly a = random_poly(13, p.degree().value() - 1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(power_residue_symbol(a, prime, 12));
}
BENCHMARK(BM_PowerResidueSymbol)->Arg(4)->Arg(16);

void BM_FindPrimeInClass(benchmark::State& state) {
    const std::uint32_t q = 3;
    const Poly b0 = pow(Poly(q, {1, 1}), static_cast<std::size_t>(state.range(0)));
    const Poly a0 = Poly::constant(q, 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_prime_in_class(a0, b0, {}));
}
BENCHMARK(BM_FindPrimeInClass)->Arg(4)->Arg(12);

void BM_Decompose(benchmark::State& state) {
    RunConfig c;
    c.q = static_cast<std::uint32_t>(state.range(0));
    c.n = static_cast<std::size_t>(state.range(1));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        state.PauseTiming();
        const SLMatrix a = generate_random_sl(c, trial_seed(7, seed++));
        state.ResumeTiming();
        benchmark::DoNotOptimize(decompose(a, c));
    }
}
BENCHMARK(BM_Decompose)->Args({2, 3})->Args({3, 3})->Args({5, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

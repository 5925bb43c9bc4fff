#include <benchmark/benchmark.h>

#include <random>

#include "semreg/sylvester.hpp"

using namespace semreg;

namespace {

const DomainMode P = DomainMode::Product;

SliceFn sample_fn(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    auto rand_ratfun = [&] {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(d) + 1);
        for (auto& v : c) v = coeff(rng);
        return RatFun(QPoly(std::move(c)));
    };
    auto rand_scalar = [&] { return ScalarElem(rand_ratfun(), rand_ratfun(), P); };
    return {rand_scalar(), rand_scalar(), rand_scalar(), rand_scalar()};
}

void BM_star_product(benchmark::State& state) {
    std::mt19937_64 rng(7);
    SliceFn f = sample_fn(rng, static_cast<int>(state.range(0)));
    SliceFn g = sample_fn(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(star_product(f, g));
}
BENCHMARK(BM_star_product)->Arg(1)->Arg(3)->Arg(6);

void BM_char_poly_closed(benchmark::State& state) {
    std::mt19937_64 rng(8);
    SliceFn f = sample_fn(rng, static_cast<int>(state.range(0)));
    SliceFn g = sample_fn(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_closed(f, g));
}
BENCHMARK(BM_char_poly_closed)->Arg(1)->Arg(3);

void BM_char_poly_matrix(benchmark::State& state) {
    std::mt19937_64 rng(8);
    SliceFn f = sample_fn(rng, static_cast<int>(state.range(0)));
    SliceFn g = sample_fn(rng, static_cast<int>(state.range(0)));
    FieldMat4 M = sylvester_matrix(f, g);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(M));
}
BENCHMARK(BM_char_poly_matrix)->Arg(1)->Arg(3);

void BM_classify(benchmark::State& state) {
    std::mt19937_64 rng(9);
    SliceFn f = sample_fn(rng, 2);
    SliceFn g = sample_fn(rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(classify(f, g));
}
BENCHMARK(BM_classify);

void BM_solve_rank4(benchmark::State& state) {
    std::mt19937_64 rng(10);
    SliceFn f, g;
    do {
        f = sample_fn(rng, 1);
        g = sample_fn(rng, 1);
    } while (f.is_central() || g.is_central() || det(sylvester_matrix(f, g)).is_zero());
    SliceFn b = sample_fn(rng, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_rank4(f, g, b));
}
BENCHMARK(BM_solve_rank4);

}  // namespace

BENCHMARK_MAIN();

// Micro benchmarks for the inner loops of the enumerations.

#include "tricode/code.hpp"
#include "tricode/expsum.hpp"
#include "tricode/quadform.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>

using namespace tricode;

namespace {

const FieldContext& field(int m) {
    static std::map<int, FieldContext> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, FieldContext::create(3, m)).first;
    return it->second;
}

void BM_FieldMul(benchmark::State& state) {
    const FieldContext& f = field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    FieldElement a = f.from_index(rng() % f.q()), b = f.from_index(1 + rng() % (f.q() - 1));
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(12);

void BM_IndexMul(benchmark::State& state) {
    const IndexTables t(field(static_cast<int>(state.range(0))));
    std::uint32_t a = 5, b = 7;
    for (auto _ : state) {
        a = t.mul(a, b) | 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_IndexMul)->Arg(6)->Arg(10);

// One trace tally per (alpha, beta, gamma); the direct enumeration's inner step.
void BM_TallyRows(benchmark::State& state) {
    const IndexTables t(field(static_cast<int>(state.range(0))));
    const TraceRows rows(t);
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        const auto a = static_cast<std::uint32_t>(rng() % t.q()), b = static_cast<std::uint32_t>(rng() % t.q()),
                   c = static_cast<std::uint32_t>(rng() % t.q());
        benchmark::DoNotOptimize(tally_rows(rows, a, b, c));
    }
}
BENCHMARK(BM_TallyRows)->Arg(4)->Arg(6);

// Rank plus Legendre class of one form; the rank enumeration's inner step.
void BM_ClassifyTernary(benchmark::State& state) {
    const FieldContext& f = field(static_cast<int>(state.range(0)));
    const FormTables forms(f);
    std::mt19937_64 rng(3);
    std::vector<std::uint8_t> buf(forms.cells());
    for (auto _ : state) {
        const auto a = static_cast<std::uint32_t>(rng() % f.q()), b = static_cast<std::uint32_t>(rng() % f.q());
        add3_mod3(forms.matrix(0, a), forms.matrix(1, b), buf.data(), buf.size());
        benchmark::DoNotOptimize(classify_ternary_in_place(buf.data(), forms.n()));
    }
}
BENCHMARK(BM_ClassifyTernary)->Arg(6)->Arg(8)->Arg(10);

void BM_DirectSum(benchmark::State& state) {
    const FieldContext& f = field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(4);
    for (auto _ : state) {
        const Triple t{f.from_index(rng() % f.q()), f.from_index(rng() % f.q()), f.from_index(rng() % f.q())};
        benchmark::DoNotOptimize(direct_sum(f, t));
    }
}
BENCHMARK(BM_DirectSum)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();

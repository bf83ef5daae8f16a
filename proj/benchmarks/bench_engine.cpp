#include <benchmark/benchmark.h>

#include <random>

#include "suffcheck/engine.hpp"
#include "suffcheck/formula.hpp"
#include "suffcheck/gadgets.hpp"
#include "suffcheck/tractable.hpp"

namespace {

using namespace suffcheck;

// Random problem over `coords` binary coordinates, 4 actions, utilities in
// 0..7 so ties are common.
DecisionProblem random_problem(int coords, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 7);
    std::vector<CoordinateDomain> domains(static_cast<std::size_t>(coords),
                                          CoordinateDomain(2));
    const std::uint64_t n = std::uint64_t{1} << coords;
    std::vector<Rational> utility;
    utility.reserve(4 * n);
    for (int a = 0; a < 4; ++a)
        for (std::uint64_t s = 0; s < n; ++s)
            utility.emplace_back(dist(rng));
    return DecisionProblem({"a0", "a1", "a2", "a3"}, std::move(domains),
                           std::move(utility));
}

void BM_IsSufficient(benchmark::State& state) {
    const int coords = static_cast<int>(state.range(0));
    DecisionProblem p = random_problem(coords, 20260821);
    CoordSet half; // first half of the coordinates
    {
        std::vector<int> idx;
        for (int i = 0; i < coords / 2; ++i)
            idx.push_back(i);
        half = CoordSet::from_indices(std::move(idx));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(is_sufficient(p, half));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(p.space().state_count()));
}
BENCHMARK(BM_IsSufficient)->Arg(10)->Arg(13)->Arg(17); // 1e3, 8e3, 1.3e5 states

void BM_OptTable(benchmark::State& state) {
    DecisionProblem p = random_problem(static_cast<int>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_opt_table(p));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(p.space().state_count()));
}
BENCHMARK(BM_OptTable)->Arg(10)->Arg(13)->Arg(17);

void BM_RelevantCoordinates(benchmark::State& state) {
    DecisionProblem p = random_problem(static_cast<int>(state.range(0)), 99);
    for (auto _ : state)
        benchmark::DoNotOptimize(relevant_coordinates(p));
}
BENCHMARK(BM_RelevantCoordinates)->Arg(10)->Arg(13);

void BM_TautologyBrute(benchmark::State& state) {
    // Pigeonhole-flavored formula: not a tautology, falsified late.
    Formula f = Formula::var(0);
    const int n = static_cast<int>(state.range(0));
    for (int i = 1; i < n; ++i)
        f = Formula::conjunction(std::move(f), Formula::var(i));
    f = Formula::disjunction(f, Formula::negation(f));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_tautology_brute(f));
}
BENCHMARK(BM_TautologyBrute)->Arg(12)->Arg(16);

void BM_TautologyGadgetRoundTrip(benchmark::State& state) {
    Formula f = parse_formula("(x1 & x2) -> (x2 | x3)");
    for (auto _ : state) {
        GadgetInstance g = tautology_gadget(f);
        benchmark::DoNotOptimize(is_sufficient(g.problem, g.query_coords));
    }
}
BENCHMARK(BM_TautologyGadgetRoundTrip);

} // namespace

BENCHMARK_MAIN();

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/fixtures.hpp"

using namespace suffcheck;
using namespace testsupport;

namespace {

EconModel model(int universe, CoordSet required, CoordSet native) {
    EconModel m;
    m.universe = universe;
    m.required_axes = std::move(required);
    m.native_axes = std::move(native);
    return m;
}

CoordSet random_axes(std::mt19937_64& rng, int universe) {
    std::vector<int> idx;
    for (int i = 0; i < universe; ++i)
        if (rng() % 2) idx.push_back(i);
    return CoordSet::from_indices(std::move(idx));
}

} // namespace

TEST_CASE("gap report: worked instances") {
    GapReport r = gap_report(model(3, CoordSet{0, 1, 2}, CoordSet{1}));
    CHECK(r.gap == CoordSet{0, 2});
    CHECK(r.tax == 2);
    CHECK(r.conservation_holds);

    GapReport empty = gap_report(model(4, CoordSet{}, CoordSet{0, 3}));
    CHECK(empty.gap.empty());
    CHECK(empty.tax == 0);
    CHECK(empty.conservation_holds);

    // Required axes taken from a real problem's minimum sufficient set.
    CoordSet required = minimal_sufficient_set(weather_problem());
    CHECK(required == CoordSet{0});
    GapReport fromcore = gap_report(model(3, required, CoordSet{1, 2}));
    CHECK(fromcore.gap == CoordSet{0});
    CHECK(fromcore.tax == 1);

    try {
        gap_report(model(2, CoordSet{0, 5}, CoordSet{}));
        FAIL("expected universe check");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UniverseMismatch);
    }
    CHECK_THROWS_AS(gap_report(model(2, CoordSet{0}, CoordSet{3})), Error);
}

TEST_CASE("conservation identity never fails on random models") {
    std::mt19937_64 rng(601);
    for (int t = 0; t < 1000; ++t) {
        const int universe = static_cast<int>(rng() % 12);
        EconModel m =
            model(universe, random_axes(rng, universe), random_axes(rng, universe));
        GapReport r = gap_report(m);
        CHECK(r.conservation_holds);
        // Restated directly: |gap| + |R ∩ A| = |R|.
        CHECK(r.gap.size() +
                  m.required_axes.set_intersect(m.native_axes).size() ==
              m.required_axes.size());
    }
}

TEST_CASE("external work scales linearly in the site count") {
    EconModel m = model(3, CoordSet{0, 1, 2}, CoordSet{1});
    CHECK(total_external_work(m, 4) == 8);
    CHECK(total_external_work(m, 0) == 0);
    EconModel nogap = model(3, CoordSet{1}, CoordSet{0, 1, 2});
    CHECK(total_external_work(nogap, 1000) == 0);

    EconModel weather_gap =
        model(3, minimal_sufficient_set(weather_problem()), CoordSet{1, 2});
    CHECK(total_external_work(weather_gap, 10) == 10);

    std::mt19937_64 rng(602);
    for (int t = 0; t < 200; ++t) {
        const int universe = 1 + static_cast<int>(rng() % 8);
        EconModel r =
            model(universe, random_axes(rng, universe), random_axes(rng, universe));
        const auto n = static_cast<std::int64_t>(rng() % 1000);
        CHECK(total_external_work(r, n + 1) - total_external_work(r, n) ==
              gap_report(r).tax);
    }

    CHECK_THROWS_AS(total_external_work(m, -1), Error);
    try {
        total_external_work(m, std::int64_t{1} << 62); // 2 * 2^62 overflows
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}

TEST_CASE("amortization threshold: worked values and the defining property") {
    EconModel gap2 = model(3, CoordSet{0, 1, 2}, CoordSet{1});
    CHECK(amortization_threshold(Rational(10), gap2) == Rational(5));

    EconModel gap3 = model(3, CoordSet{0, 1, 2}, CoordSet{});
    CHECK(amortization_threshold(Rational(7), gap3) == Rational(7, 3));
    // n = 3 > 7/3 implies hCentral 7 < 3 * 3 = 9.
    CHECK(Rational(7) < Rational(3) * Rational(3));

    EconModel nogap = model(3, CoordSet{1}, CoordSet{0, 1, 2});
    try {
        amortization_threshold(Rational(10), nogap);
        FAIL("expected zero-gap guard");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroGap);
    }

    std::mt19937_64 rng(603);
    for (int t = 0; t < 200; ++t) {
        const int universe = 1 + static_cast<int>(rng() % 8);
        EconModel m =
            model(universe, random_axes(rng, universe), random_axes(rng, universe));
        GapReport r = gap_report(m);
        if (r.tax == 0) continue;
        Rational h(static_cast<std::int64_t>(rng() % 100), 1 + static_cast<std::int64_t>(rng() % 7));
        Rational nstar = amortization_threshold(h, m);
        CHECK(nstar == h / Rational(r.tax));
        for (std::int64_t n = 0; n <= 40; ++n) {
            Rational cost = Rational(n) * Rational(r.tax);
            if (Rational(n) > nstar) CHECK(h < cost);
            if (Rational(n) < nstar) CHECK(h > cost);
        }
    }
}

TEST_CASE("hardness report: totals, efficiency, dominance") {
    HardnessSplit s{Rational(10), Rational(1)};
    HardnessReport r = hardness_report(s, 10);
    CHECK(r.h_total == Rational(20));
    CHECK(r.eta == Rational(1, 2));

    // Fully centralized: eta = 1 regardless of the site count.
    HardnessSplit central{Rational(3), Rational(0)};
    CHECK(hardness_report(central, 0).eta == Rational(1));
    CHECK(hardness_report(central, 1000).eta == Rational(1));

    // Dominance at fixed central hardness: fewer per-site costs, lower total.
    HardnessReport lo = hardness_report(HardnessSplit{Rational(10), Rational(1)}, 5);
    HardnessReport hi = hardness_report(HardnessSplit{Rational(10), Rational(3)}, 5);
    CHECK(lo.h_total == Rational(15));
    CHECK(hi.h_total == Rational(25));
    CHECK(lo.h_total < hi.h_total);

    std::mt19937_64 rng(604);
    for (int t = 0; t < 200; ++t) {
        Rational hc(static_cast<std::int64_t>(rng() % 20), 1 + static_cast<std::int64_t>(rng() % 5));
        Rational d1(static_cast<std::int64_t>(rng() % 20), 1 + static_cast<std::int64_t>(rng() % 5));
        Rational d2 = d1 + Rational(1 + static_cast<std::int64_t>(rng() % 5));
        const auto n = static_cast<std::int64_t>(1 + rng() % 50);
        if (hc == Rational(0) && d1 == Rational(0)) continue;
        HardnessReport a = hardness_report(HardnessSplit{hc, d1}, n);
        HardnessReport b = hardness_report(HardnessSplit{hc, d2}, n);
        CHECK(a.h_total < b.h_total);
        CHECK(a.h_total == hc + Rational(n) * d1);
        if (hc == Rational(0))
            CHECK(a.eta == Rational(0));
        else
            CHECK(a.eta == hc / a.h_total);
    }

    try {
        hardness_report(HardnessSplit{Rational(0), Rational(0)}, 7);
        FAIL("expected degenerate-split guard");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateSplit);
    }
    // Zero distributed hardness with zero sites is degenerate only if central
    // hardness is also zero.
    CHECK(hardness_report(HardnessSplit{Rational(5), Rational(0)}, 0).h_total ==
          Rational(5));
    CHECK_THROWS_AS(hardness_report(HardnessSplit{Rational(-1), Rational(0)}, 1),
                    Error);
}

TEST_CASE("overmodeling comparison: worked values") {
    OverModelParams p;
    p.n = 20;
    p.k = 5;
    p.c_over_per_param = Rational(1);
    p.c_under = Rational(0);
    OvermodelingComparison c = overmodeling_comparison(p);
    CHECK(c.c_find_brute == 1048576u);   // 2^20
    CHECK(c.c_over == Rational(5));
    CHECK(c.overmodeling_wins);          // 5 < 2^20 + 0

    OverModelParams zero;
    OvermodelingComparison z = overmodeling_comparison(zero);
    CHECK(z.c_over == Rational(0));
    CHECK(z.c_find_brute == 1u);         // only the empty subset
    CHECK(z.overmodeling_wins);          // 0 < 1 + 0

    // Boundary: wins is a strict comparison.
    OverModelParams edge;
    edge.n = 1;
    edge.k = 2;
    edge.c_over_per_param = Rational(1);
    edge.c_under = Rational(0);
    CHECK_FALSE(overmodeling_comparison(edge).overmodeling_wins); // 2 == 2

    OverModelParams big;
    big.n = 62;
    CHECK(overmodeling_comparison(big).c_find_brute == (std::uint64_t{1} << 62));
    big.n = 63;
    try {
        overmodeling_comparison(big);
        FAIL("expected overflow guard");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
    OverModelParams neg;
    neg.n = -1;
    CHECK_THROWS_AS(overmodeling_comparison(neg), Error);
}

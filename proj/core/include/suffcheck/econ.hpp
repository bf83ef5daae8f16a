#pragma once

#include <cstdint>

#include "suffcheck/problem.hpp"
#include "suffcheck/rational.hpp"

namespace suffcheck {

// Required versus natively handled analysis axes, both over one universe of
// axis indices 0..universe-1.
struct EconModel {
    int universe = 0;
    CoordSet required_axes; // R
    CoordSet native_axes;   // A

    void require_valid() const; // UniverseMismatch on out-of-universe indices
};

// One-time versus per-site hardness components of a system design.
struct HardnessSplit {
    Rational h_central;
    Rational h_distributed;

    void require_valid() const; // InvalidArgument on negatives
};

// Parameters for the over- versus under-modeling cost comparison.
struct OverModelParams {
    std::int64_t n = 0; // candidate parameter count
    std::int64_t k = 0; // extra parameters carried by the over-complete model
    Rational c_over_per_param;
    Rational c_under;
};

struct GapReport {
    CoordSet gap; // required minus native
    std::int64_t tax = 0;
    bool conservation_holds = false; // |gap| + |required ∩ native| = |required|
};

GapReport gap_report(const EconModel& m);

// site_count * |gap|: the per-use-site external work summed over all sites.
std::int64_t total_external_work(const EconModel& m, std::int64_t site_count);

// n* = h_central / |gap|: sites beyond which the complete model is cheaper.
// ZeroGap when the gap is empty (the threshold is undefined; a complete model
// never strictly wins on this comparison).
Rational amortization_threshold(const Rational& h_central, const EconModel& m);

struct HardnessReport {
    Rational h_total; // h_central + site_count * h_distributed
    Rational eta;     // centralized fraction h_central / h_total
};

// DegenerateSplit when the total hardness is zero.
HardnessReport hardness_report(const HardnessSplit& s, std::int64_t site_count);

struct OvermodelingComparison {
    Rational c_over;              // k * c_over_per_param
    std::uint64_t c_find_brute;   // 2^n subsets to search
    bool overmodeling_wins = false; // c_over < c_find_brute + c_under
};

// Overflow when n exceeds 62 (the subset count must stay a machine count).
OvermodelingComparison overmodeling_comparison(const OverModelParams& p);

} // namespace suffcheck

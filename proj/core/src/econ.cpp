#include "suffcheck/econ.hpp"

#include <limits>

namespace suffcheck {

void EconModel::require_valid() const {
    if (universe < 0)
        raise(ErrorCode::UniverseMismatch, "negative universe size");
    for (const CoordSet* s : {&required_axes, &native_axes})
        for (int i : s->indices())
            if (i >= universe)
                raise(ErrorCode::UniverseMismatch,
                      "axis " + std::to_string(i) + " outside universe of size " +
                          std::to_string(universe));
}

void HardnessSplit::require_valid() const {
    if (h_central.is_negative() || h_distributed.is_negative())
        raise(ErrorCode::InvalidArgument, "hardness components must be nonnegative");
}

GapReport gap_report(const EconModel& m) {
    m.require_valid();
    GapReport r;
    r.gap = m.required_axes.set_minus(m.native_axes);
    r.tax = r.gap.size();
    // A set identity; reported so downstream consumers can assert it.
    r.conservation_holds =
        r.gap.size() + m.required_axes.set_intersect(m.native_axes).size() ==
        m.required_axes.size();
    return r;
}

std::int64_t total_external_work(const EconModel& m, std::int64_t site_count) {
    if (site_count < 0)
        raise(ErrorCode::InvalidArgument, "site count must be nonnegative");
    const std::int64_t gap = gap_report(m).tax;
    if (gap > 0 && site_count > std::numeric_limits<std::int64_t>::max() / gap)
        raise(ErrorCode::Overflow, "external work exceeds the count range");
    return site_count * gap;
}

Rational amortization_threshold(const Rational& h_central, const EconModel& m) {
    if (h_central.is_negative())
        raise(ErrorCode::InvalidArgument, "central hardness must be nonnegative");
    const std::int64_t gap = gap_report(m).tax;
    if (gap == 0)
        raise(ErrorCode::ZeroGap,
              "empty gap: amortization threshold undefined (complete model "
              "never strictly cheaper)");
    return h_central / Rational(gap);
}

HardnessReport hardness_report(const HardnessSplit& s, std::int64_t site_count) {
    s.require_valid();
    if (site_count < 0)
        raise(ErrorCode::InvalidArgument, "site count must be nonnegative");
    HardnessReport r;
    r.h_total = s.h_central + Rational(site_count) * s.h_distributed;
    if (r.h_total.is_zero())
        raise(ErrorCode::DegenerateSplit, "total hardness is zero; eta undefined");
    r.eta = s.h_central / r.h_total;
    return r;
}

OvermodelingComparison overmodeling_comparison(const OverModelParams& p) {
    if (p.n < 0 || p.k < 0)
        raise(ErrorCode::InvalidArgument, "parameter counts must be nonnegative");
    if (p.c_over_per_param.is_negative() || p.c_under.is_negative())
        raise(ErrorCode::InvalidArgument, "costs must be nonnegative");
    if (p.n > 62)
        raise(ErrorCode::Overflow,
              "2^" + std::to_string(p.n) + " subsets exceed the count range");
    OvermodelingComparison r;
    r.c_over = Rational(p.k) * p.c_over_per_param;
    r.c_find_brute = std::uint64_t{1} << p.n;
    r.overmodeling_wins =
        r.c_over < Rational(static_cast<std::int64_t>(r.c_find_brute)) + p.c_under;
    return r;
}

} // namespace suffcheck

#pragma once

#include <optional>
#include <vector>

#include "suffcheck/engine.hpp"
#include "suffcheck/problem.hpp"

namespace suffcheck {

// Assignment of a concrete value to every coordinate in a set.
struct AnchorAssignment {
    CoordSet coords;
    std::vector<int> values; // aligned with coords.indices()

    bool operator==(const AnchorAssignment&) const = default;
};

// Lexicographically first assignment alpha to `coords` whose induced subcube
// { s : s_coords = alpha } has a constant optimal-action set; nullopt if no
// assignment qualifies. Enumeration is mixed-radix ascending over the
// coordinates in index order, matching the state encoding.
std::optional<AnchorAssignment>
anchor_sufficiency(const DecisionProblem& p, const CoordSet& coords,
                   std::uint64_t state_cap = kDefaultStateCap);

// Independent full-subcube re-check: walks every state of alpha's subcube in
// lexicographic order and compares optimal sets directly.
bool subcube_has_constant_opt(const DecisionProblem& p,
                              const AnchorAssignment& alpha,
                              std::uint64_t state_cap = kDefaultStateCap);

} // namespace suffcheck

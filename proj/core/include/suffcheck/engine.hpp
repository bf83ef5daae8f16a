#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "suffcheck/problem.hpp"

namespace suffcheck {

// All engine operations are pure functions over immutable inputs; results are
// deterministic (witnesses are lexicographically first in the mixed-radix
// state order, coordinate 0 most significant).

// Optimal-action set at a state: all actions attaining the exact maximum
// utility. Never empty.
OptSet opt(const DecisionProblem& p, const State& s);
OptSet opt_at(const DecisionProblem& p, std::uint64_t state_index);

// Subvector of s at the given coordinates, ascending index order.
std::vector<int> project(const State& s, const CoordSet& coords);

// Per-state optimizer map with the distinct optimal sets interned: states s
// and s' satisfy opt(s) == opt(s') iff their ids match.
struct OptTable {
    std::vector<std::int32_t> id_by_state;
    std::vector<OptSet> sets; // indexed by id
};
OptTable compute_opt_table(const DecisionProblem& p,
                           std::uint64_t state_cap = kDefaultStateCap);

// True iff the optimizer map is constant on every equivalence class of states
// agreeing on `coords`.
bool is_sufficient(const DecisionProblem& p, const CoordSet& coords,
                   std::uint64_t state_cap = kDefaultStateCap);

// Empty iff `coords` is sufficient; otherwise the lexicographically first
// violating pair (s before s', both minimal in state-encoding order).
std::optional<InsufficiencyWitness>
insufficiency_witness(const DecisionProblem& p, const CoordSet& coords,
                      std::uint64_t state_cap = kDefaultStateCap);

// Coordinates i witnessed by two states differing only at i with different
// optimal sets.
CoordSet relevant_coordinates(const DecisionProblem& p,
                              std::uint64_t state_cap = kDefaultStateCap);

// The unique minimum sufficient set; coincides with the relevant coordinates.
CoordSet minimal_sufficient_set(const DecisionProblem& p,
                                std::uint64_t state_cap = kDefaultStateCap);

// Fraction of actions optimal for at least one state in s's equivalence
// class under `coords`, as an exact rational.
Rational decision_quotient(const DecisionProblem& p, const CoordSet& coords,
                           const State& s, std::uint64_t state_cap = kDefaultStateCap);

// Sufficiency decided through the decision-quotient characterization:
// `coords` is sufficient iff DQ(s) == |opt(s)| / |A| at every state. Kept as
// a second computational route; must agree with is_sufficient.
bool sufficiency_via_dq(const DecisionProblem& p, const CoordSet& coords,
                        std::uint64_t state_cap = kDefaultStateCap);

} // namespace suffcheck

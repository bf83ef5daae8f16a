#pragma once

#include <optional>
#include <vector>

#include "suffcheck/engine.hpp"
#include "suffcheck/problem.hpp"

namespace suffcheck {

// Per-node summary budget for the tree relevance decomposition; beyond it the
// computation falls back to the explicit oracle.
inline constexpr std::uint64_t kDefaultTreeBudget = 100'000;

// Additive split u(a,s) = f(a) + g(s). g never affects the optimal action but
// is kept so the split reproduces the source table exactly.
struct SeparableUtility {
    std::vector<std::string> action_labels;
    std::vector<CoordinateDomain> domains;
    std::vector<Rational> f; // per action
    std::vector<Rational> g; // per state index

    bool operator==(const SeparableUtility&) const = default;
};

// Some split iff for every action the difference to the first action is
// state-independent. The split is anchored at the first state: f(a) = u(a,s0),
// g(s) = u(a0,s) - u(a0,s0).
std::optional<SeparableUtility>
detect_separable(const DecisionProblem& p, std::uint64_t state_cap = kDefaultStateCap);

// Argmax of f; the empty coordinate set is sufficient for any separable table.
OptSet solve_separable(const SeparableUtility& sep);

// Materializes f + g back into an explicit problem.
DecisionProblem expand_separable(const SeparableUtility& sep,
                                 std::uint64_t state_cap = kDefaultStateCap);

// Utility that decomposes over a rooted tree of coordinates:
// u(a,s) = sum_i factor_i(a, s_i, s_parent(i)), root factor on (a, s_root).
// Node 0 is the root (parent -1); every other node's parent precedes it.
struct TreeUtility {
    std::vector<std::string> action_labels;
    std::vector<CoordinateDomain> domains;
    std::vector<int> parent; // parent[0] = -1; 0 <= parent[i] < i otherwise
    // factors[i][(a * d_i + v) * dp + pv], dp = parent domain size (1 at root)
    std::vector<std::vector<Rational>> factors;

    bool operator==(const TreeUtility&) const = default;
};

// Shape validation: parent ordering, domain sizes, factor table dimensions.
void require_valid(const TreeUtility& tu);

// Rational lookup into a node's factor table.
const Rational& tree_factor(const TreeUtility& tu, int node, int action, int value,
                            int parent_value);

// Explicit problem with the summed utility.
DecisionProblem expand_tree(const TreeUtility& tu,
                            std::uint64_t state_cap = kDefaultStateCap);

// Optimal actions at one state in O(n * |actions|) without materializing.
OptSet tree_opt(const TreeUtility& tu, const State& s);

// Exactly the relevant coordinates of the expanded problem. Strategy: a
// bottom-up/top-down aggregation of achievable utility-residue summaries over
// the tree; whenever a summary would exceed `budget` entries the computation
// falls back to expand_tree plus the core oracle (then subject to state_cap).
CoordSet tree_relevant_coordinates(const TreeUtility& tu,
                                   std::uint64_t budget = kDefaultTreeBudget,
                                   std::uint64_t state_cap = kDefaultStateCap);

// Utility linear in the (numeric) coordinate values: u(a,s) = w_a . s.
struct LinearUtility {
    std::vector<std::string> action_labels;
    std::vector<std::vector<Rational>> weights; // [action][coordinate]

    int coordinate_count() const {
        return weights.empty() ? 0 : static_cast<int>(weights.front().size());
    }

    bool operator==(const LinearUtility&) const = default;
};

void require_valid(const LinearUtility& lin);

// Coordinates where some pair of actions disagrees on the weight. An
// over-approximation of relevance in the materialized problem: equal-weight
// coordinates can never matter, differing ones might not (e.g. singleton
// domains).
CoordSet linear_relevance(const LinearUtility& lin);

// Materializes the linear utility over the given domains, coordinate values
// interpreted as the integers 0..size-1.
DecisionProblem expand_linear(const LinearUtility& lin,
                              const std::vector<CoordinateDomain>& domains,
                              std::uint64_t state_cap = kDefaultStateCap);

} // namespace suffcheck

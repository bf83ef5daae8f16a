#pragma once

// Shared fixtures, random generators, and independent oracles for the test
// suite. The oracles deliberately use the naive definitional algorithms so
// they fail independently of the engine under test.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "suffcheck/anchor.hpp"
#include "suffcheck/econ.hpp"
#include "suffcheck/engine.hpp"
#include "suffcheck/formula.hpp"
#include "suffcheck/problem.hpp"
#include "suffcheck/tractable.hpp"

namespace testsupport {

using namespace suffcheck;

// ---- fixtures -------------------------------------------------------------

// Two actions (carry, dont), three coordinates: rain forecast (binary),
// temperature (binary), weekday (7 values). Utility of carrying is -1
// normally and 2 under rain; not carrying is 0 normally and -2 under rain.
// Only the rain coordinate matters.
inline DecisionProblem weather_problem() {
    std::vector<CoordinateDomain> domains;
    domains.emplace_back(2, std::vector<std::string>{"norain", "rain"});
    domains.emplace_back(2, std::vector<std::string>{"cold", "hot"});
    domains.emplace_back(
        7, std::vector<std::string>{"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"});
    return DecisionProblem::from_function(
        {"carry", "dont"}, std::move(domains), [](int a, const State& s) {
            const bool rain = s.values[0] == 1;
            if (a == 0)
                return Rational(rain ? 2 : -1);
            return Rational(rain ? -2 : 0);
        });
}

// Two binary coordinates in a chain (1's parent is 0), two actions:
// action a scores the root value, action b scores the child value.
inline TreeUtility chain_tree() {
    TreeUtility tu;
    tu.action_labels = {"a", "b"};
    tu.domains = {CoordinateDomain(2), CoordinateDomain(2)};
    tu.parent = {-1, 0};
    // factors[0][(a*2+v)*1+0]: a -> v, b -> 0
    tu.factors.push_back({Rational(0), Rational(1), Rational(0), Rational(0)});
    // factors[1][(a*2+v)*2+pv]: a -> 0, b -> v
    tu.factors.push_back({Rational(0), Rational(0), Rational(0), Rational(0),
                          Rational(0), Rational(0), Rational(1), Rational(1)});
    return tu;
}

inline DecisionProblem constant_problem(int actions, std::vector<int> sizes) {
    std::vector<CoordinateDomain> domains;
    for (int s : sizes)
        domains.emplace_back(s);
    std::vector<std::string> labels;
    for (int a = 0; a < actions; ++a)
        labels.push_back("a" + std::to_string(a));
    return DecisionProblem::from_function(
        labels, std::move(domains),
        [](int, const State&) { return Rational(1); });
}

// ---- random generators ----------------------------------------------------

struct ProblemShape {
    int max_coords = 5;
    int max_domain = 3;
    int max_actions = 4;
    int min_coords = 0;
    int utility_range = 4; // values drawn from 0..range
};

inline DecisionProblem random_problem(std::mt19937_64& rng,
                                      const ProblemShape& shape = {}) {
    std::uniform_int_distribution<int> coord_count(shape.min_coords, shape.max_coords);
    std::uniform_int_distribution<int> domain(1, shape.max_domain);
    std::uniform_int_distribution<int> actions(1, shape.max_actions);
    std::uniform_int_distribution<int> value(0, shape.utility_range);
    const int n = coord_count(rng);
    std::vector<CoordinateDomain> domains;
    for (int i = 0; i < n; ++i)
        domains.emplace_back(domain(rng));
    const int a_count = actions(rng);
    std::vector<std::string> labels;
    for (int a = 0; a < a_count; ++a)
        labels.push_back("a" + std::to_string(a));
    return DecisionProblem::from_function(
        labels, std::move(domains),
        [&](int, const State&) { return Rational(value(rng)); });
}

// Random formula over exactly `vars` variables (each referenced at most
// `vars`-indexed; the count is forced so splits line up).
inline Formula random_formula(std::mt19937_64& rng, int vars, int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> var(0, vars - 1);
    if (depth == 0 || pick(rng) == 0) {
        if (vars == 0)
            return Formula::constant(pick(rng) % 2 == 0);
        return Formula::var(var(rng));
    }
    switch (pick(rng)) {
    case 1:
        return Formula::negation(random_formula(rng, vars, depth - 1));
    case 2:
        return Formula::conjunction(random_formula(rng, vars, depth - 1),
                                    random_formula(rng, vars, depth - 1));
    case 3:
        return Formula::disjunction(random_formula(rng, vars, depth - 1),
                                    random_formula(rng, vars, depth - 1));
    case 4:
        return Formula::implication(random_formula(rng, vars, depth - 1),
                                    random_formula(rng, vars, depth - 1));
    default:
        if (vars == 0)
            return Formula::constant(true);
        return Formula::var(var(rng));
    }
}

// As above but with var_count forced to exactly `vars`.
inline Formula random_formula_exact(std::mt19937_64& rng, int vars, int depth) {
    return random_formula(rng, vars, depth).with_var_count(vars);
}

inline TreeUtility random_tree(std::mt19937_64& rng, int max_nodes = 6,
                               int max_domain = 3, int max_actions = 3) {
    std::uniform_int_distribution<int> node_count(1, max_nodes);
    std::uniform_int_distribution<int> domain(1, max_domain);
    std::uniform_int_distribution<int> actions(1, max_actions);
    std::uniform_int_distribution<int> value(-3, 3);
    TreeUtility tu;
    const int n = node_count(rng);
    const int a_count = actions(rng);
    for (int a = 0; a < a_count; ++a)
        tu.action_labels.push_back("a" + std::to_string(a));
    for (int i = 0; i < n; ++i)
        tu.domains.emplace_back(domain(rng));
    tu.parent.push_back(-1);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        tu.parent.push_back(parent(rng));
    }
    for (int i = 0; i < n; ++i) {
        const int d = tu.domains[static_cast<std::size_t>(i)].size;
        const int dp =
            i == 0 ? 1 : tu.domains[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(i)])].size;
        std::vector<Rational> table;
        for (int c = 0; c < a_count * d * dp; ++c)
            table.emplace_back(value(rng));
        tu.factors.push_back(std::move(table));
    }
    return tu;
}

// ---- independent oracles --------------------------------------------------

// All-pairs sufficiency straight from the definition.
inline bool sufficient_all_pairs(const DecisionProblem& p, const CoordSet& coords) {
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            const State a = sp.state_at(i);
            const State b = sp.state_at(j);
            bool agree = true;
            for (int c : coords.indices())
                if (a.values[static_cast<std::size_t>(c)] !=
                    b.values[static_cast<std::size_t>(c)]) {
                    agree = false;
                    break;
                }
            if (agree && !(opt(p, a) == opt(p, b)))
                return false;
        }
    }
    return true;
}

// Naive single-flip relevance: try every pair differing at exactly one
// coordinate.
inline CoordSet relevant_naive(const DecisionProblem& p) {
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    std::vector<int> out;
    for (int c = 0; c < sp.coordinate_count(); ++c) {
        bool found = false;
        for (std::uint64_t i = 0; i < n && !found; ++i) {
            const State a = sp.state_at(i);
            for (int v = 0; v < sp.domain_size(c) && !found; ++v) {
                if (v == a.values[static_cast<std::size_t>(c)])
                    continue;
                State b = a;
                b.values[static_cast<std::size_t>(c)] = v;
                if (!(opt(p, a) == opt(p, b)))
                    found = true;
            }
        }
        if (found)
            out.push_back(c);
    }
    return CoordSet::from_indices(std::move(out));
}

// Enumerate every subset of coordinates (n small) in size-then-lex order and
// return the first sufficient one, using the all-pairs oracle.
inline CoordSet smallest_sufficient_subset(const DecisionProblem& p) {
    const int n = p.coordinate_count();
    std::optional<CoordSet> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        CoordSet cs = CoordSet::from_indices(std::move(idx));
        if (sufficient_all_pairs(p, cs)) {
            if (!best || cs.size() < best->size())
                best = cs;
        }
    }
    return *best; // full set is always sufficient
}

// Formula evaluation on an explicit operator stack (no recursion), used to
// cross-check the recursive evaluator.
inline bool eval_iterative(const Formula& f, const std::vector<bool>& a) {
    struct Frame {
        const FormulaNode* node;
        int stage;
    };
    std::vector<Frame> work{{f.root().get(), 0}};
    std::vector<bool> values;
    while (!work.empty()) {
        Frame fr = work.back();
        work.pop_back();
        const FormulaNode* n = fr.node;
        if (fr.stage == 0) {
            switch (n->kind) {
            case NodeKind::Const:
                values.push_back(n->value);
                break;
            case NodeKind::Var:
                values.push_back(a[static_cast<std::size_t>(n->var)]);
                break;
            case NodeKind::Not:
                work.push_back({n, 1});
                work.push_back({n->left.get(), 0});
                break;
            default:
                work.push_back({n, 1});
                work.push_back({n->right.get(), 0});
                work.push_back({n->left.get(), 0});
                break;
            }
        } else {
            if (n->kind == NodeKind::Not) {
                values.back() = !values.back();
            } else {
                const bool r = values.back();
                values.pop_back();
                const bool l = values.back();
                values.pop_back();
                switch (n->kind) {
                case NodeKind::And: values.push_back(l && r); break;
                case NodeKind::Or: values.push_back(l || r); break;
                default: values.push_back(!l || r); break;
                }
            }
        }
    }
    return values.back();
}

// Exhaustive tautology check via the iterative evaluator.
inline bool tautology_iterative(const Formula& f) {
    const int n = f.var_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1u) != 0;
        if (!eval_iterative(f, a))
            return false;
    }
    return true;
}

} // namespace testsupport

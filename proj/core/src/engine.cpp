#include "suffcheck/engine.hpp"

#include <algorithm>
#include <map>

namespace suffcheck {

namespace {

void require_within_cap(const DecisionProblem& p, std::uint64_t state_cap) {
    if (p.space().state_count() > state_cap) {
        raise(ErrorCode::StateSpaceTooLarge,
              "state space has " + std::to_string(p.space().state_count()) +
                  " states, cap is " + std::to_string(state_cap));
    }
}

} // namespace

OptSet opt_at(const DecisionProblem& p, std::uint64_t state_index) {
    const int actions = p.action_count();
    OptSet best;
    best.actions.push_back(0);
    const Rational* best_u = &p.utility(0, state_index);
    for (int a = 1; a < actions; ++a) {
        const Rational& u = p.utility(a, state_index);
        if (u > *best_u) {
            best.actions.clear();
            best.actions.push_back(a);
            best_u = &u;
        } else if (u == *best_u) {
            best.actions.push_back(a);
        }
    }
    return best;
}

OptSet opt(const DecisionProblem& p, const State& s) {
    p.space().require_valid(s);
    return opt_at(p, p.space().index_of(s));
}

std::vector<int> project(const State& s, const CoordSet& coords) {
    coords.require_valid_for(s.size());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(coords.size()));
    for (int i : coords.indices())
        out.push_back(s.values[static_cast<std::size_t>(i)]);
    return out;
}

OptTable compute_opt_table(const DecisionProblem& p, std::uint64_t state_cap) {
    require_within_cap(p, state_cap);
    const std::uint64_t n = p.space().state_count();
    OptTable table;
    table.id_by_state.resize(n);
    std::map<std::vector<int>, std::int32_t> interned;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        OptSet o = opt_at(p, idx);
        auto it = interned.find(o.actions);
        std::int32_t id;
        if (it == interned.end()) {
            id = static_cast<std::int32_t>(table.sets.size());
            interned.emplace(o.actions, id);
            table.sets.push_back(std::move(o));
        } else {
            id = it->second;
        }
        table.id_by_state[idx] = id;
    }
    return table;
}

namespace {

// Projection keys for every state, plus per-key first-seen bookkeeping, shared
// by the sufficiency routines. Keys fit in a dense vector because the
// projection count never exceeds the state count.
struct ClassIndex {
    std::vector<std::int64_t> first_state; // by key; -1 = unseen
    explicit ClassIndex(std::uint64_t key_count)
        : first_state(key_count, -1) {}
};

} // namespace

bool is_sufficient(const DecisionProblem& p, const CoordSet& coords,
                   std::uint64_t state_cap) {
    coords.require_valid_for(p.coordinate_count());
    OptTable table = compute_opt_table(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    ClassIndex cls(sp.projection_count(coords));
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint64_t key = sp.projection_key(idx, coords);
        std::int64_t& first = cls.first_state[key];
        if (first < 0) {
            first = static_cast<std::int64_t>(idx);
        } else if (table.id_by_state[idx] !=
                   table.id_by_state[static_cast<std::uint64_t>(first)]) {
            return false;
        }
    }
    return true;
}

std::optional<InsufficiencyWitness>
insufficiency_witness(const DecisionProblem& p, const CoordSet& coords,
                      std::uint64_t state_cap) {
    coords.require_valid_for(p.coordinate_count());
    OptTable table = compute_opt_table(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    ClassIndex cls(sp.projection_count(coords));
    std::vector<char> settled(cls.first_state.size(), 0);

    // The lexicographically first violating pair is always (f, m) where f is
    // the first member of a non-constant class and m is the first member whose
    // optimal set differs from f's; across classes the smallest such f wins.
    std::int64_t best_s = -1, best_sp = -1;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint64_t key = sp.projection_key(idx, coords);
        std::int64_t& first = cls.first_state[key];
        if (first < 0) {
            first = static_cast<std::int64_t>(idx);
            continue;
        }
        if (settled[key])
            continue;
        if (table.id_by_state[idx] !=
            table.id_by_state[static_cast<std::uint64_t>(first)]) {
            settled[key] = 1;
            if (best_s < 0 || first < best_s) {
                best_s = first;
                best_sp = static_cast<std::int64_t>(idx);
            }
        }
    }
    if (best_s < 0)
        return std::nullopt;
    InsufficiencyWitness w;
    w.s = sp.state_at(static_cast<std::uint64_t>(best_s));
    w.s_prime = sp.state_at(static_cast<std::uint64_t>(best_sp));
    w.opt_s = table.sets[static_cast<std::size_t>(
        table.id_by_state[static_cast<std::uint64_t>(best_s)])];
    w.opt_s_prime = table.sets[static_cast<std::size_t>(
        table.id_by_state[static_cast<std::uint64_t>(best_sp)])];
    return w;
}

CoordSet relevant_coordinates(const DecisionProblem& p, std::uint64_t state_cap) {
    OptTable table = compute_opt_table(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    std::vector<int> relevant;
    for (int i = 0; i < sp.coordinate_count(); ++i) {
        const int d = sp.domain_size(i);
        if (d < 2)
            continue;
        const std::uint64_t st = sp.stride(i);
        bool found = false;
        // Two states differ only at coordinate i iff they lie on a common
        // i-line; the optimizer varies on a line iff it varies between some
        // adjacent pair along it.
        for (std::uint64_t idx = 0; idx < n && !found; ++idx) {
            if (sp.digit(idx, i) == d - 1)
                continue;
            if (table.id_by_state[idx] != table.id_by_state[idx + st])
                found = true;
        }
        if (found)
            relevant.push_back(i);
    }
    return CoordSet::from_indices(std::move(relevant));
}

CoordSet minimal_sufficient_set(const DecisionProblem& p, std::uint64_t state_cap) {
    // The minimum sufficient set exists, is unique, and equals the relevant
    // coordinate set: every sufficient set contains every relevant coordinate,
    // and the relevant set is itself sufficient.
    return relevant_coordinates(p, state_cap);
}

Rational decision_quotient(const DecisionProblem& p, const CoordSet& coords,
                           const State& s, std::uint64_t state_cap) {
    coords.require_valid_for(p.coordinate_count());
    p.space().require_valid(s);
    require_within_cap(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    const std::uint64_t key = sp.projection_key(sp.index_of(s), coords);
    std::vector<char> seen(static_cast<std::size_t>(p.action_count()), 0);
    std::int64_t distinct = 0;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (sp.projection_key(idx, coords) != key)
            continue;
        for (int a : opt_at(p, idx).actions) {
            if (!seen[static_cast<std::size_t>(a)]) {
                seen[static_cast<std::size_t>(a)] = 1;
                ++distinct;
            }
        }
    }
    return Rational(distinct, static_cast<std::int64_t>(p.action_count()));
}

bool sufficiency_via_dq(const DecisionProblem& p, const CoordSet& coords,
                        std::uint64_t state_cap) {
    coords.require_valid_for(p.coordinate_count());
    OptTable table = compute_opt_table(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    const std::uint64_t keys = sp.projection_count(coords);

    // Union of optimal sets per equivalence class, counted once per action.
    std::vector<std::vector<char>> seen(keys);
    std::vector<std::int64_t> union_size(keys, 0);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint64_t key = sp.projection_key(idx, coords);
        auto& flags = seen[key];
        if (flags.empty())
            flags.assign(static_cast<std::size_t>(p.action_count()), 0);
        for (int a : table.sets[static_cast<std::size_t>(table.id_by_state[idx])].actions) {
            if (!flags[static_cast<std::size_t>(a)]) {
                flags[static_cast<std::size_t>(a)] = 1;
                ++union_size[key];
            }
        }
    }
    // coords is sufficient iff at every state the decision quotient equals
    // |opt(s)| / |actions|; with a common denominator that is a numerator
    // comparison against the class union size.
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint64_t key = sp.projection_key(idx, coords);
        const auto& o = table.sets[static_cast<std::size_t>(table.id_by_state[idx])];
        if (union_size[key] != static_cast<std::int64_t>(o.actions.size()))
            return false;
    }
    return true;
}

} // namespace suffcheck

#include "suffcheck/anchor.hpp"

#include <algorithm>

namespace suffcheck {

std::optional<AnchorAssignment>
anchor_sufficiency(const DecisionProblem& p, const CoordSet& coords,
                   std::uint64_t state_cap) {
    coords.require_valid_for(p.coordinate_count());
    OptTable table = compute_opt_table(p, state_cap);
    const StateSpace& sp = p.space();
    const std::uint64_t n = sp.state_count();
    const std::uint64_t keys = sp.projection_count(coords);

    // Per candidate assignment (= projection key): first seen optimizer id,
    // or -2 once a mismatch breaks constancy.
    std::vector<std::int64_t> status(keys, -1);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint64_t key = sp.projection_key(idx, coords);
        std::int64_t& st = status[key];
        if (st == -1)
            st = table.id_by_state[idx];
        else if (st >= 0 && st != table.id_by_state[idx])
            st = -2;
    }
    // Keys ascend exactly as assignments do lexicographically (coordinate of
    // lowest index most significant).
    for (std::uint64_t key = 0; key < keys; ++key) {
        if (status[key] < 0)
            continue;
        AnchorAssignment alpha;
        alpha.coords = coords;
        alpha.values.resize(static_cast<std::size_t>(coords.size()));
        std::uint64_t rest = key;
        for (int pos = coords.size() - 1; pos >= 0; --pos) {
            const int i = coords.indices()[static_cast<std::size_t>(pos)];
            const std::uint64_t d = static_cast<std::uint64_t>(sp.domain_size(i));
            alpha.values[static_cast<std::size_t>(pos)] = static_cast<int>(rest % d);
            rest /= d;
        }
        return alpha;
    }
    return std::nullopt;
}

bool subcube_has_constant_opt(const DecisionProblem& p,
                              const AnchorAssignment& alpha,
                              std::uint64_t state_cap) {
    alpha.coords.require_valid_for(p.coordinate_count());
    if (alpha.values.size() != static_cast<std::size_t>(alpha.coords.size()))
        raise(ErrorCode::LengthMismatch, "assignment length != coordinate count");
    const StateSpace& sp = p.space();
    if (sp.state_count() > state_cap)
        raise(ErrorCode::StateSpaceTooLarge,
              "state space exceeds cap " + std::to_string(state_cap));

    State s;
    s.values.assign(static_cast<std::size_t>(p.coordinate_count()), 0);
    for (int pos = 0; pos < alpha.coords.size(); ++pos) {
        const int i = alpha.coords.indices()[static_cast<std::size_t>(pos)];
        const int v = alpha.values[static_cast<std::size_t>(pos)];
        if (v < 0 || v >= sp.domain_size(i))
            raise(ErrorCode::InvalidState,
                  "assignment value " + std::to_string(v) +
                      " out of domain at coordinate " + std::to_string(i));
        s.values[static_cast<std::size_t>(i)] = v;
    }
    std::vector<int> free_coords;
    for (int i = 0; i < p.coordinate_count(); ++i)
        if (!alpha.coords.contains(i))
            free_coords.push_back(i);

    // Odometer over the free coordinates, lowest index most significant, so
    // the subcube walk follows the global lexicographic order.
    std::optional<OptSet> first;
    for (;;) {
        OptSet o = opt(p, s);
        if (!first)
            first = std::move(o);
        else if (!(o == *first))
            return false;
        int pos = static_cast<int>(free_coords.size()) - 1;
        for (; pos >= 0; --pos) {
            const int i = free_coords[static_cast<std::size_t>(pos)];
            int& v = s.values[static_cast<std::size_t>(i)];
            if (++v < sp.domain_size(i))
                break;
            v = 0;
        }
        if (pos < 0)
            return true;
    }
}

} // namespace suffcheck

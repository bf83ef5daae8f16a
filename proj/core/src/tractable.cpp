#include "suffcheck/tractable.hpp"

#include <algorithm>

namespace suffcheck {

std::optional<SeparableUtility> detect_separable(const DecisionProblem& p,
                                                 std::uint64_t state_cap) {
    const std::uint64_t n = p.space().state_count();
    if (n > state_cap)
        raise(ErrorCode::StateSpaceTooLarge,
              "state space exceeds cap " + std::to_string(state_cap));
    const int actions = p.action_count();
    for (int a = 1; a < actions; ++a) {
        const Rational delta = p.utility(a, 0) - p.utility(0, 0);
        for (std::uint64_t idx = 1; idx < n; ++idx)
            if (p.utility(a, idx) - p.utility(0, idx) != delta)
                return std::nullopt;
    }
    SeparableUtility sep;
    sep.action_labels = p.action_labels();
    sep.domains = p.domains();
    sep.f.reserve(static_cast<std::size_t>(actions));
    for (int a = 0; a < actions; ++a)
        sep.f.push_back(p.utility(a, 0)); // f(a) = u(a, s0)
    sep.g.reserve(n);
    for (std::uint64_t idx = 0; idx < n; ++idx)
        sep.g.push_back(p.utility(0, idx) - p.utility(0, 0));
    return sep;
}

OptSet solve_separable(const SeparableUtility& sep) {
    if (sep.f.empty())
        raise(ErrorCode::InvalidArgument, "separable utility has no actions");
    OptSet best;
    best.actions.push_back(0);
    for (int a = 1; a < static_cast<int>(sep.f.size()); ++a) {
        const Rational& v = sep.f[static_cast<std::size_t>(a)];
        const Rational& cur = sep.f[static_cast<std::size_t>(best.actions.front())];
        if (v > cur) {
            best.actions.assign(1, a);
        } else if (v == cur) {
            best.actions.push_back(a);
        }
    }
    return best;
}

DecisionProblem expand_separable(const SeparableUtility& sep,
                                 std::uint64_t state_cap) {
    std::vector<int> sizes;
    sizes.reserve(sep.domains.size());
    for (const auto& d : sep.domains)
        sizes.push_back(d.size);
    const StateSpace sp(std::move(sizes));
    if (sep.g.size() != sp.state_count())
        raise(ErrorCode::LengthMismatch, "g table does not cover the state space");
    return DecisionProblem::from_function(
        sep.action_labels, sep.domains,
        [&](int a, const State& s) {
            return sep.f[static_cast<std::size_t>(a)] + sep.g[sp.index_of(s)];
        },
        state_cap);
}

void require_valid(const TreeUtility& tu) {
    const int n = static_cast<int>(tu.parent.size());
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "tree utility needs at least one node");
    if (tu.action_labels.empty())
        raise(ErrorCode::InvalidArgument, "tree utility needs at least one action");
    if (static_cast<int>(tu.domains.size()) != n ||
        static_cast<int>(tu.factors.size()) != n)
        raise(ErrorCode::LengthMismatch,
              "domains, parent, and factors must all have one entry per node");
    if (tu.parent[0] != -1)
        raise(ErrorCode::InvalidArgument, "node 0 must be the root (parent -1)");
    const int actions = static_cast<int>(tu.action_labels.size());
    for (int i = 0; i < n; ++i) {
        if (i > 0 && (tu.parent[static_cast<std::size_t>(i)] < 0 ||
                      tu.parent[static_cast<std::size_t>(i)] >= i))
            raise(ErrorCode::InvalidArgument,
                  "parent of node " + std::to_string(i) + " must precede it");
        const int d = tu.domains[static_cast<std::size_t>(i)].size;
        if (d < 1)
            raise(ErrorCode::InvalidArgument, "empty domain at node " + std::to_string(i));
        const int dp =
            i == 0 ? 1 : tu.domains[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(i)])].size;
        const std::size_t want =
            static_cast<std::size_t>(actions) * static_cast<std::size_t>(d) *
            static_cast<std::size_t>(dp);
        if (tu.factors[static_cast<std::size_t>(i)].size() != want)
            raise(ErrorCode::LengthMismatch,
                  "factor table of node " + std::to_string(i) + " has " +
                      std::to_string(tu.factors[static_cast<std::size_t>(i)].size()) +
                      " entries, expected " + std::to_string(want));
    }
}

const Rational& tree_factor(const TreeUtility& tu, int node, int action, int value,
                            int parent_value) {
    const int d = tu.domains[static_cast<std::size_t>(node)].size;
    const int dp =
        node == 0 ? 1
                  : tu.domains[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(node)])].size;
    return tu.factors[static_cast<std::size_t>(node)][static_cast<std::size_t>(
        (action * d + value) * dp + parent_value)];
}

DecisionProblem expand_tree(const TreeUtility& tu, std::uint64_t state_cap) {
    require_valid(tu);
    return DecisionProblem::from_function(
        tu.action_labels, tu.domains,
        [&](int a, const State& s) {
            Rational sum(0);
            for (int i = 0; i < static_cast<int>(tu.parent.size()); ++i) {
                const int pv =
                    i == 0 ? 0
                           : s.values[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(i)])];
                sum += tree_factor(tu, i, a, s.values[static_cast<std::size_t>(i)], pv);
            }
            return sum;
        },
        state_cap);
}

OptSet tree_opt(const TreeUtility& tu, const State& s) {
    require_valid(tu);
    const int n = static_cast<int>(tu.parent.size());
    if (s.size() != n)
        raise(ErrorCode::InvalidState, "state has wrong coordinate count");
    for (int i = 0; i < n; ++i)
        if (s.values[static_cast<std::size_t>(i)] < 0 ||
            s.values[static_cast<std::size_t>(i)] >= tu.domains[static_cast<std::size_t>(i)].size)
            raise(ErrorCode::InvalidState,
                  "value out of domain at coordinate " + std::to_string(i));
    const int actions = static_cast<int>(tu.action_labels.size());
    OptSet best;
    Rational best_u;
    for (int a = 0; a < actions; ++a) {
        Rational sum(0);
        for (int i = 0; i < n; ++i) {
            const int pv =
                i == 0 ? 0
                       : s.values[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(i)])];
            sum += tree_factor(tu, i, a, s.values[static_cast<std::size_t>(i)], pv);
        }
        if (best.actions.empty() || sum > best_u) {
            best.actions.assign(1, a);
            best_u = sum;
        } else if (sum == best_u) {
            best.actions.push_back(a);
        }
    }
    return best;
}

namespace {

// A residue is an action-indexed utility vector normalized so component 0 is
// zero; optimal sets depend on utilities only through it.
using Residue = std::vector<Rational>;

Residue residue_of(std::vector<Rational> w) {
    const Rational base = w.front();
    for (auto& v : w)
        v = v - base;
    return w;
}

Residue add(const Residue& a, const Residue& b) {
    Residue out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = a[j] + b[j];
    return out;
}

// Sorted unique set of residues with a hard size budget; nullopt on overflow
// signals the caller to fall back to the explicit oracle.
struct ResidueSet {
    std::vector<Residue> items; // sorted, unique
};

std::optional<ResidueSet> finalize(std::vector<Residue> items, std::uint64_t budget) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    if (items.size() > budget)
        return std::nullopt;
    return ResidueSet{std::move(items)};
}

std::optional<ResidueSet> sum_sets(const ResidueSet& a, const ResidueSet& b,
                                   std::uint64_t budget) {
    if (static_cast<std::uint64_t>(a.items.size()) *
            static_cast<std::uint64_t>(b.items.size()) >
        4 * budget)
        return std::nullopt;
    std::vector<Residue> items;
    items.reserve(a.items.size() * b.items.size());
    for (const auto& x : a.items)
        for (const auto& y : b.items)
            items.push_back(add(x, y));
    return finalize(std::move(items), budget);
}

std::vector<int> argmax_actions(const Residue& e, const Residue& base) {
    std::vector<int> out;
    Rational best;
    for (std::size_t j = 0; j < e.size(); ++j) {
        const Rational v = e[j] + base[j];
        if (out.empty() || v > best) {
            out.assign(1, static_cast<int>(j));
            best = v;
        } else if (v == best) {
            out.push_back(static_cast<int>(j));
        }
    }
    return out;
}

struct TreeDp {
    const TreeUtility& tu;
    std::uint64_t budget;
    int n;
    int actions;
    std::vector<std::vector<int>> children;
    // subtree[i][pv]: achievable residues of node i's whole subtree (its own
    // factor included) given the parent value pv.
    std::vector<std::vector<ResidueSet>> subtree;
    // above[i][v]: achievable residues of everything outside node i's subtree
    // plus node i's own factor, given node i's value v.
    std::vector<std::vector<ResidueSet>> above;

    explicit TreeDp(const TreeUtility& t, std::uint64_t b)
        : tu(t), budget(b), n(static_cast<int>(t.parent.size())),
          actions(static_cast<int>(t.action_labels.size())),
          children(static_cast<std::size_t>(n)) {
        for (int i = 1; i < n; ++i)
            children[static_cast<std::size_t>(tu.parent[static_cast<std::size_t>(i)])]
                .push_back(i);
    }

    int domain(int i) const { return tu.domains[static_cast<std::size_t>(i)].size; }
    int parent_domain(int i) const {
        return i == 0 ? 1 : domain(tu.parent[static_cast<std::size_t>(i)]);
    }

    Residue factor_residue(int i, int v, int pv) const {
        std::vector<Rational> w(static_cast<std::size_t>(actions));
        for (int a = 0; a < actions; ++a)
            w[static_cast<std::size_t>(a)] = tree_factor(tu, i, a, v, pv);
        return residue_of(std::move(w));
    }

    // false = budget exhausted; caller falls back.
    bool build() {
        subtree.assign(static_cast<std::size_t>(n), {});
        above.assign(static_cast<std::size_t>(n), {});
        for (int i = n - 1; i >= 0; --i) { // children before parents
            auto& per_pv = subtree[static_cast<std::size_t>(i)];
            per_pv.resize(static_cast<std::size_t>(parent_domain(i)));
            for (int pv = 0; pv < parent_domain(i); ++pv) {
                std::vector<Residue> acc;
                for (int v = 0; v < domain(i); ++v) {
                    ResidueSet cur{{factor_residue(i, v, pv)}};
                    for (int c : children[static_cast<std::size_t>(i)]) {
                        auto next = sum_sets(
                            cur, subtree[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)],
                            budget);
                        if (!next)
                            return false;
                        cur = std::move(*next);
                    }
                    acc.insert(acc.end(), cur.items.begin(), cur.items.end());
                }
                auto fin = finalize(std::move(acc), budget);
                if (!fin)
                    return false;
                per_pv[static_cast<std::size_t>(pv)] = std::move(*fin);
            }
        }
        for (int i = 0; i < n; ++i) { // parents before children
            auto& per_v = above[static_cast<std::size_t>(i)];
            per_v.resize(static_cast<std::size_t>(domain(i)));
            for (int v = 0; v < domain(i); ++v) {
                std::vector<Residue> acc;
                for (int pv = 0; pv < parent_domain(i); ++pv) {
                    ResidueSet cur{{factor_residue(i, v, pv)}};
                    if (i != 0) {
                        const int p = tu.parent[static_cast<std::size_t>(i)];
                        auto withp = sum_sets(
                            cur, above[static_cast<std::size_t>(p)][static_cast<std::size_t>(pv)],
                            budget);
                        if (!withp)
                            return false;
                        cur = std::move(*withp);
                        for (int sib : children[static_cast<std::size_t>(p)]) {
                            if (sib == i)
                                continue;
                            auto next = sum_sets(cur,
                                                 subtree[static_cast<std::size_t>(sib)]
                                                        [static_cast<std::size_t>(pv)],
                                                 budget);
                            if (!next)
                                return false;
                            cur = std::move(*next);
                        }
                    }
                    acc.insert(acc.end(), cur.items.begin(), cur.items.end());
                }
                auto fin = finalize(std::move(acc), budget);
                if (!fin)
                    return false;
                per_v[static_cast<std::size_t>(v)] = std::move(*fin);
            }
        }
        return true;
    }

    // Decides relevance of node i: does some state flip at i change the
    // optimal set? nullopt = budget exhausted.
    std::optional<bool> relevant(int i) {
        const int d = domain(i);
        if (d < 2)
            return false;
        const Residue zero(static_cast<std::size_t>(actions), Rational(0));
        const ResidueSet zero_set{{zero}};
        for (int pv = 0; pv < parent_domain(i); ++pv) {
            // Everything outside node i's subtree, given the parent value.
            ResidueSet out = zero_set;
            if (i != 0) {
                const int p = tu.parent[static_cast<std::size_t>(i)];
                out = above[static_cast<std::size_t>(p)][static_cast<std::size_t>(pv)];
                for (int sib : children[static_cast<std::size_t>(p)]) {
                    if (sib == i)
                        continue;
                    auto next = sum_sets(
                        out, subtree[static_cast<std::size_t>(sib)][static_cast<std::size_t>(pv)],
                        budget);
                    if (!next)
                        return std::nullopt;
                    out = std::move(*next);
                }
            }
            // Enumerate the children's fixed values; the rest of each child
            // subtree contributes independently of node i's value.
            const auto& kids = children[static_cast<std::size_t>(i)];
            std::vector<int> x(kids.size(), 0);
            for (;;) {
                std::vector<Residue> bases;
                bases.reserve(static_cast<std::size_t>(d));
                for (int v = 0; v < d; ++v) {
                    std::vector<Rational> w(static_cast<std::size_t>(actions));
                    for (int a = 0; a < actions; ++a) {
                        Rational sum = tree_factor(tu, i, a, v, pv);
                        for (std::size_t ci = 0; ci < kids.size(); ++ci)
                            sum += tree_factor(tu, kids[ci], a, x[ci], v);
                        w[static_cast<std::size_t>(a)] = sum;
                    }
                    bases.push_back(residue_of(std::move(w)));
                }
                const bool bases_vary =
                    std::any_of(bases.begin() + 1, bases.end(),
                                [&](const Residue& b) { return b != bases.front(); });
                if (bases_vary) {
                    ResidueSet env = out;
                    for (std::size_t ci = 0; ci < kids.size(); ++ci) {
                        ResidueSet below = zero_set; // descendants beyond the child
                        for (int g : children[static_cast<std::size_t>(kids[ci])]) {
                            auto next = sum_sets(below,
                                                 subtree[static_cast<std::size_t>(g)]
                                                        [static_cast<std::size_t>(x[ci])],
                                                 budget);
                            if (!next)
                                return std::nullopt;
                            below = std::move(*next);
                        }
                        auto next = sum_sets(env, below, budget);
                        if (!next)
                            return std::nullopt;
                        env = std::move(*next);
                    }
                    for (const Residue& e : env.items) {
                        const std::vector<int> first = argmax_actions(e, bases.front());
                        for (int v = 1; v < d; ++v)
                            if (argmax_actions(e, bases[static_cast<std::size_t>(v)]) != first)
                                return true;
                    }
                }
                // Odometer over the children's values.
                int pos = static_cast<int>(kids.size()) - 1;
                for (; pos >= 0; --pos) {
                    if (++x[static_cast<std::size_t>(pos)] <
                        domain(kids[static_cast<std::size_t>(pos)]))
                        break;
                    x[static_cast<std::size_t>(pos)] = 0;
                }
                if (pos < 0)
                    break;
            }
        }
        return false;
    }
};

} // namespace

CoordSet tree_relevant_coordinates(const TreeUtility& tu, std::uint64_t budget,
                                   std::uint64_t state_cap) {
    require_valid(tu);
    TreeDp dp(tu, budget);
    if (dp.build()) {
        std::vector<int> out;
        bool ok = true;
        for (int i = 0; i < dp.n && ok; ++i) {
            auto r = dp.relevant(i);
            if (!r)
                ok = false;
            else if (*r)
                out.push_back(i);
        }
        if (ok)
            return CoordSet::from_indices(std::move(out));
    }
    // Budget exhausted: exactness over speed.
    return relevant_coordinates(expand_tree(tu, state_cap), state_cap);
}

void require_valid(const LinearUtility& lin) {
    if (lin.action_labels.empty())
        raise(ErrorCode::InvalidArgument, "linear utility needs at least one action");
    if (lin.weights.size() != lin.action_labels.size())
        raise(ErrorCode::LengthMismatch, "one weight vector per action required");
    for (const auto& w : lin.weights)
        if (w.size() != lin.weights.front().size())
            raise(ErrorCode::LengthMismatch, "weight vectors must share one length");
}

CoordSet linear_relevance(const LinearUtility& lin) {
    require_valid(lin);
    std::vector<int> out;
    const int n = lin.coordinate_count();
    for (int i = 0; i < n; ++i) {
        for (std::size_t a = 1; a < lin.weights.size(); ++a) {
            if (lin.weights[a][static_cast<std::size_t>(i)] !=
                lin.weights[0][static_cast<std::size_t>(i)]) {
                out.push_back(i);
                break;
            }
        }
    }
    return CoordSet::from_indices(std::move(out));
}

DecisionProblem expand_linear(const LinearUtility& lin,
                              const std::vector<CoordinateDomain>& domains,
                              std::uint64_t state_cap) {
    require_valid(lin);
    if (static_cast<int>(domains.size()) != lin.coordinate_count())
        raise(ErrorCode::LengthMismatch, "domain count != weight vector length");
    return DecisionProblem::from_function(
        lin.action_labels, domains,
        [&](int a, const State& s) {
            Rational sum(0);
            for (int i = 0; i < s.size(); ++i)
                sum += lin.weights[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                       Rational(s.values[static_cast<std::size_t>(i)]);
            return sum;
        },
        state_cap);
}

} // namespace suffcheck

#include "suffcheck/gadgets.hpp"

namespace suffcheck {

const char* gadget_kind_name(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::Tautology: return "tautology";
    case GadgetKind::AllCoords: return "allcoords";
    case GadgetKind::Anchor: return "anchor";
    }
    return "?";
}

GadgetKind gadget_kind_from_name(const std::string& name) {
    if (name == "tautology")
        return GadgetKind::Tautology;
    if (name == "allcoords")
        return GadgetKind::AllCoords;
    if (name == "anchor")
        return GadgetKind::Anchor;
    raise(ErrorCode::DataFormat, "unknown gadget kind '" + name + "'");
}

namespace {

void require_pow2_states(int bits, std::uint64_t state_cap) {
    if (bits >= 63 || (std::uint64_t{1} << bits) > state_cap)
        raise(ErrorCode::TooManyVariables,
              "gadget needs 2^" + std::to_string(bits) +
                  " states, cap is " + std::to_string(state_cap));
}

// Truth table of phi over all assignments in mask order (x1 most significant).
std::vector<char> truth_table(const Formula& phi) {
    const int n = phi.var_count();
    std::vector<char> table(std::size_t{1} << n);
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1u) != 0;
        table[mask] = eval_formula(phi, a) ? 1 : 0;
    }
    return table;
}

} // namespace

GadgetInstance tautology_gadget(const Formula& phi, std::uint64_t state_cap) {
    const int n = phi.var_count();
    if (n < 1)
        raise(ErrorCode::InvalidArgument,
              "tautology gadget needs at least one variable");
    require_pow2_states(n + 1, state_cap);

    std::vector<CoordinateDomain> domains(static_cast<std::size_t>(n + 1),
                                          CoordinateDomain(2));
    const std::vector<char> truth = truth_table(phi);
    // Coordinate 0 is r and is most significant: state index = r * 2^n + x,
    // with the x block read as a mask (x1 most significant).
    const std::uint64_t block = std::uint64_t{1} << n;
    std::vector<Rational> utility(2 * 2 * block, Rational(0));
    for (std::uint64_t idx = 0; idx < 2 * block; ++idx) {
        const bool reference = idx >= block;
        const std::uint64_t x_mask = idx % block;
        utility[idx] = Rational(reference ? 1 : truth[x_mask]); // accept
        // reject row stays 0
    }
    DecisionProblem problem({"accept", "reject"}, std::move(domains),
                            std::move(utility));
    return GadgetInstance{
        .problem = std::move(problem),
        .query_coords = {},
        .provenance = {.kind = GadgetKind::Tautology, .formula_text = phi.to_text()},
    };
}

GadgetInstance all_coords_gadget(const Formula& phi, std::uint64_t state_cap) {
    const int n = phi.var_count();
    if (n > kDefaultVarCap)
        raise(ErrorCode::TooManyVariables,
              std::to_string(n) + " variables exceeds cap " +
                  std::to_string(kDefaultVarCap));
    const std::uint64_t dom = (std::uint64_t{1} << n) + 1; // {REF} + assignments
    unsigned __int128 total = 1;
    for (int i = 0; i < n; ++i) {
        total *= dom;
        if (total > state_cap)
            raise(ErrorCode::StateSpaceTooLarge,
                  "all-coords gadget exceeds state cap " + std::to_string(state_cap));
    }

    const std::vector<char> truth = truth_table(phi);
    std::vector<CoordinateDomain> domains(static_cast<std::size_t>(n),
                                          CoordinateDomain(static_cast<int>(dom)));
    DecisionProblem problem = DecisionProblem::from_function(
        {"accept", "reject"}, std::move(domains),
        [&](int action, const State& s) -> Rational {
            if (action == 1)
                return Rational(0); // reject
            for (int v : s.values) {
                // value 0 is REF; value 1+t is assignment t
                if (v != 0 && !truth[static_cast<std::size_t>(v - 1)])
                    return Rational(0);
            }
            return Rational(1);
        },
        state_cap);
    return GadgetInstance{
        .problem = std::move(problem),
        .query_coords = {},
        .provenance = {.kind = GadgetKind::AllCoords, .formula_text = phi.to_text()},
    };
}

GadgetInstance anchor_gadget(const Formula& phi, int k, int m,
                             std::uint64_t state_cap) {
    if (k < 0 || m < 0 || k + m != phi.var_count())
        raise(ErrorCode::SplitMismatch,
              "split " + std::to_string(k) + "+" + std::to_string(m) +
                  " != var count " + std::to_string(phi.var_count()));
    const bool padded = m == 0;
    const int mp = padded ? 1 : m; // post-padding universal block size
    const Formula lifted = padded ? phi.with_var_count(k + 1) : phi;
    require_pow2_states(k + mp, state_cap);

    const std::vector<char> truth = truth_table(lifted);
    const int nc = k + mp;
    std::vector<CoordinateDomain> domains(static_cast<std::size_t>(nc),
                                          CoordinateDomain(2));
    const std::uint64_t count = std::uint64_t{1} << nc;
    const std::uint64_t y_block = std::uint64_t{1} << mp;
    std::vector<Rational> utility(2 * count, Rational(0));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // Coordinate 0 most significant, so idx's low bits are the y block.
        if (truth[idx])
            utility[idx] = Rational(2); // YES
        if (idx % y_block == 0)
            utility[count + idx] = Rational(1); // NO, y = all zeros
    }
    DecisionProblem problem({"YES", "NO"}, std::move(domains), std::move(utility));
    std::vector<int> xs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        xs[static_cast<std::size_t>(i)] = i;
    return GadgetInstance{
        .problem = std::move(problem),
        .query_coords = CoordSet::from_indices(std::move(xs)),
        .provenance = {.kind = GadgetKind::Anchor,
                       .formula_text = phi.to_text(),
                       .k = k,
                       .m = m,
                       .padded = padded},
    };
}

} // namespace suffcheck

#pragma once

#include <string>

#include "suffcheck/formula.hpp"
#include "suffcheck/problem.hpp"

namespace suffcheck {

enum class GadgetKind { Tautology, AllCoords, Anchor };

const char* gadget_kind_name(GadgetKind kind);
GadgetKind gadget_kind_from_name(const std::string& name);

// Records how a gadget instance was built, so instances round-trip through
// serialization with their source formula and split intact.
struct GadgetProvenance {
    GadgetKind kind = GadgetKind::Tautology;
    std::string formula_text; // source formula, pre-padding
    int k = 0;                // anchor split as given
    int m = 0;
    bool padded = false;      // anchor only: dummy universal variable appended

    bool operator==(const GadgetProvenance&) const = default;
};

struct GadgetInstance {
    DecisionProblem problem;
    CoordSet query_coords;
    GadgetProvenance provenance;
};

// Reduction from tautology checking. Actions {accept, reject}; binary
// coordinates (r, x1..xn) with r as coordinate 0. Reference states (r=1):
// U(accept)=1, U(reject)=0. Formula states (r=0): U(accept)=phi(x),
// U(reject)=0. The empty coordinate set is sufficient iff phi is a tautology.
GadgetInstance tautology_gadget(const Formula& phi,
                                std::uint64_t state_cap = kDefaultStateCap);

// Strengthened form making every coordinate decision-relevant when phi is not
// a tautology: n coordinates, each with domain {REF} plus all 2^n assignments;
// U(accept,y)=1 iff every coordinate passes its local test (REF, or an
// assignment satisfying phi); U(reject)=0 everywhere.
GadgetInstance all_coords_gadget(const Formula& phi,
                                 std::uint64_t state_cap = kDefaultStateCap);

// Reduction from exists-forall satisfiability. Actions {YES, NO}; state space
// {0,1}^{k+m'} with the k x-coordinates first. U(YES,(x,y))=2 if phi(x,y)
// else 0; U(NO,(x,y))=1 if y is all zeros else 0. When m=0 a dummy universal
// variable is appended (m'=1) and phi lifted to ignore it. query_coords = the
// x block; an anchor on it exists iff exists x forall y phi.
GadgetInstance anchor_gadget(const Formula& phi, int k, int m,
                             std::uint64_t state_cap = kDefaultStateCap);

} // namespace suffcheck

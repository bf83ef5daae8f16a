#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "suffcheck/anchor.hpp"
#include "suffcheck/econ.hpp"
#include "suffcheck/formula.hpp"
#include "suffcheck/gadgets.hpp"
#include "suffcheck/problem.hpp"
#include "suffcheck/tractable.hpp"

namespace suffcheck {

// Canonical JSON forms. Writers emit key order deterministically
// (ordered_json); readers raise Error(DataFormat) on malformed documents.
// Rationals travel as [numerator, denominator] integer pairs, never floats;
// readers also accept a bare integer.
using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json coordset_to_json(const CoordSet& c);
CoordSet coordset_from_json(const json& j);

json state_to_json(const State& s);
// Elements may be integers or domain-value labels resolved per coordinate.
State state_from_json(const json& j, const DecisionProblem& p);

json optset_to_json(const OptSet& o);

json witness_to_json(const InsufficiencyWitness& w);

json anchor_assignment_to_json(const AnchorAssignment& a);

// ProblemDocument: {"actions": [...], "domains": [{"size": d, "labels"?: [...]}],
// "utility": [[...one rational per state...] per action]}.
json problem_to_json(const DecisionProblem& p);
DecisionProblem problem_from_json(const json& j,
                                  std::uint64_t state_cap = kDefaultStateCap);

// Accepts a ProblemDocument directly, a gadget-instance document, or a report
// document wrapping either, and digs out the problem.
DecisionProblem problem_from_document(const json& j,
                                      std::uint64_t state_cap = kDefaultStateCap);

json gadget_to_json(const GadgetInstance& g);
GadgetInstance gadget_from_json(const json& j,
                                std::uint64_t state_cap = kDefaultStateCap);

// Formula AST form; variables are 1-based here, matching the text grammar.
json formula_to_json(const Formula& f);
Formula formula_from_json(const json& j);

json tree_to_json(const TreeUtility& tu);
TreeUtility tree_from_json(const json& j);

json linear_to_json(const LinearUtility& lin);
LinearUtility linear_from_json(const json& j);

// Parse with DataFormat errors instead of exceptions from the JSON library.
json parse_json_text(std::string_view text, const std::string& what);

// FNV-1a 64-bit content digest, lower-case hex.
std::string fnv1a64_hex(std::string_view bytes);

} // namespace suffcheck

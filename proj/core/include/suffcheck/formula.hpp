#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suffcheck/errors.hpp"

namespace suffcheck {

// Exhaustive assignment enumeration guard.
inline constexpr int kDefaultVarCap = 24;

enum class NodeKind { Const, Var, Not, And, Or, Implies };

struct FormulaNode;
using FormulaNodePtr = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    NodeKind kind;
    bool value = false;      // Const
    int var = -1;            // Var, 0-based
    FormulaNodePtr left = nullptr;  // Not/And/Or/Implies
    FormulaNodePtr right = nullptr; // And/Or/Implies
};

// Immutable propositional formula: shared AST plus a variable count that is
// at least one past the highest referenced variable (it may be larger, e.g.
// when a formula is lifted to ignore extra variables).
class Formula {
  public:
    static Formula constant(bool value);
    static Formula var(int index); // 0-based
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);

    const FormulaNodePtr& root() const noexcept { return root_; }
    int var_count() const noexcept { return var_count_; }

    // Same AST with var_count raised to n; InvalidArgument if n is below the
    // highest referenced variable.
    Formula with_var_count(int n) const;

    // Text form that reparses to a structurally identical formula.
    std::string to_text() const;

    bool operator==(const Formula& other) const;

  private:
    Formula(FormulaNodePtr root, int var_count)
        : root_(std::move(root)), var_count_(var_count) {}

    FormulaNodePtr root_;
    int var_count_ = 0;
};

// Grammar: variables x1..xN (1-based in text, 0-based internally), constants
// `true`/`false`, operators ~ (not), & (and), | (or), -> (implies,
// right-associative), parentheses; precedence ~ > & > | > ->.
// Raises ParseError with a character position, or VarIndexZero for "x0".
Formula parse_formula(std::string_view text);

// Standard propositional semantics; assignment length must equal var_count.
bool eval_formula(const Formula& f, const std::vector<bool>& assignment);

struct TautologyCheck {
    bool tautology = false;
    // Lexicographically first falsifying assignment (false < true, variable
    // x1 most significant) when not a tautology.
    std::optional<std::vector<bool>> counterexample;
};

// Exhaustive check over all 2^n assignments; TooManyVariables above the cap.
TautologyCheck is_tautology_brute(const Formula& f, int var_cap = kDefaultVarCap);

// Decides exists x forall y: f(x,y), where the first k variables are the
// existential block and the last m the universal block (k + m = var_count).
// Returns the lexicographically first qualifying x-part, or nullopt.
std::optional<std::vector<bool>>
exists_forall_brute(const Formula& f, int k, int m, int var_cap = kDefaultVarCap);

} // namespace suffcheck

#include "suffcheck/formula.hpp"

#include <algorithm>
#include <cctype>

namespace suffcheck {

namespace {

FormulaNodePtr make_node(FormulaNode n) {
    return std::make_shared<const FormulaNode>(std::move(n));
}

int max_var(const FormulaNodePtr& n) {
    if (!n)
        return -1;
    switch (n->kind) {
    case NodeKind::Const: return -1;
    case NodeKind::Var: return n->var;
    case NodeKind::Not: return max_var(n->left);
    default: return std::max(max_var(n->left), max_var(n->right));
    }
}

} // namespace

Formula Formula::constant(bool value) {
    return Formula(make_node({.kind = NodeKind::Const, .value = value}), 0);
}

Formula Formula::var(int index) {
    if (index < 0)
        raise(ErrorCode::InvalidArgument, "negative variable index");
    return Formula(make_node({.kind = NodeKind::Var, .var = index}), index + 1);
}

Formula Formula::negation(Formula f) {
    int vc = f.var_count_;
    return Formula(make_node({.kind = NodeKind::Not, .left = std::move(f.root_)}), vc);
}

Formula Formula::conjunction(Formula a, Formula b) {
    int vc = std::max(a.var_count_, b.var_count_);
    return Formula(make_node({.kind = NodeKind::And, .left = std::move(a.root_),
                              .right = std::move(b.root_)}),
                   vc);
}

Formula Formula::disjunction(Formula a, Formula b) {
    int vc = std::max(a.var_count_, b.var_count_);
    return Formula(make_node({.kind = NodeKind::Or, .left = std::move(a.root_),
                              .right = std::move(b.root_)}),
                   vc);
}

Formula Formula::implication(Formula a, Formula b) {
    int vc = std::max(a.var_count_, b.var_count_);
    return Formula(make_node({.kind = NodeKind::Implies, .left = std::move(a.root_),
                              .right = std::move(b.root_)}),
                   vc);
}

Formula Formula::with_var_count(int n) const {
    if (n < var_count_)
        raise(ErrorCode::InvalidArgument,
              "var count " + std::to_string(n) + " below referenced variables (" +
                  std::to_string(var_count_) + ")");
    return Formula(root_, n);
}

namespace {

bool node_equal(const FormulaNodePtr& a, const FormulaNodePtr& b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case NodeKind::Const: return a->value == b->value;
    case NodeKind::Var: return a->var == b->var;
    case NodeKind::Not: return node_equal(a->left, b->left);
    default: return node_equal(a->left, b->left) && node_equal(a->right, b->right);
    }
}

// Precedence levels for printing: atoms 4, ~ 3, & 2, | 1, -> 0.
int node_level(const FormulaNode& n) {
    switch (n.kind) {
    case NodeKind::Const:
    case NodeKind::Var: return 4;
    case NodeKind::Not: return 3;
    case NodeKind::And: return 2;
    case NodeKind::Or: return 1;
    default: return 0;
    }
}

void print_node(const FormulaNodePtr& n, int min_level, std::string& out) {
    const int level = node_level(*n);
    const bool parens = level < min_level;
    if (parens)
        out += '(';
    switch (n->kind) {
    case NodeKind::Const:
        out += n->value ? "true" : "false";
        break;
    case NodeKind::Var:
        out += 'x';
        out += std::to_string(n->var + 1);
        break;
    case NodeKind::Not:
        out += '~';
        print_node(n->left, 3, out);
        break;
    case NodeKind::And:
        print_node(n->left, 2, out);
        out += " & ";
        print_node(n->right, 3, out); // right-nested & needs parens to reparse identically
        break;
    case NodeKind::Or:
        print_node(n->left, 1, out);
        out += " | ";
        print_node(n->right, 2, out);
        break;
    case NodeKind::Implies:
        print_node(n->left, 1, out);
        out += " -> ";
        print_node(n->right, 0, out);
        break;
    }
    if (parens)
        out += ')';
}

} // namespace

std::string Formula::to_text() const {
    std::string out;
    print_node(root_, 0, out);
    return out;
}

bool Formula::operator==(const Formula& other) const {
    return var_count_ == other.var_count_ && node_equal(root_, other.root_);
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula run() {
        Formula f = parse_implies();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(ErrorCode::ParseError,
              what + " at position " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_arrow() {
        skip_space();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    Formula parse_implies() {
        Formula left = parse_or();
        if (eat_arrow())
            return Formula::implication(std::move(left), parse_implies());
        return left;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (eat('|'))
            f = Formula::disjunction(std::move(f), parse_and());
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (eat('&'))
            f = Formula::conjunction(std::move(f), parse_unary());
        return f;
    }

    Formula parse_unary() {
        if (eat('~'))
            return Formula::negation(parse_unary());
        return parse_atom();
    }

    Formula parse_atom() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        if (eat('(')) {
            Formula f = parse_implies();
            if (!eat(')'))
                fail("expected ')'");
            return f;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string_view word = text_.substr(start, pos_ - start);
            if (word == "true")
                return Formula::constant(true);
            if (word == "false")
                return Formula::constant(false);
            if (word.size() >= 2 && word[0] == 'x' &&
                std::all_of(word.begin() + 1, word.end(), [](char d) {
                    return std::isdigit(static_cast<unsigned char>(d));
                })) {
                long long idx = 0;
                for (char d : word.substr(1)) {
                    idx = idx * 10 + (d - '0');
                    if (idx > 1'000'000) {
                        pos_ = start;
                        fail("variable index too large");
                    }
                }
                if (idx == 0)
                    raise(ErrorCode::VarIndexZero,
                          "variables are 1-based; 'x0' is invalid (position " +
                              std::to_string(start) + ")");
                return Formula::var(static_cast<int>(idx - 1));
            }
            pos_ = start;
            fail("unknown token '" + std::string(word) + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool eval_node(const FormulaNodePtr& n, const std::vector<bool>& a) {
    switch (n->kind) {
    case NodeKind::Const: return n->value;
    case NodeKind::Var: return a[static_cast<std::size_t>(n->var)];
    case NodeKind::Not: return !eval_node(n->left, a);
    case NodeKind::And: return eval_node(n->left, a) && eval_node(n->right, a);
    case NodeKind::Or: return eval_node(n->left, a) || eval_node(n->right, a);
    default: return !eval_node(n->left, a) || eval_node(n->right, a);
    }
}

// Assignment for `mask` in lexicographic enumeration order: x1 is the most
// significant bit, false sorts before true.
std::vector<bool> assignment_of_mask(std::uint64_t mask, int n) {
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1u) != 0;
    return a;
}

void require_var_cap(int n, int var_cap) {
    if (n > var_cap)
        raise(ErrorCode::TooManyVariables,
              std::to_string(n) + " variables exceeds cap " + std::to_string(var_cap));
}

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(text).run();
}

bool eval_formula(const Formula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.var_count())
        raise(ErrorCode::LengthMismatch,
              "assignment length " + std::to_string(assignment.size()) +
                  " != var count " + std::to_string(f.var_count()));
    return eval_node(f.root(), assignment);
}

TautologyCheck is_tautology_brute(const Formula& f, int var_cap) {
    const int n = f.var_count();
    require_var_cap(n, var_cap);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> a = assignment_of_mask(mask, n);
        if (!eval_node(f.root(), a))
            return {.tautology = false, .counterexample = std::move(a)};
    }
    return {.tautology = true, .counterexample = std::nullopt};
}

std::optional<std::vector<bool>>
exists_forall_brute(const Formula& f, int k, int m, int var_cap) {
    if (k < 0 || m < 0 || k + m != f.var_count())
        raise(ErrorCode::SplitMismatch,
              "split " + std::to_string(k) + "+" + std::to_string(m) +
                  " != var count " + std::to_string(f.var_count()));
    require_var_cap(k + m, var_cap);
    const std::uint64_t x_total = std::uint64_t{1} << k;
    const std::uint64_t y_total = std::uint64_t{1} << m;
    std::vector<bool> a(static_cast<std::size_t>(k + m));
    for (std::uint64_t xm = 0; xm < x_total; ++xm) {
        for (int i = 0; i < k; ++i)
            a[static_cast<std::size_t>(i)] = ((xm >> (k - 1 - i)) & 1u) != 0;
        bool all = true;
        for (std::uint64_t ym = 0; ym < y_total && all; ++ym) {
            for (int j = 0; j < m; ++j)
                a[static_cast<std::size_t>(k + j)] = ((ym >> (m - 1 - j)) & 1u) != 0;
            if (!eval_node(f.root(), a))
                all = false;
        }
        if (all)
            return std::vector<bool>(a.begin(), a.begin() + k);
    }
    return std::nullopt;
}

} // namespace suffcheck

#include "suffcheck/json_io.hpp"

namespace suffcheck {

namespace {

[[noreturn]] void bad(const std::string& what) {
    raise(ErrorCode::DataFormat, what);
}

const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string(where) + ": missing key \"" + key + "\"");
    return j.at(key);
}

std::int64_t int_field(const json& j, const char* where) {
    if (!j.is_number_integer())
        bad(std::string(where) + ": expected an integer");
    return j.get<std::int64_t>();
}

std::string string_field(const json& j, const char* where) {
    if (!j.is_string())
        bad(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

const json& array_field(const json& j, const char* where) {
    if (!j.is_array())
        bad(std::string(where) + ": expected an array");
    return j;
}

} // namespace

json rational_to_json(const Rational& r) {
    return json::array({r.num(), r.den()});
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        bad("rational: expected [numerator, denominator] or an integer");
    const std::int64_t den = j[1].get<std::int64_t>();
    if (den <= 0)
        bad("rational: denominator must be positive");
    return Rational(j[0].get<std::int64_t>(), den);
}

json coordset_to_json(const CoordSet& c) {
    return json(c.indices());
}

CoordSet coordset_from_json(const json& j) {
    array_field(j, "coordinate set");
    std::vector<int> idx;
    idx.reserve(j.size());
    for (const auto& e : j)
        idx.push_back(static_cast<int>(int_field(e, "coordinate set entry")));
    try {
        return CoordSet::from_indices(std::move(idx));
    } catch (const Error& e) {
        bad(std::string("coordinate set: ") + e.what());
    }
}

json state_to_json(const State& s) {
    return json(s.values);
}

State state_from_json(const json& j, const DecisionProblem& p) {
    array_field(j, "state");
    if (static_cast<int>(j.size()) != p.coordinate_count())
        bad("state: expected " + std::to_string(p.coordinate_count()) +
            " coordinates, got " + std::to_string(j.size()));
    State s;
    s.values.reserve(j.size());
    int i = 0;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            s.values.push_back(static_cast<int>(e.get<std::int64_t>()));
        } else if (e.is_string()) {
            try {
                s.values.push_back(p.resolve_value(i, e.get<std::string>()));
            } catch (const Error& err) {
                bad(std::string("state: ") + err.what());
            }
        } else {
            bad("state: entries must be integers or value labels");
        }
        ++i;
    }
    return s;
}

json optset_to_json(const OptSet& o) {
    return json(o.actions);
}

json witness_to_json(const InsufficiencyWitness& w) {
    json j = json::object();
    j["s"] = state_to_json(w.s);
    j["sPrime"] = state_to_json(w.s_prime);
    j["optS"] = optset_to_json(w.opt_s);
    j["optSPrime"] = optset_to_json(w.opt_s_prime);
    return j;
}

json anchor_assignment_to_json(const AnchorAssignment& a) {
    json j = json::object();
    j["coords"] = coordset_to_json(a.coords);
    j["values"] = json(a.values);
    return j;
}

json problem_to_json(const DecisionProblem& p) {
    json j = json::object();
    j["actions"] = json(p.action_labels());
    json domains = json::array();
    for (const auto& d : p.domains()) {
        json dj = json::object();
        dj["size"] = d.size;
        if (!d.labels.empty())
            dj["labels"] = json(d.labels);
        domains.push_back(std::move(dj));
    }
    j["domains"] = std::move(domains);
    const std::uint64_t n = p.space().state_count();
    json utility = json::array();
    for (int a = 0; a < p.action_count(); ++a) {
        json row = json::array();
        for (std::uint64_t idx = 0; idx < n; ++idx)
            row.push_back(rational_to_json(p.utility(a, idx)));
        utility.push_back(std::move(row));
    }
    j["utility"] = std::move(utility);
    return j;
}

DecisionProblem problem_from_json(const json& j, std::uint64_t state_cap) {
    const json& actions_j = array_field(field(j, "actions", "problem"), "actions");
    std::vector<std::string> actions;
    actions.reserve(actions_j.size());
    for (const auto& a : actions_j)
        actions.push_back(string_field(a, "action"));

    const json& domains_j = array_field(field(j, "domains", "problem"), "domains");
    std::vector<CoordinateDomain> domains;
    domains.reserve(domains_j.size());
    unsigned __int128 count = 1;
    for (const auto& d : domains_j) {
        CoordinateDomain dom;
        if (d.is_number_integer()) {
            dom.size = static_cast<int>(d.get<std::int64_t>());
        } else {
            dom.size = static_cast<int>(int_field(field(d, "size", "domain"), "size"));
            if (d.contains("labels")) {
                for (const auto& l : array_field(d.at("labels"), "labels"))
                    dom.labels.push_back(string_field(l, "label"));
            }
        }
        if (dom.size < 1)
            bad("domain sizes must be at least 1");
        count *= static_cast<unsigned>(dom.size);
        if (count > state_cap)
            raise(ErrorCode::StateSpaceTooLarge,
                  "document state space exceeds cap " + std::to_string(state_cap));
        domains.push_back(std::move(dom));
    }

    const json& util_j = array_field(field(j, "utility", "problem"), "utility");
    if (util_j.size() != actions.size())
        bad("utility: one row per action required");
    const std::uint64_t n = static_cast<std::uint64_t>(count);
    std::vector<Rational> utility;
    utility.reserve(actions.size() * n);
    for (const auto& row : util_j) {
        array_field(row, "utility row");
        if (row.size() != n)
            bad("utility row: expected " + std::to_string(n) + " states, got " +
                std::to_string(row.size()));
        for (const auto& cell : row)
            utility.push_back(rational_from_json(cell));
    }
    return DecisionProblem(std::move(actions), std::move(domains), std::move(utility));
}

DecisionProblem problem_from_document(const json& j, std::uint64_t state_cap) {
    if (j.is_object()) {
        if (j.contains("utility"))
            return problem_from_json(j, state_cap);
        for (const char* key : {"problem", "gadget", "outputs"})
            if (j.contains(key))
                return problem_from_document(j.at(key), state_cap);
    }
    bad("document contains no problem (expected a problem, gadget, or report)");
}

json gadget_to_json(const GadgetInstance& g) {
    json j = json::object();
    j["problem"] = problem_to_json(g.problem);
    j["queryCoords"] = coordset_to_json(g.query_coords);
    json prov = json::object();
    prov["kind"] = gadget_kind_name(g.provenance.kind);
    prov["formula"] = g.provenance.formula_text;
    prov["k"] = g.provenance.k;
    prov["m"] = g.provenance.m;
    prov["padded"] = g.provenance.padded;
    j["provenance"] = std::move(prov);
    return j;
}

GadgetInstance gadget_from_json(const json& j, std::uint64_t state_cap) {
    GadgetInstance g{
        .problem = problem_from_json(field(j, "problem", "gadget"), state_cap),
        .query_coords = coordset_from_json(field(j, "queryCoords", "gadget")),
        .provenance = {},
    };
    const json& prov = field(j, "provenance", "gadget");
    g.provenance.kind =
        gadget_kind_from_name(string_field(field(prov, "kind", "provenance"), "kind"));
    g.provenance.formula_text =
        string_field(field(prov, "formula", "provenance"), "formula");
    g.provenance.k = static_cast<int>(int_field(field(prov, "k", "provenance"), "k"));
    g.provenance.m = static_cast<int>(int_field(field(prov, "m", "provenance"), "m"));
    const json& padded = field(prov, "padded", "provenance");
    if (!padded.is_boolean())
        bad("provenance: \"padded\" must be a boolean");
    g.provenance.padded = padded.get<bool>();
    g.query_coords.require_valid_for(g.problem.coordinate_count());
    return g;
}

json formula_to_json(const Formula& f) {
    // Recursive node encoding; variables 1-based as in the text grammar.
    struct Enc {
        static json node(const FormulaNodePtr& n) {
            json j = json::object();
            switch (n->kind) {
            case NodeKind::Const:
                j["op"] = "const";
                j["value"] = n->value;
                break;
            case NodeKind::Var:
                j["op"] = "var";
                j["var"] = n->var + 1;
                break;
            case NodeKind::Not:
                j["op"] = "not";
                j["arg"] = node(n->left);
                break;
            case NodeKind::And:
            case NodeKind::Or:
            case NodeKind::Implies:
                j["op"] = n->kind == NodeKind::And  ? "and"
                          : n->kind == NodeKind::Or ? "or"
                                                    : "implies";
                j["left"] = node(n->left);
                j["right"] = node(n->right);
                break;
            }
            return j;
        }
    };
    json j = json::object();
    j["varCount"] = f.var_count();
    j["root"] = Enc::node(f.root());
    return j;
}

Formula formula_from_json(const json& j) {
    struct Dec {
        static Formula node(const json& n) {
            const std::string op = string_field(field(n, "op", "formula"), "op");
            if (op == "const") {
                const json& v = field(n, "value", "formula const");
                if (!v.is_boolean())
                    bad("formula const: \"value\" must be a boolean");
                return Formula::constant(v.get<bool>());
            }
            if (op == "var") {
                const std::int64_t v =
                    int_field(field(n, "var", "formula var"), "var");
                if (v == 0)
                    raise(ErrorCode::VarIndexZero,
                          "formula variables are 1-based; 0 is invalid");
                if (v < 0 || v > 1'000'000)
                    bad("formula var: index out of range");
                return Formula::var(static_cast<int>(v - 1));
            }
            if (op == "not")
                return Formula::negation(node(field(n, "arg", "formula not")));
            Formula left = node(field(n, "left", "formula binary"));
            Formula right = node(field(n, "right", "formula binary"));
            if (op == "and")
                return Formula::conjunction(std::move(left), std::move(right));
            if (op == "or")
                return Formula::disjunction(std::move(left), std::move(right));
            if (op == "implies")
                return Formula::implication(std::move(left), std::move(right));
            bad("formula: unknown op \"" + op + "\"");
        }
    };
    const json& root = j.is_object() && j.contains("root") ? j.at("root") : j;
    Formula f = Dec::node(root);
    if (j.is_object() && j.contains("varCount")) {
        const std::int64_t vc = int_field(j.at("varCount"), "varCount");
        if (vc < f.var_count())
            bad("varCount below the highest referenced variable");
        f = f.with_var_count(static_cast<int>(vc));
    }
    return f;
}

json tree_to_json(const TreeUtility& tu) {
    json j = json::object();
    j["actions"] = json(tu.action_labels);
    json domains = json::array();
    for (const auto& d : tu.domains) {
        json dj = json::object();
        dj["size"] = d.size;
        if (!d.labels.empty())
            dj["labels"] = json(d.labels);
        domains.push_back(std::move(dj));
    }
    j["domains"] = std::move(domains);
    j["parent"] = json(tu.parent);
    json factors = json::array();
    const int actions = static_cast<int>(tu.action_labels.size());
    for (int i = 0; i < static_cast<int>(tu.parent.size()); ++i) {
        const int d = tu.domains[static_cast<std::size_t>(i)].size;
        const int dp = i == 0 ? 1
                              : tu.domains[static_cast<std::size_t>(
                                               tu.parent[static_cast<std::size_t>(i)])]
                                    .size;
        json per_node = json::array();
        for (int a = 0; a < actions; ++a) {
            json per_action = json::array();
            for (int v = 0; v < d; ++v) {
                json per_value = json::array();
                for (int pv = 0; pv < dp; ++pv)
                    per_value.push_back(rational_to_json(tree_factor(tu, i, a, v, pv)));
                per_action.push_back(std::move(per_value));
            }
            per_node.push_back(std::move(per_action));
        }
        factors.push_back(std::move(per_node));
    }
    j["factors"] = std::move(factors);
    return j;
}

TreeUtility tree_from_json(const json& j) {
    TreeUtility tu;
    for (const auto& a : array_field(field(j, "actions", "tree"), "actions"))
        tu.action_labels.push_back(string_field(a, "action"));
    for (const auto& d : array_field(field(j, "domains", "tree"), "domains")) {
        CoordinateDomain dom;
        if (d.is_number_integer()) {
            dom.size = static_cast<int>(d.get<std::int64_t>());
        } else {
            dom.size = static_cast<int>(int_field(field(d, "size", "domain"), "size"));
            if (d.contains("labels"))
                for (const auto& l : array_field(d.at("labels"), "labels"))
                    dom.labels.push_back(string_field(l, "label"));
        }
        tu.domains.push_back(std::move(dom));
    }
    for (const auto& p : array_field(field(j, "parent", "tree"), "parent"))
        tu.parent.push_back(static_cast<int>(int_field(p, "parent entry")));
    const json& factors = array_field(field(j, "factors", "tree"), "factors");
    if (factors.size() != tu.parent.size())
        bad("tree: one factor table per node required");
    const int actions = static_cast<int>(tu.action_labels.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i >= tu.domains.size())
            bad("tree: more factor tables than domains");
        const int d = tu.domains[i].size;
        const int par = tu.parent[i];
        if (i == 0 ? par != -1 : (par < 0 || par >= static_cast<int>(i)))
            bad("tree: parent of node " + std::to_string(i) + " is out of order");
        const int dp = i == 0 ? 1 : tu.domains[static_cast<std::size_t>(par)].size;
        const json& per_node = array_field(factors[i], "factor table");
        if (static_cast<int>(per_node.size()) != actions)
            bad("factor table: one block per action required");
        std::vector<Rational> flat;
        for (const auto& per_action : per_node) {
            if (static_cast<int>(array_field(per_action, "factor action block").size()) != d)
                bad("factor table: one block per coordinate value required");
            for (const auto& per_value : per_action) {
                if (static_cast<int>(array_field(per_value, "factor value block").size()) != dp)
                    bad("factor table: one cell per parent value required");
                for (const auto& cell : per_value)
                    flat.push_back(rational_from_json(cell));
            }
        }
        tu.factors.push_back(std::move(flat));
    }
    require_valid(tu); // raises if any dimension is off
    return tu;
}

json linear_to_json(const LinearUtility& lin) {
    json j = json::object();
    j["actions"] = json(lin.action_labels);
    json weights = json::array();
    for (const auto& w : lin.weights) {
        json row = json::array();
        for (const auto& r : w)
            row.push_back(rational_to_json(r));
        weights.push_back(std::move(row));
    }
    j["weights"] = std::move(weights);
    return j;
}

LinearUtility linear_from_json(const json& j) {
    LinearUtility lin;
    for (const auto& a : array_field(field(j, "actions", "linear"), "actions"))
        lin.action_labels.push_back(string_field(a, "action"));
    for (const auto& row : array_field(field(j, "weights", "linear"), "weights")) {
        std::vector<Rational> w;
        for (const auto& cell : array_field(row, "weight row"))
            w.push_back(rational_from_json(cell));
        lin.weights.push_back(std::move(w));
    }
    require_valid(lin);
    return lin;
}

json parse_json_text(std::string_view text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        bad(what + ": invalid JSON");
    return j;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

} // namespace suffcheck

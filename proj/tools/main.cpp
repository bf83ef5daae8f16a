// suffcheck: batch analysis of finite decision problems with coordinate
// structure. Reads JSON documents, writes a single JSON report to stdout.
//
// Exit codes: 0 computed; 2 a --verify assertion failed; 64 usage error;
// 65 malformed or inconsistent input data; 70 an enumeration cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "suffcheck/anchor.hpp"
#include "suffcheck/econ.hpp"
#include "suffcheck/engine.hpp"
#include "suffcheck/formula.hpp"
#include "suffcheck/gadgets.hpp"
#include "suffcheck/json_io.hpp"
#include "suffcheck/tractable.hpp"

namespace sc = suffcheck;
using sc::json;

namespace {

int exit_code_for(sc::ErrorCode code) {
    switch (code) {
    case sc::ErrorCode::StateSpaceTooLarge:
    case sc::ErrorCode::TooManyVariables:
    case sc::ErrorCode::Overflow:
        return 70;
    default:
        return 65;
    }
}

// Signals a failed --verify assertion after the report has been emitted.
struct VerifyFailure {};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        sc::raise(sc::ErrorCode::DataFormat, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Accumulates everything that determines the result, so identical inputs
// digest identically regardless of file paths.
struct Digest {
    std::string buf;

    void add(const std::string& label, const std::string& bytes) {
        buf += label;
        buf += '=';
        buf += bytes;
        buf += '\0';
    }
    std::string hex() const { return sc::fnv1a64_hex(buf); }
};

struct Options {
    std::string problem_path;
    std::string tree_path;
    std::string weights_path;
    std::optional<std::string> coords_text;
    std::string state_text;
    std::string formula_text;
    std::string formula_json_path;
    std::string split_text;
    std::string out_path;
    std::uint64_t max_states = sc::kDefaultStateCap;
    std::uint64_t budget = sc::kDefaultTreeBudget;
    bool verify = false;

    // econ flags
    std::string required_text;
    std::string native_text;
    std::int64_t universe = 0;
    std::int64_t sites = 0;
    std::string h_central_text;
    std::string h_distributed_text = "0";
    std::int64_t over_n = 0;
    std::int64_t over_k = 0;
    std::string c_over_text = "0";
    std::string c_under_text = "0";
};

json coords_json_from_text(const std::string& text) {
    std::string t = text;
    // Accept a JSON array or a bare comma list; both digest as given.
    if (!t.empty() && t.front() == '[')
        return sc::parse_json_text(t, "coordinate set");
    json arr = json::array();
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            arr.push_back(std::stoll(item));
        } catch (const std::exception&) {
            sc::raise(sc::ErrorCode::DataFormat,
                      "coordinate list: '" + item + "' is not an integer");
        }
    }
    return arr;
}

sc::CoordSet parse_coords(const std::string& text) {
    return sc::coordset_from_json(coords_json_from_text(text));
}

json state_json_from_text(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '[')
        return sc::parse_json_text(t, "state");
    json arr = json::array();
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos == item.size()) {
                arr.push_back(v);
                continue;
            }
        } catch (const std::exception&) {
        }
        arr.push_back(item); // treat as a value label
    }
    return arr;
}

std::pair<int, int> parse_split(const std::string& text) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        try {
            std::size_t k_end = 0;
            std::size_t m_end = 0;
            const std::string k_text = text.substr(0, comma);
            const std::string m_text = text.substr(comma + 1);
            const int k = std::stoi(k_text, &k_end);
            const int m = std::stoi(m_text, &m_end);
            if (k_end == k_text.size() && m_end == m_text.size())
                return {k, m};
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--split", "expected \"k,m\" with two integers");
}

class Runner {
  public:
    explicit Runner(Options& opt) : opt_(opt) {}

    // Loads the problem input, remembering its bytes for the digest.
    sc::DecisionProblem load_problem(Digest& d) {
        const std::string bytes = read_file(opt_.problem_path);
        d.add("problem", bytes);
        doc_ = sc::parse_json_text(bytes, "problem document");
        return sc::problem_from_document(doc_, opt_.max_states);
    }

    sc::CoordSet coords_or_query(const sc::DecisionProblem& p, Digest& d) {
        if (opt_.coords_text) {
            d.add("coords", *opt_.coords_text);
            sc::CoordSet c = parse_coords(*opt_.coords_text);
            c.require_valid_for(p.coordinate_count());
            return c;
        }
        // Fall back to a gadget document's own query set.
        const json* node = &doc_;
        for (const char* key : {"outputs", "gadget"})
            if (node->is_object() && node->contains(key))
                node = &node->at(key);
        if (node->is_object() && node->contains("queryCoords")) {
            d.add("coords", node->at("queryCoords").dump());
            sc::CoordSet c = sc::coordset_from_json(node->at("queryCoords"));
            c.require_valid_for(p.coordinate_count());
            return c;
        }
        throw CLI::RequiredError("--coords");
    }

    sc::Formula load_formula(Digest& d) {
        if (!opt_.formula_json_path.empty()) {
            const std::string bytes = read_file(opt_.formula_json_path);
            d.add("formulaJson", bytes);
            return sc::formula_from_json(
                sc::parse_json_text(bytes, "formula document"));
        }
        if (opt_.formula_text.empty())
            throw CLI::RequiredError("--formula");
        d.add("formula", opt_.formula_text);
        return sc::parse_formula(opt_.formula_text);
    }

    void emit(const std::string& command, Digest& d, const json& outputs,
              std::chrono::steady_clock::time_point started, bool verify_failed) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        json report = json::object();
        report["command"] = command;
        report["inputsDigest"] = d.hex();
        report["outputs"] = outputs;
        report["timing"] = {
            {"milliseconds",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
        };
        const std::string text = report.dump(2) + "\n";
        std::cout << text;
        if (!opt_.out_path.empty()) {
            std::ofstream out(opt_.out_path, std::ios::binary);
            if (!out)
                sc::raise(sc::ErrorCode::DataFormat,
                          "cannot write file: " + opt_.out_path);
            out << text;
        }
        if (verify_failed)
            throw VerifyFailure{};
    }

    void run_check() {
        Digest d;
        d.add("command", "check");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        sc::CoordSet coords = coords_or_query(p, d);
        const bool sufficient = sc::is_sufficient(p, coords, opt_.max_states);
        json outputs = json::object();
        outputs["coords"] = sc::coordset_to_json(coords);
        outputs["sufficient"] = sufficient;
        if (!sufficient) {
            auto w = sc::insufficiency_witness(p, coords, opt_.max_states);
            outputs["witness"] = sc::witness_to_json(*w);
        }
        bool failed = false;
        if (opt_.verify) {
            outputs["verified"] = sufficient;
            failed = !sufficient;
        }
        emit("check", d, outputs, t0, failed);
    }

    void run_witness() {
        Digest d;
        d.add("command", "witness");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        sc::CoordSet coords = coords_or_query(p, d);
        auto w = sc::insufficiency_witness(p, coords, opt_.max_states);
        json outputs = json::object();
        outputs["coords"] = sc::coordset_to_json(coords);
        outputs["witness"] = w ? sc::witness_to_json(*w) : json();
        emit("witness", d, outputs, t0, false);
    }

    void run_relevant() {
        Digest d;
        d.add("command", "relevant");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        json outputs = json::object();
        outputs["relevantCoordinates"] =
            sc::coordset_to_json(sc::relevant_coordinates(p, opt_.max_states));
        emit("relevant", d, outputs, t0, false);
    }

    void run_minsuff() {
        Digest d;
        d.add("command", "minsuff");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        json outputs = json::object();
        outputs["minimalSufficientSet"] =
            sc::coordset_to_json(sc::minimal_sufficient_set(p, opt_.max_states));
        emit("minsuff", d, outputs, t0, false);
    }

    void run_dq() {
        Digest d;
        d.add("command", "dq");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        sc::CoordSet coords = coords_or_query(p, d);
        d.add("state", opt_.state_text);
        sc::State s = sc::state_from_json(state_json_from_text(opt_.state_text), p);
        p.space().require_valid(s);
        const sc::Rational q = sc::decision_quotient(p, coords, s, opt_.max_states);
        json outputs = json::object();
        outputs["coords"] = sc::coordset_to_json(coords);
        outputs["state"] = sc::state_to_json(s);
        outputs["decisionQuotient"] = sc::rational_to_json(q);
        emit("dq", d, outputs, t0, false);
    }

    void run_anchor() {
        Digest d;
        d.add("command", "anchor");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        sc::CoordSet coords = coords_or_query(p, d);
        auto alpha = sc::anchor_sufficiency(p, coords, opt_.max_states);
        json outputs = json::object();
        outputs["coords"] = sc::coordset_to_json(coords);
        outputs["anchor"] = alpha ? sc::anchor_assignment_to_json(*alpha) : json();
        bool failed = false;
        if (opt_.verify) {
            const bool ok =
                alpha && sc::subcube_has_constant_opt(p, *alpha, opt_.max_states);
            outputs["verified"] = ok;
            failed = !ok;
        }
        emit("anchor", d, outputs, t0, failed);
    }

    void run_gadget(sc::GadgetKind kind) {
        Digest d;
        const std::string name =
            std::string("gadget ") + sc::gadget_kind_name(kind);
        d.add("command", name);
        const auto t0 = std::chrono::steady_clock::now();
        sc::Formula phi = load_formula(d);
        sc::GadgetInstance g = [&] {
            switch (kind) {
            case sc::GadgetKind::Tautology:
                return sc::tautology_gadget(phi, opt_.max_states);
            case sc::GadgetKind::AllCoords:
                return sc::all_coords_gadget(phi, opt_.max_states);
            default: {
                if (opt_.split_text.empty())
                    throw CLI::RequiredError("--split");
                d.add("split", opt_.split_text);
                const auto [k, m] = parse_split(opt_.split_text);
                return sc::anchor_gadget(phi, k, m, opt_.max_states);
            }
            }
        }();
        json outputs = json::object();
        outputs["gadget"] = sc::gadget_to_json(g);
        bool failed = false;
        if (opt_.verify) {
            bool holds = false;
            switch (kind) {
            case sc::GadgetKind::Tautology: {
                const bool taut = sc::is_tautology_brute(phi).tautology;
                const bool suff =
                    sc::is_sufficient(g.problem, g.query_coords, opt_.max_states);
                outputs["tautology"] = taut;
                outputs["sufficient"] = suff;
                holds = taut == suff;
                break;
            }
            case sc::GadgetKind::AllCoords: {
                const bool taut = sc::is_tautology_brute(phi).tautology;
                const sc::CoordSet rel =
                    sc::relevant_coordinates(g.problem, opt_.max_states);
                outputs["tautology"] = taut;
                outputs["relevantCoordinates"] = sc::coordset_to_json(rel);
                holds = taut ? rel.empty()
                             : rel == sc::CoordSet::full(g.problem.coordinate_count());
                break;
            }
            default: {
                const auto [k, m] = parse_split(opt_.split_text);
                auto x = sc::exists_forall_brute(phi, k, m);
                auto alpha =
                    sc::anchor_sufficiency(g.problem, g.query_coords, opt_.max_states);
                outputs["existsForall"] = x ? json(*x) : json();
                outputs["anchor"] =
                    alpha ? sc::anchor_assignment_to_json(*alpha) : json();
                holds = x.has_value() == alpha.has_value();
                if (alpha && !sc::subcube_has_constant_opt(g.problem, *alpha,
                                                           opt_.max_states))
                    holds = false;
                break;
            }
            }
            outputs["equivalenceHolds"] = holds;
            failed = !holds;
        }
        emit(name, d, outputs, t0, failed);
    }

    void run_tree(bool want_opt) {
        Digest d;
        const std::string name = want_opt ? "tree opt" : "tree relevant";
        d.add("command", name);
        const auto t0 = std::chrono::steady_clock::now();
        const std::string bytes = read_file(opt_.tree_path);
        d.add("tree", bytes);
        sc::TreeUtility tu =
            sc::tree_from_json(sc::parse_json_text(bytes, "tree document"));
        json outputs = json::object();
        if (want_opt) {
            d.add("state", opt_.state_text);
            json sj = state_json_from_text(opt_.state_text);
            if (!sj.is_array())
                sc::raise(sc::ErrorCode::DataFormat, "state: expected an array");
            sc::State s;
            for (const auto& e : sj) {
                if (e.is_number_integer())
                    s.values.push_back(e.get<int>());
                else
                    sc::raise(sc::ErrorCode::DataFormat,
                              "tree states take integer values");
            }
            outputs["state"] = sc::state_to_json(s);
            outputs["opt"] = sc::optset_to_json(sc::tree_opt(tu, s));
        } else {
            outputs["relevantCoordinates"] = sc::coordset_to_json(
                sc::tree_relevant_coordinates(tu, opt_.budget, opt_.max_states));
        }
        emit(name, d, outputs, t0, false);
    }

    void run_separable() {
        Digest d;
        d.add("command", "separable");
        const auto t0 = std::chrono::steady_clock::now();
        sc::DecisionProblem p = load_problem(d);
        auto sep = sc::detect_separable(p, opt_.max_states);
        json outputs = json::object();
        outputs["separable"] = sep.has_value();
        if (sep) {
            json f = json::array();
            for (const auto& r : sep->f)
                f.push_back(sc::rational_to_json(r));
            outputs["f"] = std::move(f);
            outputs["opt"] = sc::optset_to_json(sc::solve_separable(*sep));
        }
        bool failed = false;
        if (opt_.verify) {
            bool ok = sep.has_value();
            if (ok) {
                ok = sc::expand_separable(*sep, opt_.max_states) == p &&
                     sc::is_sufficient(p, {}, opt_.max_states);
                outputs["reconstructionExact"] = ok;
            }
            outputs["verified"] = ok;
            failed = !ok;
        }
        emit("separable", d, outputs, t0, failed);
    }

    void run_linear() {
        Digest d;
        d.add("command", "linear");
        const auto t0 = std::chrono::steady_clock::now();
        const std::string bytes = read_file(opt_.weights_path);
        d.add("weights", bytes);
        sc::LinearUtility lin =
            sc::linear_from_json(sc::parse_json_text(bytes, "weights document"));
        json outputs = json::object();
        outputs["linearRelevance"] = sc::coordset_to_json(sc::linear_relevance(lin));
        emit("linear", d, outputs, t0, false);
    }

    sc::EconModel econ_model(Digest& d) {
        d.add("universe", std::to_string(opt_.universe));
        d.add("required", opt_.required_text);
        d.add("native", opt_.native_text);
        sc::EconModel m;
        m.universe = static_cast<int>(opt_.universe);
        m.required_axes = parse_coords(opt_.required_text);
        m.native_axes = parse_coords(opt_.native_text);
        m.require_valid();
        return m;
    }

    void run_econ_gap(bool with_work) {
        Digest d;
        const std::string name = with_work ? "econ work" : "econ gap";
        d.add("command", name);
        const auto t0 = std::chrono::steady_clock::now();
        sc::EconModel m = econ_model(d);
        sc::GapReport r = sc::gap_report(m);
        json outputs = json::object();
        outputs["gap"] = sc::coordset_to_json(r.gap);
        outputs["tax"] = r.tax;
        outputs["conservationHolds"] = r.conservation_holds;
        if (with_work) {
            d.add("sites", std::to_string(opt_.sites));
            outputs["totalExternalWork"] = sc::total_external_work(m, opt_.sites);
        }
        emit(name, d, outputs, t0, false);
    }

    void run_econ_amortize() {
        Digest d;
        d.add("command", "econ amortize");
        const auto t0 = std::chrono::steady_clock::now();
        sc::EconModel m = econ_model(d);
        d.add("hcentral", opt_.h_central_text);
        const sc::Rational h = sc::Rational::parse(opt_.h_central_text);
        json outputs = json::object();
        outputs["threshold"] = sc::rational_to_json(sc::amortization_threshold(h, m));
        emit("econ amortize", d, outputs, t0, false);
    }

    void run_econ_hardness() {
        Digest d;
        d.add("command", "econ hardness");
        const auto t0 = std::chrono::steady_clock::now();
        d.add("hcentral", opt_.h_central_text);
        d.add("hdistributed", opt_.h_distributed_text);
        d.add("sites", std::to_string(opt_.sites));
        sc::HardnessSplit s{sc::Rational::parse(opt_.h_central_text),
                            sc::Rational::parse(opt_.h_distributed_text)};
        sc::HardnessReport r = sc::hardness_report(s, opt_.sites);
        json outputs = json::object();
        outputs["hTotal"] = sc::rational_to_json(r.h_total);
        outputs["eta"] = sc::rational_to_json(r.eta);
        emit("econ hardness", d, outputs, t0, false);
    }

    void run_econ_overmodel() {
        Digest d;
        d.add("command", "econ overmodel");
        const auto t0 = std::chrono::steady_clock::now();
        d.add("n", std::to_string(opt_.over_n));
        d.add("k", std::to_string(opt_.over_k));
        d.add("coverPerParam", opt_.c_over_text);
        d.add("cunder", opt_.c_under_text);
        sc::OverModelParams p{opt_.over_n, opt_.over_k,
                              sc::Rational::parse(opt_.c_over_text),
                              sc::Rational::parse(opt_.c_under_text)};
        sc::OvermodelingComparison r = sc::overmodeling_comparison(p);
        json outputs = json::object();
        outputs["cOver"] = sc::rational_to_json(r.c_over);
        outputs["cFindBrute"] = r.c_find_brute;
        outputs["overmodelingWins"] = r.overmodeling_wins;
        emit("econ overmodel", d, outputs, t0, false);
    }

  private:
    Options& opt_;
    json doc_; // last loaded problem document, for queryCoords fallback
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-states", opt.max_states,
                    "Enumeration cap on the number of states");
    cmd->add_option("--out", opt.out_path, "Also write the report to this file");
}

void add_problem(CLI::App* cmd, Options& opt) {
    cmd->add_option("--problem", opt.problem_path,
                    "Problem, gadget, or report JSON document")
        ->required();
    add_common(cmd, opt);
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    Runner runner(opt);

    CLI::App app{"Exact analysis of finite decision problems with coordinate "
                 "structure"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Decide coordinate-set sufficiency");
    add_problem(check, opt);
    check->add_option("--coords", opt.coords_text, "Coordinate set, e.g. [0,2]");
    check->add_flag("--verify", opt.verify, "Exit 2 unless sufficient");
    check->callback([&] { runner.run_check(); });

    auto* witness =
        app.add_subcommand("witness", "Extract an insufficiency witness");
    add_problem(witness, opt);
    witness->add_option("--coords", opt.coords_text, "Coordinate set");
    witness->callback([&] { runner.run_witness(); });

    auto* relevant =
        app.add_subcommand("relevant", "List the relevant coordinates");
    add_problem(relevant, opt);
    relevant->callback([&] { runner.run_relevant(); });

    auto* minsuff =
        app.add_subcommand("minsuff", "Compute the minimum sufficient set");
    add_problem(minsuff, opt);
    minsuff->callback([&] { runner.run_minsuff(); });

    auto* dq = app.add_subcommand("dq", "Decision quotient at a state");
    add_problem(dq, opt);
    dq->add_option("--coords", opt.coords_text, "Coordinate set");
    dq->add_option("--state", opt.state_text, "State, e.g. [1,0,3] or labels")
        ->required();
    dq->callback([&] { runner.run_dq(); });

    auto* anchor =
        app.add_subcommand("anchor", "Search for an anchor assignment");
    add_problem(anchor, opt);
    anchor->add_option("--coords", opt.coords_text,
                       "Coordinate set (defaults to a gadget's query set)");
    anchor->add_flag("--verify", opt.verify,
                     "Exit 2 unless an anchor exists and re-verifies");
    anchor->callback([&] { runner.run_anchor(); });

    auto* gadget = app.add_subcommand("gadget", "Generate a reduction gadget");
    gadget->require_subcommand(1);
    for (auto kind : {sc::GadgetKind::Tautology, sc::GadgetKind::AllCoords,
                      sc::GadgetKind::Anchor}) {
        auto* g = gadget->add_subcommand(
            sc::gadget_kind_name(kind),
            std::string("Build the ") + sc::gadget_kind_name(kind) + " gadget");
        g->add_option("--formula", opt.formula_text, "Formula text, e.g. \"x1 | ~x1\"");
        g->add_option("--formula-json", opt.formula_json_path,
                      "Formula AST as a JSON file");
        if (kind == sc::GadgetKind::Anchor)
            g->add_option("--split", opt.split_text,
                          "Existential,universal variable counts, e.g. 2,1");
        g->add_flag("--verify", opt.verify,
                    "Check the gadget equivalence against the brute oracle; "
                    "exit 2 on mismatch");
        add_common(g, opt);
        g->callback([&runner, kind] { runner.run_gadget(kind); });
    }

    auto* tree = app.add_subcommand("tree", "Tree-structured utilities");
    tree->require_subcommand(1);
    auto* tree_rel =
        tree->add_subcommand("relevant", "Relevant coordinates of a tree utility");
    tree_rel->add_option("--tree", opt.tree_path, "Tree utility JSON document")
        ->required();
    tree_rel->add_option("--budget", opt.budget,
                         "Summary budget before falling back to expansion");
    add_common(tree_rel, opt);
    tree_rel->callback([&] { runner.run_tree(false); });
    auto* tree_opt_cmd =
        tree->add_subcommand("opt", "Optimal actions of a tree utility at a state");
    tree_opt_cmd->add_option("--tree", opt.tree_path, "Tree utility JSON document")
        ->required();
    tree_opt_cmd->add_option("--state", opt.state_text, "State, e.g. [1,0]")
        ->required();
    add_common(tree_opt_cmd, opt);
    tree_opt_cmd->callback([&] { runner.run_tree(true); });

    auto* separable =
        app.add_subcommand("separable", "Detect and solve a separable utility");
    add_problem(separable, opt);
    separable->add_flag("--verify", opt.verify,
                        "Exit 2 unless separable with an exact reconstruction");
    separable->callback([&] { runner.run_separable(); });

    auto* linear =
        app.add_subcommand("linear", "Weight-difference relevance of a linear utility");
    linear->add_option("--weights", opt.weights_path, "Weight matrix JSON document")
        ->required();
    linear->add_option("--out", opt.out_path, "Also write the report to this file");
    linear->callback([&] { runner.run_linear(); });

    auto* econ = app.add_subcommand("econ", "Simplicity-tax cost model");
    econ->require_subcommand(1);
    auto add_model_flags = [&](CLI::App* e) {
        e->add_option("--universe", opt.universe, "Axis universe size")->required();
        e->add_option("--required", opt.required_text, "Required axes, e.g. [0,1,2]")
            ->required();
        e->add_option("--native", opt.native_text, "Natively handled axes")
            ->required();
        e->add_option("--out", opt.out_path, "Also write the report to this file");
    };
    auto* econ_gap = econ->add_subcommand("gap", "Expressive gap and tax");
    add_model_flags(econ_gap);
    econ_gap->callback([&] { runner.run_econ_gap(false); });
    auto* econ_work = econ->add_subcommand("work", "Total external work");
    add_model_flags(econ_work);
    econ_work->add_option("--sites", opt.sites, "Use-site count")->required();
    econ_work->callback([&] { runner.run_econ_gap(true); });
    auto* econ_amortize =
        econ->add_subcommand("amortize", "Amortization threshold n*");
    add_model_flags(econ_amortize);
    econ_amortize->add_option("--hcentral", opt.h_central_text,
                              "One-time central hardness (rational)")
        ->required();
    econ_amortize->callback([&] { runner.run_econ_amortize(); });
    auto* econ_hardness =
        econ->add_subcommand("hardness", "Total hardness and efficiency");
    econ_hardness->add_option("--hcentral", opt.h_central_text, "Central hardness")
        ->required();
    econ_hardness->add_option("--hdistributed", opt.h_distributed_text,
                              "Per-site hardness");
    econ_hardness->add_option("--sites", opt.sites, "Use-site count")->required();
    econ_hardness->add_option("--out", opt.out_path, "Also write the report");
    econ_hardness->callback([&] { runner.run_econ_hardness(); });
    auto* econ_over =
        econ->add_subcommand("overmodel", "Over- vs under-modeling comparison");
    econ_over->add_option("--n", opt.over_n, "Candidate parameter count")->required();
    econ_over->add_option("--k", opt.over_k, "Extra parameters carried");
    econ_over->add_option("--cover-per-param", opt.c_over_text,
                          "Maintenance cost per extra parameter");
    econ_over->add_option("--cunder", opt.c_under_text, "Under-modeling cost");
    econ_over->add_option("--out", opt.out_path, "Also write the report");
    econ_over->callback([&] { runner.run_econ_overmodel(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const VerifyFailure&) {
        return 2;
    } catch (const sc::Error& e) {
        json err = json::object();
        err["error"] = {{"code", e.code_name()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        json err = json::object();
        err["error"] = {{"code", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 70;
    }
    return 0;
}

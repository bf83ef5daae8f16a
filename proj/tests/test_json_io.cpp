#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "suffcheck/json_io.hpp"
#include "support/fixtures.hpp"

using namespace suffcheck;
using namespace testsupport;

TEST_CASE("rationals travel as [num, den] pairs; bare integers accepted") {
    CHECK(rational_to_json(Rational(7, 3)) == json::array({7, 3}));
    CHECK(rational_to_json(Rational(-4)) == json::array({-4, 1}));
    CHECK(rational_from_json(json::array({7, 3})) == Rational(7, 3));
    CHECK(rational_from_json(json::array({6, 4})) == Rational(3, 2)); // normalized
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK(rational_from_json(json(-2)) == Rational(-2));

    for (const char* bad : {"[1, 0]", "[1, -2]", "[1]", "[1, 2, 3]", "1.5",
                            "\"x\"", "[1.5, 2]", "null"}) {
        try {
            rational_from_json(parse_json_text(bad, "test"));
            FAIL("expected rejection of ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DataFormat);
        }
    }
}

TEST_CASE("problem documents round-trip byte-identically") {
    DecisionProblem p = weather_problem();
    json j = problem_to_json(p);
    CHECK(j["actions"] == json::array({"carry", "dont"}));
    CHECK(j["domains"][0]["size"] == 2);
    CHECK(j["domains"][0]["labels"][1] == "rain");
    CHECK(j["utility"].size() == 2);
    CHECK(j["utility"][0].size() == 28);

    DecisionProblem back = problem_from_json(j);
    CHECK(back == p);
    CHECK(problem_to_json(back).dump() == j.dump()); // canonical writer

    // Unlabeled domains omit the labels key.
    DecisionProblem plain = constant_problem(2, {2, 3});
    json pj = problem_to_json(plain);
    CHECK_FALSE(pj["domains"][0].contains("labels"));
    CHECK(problem_from_json(pj) == plain);
}

TEST_CASE("problem parsing rejects malformed documents") {
    const char* docs[] = {
        R"({"domains": [], "utility": []})",                    // no actions
        R"({"actions": [], "domains": [], "utility": []})",     // empty actions
        R"({"actions": ["a"], "utility": [[0]]})",              // no domains
        R"({"actions": ["a"], "domains": [{"size": 2}], "utility": [[0]]})",   // row too short
        R"({"actions": ["a"], "domains": [{"size": 2}], "utility": [[0,0],[0,0]]})", // extra row
        R"({"actions": ["a"], "domains": [{"size": 0}], "utility": [[]]})",    // empty domain
        R"({"actions": ["a"], "domains": [{"size": 2, "labels": ["x"]}], "utility": [[0,0]]})", // label arity
        R"({"actions": ["a"], "domains": ["two"], "utility": [[0,0]]})",       // domain not int/object
        R"([1,2,3])",                                           // not an object
    };
    for (const char* d : docs) {
        CHECK_THROWS_AS(problem_from_json(parse_json_text(d, "test")), Error);
    }
    // State cap applies at parse time.
    json big = problem_to_json(constant_problem(1, {4, 4, 4}));
    try {
        problem_from_json(big, 63);
        FAIL("expected cap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
    }
}

TEST_CASE("problem_from_document digs through wrappers") {
    DecisionProblem p = weather_problem();
    json plain = problem_to_json(p);
    CHECK(problem_from_document(plain) == p);

    json gadget = gadget_to_json(tautology_gadget(parse_formula("x1 | x2")));
    DecisionProblem gp = problem_from_document(gadget);
    CHECK(gp.action_labels() == std::vector<std::string>{"accept", "reject"});

    // A report wrapping a gadget (as the CLI emits) still yields the problem.
    json report;
    report["command"] = "gadget tautology";
    report["outputs"]["gadget"] = gadget;
    CHECK(problem_from_document(report) == gp);

    json nested;
    nested["problem"] = plain;
    CHECK(problem_from_document(nested) == p);

    CHECK_THROWS_AS(problem_from_document(json::object()), Error);
}

TEST_CASE("states serialize as value vectors; labels resolve on input") {
    DecisionProblem p = weather_problem();
    State s{1, 0, 2};
    CHECK(state_to_json(s) == json::array({1, 0, 2}));
    CHECK(state_from_json(json::array({1, 0, 2}), p) == s);
    CHECK(state_from_json(parse_json_text(R"(["rain", "cold", "Wed"])", "t"), p) == s);
    CHECK(state_from_json(parse_json_text(R"(["rain", 0, "Wed"])", "t"), p) == s);
    CHECK_THROWS_AS(state_from_json(parse_json_text(R"(["wet", 0, 0])", "t"), p),
                    Error);
    CHECK_THROWS_AS(state_from_json(parse_json_text(R"([1, 0])", "t"), p), Error);
    CHECK_THROWS_AS(state_from_json(parse_json_text("{}", "t"), p), Error);
}

TEST_CASE("witness and anchor assignments serialize with stable keys") {
    DecisionProblem p = weather_problem();
    auto w = insufficiency_witness(p, CoordSet{1, 2});
    REQUIRE(w.has_value());
    json wj = witness_to_json(*w);
    CHECK(wj["s"] == json::array({0, 0, 0}));
    CHECK(wj["sPrime"] == json::array({1, 0, 0}));
    CHECK(wj["optS"] == json::array({1}));
    CHECK(wj["optSPrime"] == json::array({0}));

    AnchorAssignment a{CoordSet{0, 2}, {1, 3}};
    json aj = anchor_assignment_to_json(a);
    CHECK(aj["coords"] == json::array({0, 2}));
    CHECK(aj["values"] == json::array({1, 3}));
}

TEST_CASE("gadget instances round-trip with provenance") {
    for (const char* text : {"x1 | x2", "x1 & x2", "~x1 -> x2"}) {
        GadgetInstance g = tautology_gadget(parse_formula(text));
        GadgetInstance back = gadget_from_json(gadget_to_json(g));
        CHECK(back.problem == g.problem);
        CHECK(back.query_coords == g.query_coords);
        CHECK(back.provenance == g.provenance);
    }
    GadgetInstance a = anchor_gadget(parse_formula("x1 | x2"), 1, 1);
    GadgetInstance aback = gadget_from_json(gadget_to_json(a));
    CHECK(aback.problem == a.problem);
    CHECK(aback.provenance == a.provenance);
    CHECK(aback.provenance.kind == GadgetKind::Anchor);
    CHECK(aback.provenance.k == 1);

    GadgetInstance pad = anchor_gadget(parse_formula("x1"), 1, 0);
    CHECK(gadget_from_json(gadget_to_json(pad)).provenance.padded);

    json j = gadget_to_json(a);
    j["provenance"]["kind"] = "bogus";
    CHECK_THROWS_AS(gadget_from_json(j), Error);
}

TEST_CASE("formula JSON: AST nodes with 1-based variables") {
    Formula f = parse_formula("~x1 & (x2 -> true)");
    json j = formula_to_json(f);
    CHECK(j["varCount"] == 2);
    CHECK(j["root"]["op"] == "and");
    Formula back = formula_from_json(j);
    CHECK(back == f);

    // A bare node (no wrapper) is accepted; var_count inferred.
    Formula v = formula_from_json(parse_json_text(R"({"op":"var","var":3})", "t"));
    CHECK(v.var_count() == 3);
    CHECK(v == Formula::var(2).with_var_count(3));

    // varCount may widen but not truncate.
    Formula wide = formula_from_json(
        parse_json_text(R"({"varCount": 5, "root": {"op":"var","var":1}})", "t"));
    CHECK(wide.var_count() == 5);
    CHECK_THROWS_AS(formula_from_json(parse_json_text(
                        R"({"varCount": 0, "root": {"op":"var","var":1}})", "t")),
                    Error);

    try {
        formula_from_json(parse_json_text(R"({"op":"var","var":0})", "t"));
        FAIL("expected x0 rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VarIndexZero);
    }
    CHECK_THROWS_AS(formula_from_json(parse_json_text(R"({"op":"frob"})", "t")),
                    Error);

    std::mt19937_64 rng(701);
    for (int t = 0; t < 200; ++t) {
        Formula r = random_formula(rng, 4, 4);
        CHECK(formula_from_json(formula_to_json(r)) == r);
    }
}

TEST_CASE("tree JSON: nested factors validated against structure") {
    TreeUtility tu = chain_tree();
    json j = tree_to_json(tu);
    TreeUtility back = tree_from_json(j);
    CHECK(back == tu);

    std::mt19937_64 rng(702);
    for (int t = 0; t < 100; ++t) {
        TreeUtility r = random_tree(rng);
        CHECK(tree_from_json(tree_to_json(r)) == r);
    }

    // Factor tables must match the declared domains exactly.
    json bad = tree_to_json(tu);
    bad["factors"][1][0].erase(0); // drop one parent-value column
    CHECK_THROWS_AS(tree_from_json(bad), Error);
    json bad2 = tree_to_json(tu);
    bad2["parent"][1] = 5;
    CHECK_THROWS_AS(tree_from_json(bad2), Error);
}

TEST_CASE("linear JSON round-trip and validation") {
    LinearUtility lin;
    lin.action_labels = {"a", "b"};
    lin.weights = {{Rational(1, 2), Rational(0)}, {Rational(-1), Rational(3)}};
    CHECK(linear_from_json(linear_to_json(lin)) == lin);
    CHECK_THROWS_AS(linear_from_json(parse_json_text(
                        R"({"actions":["a"],"weights":[[1],[2]]})", "t")),
                    Error);
}

TEST_CASE("parse_json_text reports DataFormat, not library exceptions") {
    try {
        parse_json_text("{oops", "config");
        FAIL("expected parse failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DataFormat);
    }
    CHECK(parse_json_text("[1, 2]", "t") == json::array({1, 2}));
}

TEST_CASE("digest is the reference FNV-1a 64") {
    // Reference vectors for the 64-bit FNV-1a function.
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
    CHECK(fnv1a64_hex("hello") != fnv1a64_hex("hellp"));
}

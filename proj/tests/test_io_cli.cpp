#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "predim/io.hpp"

using namespace predim;

namespace {

Graph graph_from(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in, "inline");
}

std::vector<Arc> arcs_from(const std::string& text) {
    std::istringstream in(text);
    return parse_arcs(in, "inline");
}

} // namespace

TEST_CASE("edge lists parse with implicit endpoints and comments") {
    Graph g = graph_from("# a square\n"
                         "v a\n"
                         "v b\n"
                         "e a b\n"
                         "e b d   # d appears here first\n"
                         "e d a\n"
                         "\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_vertex("d"));
    CHECK(g.has_edge("d", "a"));
}

TEST_CASE("parse errors carry file and line") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_graph(in, "bad.txt");
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.file() == "bad.txt");
            CHECK(e.line() == line);
        }
    };
    expect_error("v a\nv a\n", 2);              // redeclared vertex
    expect_error("e a b\ne b a\n", 2);          // duplicate edge
    expect_error("e a a\n", 1);                 // loop
    expect_error("v a\nq a b\n", 2);            // unknown directive
    expect_error("v\n", 1);                     // missing operand
    expect_error("e a b extra\n", 1);           // trailing junk
}

TEST_CASE("arc lists parse and reject other directives") {
    auto arcs = arcs_from("# two arcs\na p q\na q r\n");
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == Arc{"p", "q"});
    CHECK(arcs[1] == Arc{"q", "r"});

    std::istringstream in("v p\n");
    CHECK_THROWS_AS(parse_arcs(in, "arcs.txt"), ParseError);
}

TEST_CASE("graph JSON keeps vertices before edges") {
    Graph g = graph_from("e b a\nv z\n");
    Json j = graph_to_json(g);
    auto it = j.begin();
    CHECK(it.key() == "vertices");
    ++it;
    CHECK(it.key() == "edges");
    CHECK(j["vertices"] == Json::array({"a", "b", "z"}));
    CHECK(j["edges"][0] == Json::array({"a", "b"}));
}

TEST_CASE("the reference control function round-trips through JSON") {
    ControlFunction f = ControlFunction::reference();
    Json j = control_function_to_json(f);
    ControlFunction back = parse_control_function(j, "roundtrip");
    CHECK(back == f);
    CHECK(back.is_reference());
}

TEST_CASE("rationals serialise as integers or quotient strings") {
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3)) == "-3");
    CHECK(rational_to_string(Rational(1, 4)) == "1/4");
    CHECK(rational_to_string(Rational(-7, 2)) == "-7/2");

    // emission always uses strings; the parser takes either form
    Json j = control_function_to_json(ControlFunction::reference());
    CHECK(j["tail"]["p"] == "1/4");
    CHECK(j["tail"]["q"] == "8");
    CHECK(j["tail"]["s"]["log_coeff"] == "-1/4");
    CHECK(j["tail"]["s"]["log_arg"] == "17");
    Json relaxed = j;
    relaxed["tail"]["q"] = 8;   // integer form parses the same
    CHECK(parse_control_function(relaxed, "relaxed") ==
          ControlFunction::reference());
}

TEST_CASE("malformed control function JSON is refused with context") {
    Json good = control_function_to_json(ControlFunction::reference());

    Json no_tail = good;
    no_tail.erase("tail");
    CHECK_THROWS_AS(parse_control_function(no_tail, "f.json"), ParseError);

    Json zero_div = good;
    zero_div["tail"]["p"] = "1/0";
    CHECK_THROWS_AS(parse_control_function(zero_div, "f.json"), ParseError);

    Json garbage = good;
    garbage["knots"][0][0] = "one half";
    CHECK_THROWS_AS(parse_control_function(garbage, "f.json"), ParseError);

    Json bad_knots = good;
    bad_knots["knots"] = "none";
    CHECK_THROWS_AS(parse_control_function(bad_knots, "f.json"),
                    ParseError);
}

TEST_CASE("missing files surface as parse errors naming the path") {
    try {
        load_graph("/nonexistent/graph.txt");
        FAIL("expected an error for a missing file");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/nonexistent/graph.txt") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(load_arcs("/nonexistent/arcs.txt"), ParseError);
    CHECK_THROWS_AS(load_control_function("/nonexistent/f.json"),
                    ParseError);
}

TEST_CASE("witness serialisations expose their defining numbers") {
    SparsityWitness w{{"a", "b"}, 5, 4};
    Json jw = sparsity_witness_to_json(w);
    CHECK(jw["vertices"] == Json::array({"a", "b"}));
    CHECK(jw["edge_count"] == 5);
    CHECK(jw["bound"] == 4);

    SubsetWitness s{{"x"}, 1, 2};
    Json js = subset_witness_to_json(s);
    CHECK(js["subset"] == Json::array({"x"}));
    CHECK(js["delta"] == 1);
    CHECK(js["required"] == 2);

    DClosedViolation v{{"a", "b", "c"}, 3, 4};
    Json jv = d_closed_violation_to_json(v);
    CHECK(jv["superset"] == Json::array({"a", "b", "c"}));
    CHECK(jv["delta_superset"] == 3);
    CHECK(jv["delta_base"] == 4);
}

TEST_CASE("closure certificates serialise their steps in order") {
    ClosureCertificate c;
    c.seed = {"a"};
    c.closure = {"a", "b"};
    c.checked_bound = 7;
    c.steps.push_back({{"b"}, 2, 2});
    Json j = certificate_to_json(c);
    CHECK(j["seed"] == Json::array({"a"}));
    CHECK(j["closure"] == Json::array({"a", "b"}));
    CHECK(j["checked_bound"] == 7);
    REQUIRE(j["steps"].size() == 1);
    CHECK(j["steps"][0]["absorbed"] == Json::array({"b"}));
    CHECK(j["steps"][0]["delta_before"] == 2);
    CHECK(j["steps"][0]["delta_after"] == 2);
}

TEST_CASE("orientation JSON lists arcs in sorted order") {
    Graph g = path_graph({"a", "b", "c"});
    Orientation o = Orientation::from_arcs(g, {{"c", "b"}, {"a", "b"}});
    Json j = orientation_to_json(o);
    REQUIRE(j["arcs"].size() == 2);
    CHECK(j["arcs"][0] == Json::array({"a", "b"}));
    CHECK(j["arcs"][1] == Json::array({"c", "b"}));
}

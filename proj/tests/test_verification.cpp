#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "predim/verification.hpp"

using namespace predim;

namespace {

const ValidationCheck* check_named(const VerificationReport& r,
                                   const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool has_row(const std::vector<std::string>& rows, const std::string& row) {
    return std::find(rows.begin(), rows.end(), row) != rows.end();
}

} // namespace

TEST_CASE("the single-edge report carries all four tables") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK(r.ok());
    CHECK(r.single_edge);
    CHECK(r.relative_table.size() == 14);
    CHECK(r.cycle_table.size() == 11);
    CHECK(r.closure_table.size() == 15);
    CHECK(r.small_structures.size() == 13);

    for (const char* name :
         {"orientation valid", "base in class", "gadget built",
          "base d-closed in gadget", "gadget in class",
          "decoding round trip", "relative predimension table",
          "head family table", "closure deficit table", "small structures",
          "six-vertex substructure in class", "label structure in class"}) {
        const auto* c = check_named(r, name);
        REQUIRE(c != nullptr);
        INFO(name << ": " << c->detail);
        CHECK(c->ok);
    }
}

TEST_CASE("pinned rows of the relative predimension table") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK(r.relative_table.front() == "l2 -> 1");
    CHECK(has_row(r.relative_table, "c, l1 -> 3"));
    CHECK(has_row(r.relative_table, "l1, l2, l3, l4 -> 1"));
    CHECK(r.relative_table.back() == "c, l1, l2, l3, l4 -> 2");
}

TEST_CASE("pinned rows of the head family table") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK(r.cycle_table.front() == "c l1 l2 a | Y1 | 1");
    CHECK(has_row(r.cycle_table, "c l1 l2 l3 ab | Y5 | 1"));
    CHECK(has_row(r.cycle_table, "c l1 l2 l3 l4 a | Y9 | 1"));
    CHECK(r.cycle_table.back() == "c l1 l2 l3 l4 ab | Y11 | 0");
}

TEST_CASE("pinned rows of the closure deficit table") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK(r.closure_table.front() == "l1, l2, l3, l4 / a, b, c -> 0");
    // the two diagonal pairs dip twice as deep as everything else
    CHECK(has_row(r.closure_table, "l1, l3 / l2, l4, a, b, c -> -2"));
    CHECK(has_row(r.closure_table, "l2, l4 / l1, l3, a, b, c -> -2"));
    CHECK(r.closure_table.back() == "l4 / l1, l2, l3, a, b, c -> -1");
    long minus_two = 0;
    for (const auto& row : r.closure_table)
        if (row.ends_with("-> -2")) ++minus_two;
    CHECK(minus_two == 2);
}

TEST_CASE("pinned rows of the small structure listing") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK(has_row(r.small_structures, "l1 l2 l3 l4 | 4-cycle"));
    CHECK(has_row(r.small_structures,
                  "c l1 l2 l3 l4 | free amalgam of l1 l2 l3 l4, c l1 over l1"));
    CHECK(has_row(r.small_structures, "l2 l3 l4 ab | delta 4 | F(5) < 4"));
    CHECK(has_row(r.small_structures, "l1 l2 l3 l4 a | delta 4 | F(5) < 4"));
    CHECK(has_row(r.small_structures,
                  "l1 l2 l3 l4 ab | delta 4 | F(6) < 4"));
}

TEST_CASE("roles are read off the arc, not the vertex names") {
    // same edge under other names, and with the arc reversed: the
    // tables must come out identical because roles follow the arc
    VerificationReport plain =
        verify_gadget(path_graph({"a", "b"}), {{"a", "b"}},
                      ControlFunction::reference());
    VerificationReport renamed =
        verify_gadget(path_graph({"p", "q"}), {{"p", "q"}},
                      ControlFunction::reference());
    VerificationReport reversed =
        verify_gadget(path_graph({"a", "b"}), {{"b", "a"}},
                      ControlFunction::reference());
    CHECK(renamed.ok());
    CHECK(reversed.ok());
    CHECK(renamed.relative_table == plain.relative_table);
    CHECK(renamed.cycle_table == plain.cycle_table);
    CHECK(renamed.closure_table == plain.closure_table);
    CHECK(renamed.small_structures == plain.small_structures);
    CHECK(reversed.relative_table == plain.relative_table);
    CHECK(reversed.closure_table == plain.closure_table);
}

TEST_CASE("larger bases skip the tables but keep the checks") {
    VerificationReport r =
        verify_gadget(path_graph({"a", "b", "d"}), {{"a", "b"}, {"b", "d"}},
                      ControlFunction::reference());
    CHECK(r.ok());
    CHECK_FALSE(r.single_edge);
    CHECK(r.relative_table.empty());
    CHECK(r.cycle_table.empty());
    CHECK(r.closure_table.empty());
    const auto* round_trip = check_named(r, "decoding round trip");
    REQUIRE(round_trip != nullptr);
    CHECK(round_trip->ok);
}

TEST_CASE("a base outside the class fails in the report, not by throw") {
    VerificationReport r =
        verify_gadget(complete_graph({"a", "b", "d"}), {{"a", "b"}},
                      ControlFunction::reference());
    CHECK_FALSE(r.ok());
    const auto* membership = check_named(r, "base in class");
    REQUIRE(membership != nullptr);
    CHECK_FALSE(membership->ok);
}

TEST_CASE("an overloaded vertex fails the orientation check") {
    Graph star;
    for (const char* v : {"m", "p", "q", "r"}) star.add_vertex(v);
    for (const char* v : {"p", "q", "r"}) star.add_edge("m", v);
    VerificationReport r =
        verify_gadget(star, {{"m", "p"}, {"m", "q"}, {"m", "r"}},
                      ControlFunction::reference());
    CHECK_FALSE(r.ok());
    const auto* orientation = check_named(r, "orientation valid");
    REQUIRE(orientation != nullptr);
    CHECK_FALSE(orientation->ok);
}

TEST_CASE("an empty arc list verifies trivially") {
    VerificationReport r = verify_gadget(
        path_graph({"a", "b"}), {}, ControlFunction::reference());
    CHECK(r.ok());
    CHECK_FALSE(r.single_edge);
}

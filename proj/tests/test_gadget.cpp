#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "predim/classes.hpp"
#include "predim/closure.hpp"
#include "predim/gadget.hpp"
#include "predim/isomorphism.hpp"

using namespace predim;

namespace {

Graph copy_without_edge(const Graph& g, const Edge& cut) {
    Graph h;
    for (const auto& v : g.vertices()) h.add_vertex(v);
    for (const auto& e : g.edges())
        if (!(e == cut)) h.add_edge(e.a, e.b);
    return h;
}

// The decoding pattern, written out clause by clause over all vertex
// quadruples.  Slow and independent of the library's search order.
std::set<Arc> detect_by_bruteforce(const Graph& g, const VertexId& head) {
    std::set<Arc> out;
    auto verts = g.vertices();
    for (const auto& a : verts) {
        for (const auto& b : verts) {
            if (a == b || a == head || b == head) continue;
            if (!g.has_edge(a, b)) continue;
            bool witnessed = false;
            for (const auto& l1 : verts)
                for (const auto& l2 : verts)
                    for (const auto& l3 : verts)
                        for (const auto& l4 : verts) {
                            std::vector<VertexId> ls{l1, l2, l3, l4};
                            std::vector<VertexId> all{l1, l2, l3, l4,
                                                      head, a,  b};
                            std::sort(all.begin(), all.end());
                            if (std::adjacent_find(all.begin(), all.end()) !=
                                all.end())
                                continue;
                            if (g.has_edge(head, l1) &&
                                g.has_edge(l1, l2) && g.has_edge(l2, l3) &&
                                g.has_edge(l3, l4) && g.has_edge(l4, l1) &&
                                g.has_edge(l2, a) && g.has_edge(l4, a) &&
                                g.has_edge(l3, b))
                                witnessed = true;
                        }
            if (witnessed) out.insert({a, b});
        }
    }
    return out;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

} // namespace

TEST_CASE("the single-arc gadget has the pinned shape") {
    Graph base = path_graph({"a", "b"});
    Gadget g = build_gadget(base, {{"a", "b"}});
    CHECK(g.head == "c");
    CHECK(g.base == base);
    CHECK(g.graph.vertex_count() == 7);
    CHECK(g.graph.edge_count() == 9);
    REQUIRE(g.labels.count({"a", "b"}));
    CHECK(g.labels.at({"a", "b"}) ==
          std::array<VertexId, 4>{"l1", "l2", "l3", "l4"});

    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"a", "b"}, {"c", "l1"}, {"l1", "l2"}, {"l2", "l3"},
             {"l3", "l4"}, {"l1", "l4"}, {"a", "l2"}, {"a", "l4"},
             {"b", "l3"}})
        CHECK(g.graph.has_edge(u, v));

    CHECK(g.graph.degree("a") == 3);
    CHECK(g.graph.degree("b") == 2);
    CHECK(g.graph.degree("c") == 1);
    for (const char* l : {"l1", "l2", "l3", "l4"})
        CHECK(g.graph.degree(l) == 3);

    CHECK(predimension(g.graph) == 5);
    CHECK(in_C_F(g.graph, ControlFunction::reference()));
    CHECK(is_d_closed(g.graph, {"a", "b"}));
}

TEST_CASE("an empty arc set leaves the head isolated") {
    Graph base = path_graph({"a", "b"});
    Gadget g = build_gadget(base, {});
    CHECK(g.graph.vertex_count() == 3);
    CHECK(g.graph.edge_count() == 1);
    CHECK(g.graph.degree("c") == 0);
    CHECK(g.labels.empty());
}

TEST_CASE("later arcs get suffixed label names") {
    Graph base = path_graph({"a", "b", "d"});
    Gadget g = build_gadget(base, {{"a", "b"}, {"b", "d"}});
    CHECK(g.graph.vertex_count() == 3 + 1 + 8);
    CHECK(g.graph.edge_count() == 2 + 16);
    CHECK(g.labels.at({"a", "b"}) ==
          std::array<VertexId, 4>{"l1", "l2", "l3", "l4"});
    CHECK(g.labels.at({"b", "d"}) ==
          std::array<VertexId, 4>{"l1_1", "l2_1", "l3_1", "l4_1"});
    CHECK(g.graph.has_edge("c", "l1"));
    CHECK(g.graph.has_edge("c", "l1_1"));
    CHECK(in_C_F(g.graph, ControlFunction::reference()));
}

TEST_CASE("gadget preconditions are enforced") {
    Graph base = path_graph({"a", "b", "d"});
    // a pair that is not an edge
    CHECK_THROWS_AS(build_gadget(base, {{"a", "d"}}), PreconditionError);
    // the same edge oriented twice
    CHECK_THROWS_AS(build_gadget(base, {{"a", "b"}, {"b", "a"}}), Error);
    // out-degree three
    Graph star;
    for (const char* v : {"m", "p", "q", "r"}) star.add_vertex(v);
    for (const char* v : {"p", "q", "r"}) star.add_edge("m", v);
    CHECK_THROWS_AS(
        build_gadget(star, {{"m", "p"}, {"m", "q"}, {"m", "r"}}),
        PreconditionError);
    // base outside the reference class
    Graph tri = complete_graph({"a", "b", "d"});
    CHECK_THROWS_AS(build_gadget(tri, {{"a", "b"}}), PreconditionError);
    // head name already taken
    Graph clash = path_graph({"c", "d"});
    CHECK_THROWS_AS(build_gadget(clash, {{"c", "d"}}), PreconditionError);
    build_gadget(clash, {{"c", "d"}}, "h");   // custom head avoids it
    // label name already taken
    Graph label_clash = path_graph({"l1", "z"});
    CHECK_THROWS_AS(build_gadget(label_clash, {{"l1", "z"}}),
                    PreconditionError);
}

TEST_CASE("the twin symmetries of the single-arc gadget") {
    Gadget g = build_gadget(path_graph({"a", "b"}), {{"a", "b"}});
    auto auts = automorphisms(g.graph);
    // a and l3 share the neighbourhood {b, l2, l4}; l2 and l4 share
    // {a, l1, l3}; the two swaps commute
    CHECK(auts.size() == 4);
    bool saw_a_l3 = false, saw_l2_l4 = false;
    for (const auto& m : auts) {
        if (m.at("a") == "l3" && m.at("l2") == "l2") saw_a_l3 = true;
        if (m.at("l2") == "l4" && m.at("a") == "a") saw_l2_l4 = true;
        CHECK(m.at("c") == "c");
        CHECK(m.at("b") == "b");
    }
    CHECK(saw_a_l3);
    CHECK(saw_l2_l4);
}

TEST_CASE("full detection also sees the twin pair") {
    Gadget g = build_gadget(path_graph({"a", "b"}), {{"a", "b"}});
    // the a/l3 twin symmetry makes (l3, b) just as detectable as
    // (a, b); restriction to the base is what recovers the arc set
    std::set<Arc> expect{{"a", "b"}, {"l3", "b"}};
    CHECK(detect_labels(g.graph, "c") == expect);
    CHECK(decode(g.graph, "c") == expect);
    CHECK(detect_labels_within(g.graph, "c", {"a", "b"}) ==
          std::set<Arc>{{"a", "b"}});
}

TEST_CASE("restricted decoding returns the encoded arcs exactly") {
    Graph base = path_graph({"a", "b", "d"});
    for (std::vector<Arc> arcs :
         {std::vector<Arc>{{"a", "b"}}, std::vector<Arc>{{"b", "a"}},
          std::vector<Arc>{{"a", "b"}, {"b", "d"}},
          std::vector<Arc>{{"b", "a"}, {"d", "b"}}}) {
        Gadget g = build_gadget(base, arcs);
        VertexSet within{"a", "b", "d"};
        CHECK(detect_labels_within(g.graph, "c", within) ==
              std::set<Arc>(arcs.begin(), arcs.end()));
    }
}

TEST_CASE("detection agrees with the clause-by-clause pattern") {
    // on the gadget itself
    Gadget g = build_gadget(path_graph({"a", "b"}), {{"a", "b"}});
    CHECK(detect_labels(g.graph, "c") == detect_by_bruteforce(g.graph, "c"));

    Gadget g2 = build_gadget(path_graph({"a", "b", "d"}),
                             {{"a", "b"}, {"d", "b"}});
    CHECK(detect_labels(g2.graph, "c") ==
          detect_by_bruteforce(g2.graph, "c"));

    // and on unstructured noise
    std::mt19937 rng(600);
    for (int trial = 0; trial < 25; ++trial) {
        Graph noise = random_graph(rng, 8, 0.45);
        VertexId head = "v0";
        CHECK(detect_labels(noise, head) ==
              detect_by_bruteforce(noise, head));
    }
}

TEST_CASE("a plain graph with no head structure decodes to nothing") {
    Graph base = cycle_graph({"a", "b", "d", "e"});
    Gadget g = build_gadget(base, {});
    CHECK(detect_labels(g.graph, "c").empty());
}

TEST_CASE("deleting any single gadget edge kills its arc") {
    Graph base = path_graph({"a", "b"});
    Gadget g = build_gadget(base, {{"a", "b"}});
    VertexSet within{"a", "b"};
    for (const auto& e : g.graph.edges()) {
        if (e == Edge{"a", "b"}) continue;   // base edge, not gadget
        Graph mutated = copy_without_edge(g.graph, e);
        auto got = detect_labels_within(mutated, "c", within);
        CHECK(got.count({"a", "b"}) == 0);
    }
    // removing the base edge also breaks the adjacency clause
    Graph no_base = copy_without_edge(g.graph, Edge{"a", "b"});
    CHECK(detect_labels(no_base, "c").count({"a", "b"}) == 0);
}

TEST_CASE("every witness quadruple sits inside the closure") {
    Gadget g = build_gadget(path_graph({"a", "b"}), {{"a", "b"}});
    CHECK(closure_traps_labels(g.graph, "a", "b", "c"));
    // vacuous on an undetected pair
    CHECK(closure_traps_labels(g.graph, "b", "a", "c"));

    Graph two = path_graph({"a", "b", "d"});
    Gadget g2 = build_gadget(two, {{"a", "b"}, {"b", "d"}});
    CHECK(closure_traps_labels(g2.graph, "a", "b", "c"));
    CHECK(closure_traps_labels(g2.graph, "b", "d", "c"));
}

TEST_CASE("automorphisms permute the detected pairs") {
    Gadget g = build_gadget(path_graph({"a", "b"}), {{"a", "b"}});
    auto detected = detect_labels(g.graph, "c");
    for (const auto& m : automorphisms(g.graph)) {
        std::set<Arc> mapped;
        for (const auto& arc : detected)
            mapped.insert({m.at(arc.from), m.at(arc.to)});
        CHECK(mapped == detected);
    }
}

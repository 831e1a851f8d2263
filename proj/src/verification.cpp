#include "predim/verification.hpp"

#include <map>

#include "predim/classes.hpp"
#include "predim/closure.hpp"
#include "predim/isomorphism.hpp"

namespace predim {
namespace {

using RoleSet = std::vector<const char*>;

// Single-edge row data, written against role names; resolved to the
// actual vertex names before any predimension is computed.

struct RelativeRow {
    const char* display;   // the added vertices, as printed
    RoleSet added;
    long expected;
};
const RelativeRow kRelativeRows[] = {
    {"l2", {"l2"}, 1},
    {"l3", {"l3"}, 1},
    {"l4", {"l4"}, 1},
    {"l1, l2", {"l1", "l2"}, 2},
    {"l1, l4", {"l1", "l4"}, 2},
    {"l2, l3", {"l2", "l3"}, 1},
    {"l3, l4", {"l3", "l4"}, 1},
    {"c, l1", {"c", "l1"}, 3},
    {"l1, l2, l3", {"l1", "l2", "l3"}, 2},
    {"l1, l2, l4", {"l1", "l2", "l4"}, 2},
    {"l1, l3, l4", {"l1", "l3", "l4"}, 2},
    {"l2, l3, l4", {"l2", "l3", "l4"}, 1},
    {"l1, l2, l3, l4", {"l1", "l2", "l3", "l4"}, 1},
    {"c, l1, l2, l3, l4", {"c", "l1", "l2", "l3", "l4"}, 2},
};

struct FamilyRow {
    const char* display;
    RoleSet members;
    const char* label;
    long expected;   // relative to members' intersection with {a,b,c}
};
const FamilyRow kFamilyRows[] = {
    {"c l1 l2 a", {"c", "l1", "l2", "a"}, "Y1", 1},
    {"c l1 l4 a", {"c", "l1", "l4", "a"}, "Y2", 1},
    {"c l1 l2 l3 a", {"c", "l1", "l2", "l3", "a"}, "Y3", 2},
    {"c l1 l2 l3 b", {"c", "l1", "l2", "l3", "b"}, "Y4", 2},
    {"c l1 l2 l3 ab", {"c", "l1", "l2", "l3", "a", "b"}, "Y5", 1},
    {"c l1 l3 l4 a", {"c", "l1", "l3", "l4", "a"}, "Y6", 2},
    {"c l1 l3 l4 b", {"c", "l1", "l3", "l4", "b"}, "Y7", 2},
    {"c l1 l3 l4 ab", {"c", "l1", "l3", "l4", "a", "b"}, "Y8", 1},
    {"c l1 l2 l3 l4 a", {"c", "l1", "l2", "l3", "l4", "a"}, "Y9", 1},
    {"c l1 l2 l3 l4 b", {"c", "l1", "l2", "l3", "l4", "b"}, "Y10", 2},
    {"c l1 l2 l3 l4 ab", {"c", "l1", "l2", "l3", "l4", "a", "b"}, "Y11", 0},
};

struct DeficitRow {
    const char* x_display;
    const char* y_display;
    RoleSet x, y;
    long expected;
};
const DeficitRow kDeficitRows[] = {
    {"l1, l2, l3, l4", "a, b, c",
     {"l1", "l2", "l3", "l4"}, {"a", "b", "c"}, 0},
    {"l1, l2, l3", "l4, a, b, c",
     {"l1", "l2", "l3"}, {"l4", "a", "b", "c"}, -1},
    {"l1, l2, l4", "l3, a, b, c",
     {"l1", "l2", "l4"}, {"l3", "a", "b", "c"}, -1},
    {"l1, l3, l4", "l2, a, b, c",
     {"l1", "l3", "l4"}, {"l2", "a", "b", "c"}, -1},
    {"l2, l3, l4", "l1, a, b, c",
     {"l2", "l3", "l4"}, {"l1", "a", "b", "c"}, -1},
    {"l1, l2", "l3, l4, a, b, c",
     {"l1", "l2"}, {"l3", "l4", "a", "b", "c"}, -1},
    {"l1, l3", "l2, l4, a, b, c",
     {"l1", "l3"}, {"l2", "l4", "a", "b", "c"}, -2},
    {"l1, l4", "l2, l3, a, b, c",
     {"l1", "l4"}, {"l2", "l3", "a", "b", "c"}, -1},
    {"l2, l3", "l1, l4, a, b, c",
     {"l2", "l3"}, {"l1", "l4", "a", "b", "c"}, -1},
    {"l2, l4", "l1, l3, a, b, c",
     {"l2", "l4"}, {"l1", "l3", "a", "b", "c"}, -2},
    {"l3, l4", "l1, l2, a, b, c",
     {"l3", "l4"}, {"l1", "l2", "a", "b", "c"}, -1},
    {"l1", "l2, l3, l4, a, b, c",
     {"l1"}, {"l2", "l3", "l4", "a", "b", "c"}, -1},
    {"l2", "l1, l3, l4, a, b, c",
     {"l2"}, {"l1", "l3", "l4", "a", "b", "c"}, -1},
    {"l3", "l1, l2, l4, a, b, c",
     {"l3"}, {"l1", "l2", "l4", "a", "b", "c"}, -1},
    {"l4", "l1, l2, l3, a, b, c",
     {"l4"}, {"l1", "l2", "l3", "a", "b", "c"}, -1},
};

struct CycleMemberRow {
    const char* display;
    RoleSet members;
};
const CycleMemberRow kCycleMembers[] = {
    {"l1 l2 l3 l4", {"l1", "l2", "l3", "l4"}},
    {"l2 l3 ab", {"l2", "l3", "a", "b"}},
    {"l3 l4 ab", {"l3", "l4", "a", "b"}},
    {"l1 l2 l4 a", {"l1", "l2", "l4", "a"}},
    {"l2 l3 l4 a", {"l2", "l3", "l4", "a"}},
};

struct SplitRow {
    const char* display;
    RoleSet whole;
    const char* part1_display;
    RoleSet part1;
    const char* part2_display;
    RoleSet part2;
    const char* over_display;
    RoleSet over;
};
const SplitRow kSplitRows[] = {
    {"l1 l2 l3 ab", {"l1", "l2", "l3", "a", "b"},
     "l2 l3 ab", {"l2", "l3", "a", "b"},
     "l1 l2", {"l1", "l2"}, "l2", {"l2"}},
    {"l1 l3 l4 ab", {"l1", "l3", "l4", "a", "b"},
     "l3 l4 ab", {"l3", "l4", "a", "b"},
     "l1 l4", {"l1", "l4"}, "l4", {"l4"}},
    {"l1 l2 l4 ab", {"l1", "l2", "l4", "a", "b"},
     "l1 l2 l4 a", {"l1", "l2", "l4", "a"},
     "ab", {"a", "b"}, "a", {"a"}},
    {"l1 l2 l3 l4 b", {"l1", "l2", "l3", "l4", "b"},
     "l1 l2 l3 l4", {"l1", "l2", "l3", "l4"},
     "l3 b", {"l3", "b"}, "l3", {"l3"}},
    {"c l1 l2 l3 l4", {"c", "l1", "l2", "l3", "l4"},
     "l1 l2 l3 l4", {"l1", "l2", "l3", "l4"},
     "c l1", {"c", "l1"}, "l1", {"l1"}},
};

struct DirectRow {
    const char* display;
    RoleSet members;
    long expected_delta;
};
const DirectRow kDirectRows[] = {
    {"l2 l3 l4 ab", {"l2", "l3", "l4", "a", "b"}, 4},
    {"l1 l2 l3 l4 a", {"l1", "l2", "l3", "l4", "a"}, 4},
    {"l1 l2 l3 l4 ab", {"l1", "l2", "l3", "l4", "a", "b"}, 4},
};

using RoleMap = std::map<std::string, VertexId>;

VertexSet resolve(const RoleMap& roles, const RoleSet& rs) {
    VertexSet out;
    for (const char* r : rs) out.insert(roles.at(r));
    return out;
}

long delta_on(const Graph& g, const VertexSet& s) {
    return predimension(g.induced(s));
}

ValidationCheck diff_rows(const std::string& name,
                          const std::vector<std::string>& got,
                          const std::vector<std::string>& want) {
    if (got.size() != want.size())
        return {name, false,
                "expected " + std::to_string(want.size()) + " rows, got " +
                    std::to_string(got.size())};
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i])
            return {name, false,
                    "row " + std::to_string(i + 1) + ": computed '" +
                        got[i] + "', expected '" + want[i] + "'"};
    return {name, true, "all " + std::to_string(want.size()) + " rows match"};
}

bool in_class(const Graph& g, const VertexSet& s, const ControlFunction& f) {
    return !c_F_violation(g.induced(s), f).has_value();
}

} // namespace

bool VerificationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

VerificationReport verify_gadget(const Graph& base,
                                 const std::vector<Arc>& arcs,
                                 const ControlFunction& f) {
    VerificationReport rep;
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        bool valid = true;
        std::string why;
        std::map<VertexId, int> out;
        std::set<Edge> oriented;
        for (const Arc& t : arcs) {
            if (!base.has_vertex(t.from) || !base.has_vertex(t.to) ||
                !base.has_edge(t.from, t.to)) {
                valid = false;
                why = "arc " + t.from + " -> " + t.to +
                      " does not orient a base edge";
                break;
            }
            if (!oriented.insert(Edge(t.from, t.to)).second) {
                valid = false;
                why = "edge " + t.from + " " + t.to + " oriented twice";
                break;
            }
            if (++out[t.from] > 2) {
                valid = false;
                why = "vertex '" + t.from + "' exceeds out-degree 2";
                break;
            }
        }
        add("orientation valid", valid, why);
        if (!valid) return rep;
    }
    {
        auto w = c_F_violation(base, f);
        add("base in class", !w,
            w ? "subset of " + std::to_string(w->subset.size()) +
                    " vertices has predimension " + std::to_string(w->delta)
              : "");
        if (w) return rep;
    }

    Gadget g;
    try {
        g = build_gadget(base, arcs);
        add("gadget built", true,
            std::to_string(g.graph.vertex_count()) + " vertices, " +
                std::to_string(g.graph.edge_count()) + " edges");
    } catch (const Error& e) {
        add("gadget built", false, e.what());
        return rep;
    }

    {
        auto w = d_closed_violation(g.graph, base.vertex_set());
        add("base d-closed in gadget", !w,
            w ? "superset of " + std::to_string(w->superset.size()) +
                    " vertices has predimension " +
                    std::to_string(w->delta_superset)
              : "");
    }
    {
        auto w = c_F_violation(g.graph, f);
        add("gadget in class", !w,
            w ? "subset of " + std::to_string(w->subset.size()) +
                    " vertices has predimension " + std::to_string(w->delta)
              : "");
    }
    {
        std::set<Arc> want(arcs.begin(), arcs.end());
        std::set<Arc> got =
            detect_labels_within(g.graph, g.head, base.vertex_set());
        add("decoding round trip", got == want,
            got == want ? std::to_string(got.size()) + " arcs recovered"
                        : "decoded arc set differs from the input");
    }

    rep.single_edge = base.vertex_count() == 2 && base.edge_count() == 1 &&
                      arcs.size() == 1;
    if (!rep.single_edge) return rep;

    RoleMap roles;
    roles["a"] = arcs[0].from;
    roles["b"] = arcs[0].to;
    roles["c"] = g.head;
    const auto& lab = g.labels.at(arcs[0]);
    for (int j = 0; j < 4; ++j) roles["l" + std::to_string(j + 1)] = lab[j];
    const Graph& bg = g.graph;
    VertexSet base_set = base.vertex_set();
    VertexSet base_and_head = base_set;
    base_and_head.insert(g.head);
    long delta_base = delta_on(bg, base_set);

    {
        std::vector<std::string> want;
        for (const RelativeRow& r : kRelativeRows) {
            VertexSet s = resolve(roles, r.added);
            s.insert(base_set.begin(), base_set.end());
            long v = delta_on(bg, s) - delta_base;
            rep.relative_table.push_back(std::string(r.display) + " -> " +
                                         std::to_string(v));
            want.push_back(std::string(r.display) + " -> " +
                           std::to_string(r.expected));
        }
        rep.checks.push_back(diff_rows("relative predimension table",
                                       rep.relative_table, want));
    }

    {
        std::vector<std::string> want;
        for (const FamilyRow& r : kFamilyRows) {
            VertexSet s = resolve(roles, r.members);
            VertexSet anchor;
            for (const auto& v : s)
                if (base_and_head.count(v)) anchor.insert(v);
            long v = delta_on(bg, s) - delta_on(bg, anchor);
            rep.cycle_table.push_back(std::string(r.display) + " | " +
                                      r.label + " | " + std::to_string(v));
            want.push_back(std::string(r.display) + " | " + r.label + " | " +
                           std::to_string(r.expected));
        }
        rep.checks.push_back(
            diff_rows("head family table", rep.cycle_table, want));
    }

    {
        std::vector<std::string> want;
        for (const DeficitRow& r : kDeficitRows) {
            VertexSet x = resolve(roles, r.x);
            VertexSet y = resolve(roles, r.y);
            VertexSet both = x;
            both.insert(y.begin(), y.end());
            long v = delta_on(bg, both) - delta_on(bg, y);
            rep.closure_table.push_back(std::string(r.x_display) + " / " +
                                        r.y_display + " -> " +
                                        std::to_string(v));
            want.push_back(std::string(r.x_display) + " / " + r.y_display +
                           " -> " + std::to_string(r.expected));
        }
        rep.checks.push_back(
            diff_rows("closure deficit table", rep.closure_table, want));
    }

    {
        std::vector<std::string> want;
        Graph four_cycle = cycle_graph({"1", "2", "3", "4"});
        for (const CycleMemberRow& r : kCycleMembers) {
            VertexSet s = resolve(roles, r.members);
            bool ok = isomorphic(bg.induced(s), four_cycle) &&
                      in_class(bg, s, f);
            rep.small_structures.push_back(
                std::string(r.display) +
                (ok ? " | 4-cycle" : " | NOT a 4-cycle in class"));
            want.push_back(std::string(r.display) + " | 4-cycle");
        }
        for (const SplitRow& r : kSplitRows) {
            VertexSet whole = resolve(roles, r.whole);
            VertexSet p1 = resolve(roles, r.part1);
            VertexSet p2 = resolve(roles, r.part2);
            VertexSet over = resolve(roles, r.over);
            VertexSet uni = p1;
            uni.insert(p2.begin(), p2.end());
            VertexSet meet;
            for (const auto& v : p1)
                if (p2.count(v)) meet.insert(v);
            bool split = uni == whole && meet == over;
            if (split)
                for (const auto& u : p1)
                    for (const auto& v : p2)
                        if (!over.count(u) && !over.count(v) &&
                            bg.has_edge(u, v))
                            split = false;
            bool ok = split && in_class(bg, p1, f) && in_class(bg, p2, f) &&
                      in_class(bg, whole, f);
            std::string good = std::string(r.display) +
                               " | free amalgam of " + r.part1_display +
                               ", " + r.part2_display + " over " +
                               r.over_display;
            rep.small_structures.push_back(
                ok ? good : std::string(r.display) + " | decomposition fails");
            want.push_back(good);
        }
        for (const DirectRow& r : kDirectRows) {
            VertexSet s = resolve(roles, r.members);
            long d = delta_on(bg, s);
            Order ord = compare_value_F(Rational(r.expected_delta),
                                        Rational(static_cast<long>(s.size())),
                                        f);
            const char* rel = ord == Order::Greater ? "<"
                              : ord == Order::Equal ? "="
                              : ord == Order::Less  ? ">"
                                                    : "?";
            std::string row = std::string(r.display) + " | delta " +
                              std::to_string(d) + " | F(" +
                              std::to_string(s.size()) + ") " + rel + " " +
                              std::to_string(r.expected_delta);
            rep.small_structures.push_back(row);
            want.push_back(std::string(r.display) + " | delta " +
                           std::to_string(r.expected_delta) + " | F(" +
                           std::to_string(s.size()) + ") < " +
                           std::to_string(r.expected_delta));
        }
        rep.checks.push_back(
            diff_rows("small structures", rep.small_structures, want));

        VertexSet six = resolve(roles, {"a", "b", "l1", "l2", "l3", "l4"});
        add("six-vertex substructure in class", in_class(bg, six, f), "");
        VertexSet label_struct = resolve(roles, {"c", "l1", "l2", "l3", "l4"});
        add("label structure in class", in_class(bg, label_struct, f), "");
    }

    return rep;
}

} // namespace predim

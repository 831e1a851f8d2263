#include "predim/gadget.hpp"

#include <functional>

#include "predim/classes.hpp"
#include "predim/closure.hpp"

namespace predim {
namespace {

// runs fn on every witness quadruple (as dense indices) for the pair
// (a, b) at head c; stops early when fn returns false.  Returns false
// exactly when fn did.
bool for_each_witness(const Graph& g, int c, int a, int b,
                      const std::function<bool(int, int, int, int)>& fn) {
    if (a == b || a == c || b == c || !g.adjacent(a, b)) return true;
    for (int l1 : g.adjacency(c)) {
        if (l1 == a || l1 == b) continue;
        for (int l2 : g.adjacency(l1)) {
            if (l2 == a || l2 == b || l2 == c || l2 == l1) continue;
            if (!g.adjacent(l2, a)) continue;
            for (int l3 : g.adjacency(l2)) {
                if (l3 == a || l3 == b || l3 == c) continue;
                if (l3 == l1 || l3 == l2) continue;
                if (!g.adjacent(l3, b)) continue;
                for (int l4 : g.adjacency(l3)) {
                    if (l4 == a || l4 == b || l4 == c) continue;
                    if (l4 == l1 || l4 == l2 || l4 == l3) continue;
                    if (!g.adjacent(l4, l1) || !g.adjacent(l4, a)) continue;
                    if (!fn(l1, l2, l3, l4)) return false;
                }
            }
        }
    }
    return true;
}

bool has_witness(const Graph& g, int c, int a, int b) {
    return !for_each_witness(g, c, a, b,
                             [](int, int, int, int) { return false; });
}

} // namespace

Gadget build_gadget(const Graph& base, const std::vector<Arc>& arcs,
                    const VertexId& head_name) {
    if (base.has_vertex(head_name))
        throw PreconditionError("head name '" + head_name +
                                "' collides with a base vertex");
    {
        std::map<VertexId, int> out;
        std::set<Edge> oriented;
        for (const Arc& t : arcs) {
            if (!base.has_edge(t.from, t.to))
                throw PreconditionError("arc " + t.from + " -> " + t.to +
                                        " does not orient a base edge");
            if (!oriented.insert(Edge(t.from, t.to)).second)
                throw PreconditionError("edge " + t.from + " " + t.to +
                                        " oriented twice");
            if (++out[t.from] > 2)
                throw PreconditionError("vertex '" + t.from +
                                        "' exceeds out-degree 2");
        }
    }
    if (auto w = c_F_violation(base, ControlFunction::reference()))
        throw PreconditionError(
            "base leaves the reference class: predimension " +
            std::to_string(w->delta) + " on " +
            std::to_string(w->subset.size()) + " vertices");

    Gadget out;
    out.base = base;
    out.head = head_name;
    out.graph = base;
    out.graph.add_vertex(head_name);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& t = arcs[i];
        std::string suffix = i == 0 ? "" : "_" + std::to_string(i);
        std::array<VertexId, 4> l;
        for (int j = 0; j < 4; ++j) {
            l[j] = "l" + std::to_string(j + 1) + suffix;
            if (out.graph.has_vertex(l[j]))
                throw PreconditionError("label name '" + l[j] +
                                        "' collides with a base vertex");
            out.graph.add_vertex(l[j]);
        }
        out.graph.add_edge(head_name, l[0]);
        out.graph.add_edge(l[0], l[1]);
        out.graph.add_edge(l[1], l[2]);
        out.graph.add_edge(l[2], l[3]);
        out.graph.add_edge(l[3], l[0]);
        out.graph.add_edge(l[1], t.from);
        out.graph.add_edge(l[3], t.from);
        out.graph.add_edge(l[2], t.to);
        out.labels[t] = l;
    }
    return out;
}

std::set<Arc> detect_labels_within(const Graph& g, const VertexId& head,
                                   const VertexSet& within) {
    if (!g.has_vertex(head))
        throw PreconditionError("unknown head vertex '" + head + "'");
    for (const auto& v : within)
        if (!g.has_vertex(v))
            throw PreconditionError("unknown vertex '" + v + "'");
    int c = g.index_of(head);
    std::set<Arc> found;
    for (const auto& a : within)
        for (const auto& b : within) {
            if (a == b) continue;
            if (has_witness(g, c, g.index_of(a), g.index_of(b)))
                found.insert({a, b});
        }
    return found;
}

std::set<Arc> detect_labels(const Graph& g, const VertexId& head) {
    return detect_labels_within(g, head, g.vertex_set());
}

std::set<Arc> decode(const Graph& g, const VertexId& head) {
    return detect_labels(g, head);
}

bool closure_traps_labels(const Graph& g, const VertexId& a,
                          const VertexId& b, const VertexId& head) {
    for (const VertexId* v : {&a, &b, &head})
        if (!g.has_vertex(*v))
            throw PreconditionError("unknown vertex '" + *v + "'");
    ClosureCertificate cert = d_closure(g, {a, b, head});
    VertexSet closed(cert.closure.begin(), cert.closure.end());
    return for_each_witness(
        g, g.index_of(head), g.index_of(a), g.index_of(b),
        [&](int l1, int l2, int l3, int l4) {
            for (int v : {l1, l2, l3, l4})
                if (!closed.count(g.name_of(v))) return false;
            return true;
        });
}

} // namespace predim

#include "predim/amalgam.hpp"

#include "predim/classes.hpp"
#include "predim/closure.hpp"

namespace predim {
namespace {

void check_embedding(const Graph& base, const Graph& target,
                     const VertexMap& emb, const char* side) {
    std::string where(side);
    if (emb.size() != base.vertex_count())
        throw PreconditionError(where +
                                " embedding must be defined on the base");
    VertexSet image;
    for (const auto& [u, v] : emb) {
        if (!base.has_vertex(u))
            throw PreconditionError(where + " embedding uses unknown base "
                                            "vertex '" + u + "'");
        if (!target.has_vertex(v))
            throw PreconditionError(where + " embedding targets unknown "
                                            "vertex '" + v + "'");
        if (!image.insert(v).second)
            throw PreconditionError(where + " embedding is not injective");
    }
    for (const auto& u : base.vertices())
        for (const auto& w : base.vertices()) {
            if (!(u < w)) continue;
            bool be = base.has_edge(u, w);
            bool te = target.has_edge(emb.at(u), emb.at(w));
            if (be != te)
                throw PreconditionError(where +
                                        " embedding is not induced at {" +
                                        u + ", " + w + "}");
        }
}

} // namespace

void AmalgamSpec::check_structure() const {
    check_embedding(base, left, left_embedding, "left");
    check_embedding(base, right, right_embedding, "right");
}

Amalgam free_amalgam(const AmalgamSpec& spec) {
    spec.check_structure();
    Amalgam out;
    Graph& g = out.graph;

    for (const auto& v : spec.base.vertices()) g.add_vertex(v);
    for (const auto& [u, v] : spec.left_embedding) out.left_map[v] = u;
    for (const auto& [u, v] : spec.right_embedding) out.right_map[v] = u;

    auto place_side = [&](const Graph& side, VertexMap& side_map) {
        for (const auto& v : side.vertices()) {
            if (side_map.count(v)) continue;   // base image
            VertexId name = v;
            while (g.has_vertex(name)) name += "'";
            g.add_vertex(name);
            side_map[v] = name;
        }
        for (const Edge& e : side.edges()) {
            const VertexId& x = side_map.at(e.a);
            const VertexId& y = side_map.at(e.b);
            if (!g.has_edge(x, y)) g.add_edge(x, y);
        }
    };
    place_side(spec.left, out.left_map);
    place_side(spec.right, out.right_map);
    return out;
}

Amalgam amalgamate(const AmalgamSpec& spec, const ControlFunction& f) {
    spec.check_structure();
    if (auto w = c_F_violation(spec.base, f))
        throw PreconditionError("base leaves the class: subset of " +
                                std::to_string(w->subset.size()) +
                                " vertices has predimension " +
                                std::to_string(w->delta) + " < " +
                                std::to_string(w->required));
    if (auto w = c_F_violation(spec.left, f))
        throw PreconditionError("left side leaves the class: predimension " +
                                std::to_string(w->delta) + " on " +
                                std::to_string(w->subset.size()) +
                                " vertices");
    if (auto w = c_F_violation(spec.right, f))
        throw PreconditionError("right side leaves the class: predimension " +
                                std::to_string(w->delta) + " on " +
                                std::to_string(w->subset.size()) +
                                " vertices");
    auto image_of = [](const VertexMap& emb) {
        VertexSet s;
        for (const auto& [u, v] : emb) s.insert(v);
        return s;
    };
    if (!is_d_closed(spec.left, image_of(spec.left_embedding)))
        throw PreconditionError("base image not d-closed in the left side");
    if (!is_d_closed(spec.right, image_of(spec.right_embedding)))
        throw PreconditionError("base image not d-closed in the right side");

    Amalgam out = free_amalgam(spec);

    // guaranteed by the free-amalgamation lemma for this class; a
    // failure here means the library itself is wrong
    if (out.graph.vertex_count() <= 26) {
        if (auto w = c_F_violation(out.graph, f))
            throw Error("amalgam left the class on subset of " +
                        std::to_string(w->subset.size()) + " vertices");
    } else if (!in_C_gt0(out.graph)) {
        throw Error("amalgam acquired a nonpositive-predimension subset");
    }
    auto result_image = [&](const VertexMap& side_map) {
        VertexSet s;
        for (const auto& [v, w] : side_map) s.insert(w);
        return s;
    };
    if (!is_d_closed(out.graph, result_image(out.left_map)))
        throw Error("left side not d-closed in the amalgam");
    if (!is_d_closed(out.graph, result_image(out.right_map)))
        throw Error("right side not d-closed in the amalgam");
    return out;
}

} // namespace predim

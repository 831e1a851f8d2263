#include "predim/orientation.hpp"

#include <algorithm>

namespace predim {

Orientation Orientation::from_arcs(Graph base, const std::vector<Arc>& arcs) {
    Orientation o(std::move(base));
    for (const Arc& a : arcs) o.orient(a.from, a.to);
    return o;
}

void Orientation::orient(const VertexId& from, const VertexId& to) {
    if (!base_.has_edge(from, to))
        throw PreconditionError("no edge {" + from + ", " + to +
                                "} to orient");
    Edge e(from, to);
    if (direction_.count(e))
        throw PreconditionError("edge {" + e.a + ", " + e.b +
                                "} oriented twice");
    direction_.emplace(e, from == e.a);
}

bool Orientation::has_arc(const VertexId& from, const VertexId& to) const {
    if (!base_.has_edge(from, to)) return false;
    Edge e(from, to);
    auto it = direction_.find(e);
    if (it == direction_.end()) return false;
    return it->second == (from == e.a);
}

bool Orientation::edge_oriented(const VertexId& u, const VertexId& v) const {
    if (!base_.has_edge(u, v)) return false;
    return direction_.count(Edge(u, v)) != 0;
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(direction_.size());
    for (const auto& [e, forward] : direction_)
        out.push_back(forward ? Arc{e.a, e.b} : Arc{e.b, e.a});
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Orientation::out_degree(const VertexId& v) const {
    if (!base_.has_vertex(v))
        throw PreconditionError("unknown vertex '" + v + "'");
    std::size_t d = 0;
    for (const auto& [e, forward] : direction_)
        if ((forward ? e.a : e.b) == v) ++d;
    return d;
}

std::size_t Orientation::max_out_degree() const {
    std::map<VertexId, std::size_t> out;
    for (const auto& [e, forward] : direction_) ++out[forward ? e.a : e.b];
    std::size_t best = 0;
    for (const auto& [v, d] : out) best = std::max(best, d);
    return best;
}

Orientation Orientation::restricted(const VertexSet& s) const {
    Orientation o(base_.induced(s));
    for (const auto& [e, forward] : direction_)
        if (s.count(e.a) && s.count(e.b))
            o.direction_.emplace(e, forward);
    return o;
}

bool Orientation::operator==(const Orientation& o) const {
    return base_ == o.base_ && direction_ == o.direction_;
}

bool check_orientation(const Orientation& o, int k) {
    if (k < 0) throw PreconditionError("out-degree bound must be >= 0");
    if (!o.complete())
        throw PreconditionError(
            "orientation incomplete: " +
            std::to_string(o.base().edge_count() - o.arc_count()) +
            " edge(s) carry no arc");
    return o.max_out_degree() <= static_cast<std::size_t>(k);
}

} // namespace predim

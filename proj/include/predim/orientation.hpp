#ifndef PREDIM_ORIENTATION_HPP
#define PREDIM_ORIENTATION_HPP

#include <compare>
#include <map>
#include <vector>

#include "predim/graph.hpp"

namespace predim {

struct Arc {
    VertexId from, to;
    auto operator<=>(const Arc&) const = default;
};

/// Assignment of directions to a subset of the edges of a base graph.
/// Each edge carries at most one arc; arcs on non-edges are rejected.
class Orientation {
public:
    explicit Orientation(Graph base) : base_(std::move(base)) {}

    static Orientation from_arcs(Graph base, const std::vector<Arc>& arcs);

    const Graph& base() const { return base_; }

    void orient(const VertexId& from, const VertexId& to);

    bool has_arc(const VertexId& from, const VertexId& to) const;
    bool edge_oriented(const VertexId& u, const VertexId& v) const;

    std::vector<Arc> arcs() const;
    std::size_t arc_count() const { return direction_.size(); }

    std::size_t out_degree(const VertexId& v) const;
    std::size_t max_out_degree() const;

    /// True when every edge of the base graph carries an arc.
    bool complete() const { return direction_.size() == base_.edge_count(); }

    /// Arcs whose endpoints both lie in s, over the induced base graph.
    Orientation restricted(const VertexSet& s) const;

    bool operator==(const Orientation& o) const;

private:
    Graph base_;
    std::map<Edge, bool> direction_;   // true: a -> b, false: b -> a
};

/// True iff o is a complete orientation with out-degrees at most k.
/// Throws PreconditionError when some edge carries no arc.
bool check_orientation(const Orientation& o, int k);

} // namespace predim

#endif

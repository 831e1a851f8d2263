#ifndef PREDIM_GRAPH_HPP
#define PREDIM_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "predim/error.hpp"

namespace predim {

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

/// Undirected edge, stored with a < b in label order.
struct Edge {
    VertexId a, b;

    Edge(VertexId x, VertexId y) {
        if (x < y) { a = std::move(x); b = std::move(y); }
        else       { a = std::move(y); b = std::move(x); }
    }
    auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph with string-labelled vertices.
///
/// Loops and parallel edges are rejected at insertion time, so every
/// instance is simple by construction.  All observers that return
/// collections do so in label order, which keeps downstream algorithms
/// deterministic.
class Graph {
public:
    Graph() = default;

    void add_vertex(const VertexId& v);
    void add_edge(const VertexId& u, const VertexId& v);

    /// Adds the vertex unless it is already present.
    void ensure_vertex(const VertexId& v);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }
    bool has_edge(const VertexId& u, const VertexId& v) const;

    /// Vertex labels in increasing order.
    std::vector<VertexId> vertices() const;
    VertexSet vertex_set() const;

    /// Edges sorted by (a, b).
    std::vector<Edge> edges() const;

    /// Neighbours of v in label order.  Throws if v is unknown.
    std::vector<VertexId> neighbors(const VertexId& v) const;
    std::size_t degree(const VertexId& v) const;

    /// Subgraph induced on s, which must be a subset of the vertices.
    Graph induced(const VertexSet& s) const;

    /// Structural equality: same labels, same edges.
    bool operator==(const Graph& o) const;

    // Dense-index access for algorithms.  Indices follow label order and
    // are invalidated by any mutation.
    int index_of(const VertexId& v) const;
    const VertexId& name_of(int i) const;
    const std::vector<int>& adjacency(int i) const;
    bool adjacent(int i, int j) const;

private:
    void refresh_order() const;

    std::map<VertexId, int> index_;           // label -> insertion slot
    std::vector<VertexId> names_;             // by insertion slot
    std::vector<std::set<int>> adj_;          // by insertion slot
    std::size_t edge_count_ = 0;

    // label-ordered view, rebuilt lazily after mutation
    mutable bool order_fresh_ = false;
    mutable std::vector<int> slot_of_rank_;           // rank -> insertion slot
    mutable std::vector<int> rank_of_slot_;           // insertion slot -> rank
    mutable std::vector<std::vector<int>> ranked_adj_; // rank -> sorted ranks
};

/// 2|V| - |E|.
long predimension(const Graph& g);

/// delta(G) - delta(G[base]); base must consist of known vertices.
long relative_predimension(const Graph& g, const VertexSet& base);

// small constructors used all over the tests and tools
Graph path_graph(const std::vector<VertexId>& vs);
Graph cycle_graph(const std::vector<VertexId>& vs);
Graph complete_graph(const std::vector<VertexId>& vs);
Graph edgeless_graph(const std::vector<VertexId>& vs);

} // namespace predim

#endif

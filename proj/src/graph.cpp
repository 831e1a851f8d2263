#include "predim/graph.hpp"

#include <algorithm>

namespace predim {

void Graph::add_vertex(const VertexId& v) {
    if (v.empty())
        throw PreconditionError("vertex label must be nonempty");
    if (has_vertex(v))
        throw PreconditionError("duplicate vertex '" + v + "'");
    index_.emplace(v, static_cast<int>(names_.size()));
    names_.push_back(v);
    adj_.emplace_back();
    order_fresh_ = false;
}

void Graph::ensure_vertex(const VertexId& v) {
    if (!has_vertex(v)) add_vertex(v);
}

void Graph::add_edge(const VertexId& u, const VertexId& v) {
    if (u == v)
        throw PreconditionError("loop at '" + u + "' not allowed");
    auto iu = index_.find(u), iv = index_.find(v);
    if (iu == index_.end())
        throw PreconditionError("unknown vertex '" + u + "'");
    if (iv == index_.end())
        throw PreconditionError("unknown vertex '" + v + "'");
    if (adj_[iu->second].count(iv->second))
        throw PreconditionError("duplicate edge {" + u + ", " + v + "}");
    adj_[iu->second].insert(iv->second);
    adj_[iv->second].insert(iu->second);
    ++edge_count_;
    order_fresh_ = false;
}

bool Graph::has_edge(const VertexId& u, const VertexId& v) const {
    auto iu = index_.find(u), iv = index_.find(v);
    if (iu == index_.end() || iv == index_.end()) return false;
    return adj_[iu->second].count(iv->second) != 0;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(index_.size());
    for (const auto& [name, slot] : index_) out.push_back(name);
    return out;
}

VertexSet Graph::vertex_set() const {
    VertexSet out;
    for (const auto& [name, slot] : index_) out.insert(name);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [name, slot] : index_)
        for (int other : adj_[slot])
            if (name < names_[other]) out.emplace_back(name, names_[other]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw PreconditionError("unknown vertex '" + v + "'");
    std::vector<VertexId> out;
    out.reserve(adj_[it->second].size());
    for (int other : adj_[it->second]) out.push_back(names_[other]);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::degree(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw PreconditionError("unknown vertex '" + v + "'");
    return adj_[it->second].size();
}

Graph Graph::induced(const VertexSet& s) const {
    Graph out;
    for (const auto& v : s) {
        if (!has_vertex(v))
            throw PreconditionError("unknown vertex '" + v + "'");
        out.add_vertex(v);
    }
    for (const auto& v : s)
        for (const auto& w : neighbors(v))
            if (v < w && s.count(w)) out.add_edge(v, w);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (index_.size() != o.index_.size() || edge_count_ != o.edge_count_)
        return false;
    for (const auto& [name, slot] : index_)
        if (!o.has_vertex(name)) return false;
    for (const Edge& e : edges())
        if (!o.has_edge(e.a, e.b)) return false;
    return true;
}

void Graph::refresh_order() const {
    if (order_fresh_) return;
    const int n = static_cast<int>(names_.size());
    slot_of_rank_.clear();
    slot_of_rank_.reserve(n);
    for (const auto& [name, slot] : index_) slot_of_rank_.push_back(slot);
    rank_of_slot_.assign(n, -1);
    for (int r = 0; r < n; ++r) rank_of_slot_[slot_of_rank_[r]] = r;
    ranked_adj_.assign(n, {});
    for (int r = 0; r < n; ++r) {
        for (int other : adj_[slot_of_rank_[r]])
            ranked_adj_[r].push_back(rank_of_slot_[other]);
        std::sort(ranked_adj_[r].begin(), ranked_adj_[r].end());
    }
    order_fresh_ = true;
}

int Graph::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw PreconditionError("unknown vertex '" + v + "'");
    refresh_order();
    return rank_of_slot_[it->second];
}

const VertexId& Graph::name_of(int i) const {
    refresh_order();
    if (i < 0 || i >= static_cast<int>(names_.size()))
        throw PreconditionError("vertex index out of range");
    return names_[slot_of_rank_[i]];
}

const std::vector<int>& Graph::adjacency(int i) const {
    refresh_order();
    if (i < 0 || i >= static_cast<int>(names_.size()))
        throw PreconditionError("vertex index out of range");
    return ranked_adj_[i];
}

bool Graph::adjacent(int i, int j) const {
    refresh_order();
    const auto& row = ranked_adj_[i];
    return std::binary_search(row.begin(), row.end(), j);
}

long predimension(const Graph& g) {
    return 2 * static_cast<long>(g.vertex_count()) -
           static_cast<long>(g.edge_count());
}

long relative_predimension(const Graph& g, const VertexSet& base) {
    return predimension(g) - predimension(g.induced(base));
}

Graph path_graph(const std::vector<VertexId>& vs) {
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (std::size_t i = 1; i < vs.size(); ++i) g.add_edge(vs[i - 1], vs[i]);
    return g;
}

Graph cycle_graph(const std::vector<VertexId>& vs) {
    if (vs.size() < 3)
        throw PreconditionError("cycle needs at least 3 vertices");
    Graph g = path_graph(vs);
    g.add_edge(vs.back(), vs.front());
    return g;
}

Graph complete_graph(const std::vector<VertexId>& vs) {
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            g.add_edge(vs[i], vs[j]);
    return g;
}

Graph edgeless_graph(const std::vector<VertexId>& vs) {
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    return g;
}

} // namespace predim

#include "predim/subsets.hpp"

namespace predim {

MaskGraph MaskGraph::of(const Graph& g) {
    if (g.vertex_count() > 64)
        throw BudgetError("mask view limited to 64 vertices, got " +
                          std::to_string(g.vertex_count()));
    MaskGraph m;
    m.n = static_cast<int>(g.vertex_count());
    m.adj.assign(m.n, 0);
    m.source = &g;
    for (int i = 0; i < m.n; ++i)
        for (int j : g.adjacency(i)) m.adj[i] |= 1ULL << j;
    return m;
}

VertexSet MaskGraph::names(std::uint64_t s) const {
    VertexSet out;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
        out.insert(source->name_of(std::countr_zero(rest)));
    return out;
}

std::vector<VertexId> MaskGraph::name_list(std::uint64_t s) const {
    std::vector<VertexId> out;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
        out.push_back(source->name_of(std::countr_zero(rest)));
    return out;
}

std::uint64_t MaskGraph::mask_of(const VertexSet& s) const {
    std::uint64_t out = 0;
    for (const auto& v : s) out |= 1ULL << source->index_of(v);
    return out;
}

} // namespace predim

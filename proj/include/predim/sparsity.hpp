#ifndef PREDIM_SPARSITY_HPP
#define PREDIM_SPARSITY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "predim/orientation.hpp"

namespace predim {

/// A vertex set carrying more than k * |set| edges.
struct SparsityWitness {
    std::vector<VertexId> vertices;   // sorted
    long edge_count;                  // edges inside the set
    long bound;                       // k * |vertices|
};

/// Orients every edge with out-degrees <= k, or exhibits a witness that
/// no such orientation exists.  The orientation is produced by a fixed
/// deterministic matching, so equal inputs give equal outputs.
std::variant<Orientation, SparsityWitness>
find_k_orientation(const Graph& g, int k);

/// nullopt when every vertex set X spans at most k|X| edges; otherwise a
/// witness.  For graphs of at most `minimal_cap` vertices the witness is
/// minimal (smallest size, then label-lexicographic); beyond that it is
/// the one derived from the failed matching.
std::optional<SparsityWitness>
is_k_sparse(const Graph& g, int k, std::size_t minimal_cap = 20);

/// All complete orientations with out-degrees <= k, in a fixed order:
/// edges sorted, lower-endpoint-first direction tried before the
/// reverse.  Throws BudgetError when the graph has more than edge_cap
/// edges.
std::vector<Orientation>
enumerate_k_orientations(const Graph& g, int k, std::size_t edge_cap = 20);

} // namespace predim

#endif

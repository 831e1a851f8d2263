#ifndef PREDIM_ISOMORPHISM_HPP
#define PREDIM_ISOMORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "predim/graph.hpp"

namespace predim {

using VertexMap = std::map<VertexId, VertexId>;

/// All automorphisms, in lexicographic order of the image sequence over
/// label-sorted vertices.  Backtracking is pruned by iterated degree
/// refinement.  Throws BudgetError above vertex_cap vertices.
std::vector<VertexMap> automorphisms(const Graph& g,
                                     std::size_t vertex_cap = 12);

/// All injective maps from pattern into host that induce an isomorphism
/// onto their image, in lexicographic order as above.
std::vector<VertexMap> find_induced_embeddings(const Graph& pattern,
                                               const Graph& host);

bool isomorphic(const Graph& a, const Graph& b);

/// Canonical certificate: equal strings iff isomorphic.  Minimises the
/// upper-triangle adjacency bitstring over vertex permutations; capped
/// because of the factorial search.
std::string canonical_form(const Graph& g, std::size_t vertex_cap = 10);

/// True when the adjacency bitstring of g, read over vertices in label
/// order, is already the lexicographic minimum over all permutations.
bool is_canonical_labelling(const Graph& g);

} // namespace predim

#endif

#ifndef PREDIM_GADGET_HPP
#define PREDIM_GADGET_HPP

#include <array>
#include <map>
#include <set>

#include "predim/graph.hpp"
#include "predim/orientation.hpp"

namespace predim {

/// Head-and-cycles encoding of an arc set over a base graph.
struct Gadget {
    Graph graph;    // base plus head plus one labelled 4-cycle per arc
    Graph base;     // copy of the encoded graph
    VertexId head;
    std::map<Arc, std::array<VertexId, 4>> labels;   // arc -> l1..l4
};

/// Attaches the arc encoding to a copy of `base`: one head vertex,
/// and for each arc (a,b) a 4-cycle l1 l2 l3 l4 with the extra edges
/// head-l1, l2-a, l4-a, l3-b.  The arcs must orient distinct edges of
/// `base` with out-degree at most 2, the base must lie in the class of
/// the reference control function, and neither the head name nor the
/// generated label names may collide with base vertices.
Gadget build_gadget(const Graph& base, const std::vector<Arc>& arcs,
                    const VertexId& head_name = "c");

/// Ordered pairs (a,b) the decoding pattern accepts at the head:
/// a, b adjacent, distinct, head-free, with four further vertices
/// l1..l4 (pairwise distinct, off head/a/b) carrying head-l1, the
/// cycle l1 l2 l3 l4, l2-a, l4-a and l3-b.  Purely existential, so
/// extra edges among the witnesses never block a match.
std::set<Arc> detect_labels(const Graph& g, const VertexId& head);

/// detect_labels keeping only pairs with both ends in `within`.
std::set<Arc> detect_labels_within(const Graph& g, const VertexId& head,
                                   const VertexSet& within);

/// Alias for detect_labels under its decoding-map name.
std::set<Arc> decode(const Graph& g, const VertexId& head);

/// Every witness quadruple for the pair (a,b) at the head lies inside
/// the d-closure of {a, b, head}.  False as soon as one witness
/// escapes; vacuously true when the pair is not detected at all.
bool closure_traps_labels(const Graph& g, const VertexId& a,
                          const VertexId& b, const VertexId& head);

} // namespace predim

#endif

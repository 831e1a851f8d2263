#ifndef PREDIM_AMALGAM_HPP
#define PREDIM_AMALGAM_HPP

#include <map>

#include "predim/control_function.hpp"
#include "predim/graph.hpp"
#include "predim/isomorphism.hpp"

namespace predim {

/// Gluing instructions: two graphs sharing a common base.
/// The embeddings carry the base into each side; both must land on
/// induced copies of the base.
struct AmalgamSpec {
    Graph base;
    Graph left, right;
    VertexMap left_embedding, right_embedding;   // base vertex -> side vertex

    /// Throws PreconditionError unless both embeddings are injective,
    /// total on the base, and induced.
    void check_structure() const;
};

struct Amalgam {
    Graph graph;
    VertexMap left_map, right_map;   // side vertex -> result vertex
};

/// Disjoint union over the base: base vertices keep their base names,
/// side vertices keep their own names except that clashes get primes
/// appended (left side first, label order).  No edges beyond the two
/// sides' images, so the predimension identity
/// delta(E) = delta(left) + delta(right) - delta(base) is forced.
Amalgam free_amalgam(const AmalgamSpec& spec);

/// free_amalgam with the class-preservation contract: base and both
/// sides must lie in C_F and the base images must be d-closed in their
/// sides.  The result is then again in C_F with both sides d-closed in
/// it; those conclusions are re-checked and a failure (impossible for
/// correct inputs) throws.
Amalgam amalgamate(const AmalgamSpec& spec, const ControlFunction& f);

} // namespace predim

#endif

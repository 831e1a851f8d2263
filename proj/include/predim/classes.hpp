#ifndef PREDIM_CLASSES_HPP
#define PREDIM_CLASSES_HPP

#include <optional>
#include <vector>

#include "predim/control_function.hpp"
#include "predim/graph.hpp"

namespace predim {

/// A subset falling under its predimension floor.
struct SubsetWitness {
    std::vector<VertexId> subset;   // sorted, nonempty
    long delta;                     // predimension of the subset
    long required;                  // least integer predimension allowed
};

/// Membership in the class of graphs whose nonempty subsets all have
/// positive predimension.  Uses a cut computation, so any size goes.
bool in_C_gt0(const Graph& g);

/// Minimal witness variant (fewest vertices, then fixed subset order);
/// exhaustive, desk scale.
std::optional<SubsetWitness> c_gt0_violation(const Graph& g,
                                             std::size_t vertex_cap = 26);

/// Membership in the class cut out by the control function:
/// delta(A) >= F(|A|) for every nonempty subset A.  Exhaustive sweep
/// with per-size integer thresholds precomputed from F.
bool in_C_F(const Graph& g, const ControlFunction& f,
            std::size_t vertex_cap = 26);
std::optional<SubsetWitness> c_F_violation(const Graph& g,
                                           const ControlFunction& f,
                                           std::size_t vertex_cap = 26);

/// Least integer thresholds ceil-of-F for sizes 0..n.
std::vector<long> delta_floors(const ControlFunction& f, long n);

/// Largest m with F(m) <= 2 * base_size: inside a class member, the
/// closure of a set of base_size vertices has at most m vertices,
/// since its predimension is at most 2 * base_size and at least F of
/// its own size.
long closure_size_bound(const ControlFunction& f, long base_size);

} // namespace predim

#endif

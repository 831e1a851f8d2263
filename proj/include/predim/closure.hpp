#ifndef PREDIM_CLOSURE_HPP
#define PREDIM_CLOSURE_HPP

#include <optional>
#include <vector>

#include "predim/graph.hpp"

namespace predim {

/// Node budget for subset searches; reads PREDIM_SEARCH_BUDGET when set.
long default_search_budget();

/// Smallest strict superset whose predimension fails to rise.
struct DClosedViolation {
    std::vector<VertexId> superset;   // sorted, contains the base set
    long delta_superset;
    long delta_base;
};

/// Exhaustive test over all strict supersets; the witness is minimal
/// (fewest added vertices, then first in the fixed subset order).
/// Intended for small ambients; throws BudgetError when more than
/// complement_cap vertices lie outside a.
std::optional<DClosedViolation>
d_closed_violation(const Graph& ambient, const VertexSet& a,
                   std::size_t complement_cap = 26);

/// Minimum of delta(s + X) - delta(s) over vertex sets X outside s,
/// with the inclusion-largest minimiser.  The empty X gives 0, so gain
/// is never positive.  Computed as a minimum cut, so it scales far past
/// exhaustive search.
struct SupersetGain {
    long gain;
    std::vector<VertexId> extension;   // largest minimiser, sorted
};
SupersetGain min_superset_gain(const Graph& g, const VertexSet& s);

/// True iff every strict superset of a has strictly larger
/// predimension.  Flow-based; any size.
bool is_d_closed(const Graph& ambient, const VertexSet& a);

/// Trace of the closure computation: each step absorbs the set of
/// smallest predimension among bounded strict supersets.
struct ClosureCertificate {
    std::vector<VertexId> seed;       // sorted
    std::vector<VertexId> closure;    // sorted
    long checked_bound = 0;           // superset size searched up to
    struct Step {
        std::vector<VertexId> absorbed;   // newly added vertices
        long delta_before, delta_after;
    };
    std::vector<Step> steps;
};

/// Closure of a under the d-closedness operator: the least d-closed
/// superset.  Requires the ambient to have strictly positive
/// predimension on nonempty subsets.  size_bound restricts the search
/// to supersets of at most that many vertices; correctness then needs
/// the true closure to fit inside the bound, which holds for the bound
/// derived from the ambient's control function.
ClosureCertificate d_closure(const Graph& ambient, const VertexSet& a,
                             std::optional<long> size_bound = std::nullopt,
                             std::optional<long> node_budget = std::nullopt);

/// delta(B) + delta(C) - delta(B&C) - delta(B|C); always >= 0, and 0
/// exactly when no edge joins B - C to C - B.
long submodularity_defect(const Graph& g, const VertexSet& b,
                          const VertexSet& c);

} // namespace predim

#endif

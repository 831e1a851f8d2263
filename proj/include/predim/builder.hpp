#ifndef PREDIM_BUILDER_HPP
#define PREDIM_BUILDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "predim/amalgam.hpp"
#include "predim/control_function.hpp"
#include "predim/graph.hpp"

namespace predim {

/// Deterministic fresh vertex names: prefix plus a running counter,
/// skipping anything already present in the graph being extended.
struct NameAllocator {
    std::string prefix = "x";
    std::uint64_t next = 0;
    VertexId fresh(const Graph& g);
};

/// One representative per isomorphism class of graphs in C_F with at
/// most max_size vertices (sizes 1..max_size; max_size 0 yields just
/// the empty graph).  Representatives are canonically labelled v0,
/// v1, ... and listed by size, then by adjacency code.
std::vector<Graph> enumerate_C_F(const ControlFunction& f, int max_size,
                                 int size_cap = 7);

struct ExtensionResult {
    Graph extended;
    VertexMap b_map;                 // catalog vertex -> extended vertex
    std::vector<VertexId> fresh;     // names added, in creation order
};

/// Glues b onto m along a d-closed common part: the free amalgam of m
/// and b over a, with b's new vertices renamed via the allocator.
/// Requires b in C_F, the embedded image of a d-closed in b, and a
/// d-closed in m; m itself must at least have positive predimension on
/// nonempty subsets (full C_F membership of a large m is the caller's
/// invariant, preserved by construction).
ExtensionResult realize_extension(const Graph& m, const VertexSet& a,
                                  const Graph& b, const VertexMap& embedding,
                                  const ControlFunction& f,
                                  NameAllocator& names);

struct RealizedTask {
    int step;                        // chain index this task created
    std::vector<VertexId> base;      // vertices of a, sorted
    int catalog_index;               // which enumerate_C_F entry
    VertexMap embedding;             // base vertex -> catalog vertex
    std::vector<VertexId> fresh;
};

/// Increasing chain of graphs approximating the generic structure:
/// every step glues a catalog graph onto a d-closed subset.
struct GenericApproximation {
    ControlFunction f;
    std::uint64_t seed = 0;
    int rounds = 0;
    int size_budget = 0;
    int pair_size_cap = 0;
    std::string terminal;            // rounds | size-budget | queue-empty
    std::vector<Graph> chain;        // chain[0] is empty
    std::vector<RealizedTask> realized;
};

/// Runs the amalgamation schedule: each round discovers the gluing
/// tasks newly available on the grown structure (a d-closed subset
/// plus a d-closed embedding of it into a catalog graph, up to the
/// catalog graph's automorphisms), appends them to a FIFO queue in a
/// seed-shuffled batch order, and realizes the front task.  Stops
/// after `rounds` realizations, or earlier when the next task would
/// push the structure past size_budget or the queue runs dry.
GenericApproximation build_generic_approximation(const ControlFunction& f,
                                                 int rounds, int size_budget,
                                                 int pair_size_cap,
                                                 std::uint64_t seed);

struct ChainCheck {
    std::string name;
    int step;        // -1 for whole-chain checks
    bool ok;
    std::string detail;
};

struct ChainReport {
    std::vector<ChainCheck> entries;
    bool ok() const;
};

/// Re-verifies the chain invariants: successive induced containment,
/// d-closedness of each step in the next, and class membership of
/// every stage (exhaustively when small; above that by re-certifying
/// the recorded gluing preconditions plus bounded subset sweeps and
/// the positive-predimension cut check).
ChainReport verify_chain(const GenericApproximation& g);

} // namespace predim

#endif

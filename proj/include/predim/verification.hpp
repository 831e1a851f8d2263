#ifndef PREDIM_VERIFICATION_HPP
#define PREDIM_VERIFICATION_HPP

#include <string>
#include <vector>

#include "predim/control_function.hpp"
#include "predim/gadget.hpp"
#include "predim/graph.hpp"

namespace predim {

/// Outcome of re-deriving the encoding's supporting calculations.
/// The three row tables are only populated in the single-edge case
/// (base = one oriented edge), where the reference calculations are
/// stated for the seven-vertex encoding; each row carries the value
/// computed here, and a check records the diff against the expected
/// rows.  Vertices are reported under their role names (a, b, c,
/// l1..l4) no matter what the input called them.
struct VerificationReport {
    bool single_edge = false;
    std::vector<std::string> relative_table;    // "C over base -> value"
    std::vector<std::string> cycle_table;       // "members | Yi | value"
    std::vector<std::string> closure_table;     // "X / Y -> value"
    std::vector<std::string> small_structures;  // membership justifications
    std::vector<ValidationCheck> checks;
    bool ok() const;
};

/// Builds the encoding of (base, arcs) and re-checks everything the
/// construction promises: the base stays d-closed in the result, the
/// result stays in the class, decoding restricted to the base returns
/// exactly the arcs, and (single-edge case) the three calculation
/// tables and the small-structure memberships come out exactly as
/// expected.  Failures land in the report; only malformed input sizes
/// beyond the exhaustive budget throw.
VerificationReport verify_gadget(const Graph& base,
                                 const std::vector<Arc>& arcs,
                                 const ControlFunction& f);

} // namespace predim

#endif

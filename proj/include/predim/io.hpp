#ifndef PREDIM_IO_HPP
#define PREDIM_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "predim/builder.hpp"
#include "predim/classes.hpp"
#include "predim/closure.hpp"
#include "predim/gadget.hpp"
#include "predim/sparsity.hpp"
#include "predim/verification.hpp"

namespace predim {

// field order in emitted JSON is part of the output contract
using Json = nlohmann::ordered_json;

/// Edge-list text: `v <name>` declares a vertex, `e <a> <b>` an edge,
/// `#` starts a comment.  Edge endpoints are declared implicitly.
/// Duplicate edges, loops and redeclared vertices are rejected.
Graph parse_graph(std::istream& in, const std::string& filename);
Graph load_graph(const std::string& path);

/// Arc list: `a <from> <to>` lines with the same comment rules.
/// Whether the arcs fit a given graph is checked by the consumer.
std::vector<Arc> parse_arcs(std::istream& in, const std::string& filename);
std::vector<Arc> load_arcs(const std::string& path);

/// Control function JSON: {"knots": [[x, value], ...],
/// "tail": {"p", "q", "r", "s": {"rational", "log_coeff", "log_arg"}}}.
/// Rationals are integers or "n/d" strings.
ControlFunction parse_control_function(const Json& j,
                                       const std::string& filename);
ControlFunction load_control_function(const std::string& path);

std::string rational_to_string(const Rational& q);

Json graph_to_json(const Graph& g);
Json orientation_to_json(const Orientation& o);
Json sparsity_witness_to_json(const SparsityWitness& w);
Json subset_witness_to_json(const SubsetWitness& w);
Json d_closed_violation_to_json(const DClosedViolation& v);
Json certificate_to_json(const ClosureCertificate& c);
Json control_function_to_json(const ControlFunction& f);
Json gadget_to_json(const Gadget& g);
Json chain_to_json(const GenericApproximation& g);
Json chain_report_to_json(const ChainReport& r);
Json verification_to_json(const VerificationReport& r);
Json validation_to_json(const ValidationReport& r);

} // namespace predim

#endif

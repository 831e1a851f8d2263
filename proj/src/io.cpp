#include "predim/io.hpp"

#include <fstream>
#include <sstream>

namespace predim {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

Rational parse_rational(const Json& j, const std::string& filename,
                        const std::string& where) {
    try {
        if (j.is_number_integer())
            return Rational(j.get<long>());
        if (j.is_string()) {
            mpq_class q;
            if (q.set_str(j.get<std::string>(), 10) != 0)
                throw ParseError(filename, 0,
                                 where + ": malformed rational '" +
                                     j.get<std::string>() + "'");
            if (q.get_den() == 0)
                throw ParseError(filename, 0, where + ": zero denominator");
            q.canonicalize();
            return q;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the generic complaint
    }
    throw ParseError(filename, 0,
                     where + ": expected an integer or a \"n/d\" string");
}

} // namespace

Graph parse_graph(std::istream& in, const std::string& filename) {
    Graph g;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "v") {
                if (tok.size() != 2)
                    throw Error("expected 'v <name>'");
                g.add_vertex(tok[1]);
            } else if (tok[0] == "e") {
                if (tok.size() != 3)
                    throw Error("expected 'e <name> <name>'");
                g.ensure_vertex(tok[1]);
                g.ensure_vertex(tok[2]);
                g.add_edge(tok[1], tok[2]);
            } else {
                throw Error("unknown directive '" + tok[0] + "'");
            }
        } catch (const Error& e) {
            throw ParseError(filename, lineno, e.what());
        }
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_graph(in, path);
}

std::vector<Arc> parse_arcs(std::istream& in, const std::string& filename) {
    std::vector<Arc> arcs;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] != "a" || tok.size() != 3)
            throw ParseError(filename, lineno, "expected 'a <from> <to>'");
        arcs.push_back({tok[1], tok[2]});
    }
    return arcs;
}

std::vector<Arc> load_arcs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_arcs(in, path);
}

ControlFunction parse_control_function(const Json& j,
                                       const std::string& filename) {
    ControlFunction f;
    if (!j.is_object() || !j.contains("knots") || !j.contains("tail"))
        throw ParseError(filename, 0,
                         "expected an object with 'knots' and 'tail'");
    if (!j["knots"].is_array() || j["knots"].empty())
        throw ParseError(filename, 0, "'knots' must be a nonempty array");
    for (const Json& k : j["knots"]) {
        if (!k.is_array() || k.size() != 2)
            throw ParseError(filename, 0, "each knot must be [x, value]");
        f.knots.emplace_back(parse_rational(k[0], filename, "knot x"),
                             parse_rational(k[1], filename, "knot value"));
    }
    const Json& t = j["tail"];
    if (!t.is_object() || !t.contains("p") || !t.contains("q") ||
        !t.contains("r") || !t.contains("s"))
        throw ParseError(filename, 0, "'tail' needs p, q, r and s");
    f.tail_p = parse_rational(t["p"], filename, "tail p");
    f.tail_q = parse_rational(t["q"], filename, "tail q");
    f.tail_r = parse_rational(t["r"], filename, "tail r");
    const Json& s = t["s"];
    if (!s.is_object() || !s.contains("rational"))
        throw ParseError(filename, 0, "tail s needs at least 'rational'");
    f.tail_s.rat = parse_rational(s["rational"], filename, "tail s");
    if (s.contains("log_coeff") != s.contains("log_arg"))
        throw ParseError(filename, 0,
                         "tail s needs log_coeff and log_arg together");
    if (s.contains("log_coeff")) {
        LogTerm lt;
        lt.coeff = parse_rational(s["log_coeff"], filename, "log coeff");
        lt.arg = parse_rational(s["log_arg"], filename, "log arg");
        f.tail_s.log = lt;
    }
    try {
        f.check_well_formed();
    } catch (const Error& e) {
        throw ParseError(filename, 0, e.what());
    }
    return f;
}

ControlFunction load_control_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, 0, e.what());
    }
    return parse_control_function(j, path);
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = Json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back(Json::array({e.a, e.b}));
    return j;
}

Json orientation_to_json(const Orientation& o) {
    Json j;
    j["arcs"] = Json::array();
    for (const Arc& t : o.arcs())
        j["arcs"].push_back(Json::array({t.from, t.to}));
    return j;
}

Json sparsity_witness_to_json(const SparsityWitness& w) {
    Json j;
    j["vertices"] = w.vertices;
    j["edge_count"] = w.edge_count;
    j["bound"] = w.bound;
    return j;
}

Json subset_witness_to_json(const SubsetWitness& w) {
    Json j;
    j["subset"] = w.subset;
    j["delta"] = w.delta;
    j["required"] = w.required;
    return j;
}

Json d_closed_violation_to_json(const DClosedViolation& v) {
    Json j;
    j["superset"] = v.superset;
    j["delta_superset"] = v.delta_superset;
    j["delta_base"] = v.delta_base;
    return j;
}

Json certificate_to_json(const ClosureCertificate& c) {
    Json j;
    j["seed"] = c.seed;
    j["closure"] = c.closure;
    j["checked_bound"] = c.checked_bound;
    j["steps"] = Json::array();
    for (const auto& s : c.steps) {
        Json step;
        step["absorbed"] = s.absorbed;
        step["delta_before"] = s.delta_before;
        step["delta_after"] = s.delta_after;
        j["steps"].push_back(std::move(step));
    }
    return j;
}

Json control_function_to_json(const ControlFunction& f) {
    Json j;
    j["knots"] = Json::array();
    for (const auto& [x, y] : f.knots)
        j["knots"].push_back(
            Json::array({rational_to_string(x), rational_to_string(y)}));
    Json tail;
    tail["p"] = rational_to_string(f.tail_p);
    tail["q"] = rational_to_string(f.tail_q);
    tail["r"] = rational_to_string(f.tail_r);
    Json s;
    s["rational"] = rational_to_string(f.tail_s.rat);
    if (f.tail_s.log) {
        s["log_coeff"] = rational_to_string(f.tail_s.log->coeff);
        s["log_arg"] = rational_to_string(f.tail_s.log->arg);
    }
    tail["s"] = std::move(s);
    j["tail"] = std::move(tail);
    return j;
}

Json gadget_to_json(const Gadget& g) {
    Json j;
    j["graph"] = graph_to_json(g.graph);
    j["head"] = g.head;
    j["labels"] = Json::array();
    for (const auto& [arc, l] : g.labels) {
        Json entry;
        entry["arc"] = Json::array({arc.from, arc.to});
        entry["vertices"] = l;
        j["labels"].push_back(std::move(entry));
    }
    return j;
}

Json chain_to_json(const GenericApproximation& g) {
    Json j;
    j["control_function"] = control_function_to_json(g.f);
    j["seed"] = g.seed;
    j["rounds"] = g.rounds;
    j["size_budget"] = g.size_budget;
    j["pair_size_cap"] = g.pair_size_cap;
    j["terminal"] = g.terminal;
    j["chain"] = Json::array();
    for (const Graph& m : g.chain) j["chain"].push_back(graph_to_json(m));
    j["realized"] = Json::array();
    for (const RealizedTask& t : g.realized) {
        Json task;
        task["step"] = t.step;
        task["base"] = t.base;
        task["catalog_index"] = t.catalog_index;
        task["embedding"] = Json::array();
        for (const auto& [u, v] : t.embedding)
            task["embedding"].push_back(Json::array({u, v}));
        task["fresh"] = t.fresh;
        j["realized"].push_back(std::move(task));
    }
    return j;
}

Json chain_report_to_json(const ChainReport& r) {
    Json j;
    j["ok"] = r.ok();
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["name"] = e.name;
        entry["step"] = e.step;
        entry["ok"] = e.ok;
        entry["detail"] = e.detail;
        j["entries"].push_back(std::move(entry));
    }
    return j;
}

Json verification_to_json(const VerificationReport& r) {
    Json j;
    j["ok"] = r.ok();
    j["single_edge"] = r.single_edge;
    j["relative_table"] = r.relative_table;
    j["head_family_table"] = r.cycle_table;
    j["closure_table"] = r.closure_table;
    j["small_structures"] = r.small_structures;
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
        Json check;
        check["name"] = c.name;
        check["ok"] = c.ok;
        check["detail"] = c.detail;
        j["checks"].push_back(std::move(check));
    }
    return j;
}

Json validation_to_json(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok();
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
        Json check;
        check["name"] = c.name;
        check["ok"] = c.ok;
        check["detail"] = c.detail;
        j["checks"].push_back(std::move(check));
    }
    return j;
}

} // namespace predim

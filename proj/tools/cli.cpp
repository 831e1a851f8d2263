#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "predim/io.hpp"
#include "predim/verification.hpp"

namespace {

using namespace predim;

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

VertexMap parse_map(const std::string& csv, const std::string& what) {
    VertexMap out;
    for (const std::string& pair : split_csv(csv)) {
        auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
            throw PreconditionError(what + ": expected 'u=v' pairs, got '" +
                                    pair + "'");
        out[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
    return out;
}

ControlFunction pick_f(const std::string& path) {
    if (path.empty()) return ControlFunction::reference();
    return load_control_function(path);
}

std::string join(const std::vector<VertexId>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += ' ';
        out += v;
    }
    return out;
}

void print_graph_text(const Graph& g) {
    for (const auto& v : g.vertices()) std::cout << "v " << v << "\n";
    for (const Edge& e : g.edges())
        std::cout << "e " << e.a << " " << e.b << "\n";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string subset_witness_text(const SubsetWitness& w) {
    return "subset " + join(w.subset) + ": predimension " +
           std::to_string(w.delta) + " < " + std::to_string(w.required);
}

// the minimal violating superset, reported as what it adds
std::string violation_text(const DClosedViolation& v, const VertexSet& base) {
    std::vector<VertexId> added;
    for (const auto& u : v.superset)
        if (!base.count(u)) added.push_back(u);
    return "adding " + join(added) + " moves predimension " +
           std::to_string(v.delta_base) + " -> " +
           std::to_string(v.delta_superset);
}

struct Options {
    std::string graph, arcs, f, set, within, head = "c";
    std::string base, left, right, left_map, right_map;
    int k = 2;
    int rounds = 10, budget = 200, cap = 3;
    int max_size = 4;
    std::uint64_t seed = 0;
    bool json = false;
};

int run_predim(const Options& o) {
    Graph g = load_graph(o.graph);
    long d = predimension(g);
    if (o.json) {
        Json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["predimension"] = d;
        print_json(j);
    } else {
        std::cout << d << "\n";
    }
    return 0;
}

int run_sparse(const Options& o) {
    Graph g = load_graph(o.graph);
    auto w = is_k_sparse(g, o.k);
    if (o.json) {
        Json j;
        j["k"] = o.k;
        j["sparse"] = !w;
        if (w) j["witness"] = sparsity_witness_to_json(*w);
        print_json(j);
    } else if (w) {
        std::cout << w->vertices.size() << " vertices, " << w->edge_count
                  << " edges > " << w->bound << "\n";
    } else {
        std::cout << "sparse\n";
    }
    return w ? 1 : 0;
}

int run_orient(const Options& o) {
    Graph g = load_graph(o.graph);
    auto result = find_k_orientation(g, o.k);
    if (const auto* w = std::get_if<SparsityWitness>(&result)) {
        if (o.json) {
            Json j;
            j["k"] = o.k;
            j["oriented"] = false;
            j["witness"] = sparsity_witness_to_json(*w);
            print_json(j);
        } else {
            std::cout << w->vertices.size() << " vertices, " << w->edge_count
                      << " edges > " << w->bound << "\n";
        }
        return 1;
    }
    const auto& orientation = std::get<Orientation>(result);
    if (o.json) {
        Json j;
        j["k"] = o.k;
        j["oriented"] = true;
        j["arcs"] = orientation_to_json(orientation)["arcs"];
        print_json(j);
    } else {
        for (const Arc& t : orientation.arcs())
            std::cout << "a " << t.from << " " << t.to << "\n";
    }
    return 0;
}

int run_enumerate_orientations(const Options& o) {
    Graph g = load_graph(o.graph);
    std::vector<Orientation> all = enumerate_k_orientations(g, o.k);
    if (o.json) {
        Json j;
        j["k"] = o.k;
        j["count"] = all.size();
        j["orientations"] = Json::array();
        for (const Orientation& ori : all)
            j["orientations"].push_back(orientation_to_json(ori)["arcs"]);
        print_json(j);
    } else {
        std::cout << "count: " << all.size() << "\n";
        for (const Orientation& ori : all) {
            std::string line;
            for (const Arc& t : ori.arcs()) {
                if (!line.empty()) line += ' ';
                line += t.from + ">" + t.to;
            }
            std::cout << line << "\n";
        }
    }
    return 0;
}

int run_closed(const Options& o) {
    Graph g = load_graph(o.graph);
    VertexSet s;
    for (const auto& v : split_csv(o.set)) s.insert(v);
    std::optional<DClosedViolation> w;
    bool minimal = true;
    try {
        w = d_closed_violation(g, s);
    } catch (const BudgetError&) {
        // too big to sweep: fall back to the cut computation, whose
        // witness is inclusion-largest rather than minimal
        minimal = false;
        SupersetGain gain = min_superset_gain(g, s);
        if (gain.gain <= 0 && !gain.extension.empty()) {
            DClosedViolation v;
            v.superset.assign(s.begin(), s.end());
            for (const auto& u : gain.extension) v.superset.push_back(u);
            std::sort(v.superset.begin(), v.superset.end());
            VertexSet sup(v.superset.begin(), v.superset.end());
            v.delta_superset = predimension(g.induced(sup));
            v.delta_base = predimension(g.induced(s));
            w = v;
        }
    }
    if (o.json) {
        Json j;
        j["set"] = std::vector<VertexId>(s.begin(), s.end());
        j["d_closed"] = !w;
        if (w) {
            j["witness"] = d_closed_violation_to_json(*w);
            j["witness"]["minimal"] = minimal;
        }
        print_json(j);
    } else if (w) {
        std::cout << violation_text(*w, s) << "\n";
    } else {
        std::cout << "d-closed\n";
    }
    return w ? 1 : 0;
}

int run_closure(const Options& o) {
    Graph g = load_graph(o.graph);
    ControlFunction f = pick_f(o.f);
    VertexSet s;
    for (const auto& v : split_csv(o.set)) s.insert(v);
    long bound = closure_size_bound(f, static_cast<long>(s.size()));
    ClosureCertificate cert = d_closure(g, s, bound);
    if (o.json) {
        print_json(certificate_to_json(cert));
    } else {
        std::cout << "closure: " << join(cert.closure) << "\n";
        std::cout << "checked_bound: " << cert.checked_bound << "\n";
        for (const auto& step : cert.steps)
            std::cout << "absorbed " << join(step.absorbed)
                      << " (predimension " << step.delta_before << " -> "
                      << step.delta_after << ")\n";
    }
    return 0;
}

int run_cf_check(const Options& o) {
    Graph g = load_graph(o.graph);
    ControlFunction f = pick_f(o.f);
    auto w = c_F_violation(g, f);
    if (o.json) {
        Json j;
        j["in_class"] = !w;
        if (w) j["witness"] = subset_witness_to_json(*w);
        print_json(j);
    } else if (w) {
        std::cout << subset_witness_text(*w) << "\n";
    } else {
        std::cout << "in class\n";
    }
    return w ? 1 : 0;
}

int run_amalgam(const Options& o) {
    AmalgamSpec spec;
    spec.base = load_graph(o.base);
    spec.left = load_graph(o.left);
    spec.right = load_graph(o.right);
    spec.left_embedding = parse_map(o.left_map, "--left-map");
    spec.right_embedding = parse_map(o.right_map, "--right-map");
    if (spec.left_embedding.empty())
        for (const auto& v : spec.base.vertices())
            spec.left_embedding[v] = v;
    if (spec.right_embedding.empty())
        for (const auto& v : spec.base.vertices())
            spec.right_embedding[v] = v;
    ControlFunction f = pick_f(o.f);
    Amalgam am = amalgamate(spec, f);
    if (o.json) {
        Json j;
        j["graph"] = graph_to_json(am.graph);
        j["left_map"] = Json::array();
        for (const auto& [u, v] : am.left_map)
            j["left_map"].push_back(Json::array({u, v}));
        j["right_map"] = Json::array();
        for (const auto& [u, v] : am.right_map)
            j["right_map"].push_back(Json::array({u, v}));
        print_json(j);
    } else {
        print_graph_text(am.graph);
    }
    return 0;
}

int run_build_generic(const Options& o) {
    ControlFunction f = pick_f(o.f);
    GenericApproximation g = build_generic_approximation(
        f, o.rounds, o.budget, o.cap, o.seed);
    if (o.json) {
        print_json(chain_to_json(g));
    } else {
        std::cout << "terminal: " << g.terminal << "\n";
        std::cout << "stages: " << g.chain.size() << "\n";
        const Graph& last = g.chain.back();
        std::cout << "final: " << last.vertex_count() << " vertices, "
                  << last.edge_count() << " edges\n";
        for (const RealizedTask& t : g.realized)
            std::cout << "step " << t.step << ": catalog "
                      << t.catalog_index << " on {" << join(t.base)
                      << "} fresh {" << join(t.fresh) << "}\n";
    }
    return 0;
}

int run_enumerate_class(const Options& o) {
    ControlFunction f = pick_f(o.f);
    std::vector<Graph> graphs = enumerate_C_F(f, o.max_size);
    if (o.json) {
        Json j;
        j["max_size"] = o.max_size;
        j["count"] = graphs.size();
        j["graphs"] = Json::array();
        for (const Graph& g : graphs) j["graphs"].push_back(graph_to_json(g));
        print_json(j);
    } else {
        std::cout << "count: " << graphs.size() << "\n";
        for (const Graph& g : graphs) {
            std::string line = "n=" + std::to_string(g.vertex_count());
            for (const Edge& e : g.edges())
                line += " " + e.a + "-" + e.b;
            std::cout << line << "\n";
        }
    }
    return 0;
}

int run_gadget(const Options& o) {
    Graph base = load_graph(o.graph);
    std::vector<Arc> arcs = load_arcs(o.arcs);
    Gadget g = build_gadget(base, arcs, o.head);
    if (o.json) {
        print_json(gadget_to_json(g));
    } else {
        print_graph_text(g.graph);
    }
    return 0;
}

int run_decode(const Options& o) {
    Graph g = load_graph(o.graph);
    std::set<Arc> arcs;
    if (o.within.empty()) {
        arcs = detect_labels(g, o.head);
    } else {
        VertexSet within;
        for (const auto& v : split_csv(o.within)) within.insert(v);
        arcs = detect_labels_within(g, o.head, within);
    }
    if (o.json) {
        Json j;
        j["head"] = o.head;
        j["arcs"] = Json::array();
        for (const Arc& t : arcs)
            j["arcs"].push_back(Json::array({t.from, t.to}));
        print_json(j);
    } else {
        for (const Arc& t : arcs)
            std::cout << "a " << t.from << " " << t.to << "\n";
    }
    return 0;
}

int run_verify_paper(const Options& o) {
    ControlFunction f = pick_f(o.f);
    Graph base;
    base.add_vertex("a");
    base.add_vertex("b");
    base.add_edge("a", "b");
    VerificationReport rep = verify_gadget(base, {{"a", "b"}}, f);
    if (o.json) {
        print_json(verification_to_json(rep));
    } else {
        auto table = [](const char* title,
                        const std::vector<std::string>& rows) {
            std::cout << title << "\n";
            for (const auto& r : rows) std::cout << "  " << r << "\n";
        };
        table("relative predimension table", rep.relative_table);
        table("head family table", rep.cycle_table);
        table("closure deficit table", rep.closure_table);
        table("small structures", rep.small_structures);
        for (const auto& c : rep.checks)
            std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        std::cout << "overall: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Predimension, orientation and amalgamation toolkit "
                 "for sparse graphs"};
    app.require_subcommand(1);
    Options o;
    int rc = 0;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "emit JSON instead of plain text");
    };
    auto add_f = [&](CLI::App* cmd) {
        cmd->add_option("--f", o.f,
                        "control function JSON file (default: built-in "
                        "reference)");
    };

    auto* c_predim = app.add_subcommand("predim", "predimension of a graph");
    c_predim->add_option("graph", o.graph, "edge-list file")->required();
    add_json(c_predim);
    c_predim->callback([&] { rc = run_predim(o); });

    auto* c_sparse =
        app.add_subcommand("sparse", "test k-sparsity, witness on failure");
    c_sparse->add_option("graph", o.graph, "edge-list file")->required();
    c_sparse->add_option("--k", o.k, "sparsity parameter")->required();
    add_json(c_sparse);
    c_sparse->callback([&] { rc = run_sparse(o); });

    auto* c_orient = app.add_subcommand(
        "orient", "orient all edges with out-degree at most k");
    c_orient->add_option("graph", o.graph, "edge-list file")->required();
    c_orient->add_option("--k", o.k, "out-degree bound")->required();
    add_json(c_orient);
    c_orient->callback([&] { rc = run_orient(o); });

    auto* c_enum_or = app.add_subcommand("enumerate-orientations",
                                         "list every k-orientation");
    c_enum_or->add_option("graph", o.graph, "edge-list file")->required();
    c_enum_or->add_option("--k", o.k, "out-degree bound")->required();
    add_json(c_enum_or);
    c_enum_or->callback([&] { rc = run_enumerate_orientations(o); });

    auto* c_closed =
        app.add_subcommand("closed", "test d-closedness of a vertex set");
    c_closed->add_option("graph", o.graph, "edge-list file")->required();
    c_closed->add_option("--set", o.set, "comma-separated vertex names")
        ->required();
    add_json(c_closed);
    c_closed->callback([&] { rc = run_closed(o); });

    auto* c_closure =
        app.add_subcommand("closure", "d-closure of a vertex set");
    c_closure->add_option("graph", o.graph, "edge-list file")->required();
    c_closure->add_option("--set", o.set, "comma-separated vertex names")
        ->required();
    add_f(c_closure);
    add_json(c_closure);
    c_closure->callback([&] { rc = run_closure(o); });

    auto* c_cf = app.add_subcommand(
        "cf-check", "class membership under the control function");
    c_cf->add_option("graph", o.graph, "edge-list file")->required();
    add_f(c_cf);
    add_json(c_cf);
    c_cf->callback([&] { rc = run_cf_check(o); });

    auto* c_am = app.add_subcommand("amalgam",
                                    "free amalgam of two class members "
                                    "over a d-closed base");
    c_am->add_option("--base", o.base, "base edge-list file")->required();
    c_am->add_option("--left", o.left, "left edge-list file")->required();
    c_am->add_option("--right", o.right, "right edge-list file")->required();
    c_am->add_option("--left-map", o.left_map,
                     "base-to-left vertex map u=x,v=y (default: identity)");
    c_am->add_option("--right-map", o.right_map,
                     "base-to-right vertex map (default: identity)");
    add_f(c_am);
    add_json(c_am);
    c_am->callback([&] { rc = run_amalgam(o); });

    auto* c_build = app.add_subcommand(
        "build-generic", "grow a chain approximating the generic structure");
    c_build->add_option("--rounds", o.rounds, "gluing steps to run");
    c_build->add_option("--budget", o.budget, "vertex budget");
    c_build->add_option("--cap", o.cap, "catalog graph size cap");
    c_build->add_option("--seed", o.seed, "schedule shuffle seed");
    add_f(c_build);
    add_json(c_build);
    c_build->callback([&] { rc = run_build_generic(o); });

    auto* c_enum_cls = app.add_subcommand(
        "enumerate-class", "class members up to isomorphism, by size");
    c_enum_cls->add_option("--max-size", o.max_size, "largest vertex count");
    add_f(c_enum_cls);
    add_json(c_enum_cls);
    c_enum_cls->callback([&] { rc = run_enumerate_class(o); });

    auto* c_gadget = app.add_subcommand(
        "gadget", "encode an arc set over a base graph");
    c_gadget->add_option("graph", o.graph, "base edge-list file")->required();
    c_gadget->add_option("arcs", o.arcs, "arc file (a <from> <to> lines)")
        ->required();
    c_gadget->add_option("--head", o.head, "head vertex name (default c)");
    add_json(c_gadget);
    c_gadget->callback([&] { rc = run_gadget(o); });

    auto* c_decode =
        app.add_subcommand("decode", "read arcs back off a graph at a head");
    c_decode->add_option("graph", o.graph, "edge-list file")->required();
    c_decode->add_option("--head", o.head, "head vertex name (default c)");
    c_decode->add_option("--within", o.within,
                         "restrict pairs to these comma-separated vertices");
    add_json(c_decode);
    c_decode->callback([&] { rc = run_decode(o); });

    auto* c_verify = app.add_subcommand(
        "verify-paper",
        "re-derive the reference calculation tables and diff them");
    add_f(c_verify);
    add_json(c_verify);
    c_verify->callback([&] { rc = run_verify_paper(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.file() << ":" << e.line() << ": " << e.reason()
                  << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

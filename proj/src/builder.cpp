#include "predim/builder.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>

#include "predim/classes.hpp"
#include "predim/closure.hpp"
#include "predim/subsets.hpp"

namespace predim {
namespace {

// adjacency as bit rows, for graphs too large for MaskGraph
struct BitAdj {
    int n = 0, words = 0;
    std::vector<std::uint64_t> rows;

    explicit BitAdj(const Graph& g)
        : n(static_cast<int>(g.vertex_count())), words((n + 63) / 64),
          rows(static_cast<std::size_t>(n) * words, 0) {
        for (int i = 0; i < n; ++i)
            for (int j : g.adjacency(i))
                rows[static_cast<std::size_t>(i) * words + j / 64] |=
                    1ULL << (j % 64);
    }

    bool at(int i, int j) const {
        return rows[static_cast<std::size_t>(i) * words + j / 64] >>
                   (j % 64) &
               1;
    }
};

std::string task_key(const std::vector<VertexId>& base, int cat,
                     const std::vector<VertexId>& emb) {
    std::string k;
    for (const auto& v : base) {
        k += v;
        k += '\x1f';
    }
    k += '|';
    k += std::to_string(cat);
    k += '|';
    for (const auto& v : emb) {
        k += v;
        k += '\x1f';
    }
    return k;
}

} // namespace

VertexId NameAllocator::fresh(const Graph& g) {
    while (true) {
        VertexId v = prefix + std::to_string(next++);
        if (!g.has_vertex(v)) return v;
    }
}

std::vector<Graph> enumerate_C_F(const ControlFunction& f, int max_size,
                                 int size_cap) {
    if (max_size < 0)
        throw PreconditionError("size must be nonnegative");
    if (max_size > size_cap)
        throw BudgetError("class enumeration capped at " +
                          std::to_string(size_cap) + " vertices");
    if (max_size == 0) return {Graph{}};

    std::vector<long> floors = delta_floors(f, max_size);
    std::vector<Graph> out;
    for (int n = 1; n <= max_size; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            // adjacency rows of the candidate, straight off the mask
            std::array<std::uint32_t, 8> adj{};
            {
                int t = 0;
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i, ++t)
                        if (mask >> t & 1) {
                            adj[i] |= 1u << j;
                            adj[j] |= 1u << i;
                        }
            }
            bool in_class = true;
            for (std::uint32_t s = 1; s < (1u << n) && in_class; ++s) {
                long verts = std::popcount(s);
                long twice = 0;
                for (std::uint32_t rest = s; rest; rest &= rest - 1)
                    twice += std::popcount(adj[std::countr_zero(rest)] & s);
                if (2 * verts - twice / 2 < floors[verts]) in_class = false;
            }
            if (!in_class) continue;

            Graph g;
            for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
            {
                int t = 0;
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i, ++t)
                        if (mask >> t & 1)
                            g.add_edge("v" + std::to_string(i),
                                       "v" + std::to_string(j));
            }
            if (is_canonical_labelling(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

ExtensionResult realize_extension(const Graph& m, const VertexSet& a,
                                  const Graph& b, const VertexMap& embedding,
                                  const ControlFunction& f,
                                  NameAllocator& names) {
    for (const auto& v : a)
        if (!m.has_vertex(v))
            throw PreconditionError("unknown vertex '" + v + "'");
    {
        AmalgamSpec probe;   // reuse the embedding validation
        probe.base = m.induced(a);
        probe.left = probe.base;
        probe.right = b;
        for (const auto& v : a) probe.left_embedding[v] = v;
        probe.right_embedding = embedding;
        probe.check_structure();
    }
    if (auto w = c_F_violation(b, f))
        throw PreconditionError("extension graph leaves the class: "
                                "predimension " +
                                std::to_string(w->delta) + " on " +
                                std::to_string(w->subset.size()) +
                                " vertices");
    VertexSet image;
    for (const auto& [u, v] : embedding) image.insert(v);
    if (!is_d_closed(b, image))
        throw PreconditionError("embedded base not d-closed in the "
                                "extension graph");
    if (!is_d_closed(m, a))
        throw PreconditionError("base not d-closed in the host");
    if (!in_C_gt0(m))
        throw PreconditionError("host has a nonpositive-predimension subset");

    ExtensionResult out;
    out.extended = m;
    VertexMap back;   // b image vertex -> m vertex
    for (const auto& [u, v] : embedding) back[v] = u;
    for (const auto& v : b.vertices()) {
        if (back.count(v)) {
            out.b_map[v] = back[v];
            continue;
        }
        VertexId name = names.fresh(out.extended);
        out.extended.add_vertex(name);
        out.b_map[v] = name;
        out.fresh.push_back(name);
    }
    for (const Edge& e : b.edges()) {
        const VertexId& x = out.b_map.at(e.a);
        const VertexId& y = out.b_map.at(e.b);
        if (!out.extended.has_edge(x, y)) out.extended.add_edge(x, y);
    }

    // the host must stay d-closed in the result; with the preconditions
    // above this is the amalgamation lemma, so treat failure as a bug
    if (out.fresh.size() <= 20) {
        const Graph& ext = out.extended;
        std::vector<int> fresh_idx;
        for (const auto& v : out.fresh) fresh_idx.push_back(ext.index_of(v));
        std::uint64_t total = 1ULL << out.fresh.size();
        for (std::uint64_t x = 1; x < total; ++x) {
            long rel = 0;
            for (std::size_t i = 0; i < out.fresh.size(); ++i) {
                if (!(x >> i & 1)) continue;
                rel += 2;
                for (int j : ext.adjacency(fresh_idx[i])) {
                    auto it = std::find(fresh_idx.begin(), fresh_idx.end(), j);
                    if (it == fresh_idx.end()) {
                        --rel;   // edge into the host
                    } else {
                        std::size_t k = it - fresh_idx.begin();
                        if (x >> k & 1 && k < i) --rel;   // inside, once
                    }
                }
            }
            if (rel <= 0)
                throw Error("host lost d-closedness in the extension");
        }
    }
    return out;
}

GenericApproximation build_generic_approximation(const ControlFunction& f,
                                                 int rounds, int size_budget,
                                                 int pair_size_cap,
                                                 std::uint64_t seed) {
    if (rounds < 0)
        throw PreconditionError("rounds must be nonnegative");
    if (size_budget <= 0 || pair_size_cap <= 0)
        throw PreconditionError("caps must be positive");

    GenericApproximation out;
    out.f = f;
    out.seed = seed;
    out.rounds = rounds;
    out.size_budget = size_budget;
    out.pair_size_cap = pair_size_cap;

    std::vector<Graph> catalog = enumerate_C_F(f, pair_size_cap);
    std::vector<std::vector<VertexMap>> auts;
    auts.reserve(catalog.size());
    for (const Graph& b : catalog) auts.push_back(automorphisms(b));

    struct Task {
        std::vector<VertexId> base;
        int cat;
        std::vector<VertexId> emb;   // image of base[i], canonical
    };
    std::deque<Task> queue;
    std::set<std::string> seen;

    Graph m;
    out.chain.push_back(m);
    NameAllocator names;
    std::mt19937_64 rng(seed);
    std::vector<VertexId> new_vertices;   // empty means first discovery
    bool first_discovery = true;

    auto discover = [&]() {
        std::vector<Task> batch;
        std::vector<VertexId> verts = m.vertices();
        VertexSet fresh_set(new_vertices.begin(), new_vertices.end());

        // candidate bases: small subsets touching the latest growth
        std::vector<std::vector<VertexId>> bases;
        if (first_discovery) bases.push_back({});
        int max_base = pair_size_cap - 1;
        std::vector<int> pick;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (!pick.empty()) {
                bool touches = first_discovery;
                for (int i : pick)
                    if (fresh_set.count(verts[i])) touches = true;
                if (touches) {
                    std::vector<VertexId> base;
                    for (int i : pick) base.push_back(verts[i]);
                    bases.push_back(std::move(base));
                }
            }
            if (static_cast<int>(pick.size()) == max_base) return;
            for (std::size_t i = from; i < verts.size(); ++i) {
                pick.push_back(static_cast<int>(i));
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);

        for (const auto& base : bases) {
            VertexSet base_set(base.begin(), base.end());
            if (!is_d_closed(m, base_set)) continue;
            Graph pattern = m.induced(base_set);
            for (std::size_t ci = 0; ci < catalog.size(); ++ci) {
                const Graph& b = catalog[ci];
                if (b.vertex_count() <= base.size()) continue;
                for (const VertexMap& phi :
                     find_induced_embeddings(pattern, b)) {
                    VertexSet image;
                    for (const auto& [u, v] : phi) image.insert(v);
                    if (d_closed_violation(b, image)) continue;
                    // canonical under the catalog graph's automorphisms
                    std::vector<VertexId> best;
                    for (const VertexMap& g : auts[ci]) {
                        std::vector<VertexId> rep;
                        rep.reserve(base.size());
                        for (const auto& v : base)
                            rep.push_back(g.at(phi.at(v)));
                        if (best.empty() || rep < best) best = std::move(rep);
                    }
                    if (seen.insert(task_key(base, static_cast<int>(ci),
                                             best))
                            .second)
                        batch.push_back(
                            {base, static_cast<int>(ci), std::move(best)});
                }
            }
        }
        std::sort(batch.begin(), batch.end(),
                  [](const Task& x, const Task& y) {
                      return std::tie(x.base, x.cat, x.emb) <
                             std::tie(y.base, y.cat, y.emb);
                  });
        std::shuffle(batch.begin(), batch.end(), rng);
        for (Task& t : batch) queue.push_back(std::move(t));
        first_discovery = false;
        new_vertices.clear();
    };

    int realized = 0;
    out.terminal = "rounds";
    while (realized < rounds) {
        discover();
        if (queue.empty()) {
            out.terminal = "queue-empty";
            break;
        }
        const Task& t = queue.front();
        long growth = static_cast<long>(catalog[t.cat].vertex_count()) -
                      static_cast<long>(t.base.size());
        if (static_cast<long>(m.vertex_count()) + growth > size_budget) {
            out.terminal = "size-budget";
            break;
        }
        VertexMap emb;
        for (std::size_t i = 0; i < t.base.size(); ++i)
            emb[t.base[i]] = t.emb[i];
        VertexSet base_set(t.base.begin(), t.base.end());
        ExtensionResult res =
            realize_extension(m, base_set, catalog[t.cat], emb, f, names);
        m = res.extended;
        out.chain.push_back(m);
        RealizedTask rec;
        rec.step = static_cast<int>(out.chain.size()) - 1;
        rec.base = t.base;
        rec.catalog_index = t.cat;
        rec.embedding = emb;
        rec.fresh = res.fresh;
        out.realized.push_back(std::move(rec));
        new_vertices = res.fresh;
        queue.pop_front();
        ++realized;
    }
    return out;
}

bool ChainReport::ok() const {
    for (const auto& e : entries)
        if (!e.ok) return false;
    return true;
}

ChainReport verify_chain(const GenericApproximation& g) {
    ChainReport rep;
    auto add = [&](std::string name, int step, bool ok, std::string detail) {
        rep.entries.push_back({std::move(name), step, ok, std::move(detail)});
    };
    if (g.chain.empty()) {
        add("chain nonempty", -1, false, "no stages at all");
        return rep;
    }
    add("chain nonempty", -1, true, "");

    std::vector<Graph> catalog;
    bool catalog_ok = true;
    try {
        catalog = enumerate_C_F(g.f, g.pair_size_cap);
    } catch (const Error&) {
        catalog_ok = false;
    }

    std::vector<long> floors = delta_floors(
        g.f, static_cast<long>(g.chain.back().vertex_count()) + 1);

    for (std::size_t i = 0; i + 1 < g.chain.size(); ++i) {
        const Graph& a = g.chain[i];
        const Graph& b = g.chain[i + 1];
        bool contained = true;
        for (const auto& v : a.vertices())
            if (!b.has_vertex(v)) contained = false;
        bool induced = contained && b.induced(a.vertex_set()) == a;
        add("induced containment", static_cast<int>(i), induced,
            induced ? "" : "stage is not an induced subgraph of the next");

        bool step_closed = induced && is_d_closed(b, a.vertex_set());
        add("stage d-closed in next", static_cast<int>(i), step_closed,
            step_closed ? "" : "a later superset fails to raise predimension");
    }

    for (std::size_t i = 0; i < g.chain.size(); ++i) {
        const Graph& mi = g.chain[i];
        const int n = static_cast<int>(mi.vertex_count());
        if (n <= 18) {
            auto w = c_F_violation(mi, g.f);
            add("class membership (exhaustive)", static_cast<int>(i), !w,
                w ? "subset of " + std::to_string(w->subset.size()) +
                        " vertices has predimension " +
                        std::to_string(w->delta)
                  : "all subsets swept");
            continue;
        }
        // large stage: positive-predimension cut check, bounded sweep,
        // and re-certification of the recorded gluing step
        bool ok = in_C_gt0(mi);
        std::string why = ok ? "" : "nonpositive-predimension subset";
        BitAdj adj(mi);
        int sweep_max = 3;
        if (i + 1 == g.chain.size() && n <= 160) sweep_max = 4;
        for (int size = 2; ok && size <= sweep_max; ++size) {
            std::vector<int> pick(size);
            for (int t = 0; t < size; ++t) pick[t] = t;
            while (ok) {
                long edges = 0;
                for (int x = 0; x < size; ++x)
                    for (int y = x + 1; y < size; ++y)
                        if (adj.at(pick[x], pick[y])) ++edges;
                if (2L * size - edges < floors[size]) {
                    ok = false;
                    why = "sweep found a thin subset of size " +
                          std::to_string(size);
                }
                int t = size - 1;
                while (t >= 0 && pick[t] == n - size + t) --t;
                if (t < 0) break;
                ++pick[t];
                for (int u = t + 1; u < size; ++u) pick[u] = pick[u - 1] + 1;
            }
        }
        // replay the construction record for this stage
        bool replay = catalog_ok && i > 0 && g.realized.size() >= i &&
                      g.realized[i - 1].step == static_cast<int>(i);
        if (replay) {
            const RealizedTask& t = g.realized[i - 1];
            const Graph& prev = g.chain[i - 1];
            replay = t.catalog_index >= 0 &&
                     t.catalog_index < static_cast<int>(catalog.size());
            if (replay) {
                const Graph& b = catalog[t.catalog_index];
                VertexSet base_set(t.base.begin(), t.base.end());
                VertexSet image;
                for (const auto& [u, v] : t.embedding) image.insert(v);
                replay = !c_F_violation(b, g.f) &&
                         !d_closed_violation(b, image) &&
                         is_d_closed(prev, base_set);
                if (replay) {
                    // rebuild the stage from the record
                    Graph expect = prev;
                    VertexMap bmap;
                    for (const auto& [u, v] : t.embedding) bmap[v] = u;
                    std::size_t fi = 0;
                    for (const auto& v : b.vertices()) {
                        if (bmap.count(v)) continue;
                        if (fi >= t.fresh.size()) {
                            replay = false;
                            break;
                        }
                        expect.add_vertex(t.fresh[fi]);
                        bmap[v] = t.fresh[fi];
                        ++fi;
                    }
                    if (replay)
                        for (const Edge& e : b.edges()) {
                            const VertexId& x = bmap.at(e.a);
                            const VertexId& y = bmap.at(e.b);
                            if (!expect.has_edge(x, y)) expect.add_edge(x, y);
                        }
                    replay = replay && fi == t.fresh.size() && expect == mi;
                }
            }
            if (!replay && ok) why = "construction record does not replay";
            ok = ok && replay;
        } else if (ok) {
            ok = false;
            why = "no construction record for a stage too large to sweep";
        }
        add("class membership (certified)", static_cast<int>(i), ok,
            ok ? "cut check, sweep to size " + std::to_string(sweep_max) +
                     ", record replayed"
               : why);
    }
    return rep;
}

} // namespace predim

#include "predim/closure.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <queue>

#include "predim/subsets.hpp"

namespace predim {
namespace {

constexpr long kInf = LONG_MAX / 4;

struct Dinic {
    struct Arc {
        int to;
        long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> g;
    std::vector<int> level, iter;

    explicit Dinic(int n) : g(n) {}

    void add(int u, int v, long cap) {
        g[u].push_back({v, cap, static_cast<int>(g[v].size())});
        g[v].push_back({u, 0, static_cast<int>(g[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(g.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : g[u])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    long dfs(int u, int t, long f) {
        if (u == t) return f;
        for (int& i = iter[u]; i < static_cast<int>(g[u].size()); ++i) {
            Arc& a = g[u][i];
            if (a.cap > 0 && level[u] < level[a.to]) {
                long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    g[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long maxflow(int s, int t) {
        long flow = 0;
        while (bfs(s, t)) {
            iter.assign(g.size(), 0);
            while (long f = dfs(s, t, kInf)) flow += f;
        }
        return flow;
    }

    // Nodes with a residual path to t; their complement is the largest
    // source side over all minimum cuts.
    std::vector<char> reaches_sink(int t) const {
        std::vector<char> seen(g.size(), 0);
        std::queue<int> q;
        seen[t] = 1;
        q.push(t);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // an arc v -> u with residual capacity lets v reach u
            for (const Arc& back : g[u]) {
                int v = back.to;
                if (seen[v]) continue;
                if (g[v][back.rev].cap > 0) {
                    seen[v] = 1;
                    q.push(v);
                }
            }
        }
        return seen;
    }
};

long env_budget() {
    if (const char* s = std::getenv("PREDIM_SEARCH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw PreconditionError(
            "PREDIM_SEARCH_BUDGET must be a positive integer");
    }
    return 50000000L;
}

} // namespace

long default_search_budget() {
    return env_budget();
}

std::optional<DClosedViolation>
d_closed_violation(const Graph& ambient, const VertexSet& a,
                   std::size_t complement_cap) {
    MaskGraph m = MaskGraph::of(ambient);
    std::uint64_t base = m.mask_of(a);   // validates membership
    std::uint64_t comp = m.full() & ~base;
    std::size_t c = static_cast<std::size_t>(std::popcount(comp));
    if (c > complement_cap)
        throw BudgetError("exhaustive d-closedness capped at " +
                          std::to_string(complement_cap) +
                          " outside vertices, got " + std::to_string(c));
    long delta_base = m.delta(base);
    for (std::size_t size = 1; size <= c; ++size) {
        std::optional<DClosedViolation> hit;
        for_each_subset_of_size(comp, static_cast<int>(size), [&](std::uint64_t x) {
            long d = m.delta(base | x);
            if (d <= delta_base) {
                hit = DClosedViolation{m.name_list(base | x), d, delta_base};
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

SupersetGain min_superset_gain(const Graph& g, const VertexSet& s) {
    for (const auto& v : s)
        if (!g.has_vertex(v))
            throw PreconditionError("unknown vertex '" + v + "'");

    // Minimise 2|X| - (#outside edges covered by X) where an outside
    // edge (not inside s) is covered when all its endpoints beyond s
    // are in X.  Classic project-selection cut: source feeds each
    // outside edge with capacity 1, the edge feeds its outside
    // endpoints with infinite capacity, vertices pay 2 to the sink.
    std::vector<Edge> outside;
    for (const Edge& e : g.edges())
        if (!s.count(e.a) || !s.count(e.b)) outside.push_back(e);

    std::vector<VertexId> verts;   // vertices outside s touching them
    {
        VertexSet seen;
        for (const Edge& e : outside) {
            if (!s.count(e.a)) seen.insert(e.a);
            if (!s.count(e.b)) seen.insert(e.b);
        }
        verts.assign(seen.begin(), seen.end());
    }
    std::map<VertexId, int> vid;
    for (std::size_t i = 0; i < verts.size(); ++i)
        vid[verts[i]] = static_cast<int>(i);

    const int src = 0, snk = 1;
    const int edge_base = 2;
    const int vert_base = edge_base + static_cast<int>(outside.size());
    Dinic net(vert_base + static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < outside.size(); ++i) {
        int en = edge_base + static_cast<int>(i);
        net.add(src, en, 1);
        const Edge& e = outside[i];
        if (!s.count(e.a)) net.add(en, vert_base + vid[e.a], kInf);
        if (!s.count(e.b)) net.add(en, vert_base + vid[e.b], kInf);
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        net.add(vert_base + static_cast<int>(i), snk, 2);

    long cut = net.maxflow(src, snk);
    std::vector<char> to_sink = net.reaches_sink(snk);
    SupersetGain out;
    out.gain = cut - static_cast<long>(outside.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (!to_sink[vert_base + i]) out.extension.push_back(verts[i]);
    return out;
}

bool is_d_closed(const Graph& ambient, const VertexSet& a) {
    SupersetGain g = min_superset_gain(ambient, a);
    return g.gain == 0 && g.extension.empty();
}

ClosureCertificate d_closure(const Graph& ambient, const VertexSet& a,
                             std::optional<long> size_bound,
                             std::optional<long> node_budget) {
    // the operator is only monotone and idempotent over ambients whose
    // nonempty subsets all have positive predimension
    {
        SupersetGain whole = min_superset_gain(ambient, {});
        if (whole.gain < 0 || !whole.extension.empty())
            throw PreconditionError(
                "ambient has a nonempty subset of nonpositive "
                "predimension; closure undefined");
    }
    MaskGraph m = MaskGraph::of(ambient);
    std::uint64_t current = m.mask_of(a);
    long budget = node_budget.value_or(default_search_budget());
    long visited = 0;

    ClosureCertificate cert;
    cert.seed = m.name_list(current);
    cert.checked_bound =
        std::min(size_bound.value_or(static_cast<long>(m.n)),
                 static_cast<long>(m.n));

    while (true) {
        std::uint64_t comp = m.full() & ~current;
        long delta_cur = m.delta(current);
        long limit = cert.checked_bound;
        // best strict superset: least delta, then fewest vertices,
        // then lowest mask
        bool found = false;
        long best_delta = 0;
        std::uint64_t best = 0;
        int comp_size = std::popcount(comp);
        int cur_size = std::popcount(current);
        for (int add = 1; add <= comp_size; ++add) {
            if (cur_size + add > limit) break;
            for_each_subset_of_size(comp, add, [&](std::uint64_t x) {
                if (++visited > budget)
                    throw BudgetError("closure search budget exhausted");
                long d = m.delta(current | x);
                if (!found || d < best_delta) {
                    found = true;
                    best_delta = d;
                    best = x;
                }
                return true;
            });
        }
        if (!found || best_delta > delta_cur) break;
        cert.steps.push_back({m.name_list(best), delta_cur,
                              best_delta});
        current |= best;
    }
    cert.closure = m.name_list(current);
    return cert;
}

long submodularity_defect(const Graph& g, const VertexSet& b,
                          const VertexSet& c) {
    VertexSet both, either = b;
    for (const auto& v : c) {
        if (b.count(v)) both.insert(v);
        either.insert(v);
    }
    long d = predimension(g.induced(b)) + predimension(g.induced(c)) -
             predimension(g.induced(both)) - predimension(g.induced(either));
    return d;
}

} // namespace predim

#include "predim/isomorphism.hpp"

#include <algorithm>
#include <sstream>

namespace predim {
namespace {

// Iterated degree refinement.  Starts from degrees and repeatedly
// splits classes by the multiset of neighbour classes; the result is a
// dense colouring that every automorphism must preserve.
std::vector<int> refine_colors(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i)
        color[i] = static_cast<int>(g.adjacency(i).size());
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s;
            s.push_back(color[i]);
            for (int j : g.adjacency(i)) s.push_back(color[j]);
            std::sort(s.begin() + 1, s.end());
            sigs[i] = {std::move(s), i};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        int next = -1;
        std::vector<int> fresh(n);
        for (int r = 0; r < n; ++r) {
            if (r == 0 || sorted[r].first != sorted[r - 1].first) ++next;
            fresh[sorted[r].second] = next;
        }
        color = std::move(fresh);
        if (next + 1 == classes) break;
        classes = next + 1;
    }
    return color;
}

struct EmbeddingSearch {
    const Graph& pattern;
    const Graph& host;
    bool stop_at_first;
    std::vector<int> image;       // pattern index -> host index
    std::vector<char> used;       // host index
    std::vector<VertexMap> found;

    bool consistent(int pi, int hi) const {
        for (int pj = 0; pj < pi; ++pj) {
            bool pe = pattern.adjacent(pj, pi);
            bool he = host.adjacent(image[pj], hi);
            if (pe != he) return false;
        }
        return true;
    }

    bool run(int pi) {
        const int pn = static_cast<int>(pattern.vertex_count());
        const int hn = static_cast<int>(host.vertex_count());
        if (pi == pn) {
            VertexMap m;
            for (int i = 0; i < pn; ++i)
                m[pattern.name_of(i)] = host.name_of(image[i]);
            found.push_back(std::move(m));
            return stop_at_first;
        }
        for (int hi = 0; hi < hn; ++hi) {
            if (used[hi]) continue;
            if (host.adjacency(hi).size() < pattern.adjacency(pi).size())
                continue;
            if (!consistent(pi, hi)) continue;
            used[hi] = 1;
            image[pi] = hi;
            if (run(pi + 1)) return true;
            used[hi] = 0;
        }
        return false;
    }
};

// Search for the lexicographically least adjacency bitstring over all
// permutations.  Pair order is colex -- (0,1), (0,2), (1,2), (0,3), ...
// -- so placing one more vertex extends the known prefix contiguously.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<char> best;        // best complete bitstring so far
    bool have_best = false;
    std::vector<int> perm;         // position -> original index
    std::vector<char> placed;
    std::vector<char> bits;        // prefix for current partial perm
    bool abort_on_improvement = false;
    bool improved = false;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), n(static_cast<int>(graph.vertex_count())),
          perm(n), placed(n, 0) {}

    void dfs(int depth, bool tight) {
        if (improved) return;
        if (depth == n) {
            if (!have_best || !tight) {
                best = bits;
                have_best = true;
                if (abort_on_improvement && !tight) improved = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t mark = bits.size();
            bool sub_tight = tight;
            bool pruned = false;
            for (int j = 0; j < depth && !pruned; ++j) {
                char bit = g.adjacent(perm[j], v) ? 1 : 0;
                if (sub_tight && have_best) {
                    char ref = best[bits.size()];
                    if (bit > ref) { pruned = true; break; }
                    if (bit < ref) sub_tight = false;
                }
                bits.push_back(bit);
            }
            if (!pruned) {
                perm[depth] = v;
                placed[v] = 1;
                dfs(depth + 1, sub_tight);
                placed[v] = 0;
            }
            bits.resize(mark);
            if (improved) return;
        }
    }
};

} // namespace

std::vector<VertexMap> automorphisms(const Graph& g, std::size_t vertex_cap) {
    const int n = static_cast<int>(g.vertex_count());
    if (static_cast<std::size_t>(n) > vertex_cap)
        throw BudgetError("automorphism listing capped at " +
                          std::to_string(vertex_cap) + " vertices");
    std::vector<int> color = refine_colors(g);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::vector<VertexMap> out;

    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            VertexMap m;
            for (int j = 0; j < n; ++j) m[g.name_of(j)] = g.name_of(image[j]);
            out.push_back(std::move(m));
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (g.adjacent(j, i) != g.adjacent(image[j], w)) ok = false;
            if (!ok) continue;
            image[i] = w;
            used[w] = 1;
            self(self, i + 1);
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<VertexMap> find_induced_embeddings(const Graph& pattern,
                                               const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return {};
    EmbeddingSearch s{pattern, host, false,
                      std::vector<int>(pattern.vertex_count()),
                      std::vector<char>(host.vertex_count(), 0), {}};
    s.run(0);
    return std::move(s.found);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return false;
    const int n = static_cast<int>(a.vertex_count());
    std::vector<std::size_t> da, db;
    for (int i = 0; i < n; ++i) {
        da.push_back(a.adjacency(i).size());
        db.push_back(b.adjacency(i).size());
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    EmbeddingSearch s{a, b, true, std::vector<int>(a.vertex_count()),
                      std::vector<char>(b.vertex_count(), 0), {}};
    return s.run(0);
}

std::string canonical_form(const Graph& g, std::size_t vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw BudgetError("canonical form capped at " +
                          std::to_string(vertex_cap) + " vertices");
    CanonicalSearch s(g);
    if (s.n == 0) return "0:";
    // Start from the identity labelling and repeat the pruned search
    // until no permutation improves on the incumbent.  Restarting after
    // each improvement keeps the prefix comparisons valid.
    s.best.clear();
    for (int j = 1; j < s.n; ++j)
        for (int i = 0; i < j; ++i)
            s.best.push_back(g.adjacent(i, j) ? 1 : 0);
    s.have_best = true;
    s.abort_on_improvement = true;
    do {
        s.improved = false;
        s.dfs(0, true);
    } while (s.improved);
    std::ostringstream os;
    os << s.n << ":";
    for (char b : s.best) os << (b ? '1' : '0');
    return os.str();
}

bool is_canonical_labelling(const Graph& g) {
    CanonicalSearch s(g);
    if (s.n == 0) return true;
    // seed "best" with the identity labelling, then look for anything
    // strictly smaller
    s.best.clear();
    for (int j = 1; j < s.n; ++j)
        for (int i = 0; i < j; ++i)
            s.best.push_back(g.adjacent(i, j) ? 1 : 0);
    s.have_best = true;
    s.abort_on_improvement = true;
    s.dfs(0, true);
    return !s.improved;
}

} // namespace predim

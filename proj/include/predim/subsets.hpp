#ifndef PREDIM_SUBSETS_HPP
#define PREDIM_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "predim/graph.hpp"

namespace predim {

/// Bitmask adjacency view of a graph with at most 64 vertices.
/// Bit i stands for the i-th vertex in label order, so subset masks
/// enumerate in label-lexicographic order by construction.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;   // adj[i] = neighbour mask of vertex i
    const Graph* source = nullptr;

    static MaskGraph of(const Graph& g);

    std::uint64_t full() const {
        return n == 64 ? ~0ULL : (1ULL << n) - 1;
    }

    long edges_within(std::uint64_t s) const {
        long twice = 0;
        std::uint64_t rest = s;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            twice += std::popcount(adj[i] & s);
        }
        return twice / 2;
    }

    long delta(std::uint64_t s) const {
        return 2L * std::popcount(s) - edges_within(s);
    }

    VertexSet names(std::uint64_t s) const;
    std::vector<VertexId> name_list(std::uint64_t s) const;
    std::uint64_t mask_of(const VertexSet& s) const;
};

/// Calls fn for every k-subset mask of `universe`, in the lexicographic
/// order of the corresponding index tuples.  fn returns false to abort;
/// the function then returns false as well.
template <typename Fn>
bool for_each_subset_of_size(std::uint64_t universe, int k, Fn&& fn) {
    std::vector<int> bits;
    for (std::uint64_t rest = universe; rest; rest &= rest - 1)
        bits.push_back(std::countr_zero(rest));
    const int m = static_cast<int>(bits.size());
    if (k > m) return true;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : pick) mask |= 1ULL << bits[i];
        if (!fn(mask)) return false;
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) return true;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace predim

#endif

#include "predim/classes.hpp"

#include "predim/closure.hpp"
#include "predim/subsets.hpp"

namespace predim {

bool in_C_gt0(const Graph& g) {
    SupersetGain whole = min_superset_gain(g, {});
    return whole.gain == 0 && whole.extension.empty();
}

std::optional<SubsetWitness> c_gt0_violation(const Graph& g,
                                             std::size_t vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw BudgetError("exhaustive class membership capped at " +
                          std::to_string(vertex_cap) + " vertices");
    MaskGraph m = MaskGraph::of(g);
    for (int size = 1; size <= m.n; ++size) {
        std::optional<SubsetWitness> hit;
        for_each_subset_of_size(m.full(), size, [&](std::uint64_t s) {
            long d = m.delta(s);
            if (d <= 0) {
                hit = SubsetWitness{m.name_list(s), d, 1};
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

std::vector<long> delta_floors(const ControlFunction& f, long n) {
    std::vector<long> floors;
    floors.reserve(n + 1);
    for (long s = 0; s <= n; ++s)
        floors.push_back(min_delta_for_size(f, s));
    return floors;
}

std::optional<SubsetWitness> c_F_violation(const Graph& g,
                                           const ControlFunction& f,
                                           std::size_t vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw BudgetError("exhaustive class membership capped at " +
                          std::to_string(vertex_cap) + " vertices");
    MaskGraph m = MaskGraph::of(g);
    std::vector<long> floors = delta_floors(f, m.n);
    for (int size = 1; size <= m.n; ++size) {
        std::optional<SubsetWitness> hit;
        for_each_subset_of_size(m.full(), size, [&](std::uint64_t s) {
            long d = m.delta(s);
            if (d < floors[size]) {
                hit = SubsetWitness{m.name_list(s), d, floors[size]};
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

bool in_C_F(const Graph& g, const ControlFunction& f,
            std::size_t vertex_cap) {
    return !c_F_violation(g, f, vertex_cap).has_value();
}

long closure_size_bound(const ControlFunction& f, long base_size) {
    long y = 2 * base_size;
    long least = inverse_bound(f, y);   // least m with F(m) >= y
    if (compare_value_F(Rational(y), Rational(least), f) == Order::Equal)
        return least;
    return least > 0 ? least - 1 : 0;
}

} // namespace predim

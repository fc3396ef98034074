#include <bit>
#include <utility>

#include "cutpoly/workbench.hpp"

namespace cutpoly {

std::int64_t cut_weight(const Graph& g, const Cut& s) {
    std::int64_t total = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(g.edge(e).u) != s.contains(g.edge(e).v))
            total += g.weight(e);
    return total;
}

MaxCutResult maxcut_bruteforce(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > 63)
        throw Error(ErrorCode::LimitExceeded,
                    "n = " + std::to_string(n) + " exceeds max-cut cap " + std::to_string(cap));

    std::vector<std::vector<std::pair<int, std::int64_t>>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        incident[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, g.weight(e));
        incident[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, g.weight(e));
    }

    // Gray-code walk over vertices 1..n-1: each step moves one vertex across.
    VertexSet members = 0;
    std::int64_t weight = 0;
    VertexSet best_members = 0;
    std::int64_t best_weight = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k) + 1;
        const bool inside = (members >> v) & 1U;
        for (const auto& [u, w] : incident[static_cast<std::size_t>(v)]) {
            const bool same_side = (((members >> u) & 1U) != 0) == inside;
            weight += same_side ? w : -w;
        }
        members ^= VertexSet{1} << v;
        if (weight > best_weight || (weight == best_weight && members < best_members)) {
            best_weight = weight;
            best_members = members;
        }
    }
    return {Cut::from_members(best_members, n), best_weight};
}

} // namespace cutpoly

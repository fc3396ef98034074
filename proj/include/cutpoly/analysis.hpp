#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cutpoly/skeleton.hpp"

namespace cutpoly {

/// Per-node colour of a skeleton, each a bit-string of `width` bits.
struct Coloring {
    std::vector<std::uint32_t> colors;
    int width = 0;

    std::size_t distinct_count() const;
};

struct ColoringCheck {
    bool proper = true;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> violation;
};

struct CliqueCheck {
    bool valid = true;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> missing_edge;
};

struct CliqueResult {
    std::size_t size = 0;
    /// False when the expansion budget ran out; `size` is then a lower bound.
    bool exact = true;
    std::vector<std::uint32_t> witness;
    std::uint64_t expansions = 0;
};

struct Metrics {
    int diameter = 0;
    std::size_t clique_number = 0;
    bool clique_exact = true;
    std::vector<std::uint32_t> witness_clique;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

inline constexpr std::uint64_t default_clique_budget = 10'000'000;

/// Exact diameter by BFS from every node. Throws DisconnectedSkeleton.
int diameter(const SkeletonGraph& s, unsigned workers = 1);

/// Branch and bound over bitsets: degeneracy initial order, greedy-colouring
/// bound. Budget counts search-tree node expansions.
CliqueResult clique_number(const SkeletonGraph& s, std::uint64_t budget = default_clique_budget);

ColoringCheck verify_coloring(const SkeletonGraph& s, const Coloring& col);
CliqueCheck verify_clique(const SkeletonGraph& s, std::span<const std::uint32_t> members);

Metrics compute_metrics(const SkeletonGraph& s, std::uint64_t clique_budget = default_clique_budget,
                        unsigned workers = 1);

} // namespace cutpoly

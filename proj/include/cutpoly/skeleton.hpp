#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cutpoly/graph.hpp"

namespace cutpoly {

/// 1-skeleton of CUT(G): nodes are the 2^(n-1) canonical cuts in bitmask
/// order (node i is Cut::from_index(i)), edges join adjacent polytope vertices.
struct SkeletonGraph {
    int n = 0;
    std::vector<Cut> cuts;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t node_count() const noexcept { return cuts.size(); }
    std::size_t edge_count() const;
    bool has_edge(std::uint32_t i, std::uint32_t j) const;
};

enum class Verification { Verified, Unverified, Failed };

/// Objective vector c over the edges for which exactly two canonical cuts,
/// the certified pair, maximise c . v(S).
struct AdjacencyCertificate {
    std::vector<int> c;
    std::pair<Cut, Cut> maximizers;
    /// Verified when an exhaustive scan confirmed the two maximisers;
    /// Unverified above the verification cap.
    Verification status = Verification::Unverified;
    std::int64_t optimum = 0;
};

/// A cut L with  empty != delta(L) subset-of delta(X^Y); the segments
/// v(X)-v(Y) and v(X^L)-v(Y^L) share their midpoint.
struct NonAdjacencyWitness {
    Cut l;
    CutVector vx;
    CutVector vy;
    CutVector vxl;
    CutVector vyl;

    /// Componentwise v(X^L) + v(Y^L) == v(X) + v(Y).
    bool midpoint_holds() const;
};

struct SkeletonOptions {
    int cap = 16;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 1;
};

inline constexpr int default_certificate_cap = 12;

bool is_adjacent(const Graph& g, const Cut& x, const Cut& y);
AdjacencyCertificate certify_adjacent(const Graph& g, const Cut& x, const Cut& y,
                                      int verify_cap = default_certificate_cap);
NonAdjacencyWitness witness_nonadjacent(const Graph& g, const Cut& x, const Cut& y);

/// Re-runs the maximiser scan for a certificate.
Verification verify_certificate(const Graph& g, const AdjacencyCertificate& cert);

SkeletonGraph build_skeleton(const Graph& g, const SkeletonOptions& options = {});

struct InheritanceReport {
    std::uint64_t pairs_checked = 0;
    std::uint64_t adjacent_in_sub = 0;
    bool exhaustive = false;
    std::optional<std::pair<Cut, Cut>> violation;
};

/// Checks that adjacency in CUT(sub) implies adjacency in CUT(g). With
/// samples == 0 (or at least the number of pairs) every pair is checked.
InheritanceReport check_inheritance(const Graph& g, const Graph& sub, std::uint64_t samples, std::uint64_t seed);

} // namespace cutpoly

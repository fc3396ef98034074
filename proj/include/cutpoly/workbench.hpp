#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutpoly/rng.hpp"
#include "cutpoly/serialize.hpp"

namespace cutpoly {

enum class GraphFamily {
    Tree,
    Cactus,
    AlmostTree2,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Random,
};

std::string_view to_string(GraphFamily family);
std::optional<GraphFamily> parse_family(std::string_view name);

struct GeneratorSpec {
    GraphFamily family = GraphFamily::Tree;
    int n = 0;
    /// Part sizes for the complete (multi)partite families.
    std::vector<int> parts;
    std::uint64_t seed = 0;
    /// Extra-edge probability for GraphFamily::Random, in percent.
    int density_percent = 30;
};

/// Pure function of the spec. Throws BadSpec.
Graph generate(const GeneratorSpec& spec);

Graph random_tree(int n, Rng& rng);
/// A random spanning tree of g plus each remaining edge with probability 1/2.
Graph random_spanning_subgraph(const Graph& g, Rng& rng);
Graph with_random_weights(const Graph& g, std::int64_t lo, std::int64_t hi, Rng& rng);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

struct MaxCutResult {
    Cut cut;
    std::int64_t weight = 0;
};

inline constexpr int default_maxcut_cap = 24;

std::int64_t cut_weight(const Graph& g, const Cut& s);
/// Exhaustive scan of all 2^(n-1) canonical cuts; ties go to the smallest bitmask.
MaxCutResult maxcut_bruteforce(const Graph& g, int cap = default_maxcut_cap);

struct ReportOptions {
    int cap = 16;
    /// When false, skip the skeleton and report classification and bounds only.
    bool exact = true;
    unsigned workers = 1;
    std::uint64_t clique_budget = default_clique_budget;
    int certificate_cap = default_certificate_cap;
};

struct Verdict {
    std::string check;
    std::string source;
    bool pass = false;
    std::string detail;
};

struct Report {
    json document;
    std::vector<Verdict> verdicts;

    bool passed() const;
};

inline constexpr int report_schema_version = 1;

Report report(const Graph& g, const ReportOptions& options = {});

} // namespace cutpoly

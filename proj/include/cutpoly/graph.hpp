#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutpoly/error.hpp"

namespace cutpoly {

/// Vertex subsets are bitmasks; bit v is vertex v.
using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph. Edges are kept sorted by (u, v) with
/// u < v; that order indexes every CutVector built over the graph.
class Graph {
public:
    /// Validates and sorts. Throws SelfLoop, DuplicateEdge, Malformed
    /// (vertex out of range, bad size) or Disconnected.
    static Graph from_edges(int n, std::vector<Edge> edges, std::vector<std::int64_t> weights = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::int64_t weight(int e) const { return weights_.at(static_cast<std::size_t>(e)); }

    VertexSet neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::optional<int> edge_index(int u, int v) const;
    VertexSet vertices() const noexcept { return full_set(n_); }
    bool unit_weights() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> weights_;
    std::vector<VertexSet> adjacency_;
};

/// Canonical representative of the complement pair {S, V\S}: the side that
/// does not contain vertex 0.
class Cut {
public:
    Cut() = default;

    /// Any subset of 0..n-1; complemented when it contains vertex 0.
    static Cut from_members(VertexSet members, int n);
    static Cut from_vertices(std::span<const int> vertices, int n);
    /// Inverse of index(): members = index << 1.
    static Cut from_index(std::uint64_t index, int n);

    VertexSet members() const noexcept { return members_; }
    int vertex_count() const noexcept { return n_; }
    /// Position in bitmask enumeration order, 0 .. 2^(n-1)-1.
    std::uint64_t index() const noexcept { return members_ >> 1; }
    bool contains(int v) const noexcept { return (members_ >> v) & 1U; }
    bool empty() const noexcept { return members_ == 0; }
    std::vector<int> vertex_list() const;

    friend auto operator<=>(const Cut&, const Cut&) = default;

private:
    Cut(VertexSet members, int n) : members_(members), n_(n) {}

    VertexSet members_ = 0;
    int n_ = 0;
};

/// 0/1 incidence vector of a cut-set over the graph's edge order.
class CutVector {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    CutVector() = default;
    explicit CutVector(std::size_t size) : bits_(size) {}
    explicit CutVector(Bits bits) : bits_(std::move(bits)) {}

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t e) const { return bits_.test(e); }
    void set(std::size_t e, bool value = true) { bits_.set(e, value); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool none() const noexcept { return bits_.none(); }
    const Bits& bits() const noexcept { return bits_; }

    std::size_t hamming_distance(const CutVector& other) const { return (bits_ ^ other.bits_).count(); }
    bool is_proper_subset_of(const CutVector& other) const { return bits_.is_proper_subset_of(other.bits_); }

    /// "(1,0,1)"
    std::string to_string() const;
    std::vector<int> to_vector() const;

    friend CutVector operator^(const CutVector& a, const CutVector& b) { return CutVector(a.bits_ ^ b.bits_); }
    friend bool operator==(const CutVector&, const CutVector&) = default;

private:
    Bits bits_;
};

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Inverse of parse_graph; weights are written only when some weight differs from 1.
std::string format_graph(const Graph& g);

CutVector cut_set(const Graph& g, const Cut& s);
Cut sym_diff(const Cut& x, const Cut& y);

/// Connected components of g after deleting every edge whose bit is set in
/// `removed`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const CutVector& removed);

/// Components of (V, E \ delta(side)) without materializing the cut vector;
/// same order as components().
std::vector<VertexSet> split_components(const Graph& g, VertexSet side);
int split_component_count(const Graph& g, VertexSet side);

enum class ClassTag {
    Tree,
    Cactus,
    AlmostTree2,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Other,
};

std::string_view to_string(ClassTag tag);

struct GraphClass {
    bool tree = false;
    bool cactus = false;
    bool cycle = false;
    bool complete = false;
    /// Largest |E_block| - (|V_block| - 1) over the biconnected components.
    int max_block_excess = 0;
    /// Set when the complement is a disjoint union of at least two cliques.
    /// Parts are ordered by (size desc, smallest vertex asc).
    std::vector<VertexSet> parts;
    ClassTag most_specific = ClassTag::Other;

    bool almost_tree(int k) const noexcept { return max_block_excess <= k; }
    bool complete_multipartite() const noexcept { return parts.size() >= 2; }
    bool complete_bipartite() const noexcept { return parts.size() == 2; }
    std::vector<int> part_sizes() const;
    int smallest_part() const;
    /// Human-readable tags, e.g. "tree", "almost-tree(2)", "complete-bipartite(2,3)".
    std::vector<std::string> tags() const;
};

GraphClass classify(const Graph& g);

/// Vertex sets of the biconnected components.
struct Block {
    VertexSet vertices = 0;
    int edge_count = 0;
};
std::vector<Block> biconnected_components(const Graph& g);

} // namespace cutpoly

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutpoly/analysis.hpp"

namespace cutpoly {

/// k x m 0/1 matrix; row r is stored as an m-bit integer with column 0 as
/// the most significant bit.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows), 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::uint32_t row(int r) const { return data_.at(static_cast<std::size_t>(r)); }
    void set_row(int r, std::uint32_t value) { data_.at(static_cast<std::size_t>(r)) = value; }
    bool at(int r, int c) const { return (row(r) >> (cols_ - 1 - c)) & 1U; }
    std::vector<int> row_bits(int r) const;

private:
    int rows_;
    int cols_;
    std::vector<std::uint32_t> data_;
};

/// Row i (1-based) is the binary expansion of i. Width is ceil(log2(k+1)),
/// which equals ceil(log2 k) except at powers of two, where the extra bit
/// keeps row k non-zero.
BinaryMatrix brm(int k);

/// Row i is (binary expansion of i-1 on ceil(log2 k) bits, parity bit); the
/// parity bit makes every row's popcount odd.
BinaryMatrix brm_star(int k);

/// First set of at most `max_rows` distinct rows whose GF(2) sum is zero.
std::optional<std::vector<int>> find_zero_row_sum(const BinaryMatrix& m, int max_rows);

/// colour(S) = v(S) * M over GF(2); M needs one row per graph edge.
Coloring color_by_matrix(const Graph& g, const SkeletonGraph& s, const BinaryMatrix& m);

/// Cactus colouring with rows 1..|E| of BRM(|E|+1). Throws WrongClass.
Coloring brm_coloring(const Graph& g, const SkeletonGraph& s);
/// Almost-tree(2) colouring with BRM*(|E|). Throws WrongClass.
Coloring brm_star_coloring(const Graph& g, const SkeletonGraph& s);

enum class CliqueKind { HammingBall, Symmetric };

struct CliqueFamily {
    std::vector<Cut> cuts;
    CliqueKind kind = CliqueKind::HammingBall;

    std::vector<std::uint32_t> indices() const;
};

/// The n nested prefixes {v1}, {v1,v2}, ..., V of a cycle walked from vertex
/// 0 towards its smaller neighbour. Throws WrongClass.
CliqueFamily hamming_ball_clique(const Graph& g);

/// Symmetric cuts over the two largest parts of a complete multipartite
/// graph: one cut per index set S subset-of {2..t}, t the second-largest part
/// size. Throws WrongClass or PartTooSmall.
CliqueFamily symmetric_cut_clique(const Graph& g);

struct Bound {
    std::uint64_t value = 0;
    /// Which result produced it, e.g. "cactus-diameter".
    std::string source;
};

struct BoundsRow {
    ClassTag cls = ClassTag::Other;
    Bound diameter_lower;
    Bound diameter_upper;
    Bound clique_lower;
    Bound clique_upper;

    bool brackets(std::uint64_t diameter, std::uint64_t clique) const;
};

/// Intersection of every class bound that applies to g; `cls` is the most
/// specific class.
BoundsRow bounds_for(const Graph& g);
BoundsRow bounds_for(const Graph& g, const GraphClass& cls);

/// ceil(log2 x) for x >= 1.
int ceil_log2(std::uint64_t x);

} // namespace cutpoly

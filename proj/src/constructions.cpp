#include "cutpoly/constructions.hpp"

#include <algorithm>
#include <bit>

namespace cutpoly {

int ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : 64 - std::countl_zero(x - 1);
}

std::vector<int> BinaryMatrix::row_bits(int r) const {
    std::vector<int> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        out[static_cast<std::size_t>(c)] = at(r, c) ? 1 : 0;
    return out;
}

BinaryMatrix brm(int k) {
    if (k < 1)
        throw Error(ErrorCode::BadSpec, "BRM(k) needs k >= 1");
    BinaryMatrix m(k, ceil_log2(static_cast<std::uint64_t>(k) + 1));
    for (int i = 1; i <= k; ++i)
        m.set_row(i - 1, static_cast<std::uint32_t>(i));
    return m;
}

BinaryMatrix brm_star(int k) {
    if (k < 1)
        throw Error(ErrorCode::BadSpec, "BRM*(k) needs k >= 1");
    BinaryMatrix m(k, ceil_log2(static_cast<std::uint64_t>(k)) + 1);
    for (int i = 1; i <= k; ++i) {
        const auto b = static_cast<std::uint32_t>(i - 1);
        const std::uint32_t parity = std::popcount(b) % 2 == 0 ? 1U : 0U;
        m.set_row(i - 1, (b << 1) | parity);
    }
    return m;
}

std::optional<std::vector<int>> find_zero_row_sum(const BinaryMatrix& m, int max_rows) {
    std::vector<int> picked;
    // Depth-first over increasing row indices, carrying the running sum.
    auto search = [&](auto&& self, int from, std::uint32_t sum) -> bool {
        if (!picked.empty() && sum == 0)
            return true;
        if (static_cast<int>(picked.size()) == max_rows)
            return false;
        for (int r = from; r < m.rows(); ++r) {
            picked.push_back(r);
            if (self(self, r + 1, sum ^ m.row(r)))
                return true;
            picked.pop_back();
        }
        return false;
    };
    if (search(search, 0, 0))
        return picked;
    return std::nullopt;
}

Coloring color_by_matrix(const Graph& g, const SkeletonGraph& s, const BinaryMatrix& m) {
    if (m.rows() != g.edge_count())
        throw Error(ErrorCode::SizeMismatch, "matrix needs one row per edge");
    Coloring col;
    col.width = m.cols();
    col.colors.reserve(s.node_count());
    for (const Cut& cut : s.cuts) {
        const VertexSet members = cut.members();
        std::uint32_t color = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.edge(e);
            if (((members >> edge.u) ^ (members >> edge.v)) & 1U)
                color ^= m.row(e);
        }
        col.colors.push_back(color);
    }
    return col;
}

namespace {

Coloring zero_coloring(const SkeletonGraph& s) {
    Coloring col;
    col.colors.assign(s.node_count(), 0);
    return col;
}

void require_skeleton_of(const Graph& g, const SkeletonGraph& s) {
    if (s.n != g.vertex_count())
        throw Error(ErrorCode::SizeMismatch, "skeleton was built for a different vertex count");
}

} // namespace

Coloring brm_coloring(const Graph& g, const SkeletonGraph& s) {
    require_skeleton_of(g, s);
    if (!classify(g).cactus)
        throw Error(ErrorCode::WrongClass, "BRM colouring needs a cactus");
    if (g.edge_count() == 0)
        return zero_coloring(s);
    // Rows 1..|E| of BRM(|E|+1) are exactly BRM(|E|) at width ceil(log2(|E|+1)).
    return color_by_matrix(g, s, brm(g.edge_count()));
}

Coloring brm_star_coloring(const Graph& g, const SkeletonGraph& s) {
    require_skeleton_of(g, s);
    if (!classify(g).almost_tree(2))
        throw Error(ErrorCode::WrongClass, "BRM* colouring needs an almost tree (2)");
    if (g.edge_count() == 0)
        return zero_coloring(s);
    return color_by_matrix(g, s, brm_star(g.edge_count()));
}

std::vector<std::uint32_t> CliqueFamily::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(cuts.size());
    for (const Cut& c : cuts)
        out.push_back(static_cast<std::uint32_t>(c.index()));
    return out;
}

CliqueFamily hamming_ball_clique(const Graph& g) {
    if (!classify(g).cycle)
        throw Error(ErrorCode::WrongClass, "Hamming-ball clique needs a cycle");
    const int n = g.vertex_count();
    CliqueFamily family;
    family.kind = CliqueKind::HammingBall;

    int previous = -1;
    int current = 0;
    VertexSet prefix = 0;
    for (int step = 0; step < n; ++step) {
        prefix |= VertexSet{1} << current;
        family.cuts.push_back(Cut::from_members(prefix, n));
        VertexSet next = g.neighbors(current);
        if (previous >= 0)
            next &= ~(VertexSet{1} << previous);
        previous = current;
        current = std::countr_zero(next);
    }
    return family;
}

CliqueFamily symmetric_cut_clique(const Graph& g) {
    const GraphClass cls = classify(g);
    if (!cls.complete_multipartite())
        throw Error(ErrorCode::WrongClass, "symmetric cuts need a complete multipartite graph");
    if (cls.smallest_part() < 2)
        throw Error(ErrorCode::PartTooSmall, "every part must have at least two vertices");

    auto members_of = [](VertexSet part) {
        std::vector<int> out;
        for (; part; part &= part - 1)
            out.push_back(std::countr_zero(part));
        return out;
    };
    const auto first = members_of(cls.parts[0]);
    const auto second = members_of(cls.parts[1]);
    const auto t = static_cast<int>(second.size());
    if (t > 32)
        throw Error(ErrorCode::LimitExceeded, "symmetric-cut family too large");

    CliqueFamily family;
    family.kind = CliqueKind::Symmetric;
    // Index 1 is never selected, which keeps one set from each {S, complement} pair.
    const std::uint64_t count = std::uint64_t{1} << (t - 1);
    for (std::uint64_t s = 0; s < count; ++s) {
        VertexSet members = 0;
        for (int i = 1; i < t; ++i)
            if ((s >> (i - 1)) & 1U)
                members |= (VertexSet{1} << first[static_cast<std::size_t>(i)]) |
                           (VertexSet{1} << second[static_cast<std::size_t>(i)]);
        family.cuts.push_back(Cut::from_members(members, g.vertex_count()));
    }
    return family;
}

bool BoundsRow::brackets(std::uint64_t diameter, std::uint64_t clique) const {
    return diameter_lower.value <= diameter && diameter <= diameter_upper.value && clique_lower.value <= clique &&
           clique <= clique_upper.value;
}

BoundsRow bounds_for(const Graph& g) { return bounds_for(g, classify(g)); }

BoundsRow bounds_for(const Graph& g, const GraphClass& cls) {
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    const auto m = static_cast<std::uint64_t>(g.edge_count());
    BoundsRow row;
    row.cls = cls.most_specific;

    if (n == 1) {
        row.diameter_lower = row.diameter_upper = {0, "single-vertex"};
        row.clique_lower = row.clique_upper = {1, "single-vertex"};
        return row;
    }

    row.diameter_lower = {1, "connected-graph"};
    row.diameter_upper = {n - 1, "connected-graph"};
    row.clique_lower = {2, "connected-graph"};
    const std::uint64_t cut_count = n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (n - 1);
    row.clique_upper = {cut_count, "cut-count"};

    // Later rules are more specific and win ties.
    auto lower = [](Bound& b, std::uint64_t v, const char* src) {
        if (v >= b.value)
            b = {v, src};
    };
    auto upper = [](Bound& b, std::uint64_t v, const char* src) {
        if (v <= b.value)
            b = {v, src};
    };
    auto exactly = [&](Bound& lo, Bound& hi, std::uint64_t v, const char* src) {
        lower(lo, v, src);
        upper(hi, v, src);
    };

    if (cls.almost_tree(2)) {
        lower(row.diameter_lower, n / 3, "almost-tree2-diameter");
        upper(row.clique_upper, std::uint64_t{1} << (ceil_log2(m) + 1), "almost-tree2-brm-star-coloring");
    }
    if (cls.cactus) {
        lower(row.diameter_lower, n / 2, "cactus-diameter");
        upper(row.clique_upper, std::uint64_t{1} << ceil_log2(m + 1), "cactus-brm-coloring");
    }
    if (cls.tree) {
        exactly(row.diameter_lower, row.diameter_upper, n - 1, "tree-hypercube");
        exactly(row.clique_lower, row.clique_upper, 2, "tree-hypercube");
    }
    if (cls.cycle) {
        exactly(row.diameter_lower, row.diameter_upper, n / 2, "cycle-diameter");
        lower(row.clique_lower, n, "cycle-hamming-ball");
    }
    if (cls.complete_multipartite() && cls.smallest_part() >= 2) {
        const bool bipartite = cls.complete_bipartite();
        exactly(row.diameter_lower, row.diameter_upper, 2,
                bipartite ? "bipartite-diameter" : "multipartite-diameter");
        const auto second = static_cast<std::uint64_t>(std::popcount(cls.parts[1]));
        lower(row.clique_lower, std::uint64_t{1} << (second - 1),
              bipartite ? "bipartite-symmetric-cuts" : "multipartite-symmetric-cuts");
    }
    if (cls.complete) {
        exactly(row.diameter_lower, row.diameter_upper, 1, "complete-graph");
        exactly(row.clique_lower, row.clique_upper, cut_count, "complete-graph");
    }
    return row;
}

} // namespace cutpoly

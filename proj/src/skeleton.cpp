#include "cutpoly/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "cutpoly/rng.hpp"

namespace cutpoly {

std::size_t SkeletonGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adjacency)
        total += row.size();
    return total / 2;
}

bool SkeletonGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
    if (i >= adjacency.size())
        return false;
    const auto& row = adjacency[i];
    return std::binary_search(row.begin(), row.end(), j);
}

bool NonAdjacencyWitness::midpoint_holds() const {
    const std::size_t m = vx.size();
    if (vy.size() != m || vxl.size() != m || vyl.size() != m)
        return false;
    for (std::size_t e = 0; e < m; ++e)
        if (int(vxl[e]) + int(vyl[e]) != int(vx[e]) + int(vy[e]))
            return false;
    return true;
}

namespace {

void require_distinct(const Graph& g, const Cut& x, const Cut& y) {
    if (x.vertex_count() != g.vertex_count() || y.vertex_count() != g.vertex_count())
        throw Error(ErrorCode::SizeMismatch, "cut vertex count differs from graph");
    if (x == y)
        throw Error(ErrorCode::EqualCuts, "adjacency is defined for distinct cuts only");
}

// BFS spanning tree of `component` inside H, from its smallest vertex,
// scanning neighbours in ascending order. Returns tree edge indices.
std::vector<int> bfs_tree(const Graph& g, const CutVector& removed, VertexSet component) {
    std::vector<int> tree;
    const int root = std::countr_zero(component);
    VertexSet seen = VertexSet{1} << root;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (VertexSet nb = g.neighbors(v) & component & ~seen; nb; nb &= nb - 1) {
            const int w = std::countr_zero(nb);
            const int e = *g.edge_index(v, w);
            if (removed[static_cast<std::size_t>(e)])
                continue;
            seen |= VertexSet{1} << w;
            tree.push_back(e);
            queue.push_back(w);
        }
    }
    return tree;
}

struct MaximizerScan {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::vector<Cut> maximizers;
};

MaximizerScan scan_maximizers(const Graph& g, const std::vector<int>& c) {
    const int n = g.vertex_count();
    std::vector<int> support;
    for (int e = 0; e < static_cast<int>(c.size()); ++e)
        if (c[static_cast<std::size_t>(e)] != 0)
            support.push_back(e);

    MaximizerScan scan;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t index = 0; index < total; ++index) {
        const VertexSet members = index << 1;
        std::int64_t value = 0;
        for (int e : support) {
            const auto& edge = g.edge(e);
            if (((members >> edge.u) ^ (members >> edge.v)) & 1U)
                value += c[static_cast<std::size_t>(e)];
        }
        if (value > scan.best) {
            scan.best = value;
            scan.maximizers.clear();
        }
        if (value == scan.best && scan.maximizers.size() < 3)
            scan.maximizers.push_back(Cut::from_index(index, n));
    }
    return scan;
}

} // namespace

bool is_adjacent(const Graph& g, const Cut& x, const Cut& y) {
    require_distinct(g, x, y);
    return components(g, cut_set(g, sym_diff(x, y))).size() == 2;
}

AdjacencyCertificate certify_adjacent(const Graph& g, const Cut& x, const Cut& y, int verify_cap) {
    require_distinct(g, x, y);
    const CutVector removed = cut_set(g, sym_diff(x, y));
    const auto comps = components(g, removed);
    if (comps.size() != 2)
        throw Error(ErrorCode::NotAdjacent, "H has " + std::to_string(comps.size()) + " components, not 2");

    const CutVector vx = cut_set(g, x);
    const CutVector vy = cut_set(g, y);
    AdjacencyCertificate cert;
    cert.c.assign(static_cast<std::size_t>(g.edge_count()), 0);
    cert.maximizers = {std::min(x, y), std::max(x, y)};
    for (VertexSet comp : comps)
        for (int e : bfs_tree(g, removed, comp)) {
            const auto ei = static_cast<std::size_t>(e);
            cert.c[ei] = (vx[ei] && vy[ei]) ? 1 : -1;
        }
    for (std::size_t e = 0; e < cert.c.size(); ++e)
        cert.optimum += vx[e] ? cert.c[e] : 0;

    cert.status = g.vertex_count() <= verify_cap ? verify_certificate(g, cert) : Verification::Unverified;
    return cert;
}

Verification verify_certificate(const Graph& g, const AdjacencyCertificate& cert) {
    if (cert.c.size() != static_cast<std::size_t>(g.edge_count()))
        return Verification::Failed;
    const auto scan = scan_maximizers(g, cert.c);
    const bool ok = scan.maximizers.size() == 2 && scan.maximizers[0] == cert.maximizers.first &&
                    scan.maximizers[1] == cert.maximizers.second && scan.best == cert.optimum;
    return ok ? Verification::Verified : Verification::Failed;
}

NonAdjacencyWitness witness_nonadjacent(const Graph& g, const Cut& x, const Cut& y) {
    require_distinct(g, x, y);
    const Cut d = sym_diff(x, y);
    const CutVector removed = cut_set(g, d);
    const auto comps = components(g, removed);
    if (comps.size() == 2)
        throw Error(ErrorCode::ActuallyAdjacent, "H has exactly two components");

    for (VertexSet comp : comps) {
        const Cut l = Cut::from_members(comp, g.vertex_count());
        const CutVector vl = cut_set(g, l);
        if (vl.none() || !vl.is_proper_subset_of(removed))
            continue;
        return NonAdjacencyWitness{l, cut_set(g, x), cut_set(g, y), cut_set(g, sym_diff(x, l)),
                                   cut_set(g, sym_diff(y, l))};
    }
    // A connected graph with >= 3 components in H always has such a component.
    throw Error(ErrorCode::ActuallyAdjacent, "no component of H yields a proper sub-cut");
}

SkeletonGraph build_skeleton(const Graph& g, const SkeletonOptions& options) {
    const int n = g.vertex_count();
    if (n > options.cap || n > 31)
        throw Error(ErrorCode::LimitExceeded,
                    "n = " + std::to_string(n) + " exceeds skeleton cap " + std::to_string(options.cap));

    const std::uint32_t total = std::uint32_t{1} << (n - 1);
    SkeletonGraph s;
    s.n = n;
    s.cuts.reserve(total);
    for (std::uint32_t i = 0; i < total; ++i)
        s.cuts.push_back(Cut::from_index(i, n));

    // cut(i) ^ cut(j) == cut(i ^ j), so adjacency depends only on i ^ j.
    std::vector<char> adjacent_diff(total, 0);
    for (std::uint32_t d = 1; d < total; ++d)
        adjacent_diff[d] = split_component_count(g, VertexSet{d} << 1) == 2;

    s.adjacency.assign(total, {});
    unsigned workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, total);
    auto fill_rows = [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t i = begin; i < end; ++i) {
            auto& row = s.adjacency[i];
            for (std::uint32_t j = 0; j < total; ++j)
                if (adjacent_diff[i ^ j])
                    row.push_back(j);
        }
    };
    if (workers <= 1) {
        fill_rows(0, total);
    } else {
        std::vector<std::jthread> pool;
        const std::uint32_t chunk = (total + workers - 1) / workers;
        for (std::uint32_t begin = 0; begin < total; begin += chunk)
            pool.emplace_back(fill_rows, begin, std::min(total, begin + chunk));
    }
    return s;
}

InheritanceReport check_inheritance(const Graph& g, const Graph& sub, std::uint64_t samples, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (sub.vertex_count() != n)
        throw Error(ErrorCode::NotSubgraph, "subgraph must span the same vertex set");
    for (const auto& e : sub.edges())
        if (!g.has_edge(e.u, e.v))
            throw Error(ErrorCode::NotSubgraph,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    if (n > 63)
        throw Error(ErrorCode::LimitExceeded, "inheritance check needs n <= 63");

    InheritanceReport report;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    auto check = [&](std::uint64_t i, std::uint64_t j) {
        ++report.pairs_checked;
        const VertexSet d = (i ^ j) << 1;
        if (split_component_count(sub, d) != 2)
            return;
        ++report.adjacent_in_sub;
        if (split_component_count(g, d) != 2 && !report.violation)
            report.violation = std::pair{Cut::from_index(i, n), Cut::from_index(j, n)};
    };

    const bool small = total <= (std::uint64_t{1} << 31);
    const std::uint64_t pairs = small ? total * (total - 1) / 2 : std::numeric_limits<std::uint64_t>::max();
    if (samples == 0 || samples >= pairs) {
        if (total > (std::uint64_t{1} << 20))
            throw Error(ErrorCode::LimitExceeded, "exhaustive inheritance scan too large; pass a sample count");
        report.exhaustive = true;
        for (std::uint64_t i = 0; i < total; ++i)
            for (std::uint64_t j = i + 1; j < total; ++j)
                check(i, j);
        return report;
    }

    Rng rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
        const std::uint64_t i = rng.below(total);
        std::uint64_t j = rng.below(total - 1);
        if (j >= i)
            ++j;
        check(std::min(i, j), std::max(i, j));
    }
    return report;
}

} // namespace cutpoly

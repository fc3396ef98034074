#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cutpoly/workbench.hpp"

namespace cutpoly {

std::string_view to_string(GraphFamily family) {
    switch (family) {
    case GraphFamily::Tree: return "tree";
    case GraphFamily::Cactus: return "cactus";
    case GraphFamily::AlmostTree2: return "almost-tree2";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Complete: return "complete";
    case GraphFamily::CompleteBipartite: return "complete-bipartite";
    case GraphFamily::CompleteMultipartite: return "complete-multipartite";
    case GraphFamily::Random: return "random";
    }
    return "tree";
}

std::optional<GraphFamily> parse_family(std::string_view name) {
    for (auto f : {GraphFamily::Tree, GraphFamily::Cactus, GraphFamily::AlmostTree2, GraphFamily::Cycle,
                   GraphFamily::Complete, GraphFamily::CompleteBipartite, GraphFamily::CompleteMultipartite,
                   GraphFamily::Random})
        if (to_string(f) == name)
            return f;
    return std::nullopt;
}

namespace {

std::vector<Edge> prufer_tree_edges(int n, Rng& rng) {
    std::vector<Edge> edges;
    if (n <= 1)
        return edges;
    if (n == 2)
        return {{0, 1}};
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq)
        x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq)
        ++degree[static_cast<std::size_t>(x)];
    for (int x : seq) {
        int leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1)
            ++leaf;
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            last.push_back(v);
    edges.push_back({last[0], last[1]});
    return edges;
}

// Adds fundamental-cycle chords whose tree paths are pairwise edge-disjoint;
// two such cycles share at most one vertex, so the result stays a cactus.
std::vector<Edge> attach_cycles(int n, std::vector<Edge> tree, Rng& rng) {
    if (n < 3)
        return tree;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : tree) {
        adj[static_cast<std::size_t>(e.u)] |= VertexSet{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= VertexSet{1} << e.u;
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    VertexSet seen = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (VertexSet nb = adj[static_cast<std::size_t>(v)] & ~seen; nb; nb &= nb - 1) {
            const int w = std::countr_zero(nb);
            seen |= VertexSet{1} << w;
            parent[static_cast<std::size_t>(w)] = v;
            depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }

    // Tree edge (parent[v], v) is identified by its child v.
    std::vector<char> in_cycle(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges = std::move(tree);
    int added = 0;
    const int min_attempts = n;
    const int max_attempts = 64 * n;
    for (int attempt = 0; attempt < max_attempts && (attempt < min_attempts || added == 0); ++attempt) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b || ((adj[static_cast<std::size_t>(a)] >> b) & 1U))
            continue;
        std::vector<int> path;
        int x = a, y = b;
        while (x != y) {
            if (depth[static_cast<std::size_t>(x)] < depth[static_cast<std::size_t>(y)])
                std::swap(x, y);
            path.push_back(x);
            x = parent[static_cast<std::size_t>(x)];
        }
        if (std::any_of(path.begin(), path.end(), [&](int c) { return in_cycle[static_cast<std::size_t>(c)]; }))
            continue;
        for (int c : path)
            in_cycle[static_cast<std::size_t>(c)] = 1;
        adj[static_cast<std::size_t>(a)] |= VertexSet{1} << b;
        adj[static_cast<std::size_t>(b)] |= VertexSet{1} << a;
        edges.push_back({std::min(a, b), std::max(a, b)});
        ++added;
    }
    return edges;
}

// One extra chord inside some cycle blocks of length >= 4: the block becomes
// a theta graph with excess 2.
std::vector<Edge> thicken_cycles(const Graph& cactus, Rng& rng) {
    std::vector<Edge> edges(cactus.edges().begin(), cactus.edges().end());
    std::vector<Block> eligible;
    for (const auto& block : biconnected_components(cactus))
        if (block.edge_count == std::popcount(block.vertices) && block.edge_count >= 4)
            eligible.push_back(block);
    if (eligible.empty())
        return edges;

    std::vector<char> chosen(eligible.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < eligible.size(); ++i)
        any |= (chosen[i] = rng.chance(1, 2)) != 0;
    if (!any)
        chosen[rng.below(eligible.size())] = 1;

    for (std::size_t i = 0; i < eligible.size(); ++i) {
        if (!chosen[i])
            continue;
        std::vector<int> members;
        for (VertexSet m = eligible[i].vertices; m; m &= m - 1)
            members.push_back(std::countr_zero(m));
        std::vector<Edge> options;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!cactus.has_edge(members[a], members[b]))
                    options.push_back({members[a], members[b]});
        edges.push_back(options[rng.below(options.size())]);
    }
    return edges;
}

std::vector<Edge> complete_multipartite_edges(std::span<const int> parts) {
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i)
            part_of.push_back(static_cast<int>(p));
    std::vector<Edge> edges;
    const auto n = static_cast<int>(part_of.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                edges.push_back({u, v});
    return edges;
}

void require(bool ok, const std::string& message) {
    if (!ok)
        throw Error(ErrorCode::BadSpec, message);
}

} // namespace

Graph random_tree(int n, Rng& rng) { return Graph::from_edges(n, prufer_tree_edges(n, rng)); }

Graph generate(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    const bool partite =
        spec.family == GraphFamily::CompleteBipartite || spec.family == GraphFamily::CompleteMultipartite;
    if (!partite)
        require(spec.n >= 1 && spec.n <= max_vertices, "n must be in 1.." + std::to_string(max_vertices));

    Graph g = [&] {
        switch (spec.family) {
        case GraphFamily::Tree:
            return random_tree(spec.n, rng);
        case GraphFamily::Cactus:
            return Graph::from_edges(spec.n, attach_cycles(spec.n, prufer_tree_edges(spec.n, rng), rng));
        case GraphFamily::AlmostTree2: {
            // Redraw the cactus (same stream) until it has a cycle of length >= 4
            // to thicken; small n may never get one.
            for (int attempt = 0;; ++attempt) {
                const Graph cactus =
                    Graph::from_edges(spec.n, attach_cycles(spec.n, prufer_tree_edges(spec.n, rng), rng));
                Graph g = Graph::from_edges(spec.n, thicken_cycles(cactus, rng));
                if (g.edge_count() > cactus.edge_count() || attempt == 63)
                    return g;
            }
        }
        case GraphFamily::Cycle: {
            require(spec.n >= 3, "a cycle needs n >= 3");
            std::vector<Edge> edges;
            for (int v = 0; v < spec.n; ++v)
                edges.push_back({std::min(v, (v + 1) % spec.n), std::max(v, (v + 1) % spec.n)});
            return Graph::from_edges(spec.n, std::move(edges));
        }
        case GraphFamily::Complete: {
            std::vector<int> ones(static_cast<std::size_t>(spec.n), 1);
            return Graph::from_edges(spec.n, complete_multipartite_edges(ones));
        }
        case GraphFamily::CompleteBipartite:
        case GraphFamily::CompleteMultipartite: {
            if (spec.family == GraphFamily::CompleteBipartite)
                require(spec.parts.size() == 2, "complete bipartite needs exactly two part sizes");
            else
                require(spec.parts.size() >= 2, "complete multipartite needs at least two part sizes");
            require(std::all_of(spec.parts.begin(), spec.parts.end(), [](int p) { return p >= 1; }),
                    "part sizes must be positive");
            const int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
            require(n <= max_vertices, "too many vertices");
            return Graph::from_edges(n, complete_multipartite_edges(spec.parts));
        }
        case GraphFamily::Random: {
            require(spec.density_percent >= 0 && spec.density_percent <= 100, "density must be 0..100");
            auto edges = prufer_tree_edges(spec.n, rng);
            std::vector<VertexSet> adj(static_cast<std::size_t>(spec.n), 0);
            for (const auto& e : edges)
                adj[static_cast<std::size_t>(e.u)] |= VertexSet{1} << e.v;
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v)
                    if (!((adj[static_cast<std::size_t>(u)] >> v) & 1U) &&
                        rng.chance(static_cast<std::uint32_t>(spec.density_percent), 100))
                        edges.push_back({u, v});
            return Graph::from_edges(spec.n, std::move(edges));
        }
        }
        throw Error(ErrorCode::BadSpec, "unknown family");
    }();

    const GraphClass cls = classify(g);
    const bool consistent = [&] {
        switch (spec.family) {
        case GraphFamily::Tree: return cls.tree;
        case GraphFamily::Cactus: return cls.cactus;
        case GraphFamily::AlmostTree2: return cls.almost_tree(2);
        case GraphFamily::Cycle: return cls.cycle;
        case GraphFamily::Complete: return cls.complete;
        case GraphFamily::CompleteBipartite: return cls.complete_bipartite() || g.vertex_count() == 2;
        case GraphFamily::CompleteMultipartite: return cls.complete_multipartite();
        case GraphFamily::Random: return true;
        }
        return false;
    }();
    if (!consistent)
        throw std::logic_error("generator produced a graph outside its class");
    return g;
}

Graph random_spanning_subgraph(const Graph& g, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<int>(order));

    std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v)
            v = root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
        return v;
    };
    std::vector<Edge> kept;
    std::vector<int> rest;
    for (int e : order) {
        const auto& edge = g.edge(e);
        const int a = find(edge.u), b = find(edge.v);
        if (a != b) {
            root[static_cast<std::size_t>(a)] = b;
            kept.push_back(edge);
        } else {
            rest.push_back(e);
        }
    }
    std::sort(rest.begin(), rest.end());
    for (int e : rest)
        if (rng.chance(1, 2))
            kept.push_back(g.edge(e));
    return Graph::from_edges(g.vertex_count(), std::move(kept));
}

Graph with_random_weights(const Graph& g, std::int64_t lo, std::int64_t hi, Rng& rng) {
    std::vector<std::int64_t> weights;
    for (int e = 0; e < g.edge_count(); ++e)
        weights.push_back(rng.between(lo, hi));
    return Graph::from_edges(g.vertex_count(), {g.edges().begin(), g.edges().end()}, std::move(weights));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(g.vertex_count()))
        throw Error(ErrorCode::SizeMismatch, "permutation length differs from vertex count");
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    return Graph::from_edges(g.vertex_count(), std::move(edges), {g.weights().begin(), g.weights().end()});
}

} // namespace cutpoly

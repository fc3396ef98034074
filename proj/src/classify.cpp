#include "cutpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cutpoly {

std::string_view to_string(ClassTag tag) {
    switch (tag) {
    case ClassTag::Tree: return "tree";
    case ClassTag::Cactus: return "cactus";
    case ClassTag::AlmostTree2: return "almost-tree(2)";
    case ClassTag::Cycle: return "cycle";
    case ClassTag::Complete: return "complete";
    case ClassTag::CompleteBipartite: return "complete-bipartite";
    case ClassTag::CompleteMultipartite: return "complete-multipartite";
    case ClassTag::Other: return "other";
    }
    return "other";
}

std::vector<Block> biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Block> blocks;
    if (g.edge_count() == 0)
        return blocks;

    // Iterative Hopcroft-Tarjan with an explicit edge stack.
    struct Frame {
        int vertex;
        int parent_edge;
        VertexSet pending; // neighbours not yet scanned
    };
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> edge_stack;
    std::vector<Frame> stack;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0)
            continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, g.neighbors(root)});

        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto v = static_cast<std::size_t>(top.vertex);
            if (top.pending) {
                const int w = std::countr_zero(top.pending);
                top.pending &= top.pending - 1;
                const int e = *g.edge_index(top.vertex, w);
                if (e == top.parent_edge)
                    continue;
                const auto wi = static_cast<std::size_t>(w);
                if (disc[wi] < 0) {
                    edge_stack.push_back(e);
                    disc[wi] = low[wi] = timer++;
                    stack.push_back({w, e, g.neighbors(w)});
                } else if (disc[wi] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[wi]);
                }
                continue;
            }

            const Frame done = top;
            stack.pop_back();
            if (stack.empty())
                break;
            const auto parent = static_cast<std::size_t>(stack.back().vertex);
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                Block block;
                while (true) {
                    const int e = edge_stack.back();
                    edge_stack.pop_back();
                    block.vertices |= (VertexSet{1} << g.edge(e).u) | (VertexSet{1} << g.edge(e).v);
                    ++block.edge_count;
                    if (e == done.parent_edge)
                        break;
                }
                blocks.push_back(block);
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return std::countr_zero(a.vertices) != std::countr_zero(b.vertices)
                   ? std::countr_zero(a.vertices) < std::countr_zero(b.vertices)
                   : a.vertices < b.vertices;
    });
    return blocks;
}

namespace {

std::vector<VertexSet> multipartite_parts(const Graph& g) {
    const int n = g.vertex_count();
    const VertexSet all = g.vertices();
    std::vector<VertexSet> parts;
    VertexSet assigned = 0;
    for (int v = 0; v < n; ++v) {
        if ((assigned >> v) & 1U)
            continue;
        // Closed non-neighbourhood; must coincide for every member of the part.
        const VertexSet part = all & ~g.neighbors(v);
        for (VertexSet p = part; p; p &= p - 1) {
            const int u = std::countr_zero(p);
            if ((all & ~g.neighbors(u)) != part)
                return {};
        }
        parts.push_back(part);
        assigned |= part;
    }
    if (parts.size() < 2)
        return {};
    std::stable_sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) > std::popcount(b);
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return parts;
}

} // namespace

GraphClass classify(const Graph& g) {
    GraphClass cls;
    const int n = g.vertex_count();
    const int m = g.edge_count();

    for (const auto& block : biconnected_components(g)) {
        const int excess = block.edge_count - (std::popcount(block.vertices) - 1);
        cls.max_block_excess = std::max(cls.max_block_excess, excess);
    }
    cls.tree = m == n - 1;
    cls.cactus = cls.max_block_excess <= 1;
    cls.complete = m == n * (n - 1) / 2;
    cls.cycle = n >= 3 && m == n;
    for (int v = 0; cls.cycle && v < n; ++v)
        cls.cycle = g.degree(v) == 2;
    cls.parts = multipartite_parts(g);

    if (cls.complete)
        cls.most_specific = ClassTag::Complete;
    else if (cls.cycle)
        cls.most_specific = ClassTag::Cycle;
    else if (cls.tree)
        cls.most_specific = ClassTag::Tree;
    else if (cls.complete_bipartite())
        cls.most_specific = ClassTag::CompleteBipartite;
    else if (cls.complete_multipartite())
        cls.most_specific = ClassTag::CompleteMultipartite;
    else if (cls.cactus)
        cls.most_specific = ClassTag::Cactus;
    else if (cls.almost_tree(2))
        cls.most_specific = ClassTag::AlmostTree2;
    else
        cls.most_specific = ClassTag::Other;
    return cls;
}

std::vector<int> GraphClass::part_sizes() const {
    std::vector<int> sizes;
    for (VertexSet p : parts)
        sizes.push_back(std::popcount(p));
    return sizes;
}

int GraphClass::smallest_part() const {
    int best = max_vertices;
    for (VertexSet p : parts)
        best = std::min(best, std::popcount(p));
    return parts.empty() ? 0 : best;
}

std::vector<std::string> GraphClass::tags() const {
    std::vector<std::string> out;
    if (tree)
        out.emplace_back("tree");
    if (cycle)
        out.emplace_back("cycle");
    if (cactus)
        out.emplace_back("cactus");
    if (almost_tree(1))
        out.emplace_back("almost-tree(1)");
    if (almost_tree(2))
        out.emplace_back("almost-tree(2)");
    if (complete)
        out.emplace_back("complete");
    if (!parts.empty()) {
        std::ostringstream tag;
        tag << (parts.size() == 2 ? "complete-bipartite(" : "complete-multipartite(");
        const auto sizes = part_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i)
            tag << (i ? "," : "") << sizes[i];
        tag << ')';
        out.push_back(tag.str());
    }
    if (out.empty())
        out.emplace_back("other");
    return out;
}

} // namespace cutpoly

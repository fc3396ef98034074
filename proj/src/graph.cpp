#include "cutpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cutpoly {

namespace {

// Flood fill over an adjacency-mask table restricted to `allowed`.
VertexSet reach(std::span<const VertexSet> adjacency, int start, VertexSet allowed) {
    VertexSet seen = VertexSet{1} << start;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> all_components(std::span<const VertexSet> adjacency, int n) {
    std::vector<VertexSet> out;
    VertexSet left = full_set(n);
    while (left) {
        const int v = std::countr_zero(left);
        const VertexSet comp = reach(adjacency, v, left);
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

} // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges, std::vector<std::int64_t> weights) {
    if (n < 1 || n > max_vertices)
        throw Error(ErrorCode::Malformed, "vertex count must be in 1.." + std::to_string(max_vertices));
    if (weights.empty())
        weights.assign(edges.size(), 1);
    if (weights.size() != edges.size())
        throw Error(ErrorCode::Malformed, "weight count does not match edge count");

    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error(ErrorCode::Malformed,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        if (e.u == e.v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    g.weights_.reserve(edges.size());
    for (std::size_t i : order) {
        if (!g.edges_.empty() && g.edges_.back() == edges[i])
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(edges[i].u) + "," +
                                                      std::to_string(edges[i].v) + ")");
        g.edges_.push_back(edges[i]);
        g.weights_.push_back(weights[i]);
    }

    g.adjacency_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)] |= VertexSet{1} << e.v;
        g.adjacency_[static_cast<std::size_t>(e.v)] |= VertexSet{1} << e.u;
    }

    const VertexSet reached = reach(g.adjacency_, 0, g.vertices());
    if (reached != g.vertices()) {
        const int missing = std::countr_zero(g.vertices() & ~reached);
        throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(missing) + " is not reachable from vertex 0");
    }
    return g;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    const Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w == 1; });
}

Cut Cut::from_members(VertexSet members, int n) {
    if (n < 1 || n > max_vertices)
        throw Error(ErrorCode::Malformed, "cut over invalid vertex count " + std::to_string(n));
    const VertexSet all = full_set(n);
    if (members & ~all)
        throw Error(ErrorCode::Malformed, "cut member outside 0.." + std::to_string(n - 1));
    if (members & 1U)
        members = all & ~members;
    return Cut(members, n);
}

Cut Cut::from_vertices(std::span<const int> vertices, int n) {
    VertexSet mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw Error(ErrorCode::Malformed, "cut vertex " + std::to_string(v) + " out of range");
        mask |= VertexSet{1} << v;
    }
    return from_members(mask, n);
}

Cut Cut::from_index(std::uint64_t index, int n) {
    if (n < 1 || n > max_vertices || (n < 64 && index >= (std::uint64_t{1} << (n - 1))))
        throw Error(ErrorCode::UnknownIndex, "cut index " + std::to_string(index) + " out of range");
    return Cut(index << 1, n);
}

std::vector<int> Cut::vertex_list() const {
    std::vector<int> out;
    for (VertexSet m = members_; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::string CutVector::to_string() const {
    std::string out = "(";
    for (std::size_t e = 0; e < bits_.size(); ++e) {
        if (e)
            out += ',';
        out += bits_.test(e) ? '1' : '0';
    }
    out += ')';
    return out;
}

std::vector<int> CutVector::to_vector() const {
    std::vector<int> out(bits_.size());
    for (std::size_t e = 0; e < bits_.size(); ++e)
        out[e] = bits_.test(e) ? 1 : 0;
    return out;
}

namespace {

struct LineReader {
    std::string_view text;
    int line_no = 0;

    // Next non-blank, non-comment line, split into tokens.
    std::optional<std::vector<std::string_view>> next() {
        while (!text.empty()) {
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;

            std::vector<std::string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                    ++j;
                if (j > i)
                    tokens.push_back(line.substr(i, j - i));
                i = j;
            }
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            return tokens;
        }
        return std::nullopt;
    }
};

std::int64_t parse_int(std::string_view token, int line) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw Error(ErrorCode::Malformed, "expected an integer, got '" + std::string(token) + "'", line);
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    LineReader reader{text};
    auto header = reader.next();
    if (!header)
        throw Error(ErrorCode::Malformed, "empty document", reader.line_no);
    if (header->size() != 2)
        throw Error(ErrorCode::Malformed, "header must be 'n m'", reader.line_no);
    const int header_line = reader.line_no;
    const std::int64_t n = parse_int((*header)[0], header_line);
    const std::int64_t m = parse_int((*header)[1], header_line);
    if (n < 1 || n > max_vertices)
        throw Error(ErrorCode::Malformed, "vertex count must be in 1.." + std::to_string(max_vertices), header_line);
    if (m < 0 || m > n * (n - 1) / 2)
        throw Error(ErrorCode::Malformed, "edge count out of range for a simple graph", header_line);

    std::vector<Edge> edges;
    std::vector<std::int64_t> weights;
    std::vector<std::pair<Edge, int>> seen;
    for (std::int64_t i = 0; i < m; ++i) {
        auto tokens = reader.next();
        if (!tokens)
            throw Error(ErrorCode::Malformed,
                        "expected " + std::to_string(m) + " edges, found " + std::to_string(i), reader.line_no);
        const int line = reader.line_no;
        if (tokens->size() != 2 && tokens->size() != 3)
            throw Error(ErrorCode::Malformed, "edge line must be 'u v' or 'u v w'", line);
        const std::int64_t u = parse_int((*tokens)[0], line);
        const std::int64_t v = parse_int((*tokens)[1], line);
        const std::int64_t w = tokens->size() == 3 ? parse_int((*tokens)[2], line) : 1;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::Malformed, "vertex id out of range 0.." + std::to_string(n - 1), line);
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u), line);
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        edges.push_back(e);
        weights.push_back(w);
        seen.emplace_back(e, line);
    }
    if (auto extra = reader.next())
        throw Error(ErrorCode::Malformed, "trailing content after " + std::to_string(m) + " edges", reader.line_no);

    std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(seen[i].first.u) + "," + std::to_string(seen[i].first.v) +
                            ") already given on line " + std::to_string(seen[i - 1].second),
                        seen[i].second);

    return Graph::from_edges(static_cast<int>(n), std::move(edges), std::move(weights));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Malformed, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    const bool weighted = !g.unit_weights();
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        out << g.edge(e).u << ' ' << g.edge(e).v;
        if (weighted)
            out << ' ' << g.weight(e);
        out << '\n';
    }
    return out.str();
}

CutVector cut_set(const Graph& g, const Cut& s) {
    CutVector out(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (s.contains(edge.u) != s.contains(edge.v))
            out.set(static_cast<std::size_t>(e));
    }
    return out;
}

Cut sym_diff(const Cut& x, const Cut& y) {
    if (x.vertex_count() != y.vertex_count())
        throw Error(ErrorCode::SizeMismatch, "cuts over different vertex counts");
    return Cut::from_members(x.members() ^ y.members(), x.vertex_count());
}

std::vector<VertexSet> components(const Graph& g, const CutVector& removed) {
    if (removed.size() != static_cast<std::size_t>(g.edge_count()))
        throw Error(ErrorCode::SizeMismatch, "removed-edge vector length differs from edge count");
    std::vector<VertexSet> adjacency(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (removed[static_cast<std::size_t>(e)])
            continue;
        const auto& edge = g.edge(e);
        adjacency[static_cast<std::size_t>(edge.u)] |= VertexSet{1} << edge.v;
        adjacency[static_cast<std::size_t>(edge.v)] |= VertexSet{1} << edge.u;
    }
    return all_components(adjacency, g.vertex_count());
}

namespace {

// Neighbourhood of v in (V, E \ delta(side)): neighbours on the same side.
struct SplitView {
    const Graph& g;
    VertexSet side;
    VertexSet other;

    VertexSet reach_from(int start, VertexSet allowed) const {
        VertexSet seen = VertexSet{1} << start;
        VertexSet frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) {
                const int v = std::countr_zero(f);
                next |= g.neighbors(v) & (((side >> v) & 1U) ? side : other);
            }
            next &= allowed & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }
};

} // namespace

std::vector<VertexSet> split_components(const Graph& g, VertexSet side) {
    const SplitView view{g, side, g.vertices() & ~side};
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        const VertexSet comp = view.reach_from(std::countr_zero(left), left);
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

int split_component_count(const Graph& g, VertexSet side) {
    const SplitView view{g, side, g.vertices() & ~side};
    int count = 0;
    VertexSet left = g.vertices();
    while (left) {
        left &= ~view.reach_from(std::countr_zero(left), left);
        ++count;
    }
    return count;
}

} // namespace cutpoly

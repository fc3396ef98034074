#include "cutpoly/serialize.hpp"

#include <algorithm>

namespace cutpoly {

namespace {

std::string_view verification_name(Verification v) {
    switch (v) {
    case Verification::Verified: return "verified";
    case Verification::Unverified: return "constructed-unverified";
    case Verification::Failed: return "failed";
    }
    return "failed";
}

} // namespace

json cut_json(const Cut& c) {
    return json{{"index", c.index()}, {"bitmask", c.members()}, {"vertices", c.vertex_list()}};
}

json to_json(const SkeletonGraph& s) {
    json cuts = json::array();
    for (const Cut& c : s.cuts)
        cuts.push_back(c.members());
    json adj = json::array();
    for (const auto& row : s.adjacency)
        adj.push_back(row);
    return json{{"n", s.n}, {"cuts", std::move(cuts)}, {"adj", std::move(adj)}};
}

SkeletonGraph skeleton_from_json(const json& doc) {
    try {
        SkeletonGraph s;
        s.n = doc.at("n").get<int>();
        if (s.n < 1 || s.n > 31)
            throw Error(ErrorCode::Malformed, "skeleton n out of range");
        const std::size_t total = std::size_t{1} << (s.n - 1);
        const auto& cuts = doc.at("cuts");
        const auto& adj = doc.at("adj");
        if (cuts.size() != total || adj.size() != total)
            throw Error(ErrorCode::Malformed, "skeleton must list 2^(n-1) cuts and adjacency rows");
        for (std::size_t i = 0; i < total; ++i) {
            const auto mask = cuts[i].get<VertexSet>();
            const Cut c = Cut::from_members(mask, s.n);
            if (c.members() != mask || c.index() != i)
                throw Error(ErrorCode::Malformed, "cuts must be canonical and in bitmask order");
            s.cuts.push_back(c);
        }
        s.adjacency.resize(total);
        for (std::size_t i = 0; i < total; ++i) {
            auto row = adj[i].get<std::vector<std::uint32_t>>();
            if (!std::is_sorted(row.begin(), row.end()) || std::adjacent_find(row.begin(), row.end()) != row.end())
                throw Error(ErrorCode::Malformed, "adjacency rows must be sorted and duplicate-free");
            for (std::uint32_t j : row)
                if (j >= total || j == i)
                    throw Error(ErrorCode::Malformed, "adjacency entry out of range or a self-loop");
            s.adjacency[i] = std::move(row);
        }
        for (std::uint32_t i = 0; i < total; ++i)
            for (std::uint32_t j : s.adjacency[i])
                if (!s.has_edge(j, i))
                    throw Error(ErrorCode::Malformed, "adjacency is not symmetric");
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Malformed, std::string("skeleton JSON: ") + e.what());
    }
}

json to_json(const Metrics& m) {
    return json{{"diameter", m.diameter},
                {"clique_number", m.clique_number},
                {"clique_exact", m.clique_exact},
                {"witness_clique", m.witness_clique},
                {"node_count", m.node_count},
                {"edge_count", m.edge_count}};
}

json to_json(const GraphClass& cls) {
    return json{{"most_specific", to_string(cls.most_specific)},
                {"tags", cls.tags()},
                {"max_block_excess", cls.max_block_excess},
                {"parts", cls.part_sizes()}};
}

json to_json(const BoundsRow& row) {
    auto bound = [](const Bound& b) { return json{{"value", b.value}, {"source", b.source}}; };
    return json{{"class", to_string(row.cls)},
                {"diameter", {{"lower", bound(row.diameter_lower)}, {"upper", bound(row.diameter_upper)}}},
                {"clique", {{"lower", bound(row.clique_lower)}, {"upper", bound(row.clique_upper)}}}};
}

json to_json(const CliqueFamily& family) {
    json cuts = json::array();
    for (const Cut& c : family.cuts)
        cuts.push_back(c.members());
    return json{{"construction", family.kind == CliqueKind::HammingBall ? "hamming-ball" : "symmetric"},
                {"size", family.cuts.size()},
                {"cuts", std::move(cuts)},
                {"indices", family.indices()}};
}

json to_json(const Coloring& col) {
    return json{{"width", col.width}, {"distinct_colors", col.distinct_count()}, {"colors", col.colors}};
}

json to_json(const AdjacencyCertificate& cert) {
    return json{{"x", cut_json(cert.maximizers.first)},
                {"y", cut_json(cert.maximizers.second)},
                {"c", cert.c},
                {"optimum", cert.optimum},
                {"status", verification_name(cert.status)}};
}

json to_json(const NonAdjacencyWitness& w) {
    return json{{"l", cut_json(w.l)},
                {"v_x", w.vx.to_vector()},
                {"v_y", w.vy.to_vector()},
                {"v_x_l", w.vxl.to_vector()},
                {"v_y_l", w.vyl.to_vector()},
                {"midpoint_holds", w.midpoint_holds()}};
}

} // namespace cutpoly

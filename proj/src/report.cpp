#include <algorithm>
#include <bit>

#include "cutpoly/workbench.hpp"

namespace cutpoly {

bool Report::passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

json verdict_json(const Verdict& v) {
    return json{{"check", v.check}, {"source", v.source}, {"pass", v.pass}, {"detail", v.detail}};
}

std::string pair_text(std::uint32_t a, std::uint32_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// |delta(cut(d))| for every cut index d.
std::vector<std::uint8_t> cut_sizes(const Graph& g, std::size_t total) {
    std::vector<std::uint8_t> sizes(total, 0);
    for (std::size_t d = 0; d < total; ++d) {
        const VertexSet members = VertexSet{d} << 1;
        int count = 0;
        for (const auto& e : g.edges())
            count += static_cast<int>(((members >> e.u) ^ (members >> e.v)) & 1U);
        sizes[d] = static_cast<std::uint8_t>(std::min(count, 255));
    }
    return sizes;
}

// Every skeleton edge joins cuts whose symmetric difference cuts at most `limit` edges.
Verdict edge_condition(const SkeletonGraph& s, const std::vector<std::uint8_t>& sizes, int limit,
                       std::string check, std::string source) {
    Verdict v{std::move(check), std::move(source), true, "every skeleton edge has |delta(X^Y)| <= " +
                                                             std::to_string(limit)};
    for (std::uint32_t i = 0; i < s.node_count() && v.pass; ++i)
        for (std::uint32_t j : s.adjacency[i])
            if (sizes[i ^ j] > limit) {
                v.pass = false;
                v.detail = "edge " + pair_text(i, j) + " has |delta(X^Y)| = " + std::to_string(sizes[i ^ j]);
                break;
            }
    return v;
}

} // namespace

Report report(const Graph& g, const ReportOptions& options) {
    Report out;
    auto& doc = out.document;
    auto& verdicts = out.verdicts;
    const int n = g.vertex_count();
    const int m = g.edge_count();

    const GraphClass cls = classify(g);
    const BoundsRow bounds = bounds_for(g, cls);
    doc["schema"] = report_schema_version;
    doc["graph"] = {{"n", n}, {"m", m}};
    doc["classification"] = to_json(cls);
    doc["bounds"] = to_json(bounds);

    // BRM* row-sum property, independent of the skeleton.
    if (cls.almost_tree(2) && m >= 1) {
        Verdict v{"brm-star-row-sums", "almost-tree2-brm-star-coloring", true,
                  "any 1, 2 or 3 distinct rows of BRM*(|E|) sum to a non-zero vector"};
        if (auto rows = find_zero_row_sum(brm_star(m), 3)) {
            v.pass = false;
            v.detail = "rows";
            for (int r : *rows)
                v.detail += " " + std::to_string(r);
            v.detail += " sum to zero";
        }
        verdicts.push_back(v);
    }

    json constructions = json::object();
    std::optional<CliqueFamily> family;
    if (cls.cycle)
        family = hamming_ball_clique(g);
    else if (cls.complete_multipartite() && cls.smallest_part() >= 2)
        family = symmetric_cut_clique(g);
    if (family)
        constructions["clique_family"] = to_json(*family);

    if (!options.exact) {
        doc["metrics"] = nullptr;
        doc["constructions"] = constructions;
        json list = json::array();
        for (const auto& v : verdicts)
            list.push_back(verdict_json(v));
        doc["verdicts"] = list;
        doc["all_passed"] = out.passed();
        return out;
    }

    const SkeletonGraph s = build_skeleton(g, {options.cap, options.workers});
    const Metrics metrics = compute_metrics(s, options.clique_budget, options.workers);
    doc["metrics"] = to_json(metrics);
    const auto total = s.node_count();
    const auto sizes = cut_sizes(g, total);

    verdicts.push_back({"skeleton-size", "cut-count", total == (std::size_t{1} << (n - 1)),
                        std::to_string(total) + " canonical cuts"});

    const auto d = static_cast<std::uint64_t>(metrics.diameter);
    verdicts.push_back({"diameter-bounds", bounds.diameter_lower.source + " / " + bounds.diameter_upper.source,
                        bounds.diameter_lower.value <= d && d <= bounds.diameter_upper.value,
                        std::to_string(bounds.diameter_lower.value) + " <= " + std::to_string(d) +
                            " <= " + std::to_string(bounds.diameter_upper.value)});

    const auto w = static_cast<std::uint64_t>(metrics.clique_number);
    {
        Verdict v{"clique-bounds", bounds.clique_lower.source + " / " + bounds.clique_upper.source, false, ""};
        v.pass = w <= bounds.clique_upper.value && (bounds.clique_lower.value <= w || !metrics.clique_exact);
        v.detail = std::to_string(bounds.clique_lower.value) + " <= " + std::to_string(w) +
                   " <= " + std::to_string(bounds.clique_upper.value);
        if (!metrics.clique_exact)
            v.detail += " (search budget exhausted; clique size is a lower bound)";
        verdicts.push_back(v);
    }

    if (cls.tree) {
        Verdict v{"tree-hypercube", "tree-hypercube", true, "adjacency iff Hamming distance 1"};
        for (std::uint32_t i = 0; i < total && v.pass; ++i) {
            if (s.adjacency[i].size() != static_cast<std::size_t>(n - 1)) {
                v.pass = false;
                v.detail = "node " + std::to_string(i) + " has degree " + std::to_string(s.adjacency[i].size());
            }
            for (std::uint32_t j : s.adjacency[i])
                if (sizes[i ^ j] != 1) {
                    v.pass = false;
                    v.detail = "edge " + pair_text(i, j) + " is not at Hamming distance 1";
                    break;
                }
        }
        verdicts.push_back(v);
    }

    auto coloring_verdicts = [&](const Coloring& col, std::uint64_t limit, const std::string& name,
                                 const std::string& source) {
        const auto check = verify_coloring(s, col);
        verdicts.push_back({name + "-proper", source, check.proper,
                            check.proper ? "no skeleton edge joins equal colours"
                                         : "edge " + pair_text(check.violation->first, check.violation->second) +
                                               " is monochromatic"});
        const std::uint64_t used = col.distinct_count();
        const bool count_ok = used <= limit && (!metrics.clique_exact || w <= used);
        verdicts.push_back({name + "-count", source, count_ok,
                            "clique " + std::to_string(w) + " <= colours " + std::to_string(used) +
                                " <= " + std::to_string(limit)});
        constructions[name] = {{"width", col.width}, {"distinct_colors", used}};
    };

    if (cls.cactus) {
        verdicts.push_back(edge_condition(s, sizes, 2, "cactus-edge-condition", "cactus-adjacency"));
        coloring_verdicts(brm_coloring(g, s), std::uint64_t{1} << ceil_log2(static_cast<std::uint64_t>(m) + 1),
                          "brm-coloring", "cactus-brm-coloring");
    }
    if (cls.almost_tree(2)) {
        verdicts.push_back(edge_condition(s, sizes, 3, "almost-tree2-edge-condition", "almost-tree2-adjacency"));
        const std::uint64_t limit = m == 0 ? 1 : std::uint64_t{1} << (ceil_log2(static_cast<std::uint64_t>(m)) + 1);
        coloring_verdicts(brm_star_coloring(g, s), limit, "brm-star-coloring", "almost-tree2-brm-star-coloring");
    }

    if (family) {
        const auto indices = family->indices();
        const auto check = verify_clique(s, indices);
        const bool hamming = family->kind == CliqueKind::HammingBall;
        const std::size_t expected =
            hamming ? static_cast<std::size_t>(n) : std::size_t{1} << (std::popcount(cls.parts[1]) - 1);
        Verdict v{hamming ? "hamming-ball-clique" : "symmetric-cut-clique",
                  hamming ? "cycle-hamming-ball"
                          : (cls.complete_bipartite() ? "bipartite-symmetric-cuts" : "multipartite-symmetric-cuts"),
                  check.valid && indices.size() == expected && (!metrics.clique_exact || indices.size() <= w),
                  "size " + std::to_string(indices.size())};
        if (!check.valid)
            v.detail += ", missing edge " + pair_text(check.missing_edge->first, check.missing_edge->second);
        verdicts.push_back(v);
    }

    // Proof-carrying samples: the first adjacent and first non-adjacent pair.
    json certificates = json::object();
    if (total >= 2) {
        const Cut zero = s.cuts[0];
        if (!s.adjacency[0].empty()) {
            const Cut other = s.cuts[s.adjacency[0].front()];
            const auto cert = certify_adjacent(g, zero, other, options.certificate_cap);
            certificates["adjacent"] = to_json(cert);
            verdicts.push_back({"adjacency-certificate", "adjacency-criterion", cert.status != Verification::Failed,
                                cert.status == Verification::Verified ? "exactly two maximisers"
                                                                      : "constructed, not scanned"});
        }
        std::optional<std::pair<std::uint32_t, std::uint32_t>> far;
        for (std::uint32_t i = 0; i < total && !far; ++i) {
            const auto& row = s.adjacency[i];
            for (std::uint32_t j = i + 1; j < total; ++j)
                if (!std::binary_search(row.begin(), row.end(), j)) {
                    far = std::pair{i, j};
                    break;
                }
        }
        if (far) {
            const auto wit = witness_nonadjacent(g, s.cuts[far->first], s.cuts[far->second]);
            certificates["nonadjacent"] = to_json(wit);
            verdicts.push_back({"nonadjacency-witness", "adjacency-criterion", wit.midpoint_holds(),
                                "pair " + pair_text(far->first, far->second)});
        }
    }

    doc["constructions"] = constructions;
    doc["certificates"] = certificates;
    json list = json::array();
    for (const auto& v : verdicts)
        list.push_back(verdict_json(v));
    doc["verdicts"] = list;
    doc["all_passed"] = out.passed();
    return out;
}

} // namespace cutpoly

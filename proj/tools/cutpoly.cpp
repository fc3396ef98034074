// cutpoly: command-line front end for the cut-polytope skeleton library.
//
// Exit codes: 0 ok, 1 usage, 2 invalid input, 3 resource cap exceeded,
// 4 a verdict failed (a construction or bound check did not hold).

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cutpoly/workbench.hpp"

using namespace cutpoly;

namespace {

enum Exit { Ok = 0, Usage = 1, Invalid = 2, Cap = 3, VerdictFailure = 4 };

struct Globals {
    int cap = 16;
    std::uint64_t seed = 0;
    bool json_out = false;
    std::string out_file;
    unsigned workers = 1;
};

// Thrown for bad flag values that CLI11 cannot see (vertex lists etc).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Malformed, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return ch == '{';
    return false;
}

std::vector<int> parse_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

Cut parse_cut(const Graph& g, const std::string& text, const std::string& flag) {
    const auto vertices = parse_list(text, flag);
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(ErrorCode::Malformed, flag + ": vertex " + std::to_string(v) + " out of range");
    return Cut::from_vertices(vertices, g.vertex_count());
}

std::string vertex_text(const Cut& c) {
    std::string s = "{";
    for (int v : c.vertex_list())
        s += (s.size() > 1 ? "," : "") + std::to_string(v);
    return s + "}";
}

class Output {
public:
    explicit Output(const Globals& g) : globals_(g) {}

    std::ostream& text() { return buffer_; }
    void emit(const json& doc) { buffer_ << doc.dump(2) << '\n'; }
    bool json_mode() const { return globals_.json_out; }

    void flush() {
        if (globals_.out_file.empty()) {
            std::cout << buffer_.str();
            return;
        }
        std::ofstream f(globals_.out_file, std::ios::binary);
        if (!f)
            throw Error(ErrorCode::Malformed, "cannot write " + globals_.out_file);
        f << buffer_.str();
    }

private:
    const Globals& globals_;
    std::ostringstream buffer_;
};

SkeletonGraph load_skeleton(const std::string& text, const Globals& g) {
    if (looks_like_json(text)) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::Malformed, std::string("skeleton JSON: ") + e.what());
        }
        return skeleton_from_json(doc);
    }
    return build_skeleton(parse_graph(text), {g.cap, g.workers});
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    json doc{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
    if (!g.unit_weights())
        doc["weights"] = g.weights();
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cut polytope 1-skeleton workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    Globals globals;
    app.add_option("--cap", globals.cap, "Skeleton vertex cap")->check(CLI::Range(1, 31));
    app.add_option("--seed", globals.seed, "Generator / sampling seed");
    app.add_flag("--json", globals.json_out, "Machine-readable output");
    app.add_option("--out", globals.out_file, "Write output to FILE instead of stdout");
    app.add_option("--workers", globals.workers, "Worker threads (0 = all cores)");

    std::string input = "-";
    std::string xs, ys;
    std::string family_name, parts_text, scheme = "brm";
    int n = 0;
    int density = 30;
    int verify_cap = default_certificate_cap;
    std::uint64_t budget = default_clique_budget;
    bool no_exact = false;
    int maxcut_cap = default_maxcut_cap;

    auto add_input = [&](CLI::App* sub) { sub->add_option("graph", input, "Graph file, or - for stdin"); };
    auto add_pair = [&](CLI::App* sub) {
        add_input(sub);
        sub->add_option("--x", xs, "Vertices of X, comma separated")->required();
        sub->add_option("--y", ys, "Vertices of Y, comma separated")->required();
    };

    auto* gen = app.add_subcommand("gen", "Generate a seeded graph");
    gen->add_option("family", family_name,
                    "tree|cactus|almost-tree2|cycle|complete|complete-bipartite|complete-multipartite|random")
        ->required();
    gen->add_option("--n", n, "Vertex count");
    gen->add_option("--parts", parts_text, "Part sizes, e.g. 2,3");
    gen->add_option("--density", density, "Extra-edge percentage for random")->check(CLI::Range(0, 100));

    auto* cls_cmd = app.add_subcommand("classify", "Graph classes and bounds");
    add_input(cls_cmd);
    auto* adj_cmd = app.add_subcommand("adjacent", "Adjacency test for two cuts");
    add_pair(adj_cmd);
    auto* cert_cmd = app.add_subcommand("certify", "Objective vector certifying adjacency");
    add_pair(cert_cmd);
    cert_cmd->add_option("--verify-cap", verify_cap, "Largest n for the exhaustive maximiser scan");
    auto* wit_cmd = app.add_subcommand("witness", "Cut L witnessing non-adjacency");
    add_pair(wit_cmd);
    auto* skel_cmd = app.add_subcommand("skeleton", "Build the 1-skeleton");
    add_input(skel_cmd);
    auto* diam_cmd = app.add_subcommand("diameter", "Skeleton diameter (graph or skeleton JSON)");
    add_input(diam_cmd);
    auto* clq_cmd = app.add_subcommand("clique", "Skeleton clique number (graph or skeleton JSON)");
    add_input(clq_cmd);
    clq_cmd->add_option("--budget", budget, "Search node expansion budget");
    auto* col_cmd = app.add_subcommand("color", "Matrix colouring of the skeleton");
    add_input(col_cmd);
    col_cmd->add_option("--scheme", scheme, "brm or brm-star")->check(CLI::IsMember({"brm", "brm-star"}));
    auto* cc_cmd = app.add_subcommand("clique-construct", "Hamming-ball or symmetric-cut clique");
    add_input(cc_cmd);
    auto* mc_cmd = app.add_subcommand("maxcut", "Exhaustive maximum cut");
    add_input(mc_cmd);
    mc_cmd->add_option("--maxcut-cap", maxcut_cap, "Largest n for the scan");
    auto* rep_cmd = app.add_subcommand("report", "Per-class verdict report");
    add_input(rep_cmd);
    rep_cmd->add_option("--budget", budget, "Clique search budget");
    rep_cmd->add_option("--verify-cap", verify_cap, "Largest n for certificate scans");
    rep_cmd->add_flag("--no-exact", no_exact, "Skip the skeleton; classification and bounds only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    Output out(globals);
    int status = Ok;
    try {
        if (gen->parsed()) {
            const auto family = parse_family(family_name);
            if (!family)
                throw UsageError("unknown family '" + family_name + "'");
            GeneratorSpec spec{*family, n, parse_list(parts_text, "--parts"), globals.seed, density};
            const Graph g = generate(spec);
            if (out.json_mode())
                out.emit(graph_json(g));
            else
                out.text() << format_graph(g);
        } else if (cls_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const GraphClass cls = classify(g);
            const BoundsRow bounds = bounds_for(g, cls);
            if (out.json_mode()) {
                out.emit({{"classification", to_json(cls)}, {"bounds", to_json(bounds)}});
            } else {
                auto& os = out.text();
                os << "most specific: " << to_string(cls.most_specific) << '\n' << "tags:";
                for (const auto& t : cls.tags())
                    os << ' ' << t;
                os << "\nmax block excess: " << cls.max_block_excess << '\n';
                os << "diameter: " << bounds.diameter_lower.value << " .. " << bounds.diameter_upper.value << '\n';
                os << "clique number: " << bounds.clique_lower.value << " .. " << bounds.clique_upper.value << '\n';
            }
        } else if (adj_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const Cut x = parse_cut(g, xs, "--x"), y = parse_cut(g, ys, "--y");
            const bool adjacent = is_adjacent(g, x, y);
            const int parts = split_component_count(g, sym_diff(x, y).members());
            if (out.json_mode())
                out.emit({{"x", cut_json(x)}, {"y", cut_json(y)}, {"adjacent", adjacent}, {"components", parts}});
            else
                out.text() << (adjacent ? "adjacent" : "not adjacent") << " (" << parts
                           << " components after removing delta(X^Y))\n";
        } else if (cert_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const auto cert = certify_adjacent(g, parse_cut(g, xs, "--x"), parse_cut(g, ys, "--y"), verify_cap);
            if (out.json_mode()) {
                out.emit(to_json(cert));
            } else {
                auto& os = out.text();
                os << "c =";
                for (int e = 0; e < g.edge_count(); ++e)
                    os << ' ' << g.edge(e).u << '-' << g.edge(e).v << ':' << cert.c[static_cast<std::size_t>(e)];
                os << "\noptimum " << cert.optimum << " attained by " << vertex_text(cert.maximizers.first)
                   << " and " << vertex_text(cert.maximizers.second) << '\n';
                os << "status: "
                   << (cert.status == Verification::Verified     ? "verified"
                       : cert.status == Verification::Unverified ? "constructed, unverified"
                                                                 : "FAILED")
                   << '\n';
            }
            if (cert.status == Verification::Failed)
                status = VerdictFailure;
        } else if (wit_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const auto w = witness_nonadjacent(g, parse_cut(g, xs, "--x"), parse_cut(g, ys, "--y"));
            if (out.json_mode()) {
                out.emit(to_json(w));
            } else {
                auto& os = out.text();
                os << "L = " << vertex_text(w.l) << '\n';
                os << "v(X)   " << w.vx.to_string() << "\nv(Y)   " << w.vy.to_string() << '\n';
                os << "v(X^L) " << w.vxl.to_string() << "\nv(Y^L) " << w.vyl.to_string() << '\n';
                os << "midpoint " << (w.midpoint_holds() ? "holds" : "FAILS") << '\n';
            }
            if (!w.midpoint_holds())
                status = VerdictFailure;
        } else if (skel_cmd->parsed()) {
            const SkeletonGraph s = build_skeleton(parse_graph(read_input(input)), {globals.cap, globals.workers});
            if (out.json_mode())
                out.emit(to_json(s));
            else
                out.text() << s.node_count() << " nodes, " << s.edge_count() << " edges\n";
        } else if (diam_cmd->parsed()) {
            const SkeletonGraph s = load_skeleton(read_input(input), globals);
            const int d = diameter(s, globals.workers);
            if (out.json_mode())
                out.emit({{"diameter", d}, {"node_count", s.node_count()}});
            else
                out.text() << d << '\n';
        } else if (clq_cmd->parsed()) {
            const SkeletonGraph s = load_skeleton(read_input(input), globals);
            const auto r = clique_number(s, budget);
            if (out.json_mode())
                out.emit({{"clique_number", r.size},
                          {"clique_exact", r.exact},
                          {"witness_clique", r.witness},
                          {"expansions", r.expansions}});
            else
                out.text() << r.size << (r.exact ? "" : " (lower bound, budget exhausted)") << '\n';
        } else if (col_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const SkeletonGraph s = build_skeleton(g, {globals.cap, globals.workers});
            const Coloring col = scheme == "brm" ? brm_coloring(g, s) : brm_star_coloring(g, s);
            const auto check = verify_coloring(s, col);
            if (out.json_mode()) {
                json doc = to_json(col);
                doc["scheme"] = scheme;
                doc["proper"] = check.proper;
                out.emit(doc);
            } else {
                out.text() << scheme << " colouring: width " << col.width << ", " << col.distinct_count()
                           << " colours, " << (check.proper ? "proper" : "NOT proper") << '\n';
            }
            if (!check.proper)
                status = VerdictFailure;
        } else if (cc_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const GraphClass cls = classify(g);
            if (!cls.cycle && !cls.complete_multipartite())
                throw Error(ErrorCode::WrongClass, "clique constructions need a cycle or a complete multipartite graph");
            const CliqueFamily family = cls.cycle ? hamming_ball_clique(g) : symmetric_cut_clique(g);
            std::optional<CliqueCheck> check;
            if (g.vertex_count() <= globals.cap)
                check = verify_clique(build_skeleton(g, {globals.cap, globals.workers}), family.indices());
            if (out.json_mode()) {
                json doc = to_json(family);
                doc["valid"] = check ? json(check->valid) : json(nullptr);
                out.emit(doc);
            } else {
                auto& os = out.text();
                os << (family.kind == CliqueKind::HammingBall ? "hamming-ball" : "symmetric") << " clique of size "
                   << family.cuts.size() << '\n';
                for (const Cut& c : family.cuts)
                    os << "  " << vertex_text(c) << '\n';
                os << (check ? (check->valid ? "validated on the skeleton" : "NOT a clique") : "not validated (n > cap)")
                   << '\n';
            }
            if (check && !check->valid)
                status = VerdictFailure;
        } else if (mc_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            const auto r = maxcut_bruteforce(g, maxcut_cap);
            if (out.json_mode())
                out.emit({{"cut", cut_json(r.cut)}, {"weight", r.weight}});
            else
                out.text() << r.weight << ' ' << vertex_text(r.cut) << '\n';
        } else if (rep_cmd->parsed()) {
            const Graph g = parse_graph(read_input(input));
            ReportOptions opts;
            opts.cap = globals.cap;
            opts.exact = !no_exact;
            opts.workers = globals.workers;
            opts.clique_budget = budget;
            opts.certificate_cap = verify_cap;
            const Report r = report(g, opts);
            if (out.json_mode()) {
                out.emit(r.document);
            } else {
                auto& os = out.text();
                for (const auto& v : r.verdicts)
                    os << (v.pass ? "PASS " : "FAIL ") << v.check << " [" << v.source << "] " << v.detail << '\n';
                os << (r.passed() ? "all verdicts passed" : "some verdicts FAILED") << '\n';
            }
            if (!r.passed())
                status = VerdictFailure;
        }
        out.flush();
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::LimitExceeded: return Cap;
        case ErrorCode::DisconnectedSkeleton: return VerdictFailure;
        default: return Invalid;
        }
    }
    return status;
}

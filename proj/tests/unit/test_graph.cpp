#include <doctest.h>

#include "../fixtures.hpp"

using namespace cutpoly;
using fixtures::cut;

namespace {

ErrorCode parse_error(std::string_view text, int* line = nullptr) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        if (line)
            *line = e.line();
        return e.code();
    }
    FAIL("parse succeeded");
    return ErrorCode::Malformed;
}

} // namespace

TEST_CASE("parse: triangle and single edge") {
    const Graph k3 = parse_graph("3 3\n0 1\n0 2\n1 2\n");
    CHECK(k3.vertex_count() == 3);
    REQUIRE(k3.edge_count() == 3);
    CHECK(k3.edge(0) == Edge{0, 1});
    CHECK(k3.edge(1) == Edge{0, 2});
    CHECK(k3.edge(2) == Edge{1, 2});

    const Graph p2 = parse_graph("2 1\n0 1\n");
    CHECK(p2.edge_count() == 1);
    CHECK(classify(p2).tree);
}

TEST_CASE("parse: edges are sorted and oriented u < v") {
    const Graph g = parse_graph("# comment\n4 4\n3 2\n1 0 \n\n2 1\n0 3\n");
    std::vector<Edge> expect{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expect);
    CHECK(g.unit_weights());
}

TEST_CASE("parse: errors name the line") {
    int line = 0;
    CHECK(parse_error("4 2\n0 1\n2 3\n") == ErrorCode::Disconnected);
    CHECK(parse_error("3 3\n0 1\n1 1\n1 2\n", &line) == ErrorCode::SelfLoop);
    CHECK(line == 3);
    CHECK(parse_error("3 3\n0 1\n1 2\n# x\n2 1\n", &line) == ErrorCode::DuplicateEdge);
    CHECK(line == 5);
    CHECK(parse_error("2 1\n0 1 1.5\n", &line) == ErrorCode::Malformed);
    CHECK(line == 2);
    CHECK(parse_error("2 1\n0 7\n") == ErrorCode::Malformed);
    CHECK(parse_error("3 3\n0 1\n1 2\n") == ErrorCode::Malformed);
    CHECK(parse_error("2 1\n0 1\n1 0 5 6\n") == ErrorCode::Malformed);
    CHECK(parse_error("") == ErrorCode::Malformed);
    CHECK(parse_error("x y\n") == ErrorCode::Malformed);
}

TEST_CASE("parse: weights and round trip") {
    const Graph g = parse_graph("3 3\n0 1 4\n1 2 -2\n0 2\n");
    CHECK(g.weight(*g.edge_index(0, 1)) == 4);
    CHECK(g.weight(*g.edge_index(1, 2)) == -2);
    CHECK(g.weight(*g.edge_index(0, 2)) == 1);
    CHECK(parse_graph(format_graph(g)) == g);
    const Graph unit = fixtures::cycle(5);
    CHECK(format_graph(unit).find("0 1\n") != std::string::npos);
    CHECK(parse_graph(format_graph(unit)) == unit);
}

TEST_CASE("cut canonical form") {
    const Cut a = Cut::from_members(0b0101, 4);
    CHECK(a.members() == 0b1010);
    CHECK(a.index() == 0b101);
    CHECK(Cut::from_index(a.index(), 4) == a);
    CHECK(Cut::from_members(0b1111, 4).empty());
    CHECK(Cut::from_members(0, 4).empty());
}

TEST_CASE("cut_set examples") {
    const Graph k3 = fixtures::complete(3);
    CHECK(cut_set(k3, cut(k3, {1})).to_string() == "(1,0,1)");
    CHECK(cut_set(k3, cut(k3, {})).none());

    // C4 edge by edge: (0,1) and (2,3) cross {1,2}, (1,2) and (0,3) do not.
    const Graph c4 = fixtures::cycle(4);
    const CutVector v = cut_set(c4, cut(c4, {1, 2}));
    CHECK(v[*c4.edge_index(0, 1)]);
    CHECK_FALSE(v[*c4.edge_index(1, 2)]);
    CHECK(v[*c4.edge_index(2, 3)]);
    CHECK_FALSE(v[*c4.edge_index(0, 3)]);
}

TEST_CASE("sym_diff examples") {
    const Graph g = fixtures::path(5);
    const Cut s = cut(g, {1, 2});
    CHECK(sym_diff(cut(g, {}), s) == s);
    CHECK(sym_diff(s, s).empty());
    CHECK(sym_diff(s, cut(g, {2, 3})) == cut(g, {1, 3}));
    // {1} ^ {0,2} = {0,1,2}, whose canonical side is {3,4}.
    CHECK(sym_diff(cut(g, {1}), cut(g, {0, 2})) == cut(g, {3, 4}));
}

TEST_CASE("components examples") {
    const Graph c4 = fixtures::cycle(4);
    CHECK(components(c4, CutVector(4)).size() == 1);

    CutVector removed(4);
    removed.set(static_cast<std::size_t>(*c4.edge_index(0, 1)));
    removed.set(static_cast<std::size_t>(*c4.edge_index(2, 3)));
    const auto parts = components(c4, removed);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == 0b1001);
    CHECK(parts[1] == 0b0110);

    const Graph star = fixtures::make(4, {{0, 1}, {0, 2}, {0, 3}});
    CutVector all(3);
    for (int e = 0; e < 3; ++e)
        all.set(static_cast<std::size_t>(e));
    CHECK(components(star, all) == std::vector<VertexSet>{1, 2, 4, 8});
}

TEST_CASE("cut algebra properties, exhaustive up to 8 vertices") {
    Rng rng(11);
    for (int n = 2; n <= 8; ++n) {
        const Graph g = generate({GraphFamily::Random, n, {}, rng.next64(), 40});
        const auto edges = fixtures::edges_of(g);
        const std::uint64_t total = std::uint64_t{1} << (n - 1);
        std::set<std::vector<int>> distinct;
        for (std::uint64_t i = 0; i < total; ++i) {
            const Cut x = Cut::from_index(i, n);
            const CutVector vx = cut_set(g, x);
            CHECK(vx.to_vector() == oracle::cut_vector(edges, oracle::side_of(i, n)));
            // complement gives the same vector
            auto flipped = oracle::side_of(i, n);
            flipped.flip();
            CHECK(vx.to_vector() == oracle::cut_vector(edges, flipped));
            distinct.insert(vx.to_vector());
            for (std::uint64_t j = 0; j < total; ++j) {
                const Cut y = Cut::from_index(j, n);
                CHECK((cut_set(g, sym_diff(x, y)) == (vx ^ cut_set(g, y))));
            }
            CHECK(static_cast<int>(components(g, vx).size()) ==
                  oracle::components_without(n, edges, vx.to_vector()));
            CHECK(split_component_count(g, x.members()) == static_cast<int>(components(g, vx).size()));
            CHECK(split_components(g, x.members()) == components(g, vx));
        }
        CHECK(distinct.size() == total);
        CHECK(components(g, CutVector(static_cast<std::size_t>(g.edge_count()))).size() == 1);
    }
}

TEST_CASE("classify examples") {
    const GraphClass p4 = classify(fixtures::path(4));
    CHECK(p4.tree);
    CHECK(p4.cactus);
    CHECK(p4.almost_tree(1));
    CHECK(p4.almost_tree(2));
    CHECK(p4.most_specific == ClassTag::Tree);

    const GraphClass drawn = classify(fixtures::drawn_almost_tree());
    CHECK_FALSE(drawn.cactus);
    CHECK(drawn.almost_tree(2));
    CHECK(drawn.max_block_excess == 2);
    CHECK(drawn.most_specific == ClassTag::AlmostTree2);

    const GraphClass cactus = classify(fixtures::drawn_cactus());
    CHECK(cactus.cactus);
    CHECK_FALSE(cactus.tree);
    CHECK(cactus.most_specific == ClassTag::Cactus);

    const GraphClass k23 = classify(fixtures::multipartite({2, 3}));
    CHECK(k23.complete_bipartite());
    auto sizes = k23.part_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
    CHECK(k23.most_specific == ClassTag::CompleteBipartite);

    CHECK(classify(fixtures::cycle(6)).most_specific == ClassTag::Cycle);
    CHECK(classify(fixtures::complete(5)).most_specific == ClassTag::Complete);
    CHECK(classify(fixtures::multipartite({2, 2, 3})).most_specific == ClassTag::CompleteMultipartite);
    CHECK(classify(fixtures::nonadjacent_pentagon()).most_specific == ClassTag::Other);
    // the other pentagon misses 0-3 and 2-4 only: it is K1,2,2
    CHECK(classify(fixtures::adjacent_pentagon()).part_sizes() == std::vector<int>{2, 2, 1});
}

TEST_CASE("multipartite parts ordered by size then smallest vertex") {
    const GraphClass cls = classify(fixtures::multipartite({2, 3, 3}));
    REQUIRE(cls.parts.size() == 3);
    CHECK(cls.parts[0] == 0b00000011100);
    CHECK(cls.parts[1] == 0b11100000);
    CHECK(cls.parts[2] == 0b11);
}

TEST_CASE("classify agrees with the cycle-enumeration oracle") {
    const GraphFamily families[] = {GraphFamily::Tree, GraphFamily::Cactus, GraphFamily::AlmostTree2,
                                    GraphFamily::Random};
    for (auto family : families)
        for (std::uint64_t seed = 0; seed < 30; ++seed)
            for (int n : {3, 6, 9}) {
                const Graph g = generate({family, n, {}, seed, 15});
                const auto edges = fixtures::edges_of(g);
                const GraphClass cls = classify(g);
                CAPTURE(format_graph(g));
                CHECK(cls.max_block_excess == oracle::max_block_excess(n, edges));
                CHECK(cls.cactus == oracle::is_cactus(n, edges));
                CHECK(cls.tree == (g.edge_count() == n - 1));
                CHECK((!cls.tree || cls.cactus));
                CHECK((!cls.cactus || cls.almost_tree(2)));
                auto parts = oracle::multipartite_parts(n, edges);
                auto mine = cls.part_sizes();
                std::sort(parts.begin(), parts.end());
                std::sort(mine.begin(), mine.end());
                if (parts.size() >= 2)
                    CHECK(mine == parts);
                else
                    CHECK(mine.empty());
            }
}

TEST_CASE("biconnected components of a long path use no recursion") {
    const Graph g = fixtures::path(64);
    const auto blocks = biconnected_components(g);
    CHECK(blocks.size() == 63);
    CHECK(classify(g).tree);
}

#include <doctest.h>

#include "../fixtures.hpp"

using namespace cutpoly;
using fixtures::cut;

TEST_CASE("brm examples") {
    const BinaryMatrix m5 = brm(5);
    CHECK(m5.cols() == 3);
    CHECK(m5.row_bits(2) == std::vector<int>{0, 1, 1});

    const BinaryMatrix m1 = brm(1);
    CHECK(m1.rows() == 1);
    CHECK(m1.row_bits(0) == std::vector<int>{1});

    // power of two: width is promoted so row 4 is not zero
    const BinaryMatrix m4 = brm(4);
    CHECK(m4.cols() == 3);
    CHECK(m4.row_bits(0) == std::vector<int>{0, 0, 1});
    CHECK(m4.row_bits(1) == std::vector<int>{0, 1, 0});
    CHECK(m4.row_bits(2) == std::vector<int>{0, 1, 1});
    CHECK(m4.row_bits(3) == std::vector<int>{1, 0, 0});
}

TEST_CASE("brm rows are binary expansions, distinct and non-zero") {
    for (int k = 1; k <= 64; ++k) {
        const BinaryMatrix m = brm(k);
        int width = 0;
        while ((1 << width) <= k)
            ++width;
        CHECK(m.cols() == width);
        std::set<std::vector<int>> rows;
        for (int i = 1; i <= k; ++i) {
            CHECK(m.row_bits(i - 1) == oracle::binary_digits(static_cast<std::uint64_t>(i), width));
            rows.insert(m.row_bits(i - 1));
        }
        CHECK(rows.size() == static_cast<std::size_t>(k));
        CHECK_FALSE(rows.count(std::vector<int>(static_cast<std::size_t>(width), 0)));
    }
}

TEST_CASE("brm_star examples") {
    const BinaryMatrix m = brm_star(5);
    REQUIRE(m.cols() == 4);
    const std::vector<std::vector<int>> printed{
        {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}, {1, 0, 0, 0}};
    for (int r = 0; r < 5; ++r)
        CHECK(m.row_bits(r) == printed[static_cast<std::size_t>(r)]);

    CHECK(brm_star(1).row_bits(0) == std::vector<int>{1});

    const BinaryMatrix m8 = brm_star(8);
    for (int r = 0; r < 8; ++r) {
        const auto bits = m8.row_bits(r);
        CHECK(std::accumulate(bits.begin(), bits.end(), 0) % 2 == 1);
    }
}

TEST_CASE("brm_star: no 1, 2 or 3 rows sum to zero, k up to 64") {
    for (int k = 1; k <= 64; ++k) {
        const BinaryMatrix m = brm_star(k);
        CHECK_FALSE(find_zero_row_sum(m, 3));
        // the same property by a plain triple loop over digit vectors
        bool zero = false;
        for (int a = 0; a < k && !zero; ++a) {
            const auto ra = m.row_bits(a);
            zero = std::count(ra.begin(), ra.end(), 1) == 0;
            for (int b = a + 1; b < k && !zero; ++b) {
                const auto rb = m.row_bits(b);
                zero = ra == rb;
                for (int c = b + 1; c < k && !zero; ++c) {
                    const auto rc = m.row_bits(c);
                    bool all = true;
                    for (int col = 0; col < m.cols(); ++col)
                        all = all && ((ra[col] + rb[col] + rc[col]) % 2 == 0);
                    zero = all;
                }
            }
        }
        CHECK_FALSE(zero);
    }
    // plain BRM does have such triples: rows 1, 2, 3
    const auto triple = find_zero_row_sum(brm(3), 3);
    REQUIRE(triple);
    CHECK(*triple == std::vector<int>{0, 1, 2});
}

TEST_CASE("brm_coloring") {
    const Graph c4 = fixtures::cycle(4);
    const SkeletonGraph s = build_skeleton(c4);
    const Coloring col = brm_coloring(c4, s);
    CHECK(col.width == 3);
    CHECK(col.distinct_count() <= 8);
    CHECK(verify_coloring(s, col).proper);
    CHECK(col.colors[0] == 0);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = generate({GraphFamily::Cactus, 9, {}, seed});
        const SkeletonGraph sg = build_skeleton(g);
        CHECK(verify_coloring(sg, brm_coloring(g, sg)).proper);
    }

    const Graph k4 = fixtures::complete(4);
    CHECK_THROWS_AS(brm_coloring(k4, build_skeleton(k4)), Error);
}

TEST_CASE("brm_star_coloring") {
    const Graph c5 = fixtures::cycle(5);
    const SkeletonGraph s = build_skeleton(c5);
    const Coloring col = brm_star_coloring(c5, s);
    CHECK(col.width == 4);
    CHECK(col.distinct_count() <= 16);
    CHECK(verify_coloring(s, col).proper);
    CHECK(col.colors[0] == 0);

    const Graph drawn = fixtures::drawn_almost_tree();
    const SkeletonGraph sd = build_skeleton(drawn);
    const Coloring cd = brm_star_coloring(drawn, sd);
    CHECK(verify_coloring(sd, cd).proper);
    CHECK(cd.distinct_count() <= 4 * 17);

    const Graph k5 = fixtures::complete(5);
    CHECK_THROWS_AS(brm_star_coloring(k5, build_skeleton(k5)), Error);
}

TEST_CASE("hamming_ball_clique") {
    const Graph c4 = fixtures::cycle(4);
    const CliqueFamily f4 = hamming_ball_clique(c4);
    CHECK(f4.kind == CliqueKind::HammingBall);
    REQUIRE(f4.cuts.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(cut_set(c4, f4.cuts[i]).hamming_distance(cut_set(c4, f4.cuts[j])) == 2);

    const Graph c3 = fixtures::cycle(3);
    CHECK(verify_clique(build_skeleton(c3), hamming_ball_clique(c3).indices()).valid);

    const Graph c6 = fixtures::cycle(6);
    const SkeletonGraph s6 = build_skeleton(c6);
    CHECK(hamming_ball_clique(c6).cuts.size() == 6);
    CHECK(clique_number(s6).size >= 6);

    for (int n = 3; n <= 12; ++n) {
        const Graph g = fixtures::cycle(n);
        const CliqueFamily f = hamming_ball_clique(g);
        CHECK(f.cuts.size() == static_cast<std::size_t>(n));
        CHECK(verify_clique(build_skeleton(g), f.indices()).valid);
        // a relabelled cycle walks the same way
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.rbegin(), perm.rend(), 0);
        const Graph r = relabel(g, perm);
        CHECK(verify_clique(build_skeleton(r), hamming_ball_clique(r).indices()).valid);
    }

    CHECK_THROWS_AS(hamming_ball_clique(fixtures::path(4)), Error);
}

TEST_CASE("symmetric_cut_clique: K4,4 contains {3,7} and {0,4}") {
    const Graph g = fixtures::multipartite({4, 4});
    const CliqueFamily f = symmetric_cut_clique(g);
    CHECK(f.kind == CliqueKind::Symmetric);
    CHECK(f.cuts.size() == 8);
    const Cut x = cut(g, {3, 7}), y = cut(g, {0, 4});
    CHECK(std::find(f.cuts.begin(), f.cuts.end(), x) != f.cuts.end());
    CHECK(std::find(f.cuts.begin(), f.cuts.end(), y) != f.cuts.end());
    CHECK(components(g, cut_set(g, sym_diff(x, y))).size() == 2);
    CHECK(verify_clique(build_skeleton(g), f.indices()).valid);
}

TEST_CASE("symmetric_cut_clique small cases") {
    const Graph k22 = fixtures::multipartite({2, 2});
    const CliqueFamily f = symmetric_cut_clique(k22);
    REQUIRE(f.cuts.size() == 2);
    CHECK(is_adjacent(k22, f.cuts[0], f.cuts[1]));

    const Graph k233 = fixtures::multipartite({2, 3, 3});
    const CliqueFamily f3 = symmetric_cut_clique(k233);
    CHECK(f3.cuts.size() == 4);
    CHECK(verify_clique(build_skeleton(k233), f3.indices()).valid);

    CHECK_THROWS_AS(symmetric_cut_clique(fixtures::multipartite({1, 3})), Error);
    CHECK_THROWS_AS(symmetric_cut_clique(fixtures::multipartite({2, 1, 3})), Error);
    CHECK_THROWS_AS(symmetric_cut_clique(fixtures::cycle(5)), Error);
}

TEST_CASE("symmetric_cut_clique on every multipartite graph up to 12 vertices") {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    // non-increasing part sizes >= 2, at least two parts, total <= 12
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (cur.size() >= 2)
            all.push_back(cur);
        for (int p = std::min(left, maxpart); p >= 2; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, 12, 12);
    CHECK(all.size() > 20);
    for (const auto& parts : all) {
        const Graph g = fixtures::multipartite(parts);
        const CliqueFamily f = symmetric_cut_clique(g);
        CAPTURE(parts);
        CHECK(f.cuts.size() == (std::size_t{1} << (parts[1] - 1)));
        CHECK(verify_clique(build_skeleton(g), f.indices()).valid);
    }
}

TEST_CASE("bounds_for examples") {
    const BoundsRow tree = bounds_for(generate({GraphFamily::Tree, 6, {}, 1}));
    CHECK(tree.cls == ClassTag::Tree);
    CHECK(tree.diameter_lower.value == 5);
    CHECK(tree.diameter_upper.value == 5);
    CHECK(tree.clique_lower.value == 2);
    CHECK(tree.clique_upper.value == 2);

    const BoundsRow k35 = bounds_for(fixtures::multipartite({3, 5}));
    CHECK(k35.cls == ClassTag::CompleteBipartite);
    CHECK(k35.diameter_lower.value == 2);
    CHECK(k35.diameter_upper.value == 2);
    CHECK(k35.clique_lower.value == 4);

    const BoundsRow k5 = bounds_for(fixtures::complete(5));
    CHECK(k5.diameter_lower.value == 1);
    CHECK(k5.diameter_upper.value == 1);
    CHECK(k5.clique_lower.value == 16);
    CHECK(k5.clique_upper.value == 16);

    const BoundsRow other = bounds_for(fixtures::nonadjacent_pentagon());
    CHECK(other.cls == ClassTag::Other);
    CHECK(other.diameter_upper.value == 4);
    for (const auto* b : {&tree.diameter_lower, &k35.clique_lower, &k5.clique_upper})
        CHECK_FALSE(b->source.empty());
}

TEST_CASE("bounds bracket the exact metrics on generated instances") {
    std::vector<GeneratorSpec> specs;
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        for (auto family : {GraphFamily::Tree, GraphFamily::Cactus, GraphFamily::AlmostTree2, GraphFamily::Random})
            specs.push_back({family, 4 + static_cast<int>(seed), {}, seed});
    for (int n = 3; n <= 8; ++n) {
        specs.push_back({GraphFamily::Cycle, n});
        specs.push_back({GraphFamily::Complete, n});
    }
    specs.push_back({GraphFamily::CompleteBipartite, 0, {3, 4}});
    specs.push_back({GraphFamily::CompleteMultipartite, 0, {2, 2, 3}});
    for (const auto& spec : specs) {
        const Graph g = generate(spec);
        const BoundsRow row = bounds_for(g);
        CHECK(row.diameter_lower.value <= row.diameter_upper.value);
        CHECK(row.clique_lower.value <= row.clique_upper.value);
        const Metrics m = compute_metrics(build_skeleton(g));
        CAPTURE(format_graph(g));
        CHECK(row.brackets(static_cast<std::uint64_t>(m.diameter), m.clique_number));
    }
}

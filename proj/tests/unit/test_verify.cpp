#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"

using namespace rainbow;

namespace {

std::set<int> path_colors(const Graph& g, const EdgeColoring& c, const Path& p)
{
    std::set<int> out;
    for (std::size_t i = 1; i < p.size(); ++i) {
        out.insert(c.color(g.edge_id(p[i - 1], p[i])));
    }
    return out;
}

// Small corpus: every connected graph on 3..5 vertices plus a few named ones.
std::vector<Graph> corpus()
{
    std::vector<Graph> out;
    for (int n = 3; n <= 5; ++n) {
        for (auto& g : oracle::connected_graphs(n)) {
            out.push_back(std::move(g));
        }
    }
    out.push_back(build_cycle(6));
    out.push_back(build_cycle(7));
    out.push_back(build_path(6));
    return out;
}

} // namespace

TEST_CASE("exists_rainbow_path on paths")
{
    const Graph p3 = build_path(3);
    CHECK(exists_rainbow_path(p3, EdgeColoring(2, {1, 2}), 0, 2) == Path{0, 1, 2});
    CHECK_FALSE(exists_rainbow_path(p3, EdgeColoring(2, {1, 1}), 0, 2));
}

TEST_CASE("exists_rainbow_path between same-parity cycle vertices of G(3,3)")
{
    const auto wg = build_witness({3, 3});
    const auto c = rc_coloring(wg);
    const Vertex v1 = wg.cycle_vertex(1);
    const Vertex v3 = wg.cycle_vertex(3);
    const auto path = exists_rainbow_path(wg.graph(), c, v1, v3);
    REQUIRE(path);
    CHECK(path->size() == 4);
    CHECK(std::count(path->begin(), path->end(), wg.v_id()) == 1);
    CHECK(wg.cycle_position((*path)[1]) + wg.cycle_position((*path)[2]) > 0);
    CHECK(path_colors(wg.graph(), c, *path) == std::set<int>{1, 2, 3});
    CHECK(is_rainbow_path(wg.graph(), c, *path));
    // no rainbow path of length 2 exists: w, v, and v_2 all repeat a color
    for (Vertex mid : {wg.w_id(), wg.v_id(), wg.cycle_vertex(2)}) {
        CHECK_FALSE(is_rainbow_path(wg.graph(), c, {v1, mid, v3}));
    }
}

TEST_CASE("is_rainbow_connected")
{
    for (int n = 2; n <= 6; ++n) {
        const Graph k = build_complete(n);
        const auto report = is_rainbow_connected(k, EdgeColoring::constant(k.edge_count()));
        CHECK(report.passed);
        CHECK(report.checked_pairs == static_cast<std::uint64_t>(n * (n - 1) / 2));
    }

    const auto wg = build_witness({3, 3});
    CHECK(is_rainbow_connected(wg.graph(), rc_coloring(wg)).passed);

    const Graph c6 = build_cycle(6);
    const auto report = is_rainbow_connected(c6, EdgeColoring::constant(6));
    CHECK_FALSE(report.passed);
    REQUIRE(report.violating_pair);
    CHECK(*report.violating_pair == VertexPair{0, 2});
    CHECK(bfs_distances(c6, 0).dist[2] >= 2);
    CHECK(report.checked_pairs == 2);
}

TEST_CASE("exists_rainbow_geodesic")
{
    // alternating around C_4: 0-1:1, 1-2:2, 2-3:1, 3-0:2 in canonical edge order
    const Graph c4 = build_cycle(4);
    const EdgeColoring alternating(2, {1, 2, 2, 1});
    const auto geo = exists_rainbow_geodesic(c4, alternating, 0, 2);
    REQUIRE(geo);
    CHECK(geo->size() == 3);
    CHECK(path_colors(c4, alternating, *geo) == std::set<int>{1, 2});

    const auto wg = build_witness({3, 3});
    const auto src = src_coloring(wg);
    const Vertex v1 = wg.cycle_vertex(1);
    const Vertex v5 = wg.cycle_vertex(5);
    CHECK(exists_rainbow_geodesic(wg.graph(), src, v1, v5) == Path{v1, wg.w_id(), v5});
    CHECK(path_colors(wg.graph(), src, {v1, wg.w_id(), v5}) == std::set<int>{1, 2});
    CHECK(path_colors(wg.graph(), src, {v1, wg.v_id(), v5}) == std::set<int>{2});

    const Graph p4 = build_path(4);
    CHECK(exists_rainbow_geodesic(p4, EdgeColoring::injective(3), 0, 3) == Path{0, 1, 2, 3});
}

TEST_CASE("is_strong_rainbow_connected")
{
    const auto wg = build_witness({3, 3});
    CHECK(is_strong_rainbow_connected(wg.graph(), src_coloring(wg)).passed);

    const auto rc_report = is_strong_rainbow_connected(wg.graph(), rc_coloring(wg));
    CHECK_FALSE(rc_report.passed);
    REQUIRE(rc_report.violating_pair);
    const auto [x, y] = *rc_report.violating_pair;
    CHECK_FALSE(oracle::has_rainbow_geodesic(wg.graph(), rc_coloring(wg), x, y,
                                             oracle::floyd_warshall(wg.graph().vertex_count(), wg.graph().edges())));

    for (const Graph& g : corpus()) {
        CHECK(is_strong_rainbow_connected(g, EdgeColoring::injective(g.edge_count())).passed);
    }
}

TEST_CASE("reports carry certificate paths on request")
{
    const auto wg = build_witness({3, 4});
    const Graph& g = wg.graph();
    const auto dist = oracle::floyd_warshall(g.vertex_count(), g.edges());

    const auto rc = rc_coloring(wg);
    const auto weak = is_rainbow_connected(g, rc, {.collect_paths = true});
    REQUIRE(weak.passed);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    CHECK(weak.witness_paths.size() == n * (n - 1) / 2);
    for (const auto& [pair, path] : weak.witness_paths) {
        REQUIRE(path.front() == pair.first);
        REQUIRE(path.back() == pair.second);
        REQUIRE(is_rainbow_path(g, rc, path));
    }

    const auto src = src_coloring(wg);
    const auto strong = is_strong_rainbow_connected(g, src, {.collect_paths = true});
    REQUIRE(strong.passed);
    for (const auto& [pair, path] : strong.witness_paths) {
        REQUIRE(is_rainbow_path(g, src, path));
        REQUIRE(static_cast<int>(path.size()) - 1 == dist[pair.first][pair.second]);
    }
}

TEST_CASE("errors")
{
    const Graph p3 = build_path(3);
    CHECK_THROWS_AS(is_rainbow_connected(p3, EdgeColoring::constant(3)), BindingError);
    CHECK_THROWS_AS(exists_rainbow_geodesic(p3, EdgeColoring::constant(1), 0, 2), BindingError);
    CHECK_THROWS_AS(exists_rainbow_path(p3, EdgeColoring::constant(2), 1, 1), InvalidParameter);
    CHECK_THROWS_AS(exists_rainbow_path(p3, EdgeColoring::constant(2), 0, 3), InvalidParameter);
    CHECK_THROWS_AS(is_strong_rainbow_connected(build_path(1), EdgeColoring::constant(0)), InvalidParameter);
}

TEST_CASE("more than 64 colors")
{
    // P_67 colored injectively (66 colors) plus a pendant edge at the far end reusing color 1
    std::vector<Edge> edges = build_path(67).edges();
    edges.push_back({66, 67});
    const Graph g = Graph::from_pairs(68, edges);
    std::vector<int> colors(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        colors[id] = g.edge(id).v == 67 ? 1 : g.edge(id).v;
    }
    const EdgeColoring c(66, colors);
    REQUIRE(used_colors(c).size() == 66);

    const auto weak = is_rainbow_connected(g, c);
    CHECK_FALSE(weak.passed);
    CHECK(*weak.violating_pair == VertexPair{0, 67});
    CHECK(weak.checked_pairs == 67);
    CHECK(exists_rainbow_path(g, c, 1, 67).has_value());
    CHECK_FALSE(exists_rainbow_geodesic(g, c, 0, 67));

    const auto strong = is_strong_rainbow_connected(g, c);
    CHECK(strong.violating_pair == weak.violating_pair);

    const Graph p = build_path(67);
    CHECK(is_strong_rainbow_connected(p, EdgeColoring::injective(66)).passed);
    CHECK(is_rainbow_connected(build_complete(12), EdgeColoring::injective(66)).passed);
}

TEST_CASE("property: agreement with naive path enumeration")
{
    std::mt19937_64 rng(2024);
    for (const Graph& g : corpus()) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto c = oracle::random_coloring(g.edge_count(), rng);
            for (bool strong : {false, true}) {
                const auto report = strong ? is_strong_rainbow_connected(g, c) : is_rainbow_connected(g, c);
                const auto naive = oracle::naive_verify(g, c, strong);
                REQUIRE(report.passed == naive.passed);
                REQUIRE(report.violating_pair == naive.violating_pair);
            }
        }
    }
}

TEST_CASE("property: strong implies weak, relabeling and refinement preserve verdicts")
{
    std::mt19937_64 rng(99);
    for (const Graph& g : corpus()) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto c = oracle::random_coloring(g.edge_count(), rng);
            const bool weak = is_rainbow_connected(g, c).passed;
            const bool strong = is_strong_rainbow_connected(g, c).passed;
            if (strong) {
                REQUIRE(weak);
            }

            std::vector<int> perm(static_cast<std::size_t>(c.palette_size()));
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto permuted = c.relabeled(perm);
            REQUIRE(is_rainbow_connected(g, permuted).passed == weak);
            REQUIRE(is_strong_rainbow_connected(g, permuted).passed == strong);

            // split the class of edge 0's color into fresh colors
            const int target = c.color(0);
            std::vector<int> split(c.colors().begin(), c.colors().end());
            int fresh = c.palette_size();
            for (int& x : split) {
                if (x == target) {
                    x = ++fresh;
                }
            }
            const EdgeColoring refined(fresh, split);
            if (weak) {
                REQUIRE(is_rainbow_connected(g, refined).passed);
            }
            if (strong) {
                REQUIRE(is_strong_rainbow_connected(g, refined).passed);
            }
        }
    }
}

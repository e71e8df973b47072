#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphiq/graphs.hpp"
#include "graphiq/landmarks.hpp"
#include "graphiq/predicates.hpp"
#include "graphiq/rng.hpp"
#include "oracles.hpp"

using namespace graphiq;

namespace {

PointCloud cloud_of(std::vector<Point> pts) {
    PointCloud c;
    c.points = std::move(pts);
    return c;
}

std::set<std::pair<int, int>> edge_set(const WeightedGraph& g) {
    std::set<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.insert({static_cast<int>(e[0]) - 1, static_cast<int>(e[1]) - 1});
    return edges;
}

std::set<std::pair<int, int>> triangle_edges(const std::vector<Triangle>& tris) {
    std::set<std::pair<int, int>> edges;
    for (const auto& t : tris) {
        edges.insert({std::min(t.a, t.b), std::max(t.a, t.b)});
        edges.insert({std::min(t.b, t.c), std::max(t.b, t.c)});
        edges.insert({std::min(t.a, t.c), std::max(t.a, t.c)});
    }
    return edges;
}

PointCloud random_cloud(int n, Rng& rng, double span = 100.0) {
    PointCloud c;
    for (int k = 0; k < n; ++k) c.points.push_back({rng.uniform(0, span), rng.uniform(0, span)});
    return c;
}

}  // namespace

TEST_CASE("three non-collinear points give the single triangle = complete graph") {
    const auto cloud = cloud_of({{0, 0}, {4, 0}, {1, 3}});
    const auto tris = delaunay_triangulation(cloud);
    REQUIRE(tris.size() == 1);
    const auto meshed = delaunay_graph(cloud);
    const auto complete = complete_graph(cloud);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(meshed.at(i, j) == complete.at(i, j));
}

TEST_CASE("unit square: 4 boundary edges plus exactly one diagonal") {
    const auto cloud = cloud_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto g = delaunay_graph(cloud);
    const auto edges = edge_set(g);
    REQUIRE(edges.size() == 5);
    CHECK(edges.count({0, 1}));
    CHECK(edges.count({1, 2}));
    CHECK(edges.count({2, 3}));
    CHECK(edges.count({0, 3}));
    // brute-force check over both diagonals: the tie-break lowers the lifted
    // coordinate of the lex-min corner (0,0), so the kept diagonal is 0-2
    const bool has_02 = edges.count({0, 2}) > 0;
    const bool has_13 = edges.count({1, 3}) > 0;
    CHECK(has_02 != has_13);
    CHECK(has_02);
    CHECK(g.at(0, 2) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(delaunay_triangulation(cloud_of({{0, 0}, {1, 1}})), ContractError);
    CHECK_THROWS_AS(delaunay_triangulation(cloud_of({{0, 0}, {1, 1}, {2, 2}, {3, 3}})),
                    DegenerateInputError);
    CHECK_THROWS_WITH_AS(
        delaunay_triangulation(cloud_of({{0, 0}, {1, 1}, {2, 5}, {1, 1}})),
        doctest::Contains("indices 1 and 3"), DegenerateInputError);
}

TEST_CASE("collinear points on the hull are triangulated fine") {
    // (1,0) lies on the hull segment (0,0)-(2,0); (3,0) extends it
    const auto cloud = cloud_of({{0, 0}, {2, 0}, {1, 1}, {1, 0}, {3, 0}});
    const auto tris = delaunay_triangulation(cloud);
    const auto edges = triangle_edges(tris);
    // every point participates
    std::set<int> used;
    for (const auto& [a, b] : edges) {
        used.insert(a);
        used.insert(b);
    }
    CHECK(used.size() == 5);
    // planarity bound
    CHECK(edges.size() <= 3 * 5 - 6);
    // matches the brute-force reference on this tie-free input
    const auto expected = triangle_edges(oracles::brute_force_delaunay(cloud));
    CHECK(edges == expected);
}

TEST_CASE("random clouds match the brute-force reference exactly") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(9));
        const auto cloud = random_cloud(n, rng);
        const auto tris = delaunay_triangulation(cloud);
        const auto expected = oracles::brute_force_delaunay(cloud);
        REQUIRE(tris.size() == expected.size());
        for (std::size_t k = 0; k < tris.size(); ++k) {
            CHECK(tris[k].a == expected[k].a);
            CHECK(tris[k].b == expected[k].b);
            CHECK(tris[k].c == expected[k].c);
        }
    }
}

TEST_CASE("every triangle satisfies the empty-circumcircle property") {
    Rng rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        const auto cloud = random_cloud(20, rng);
        const auto tris = delaunay_triangulation(cloud);
        for (const auto& t : tris) {
            Point a = cloud.points[t.a], b = cloud.points[t.b], c = cloud.points[t.c];
            if (geom::orient2d_sign(a, b, c) < 0) std::swap(b, c);
            for (int d = 0; d < 20; ++d) {
                if (d == t.a || d == t.b || d == t.c) continue;
                CHECK(geom::incircle_sign(a, b, c, cloud.points[d]) <= 0);
            }
        }
        CHECK(triangle_edges(tris).size() <= 3u * 20 - 6);
    }
}

TEST_CASE("meshed edges are a subset of the complete graph with equal weights") {
    Rng rng(99);
    const auto cloud = random_cloud(12, rng);
    const auto meshed = delaunay_graph(cloud);
    const auto complete = complete_graph(cloud);
    int meshed_edges = 0;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            if (meshed.at(i, j) != 0.0) {
                ++meshed_edges;
                CHECK(meshed.at(i, j) == complete.at(i, j));
            }
        }
    CHECK(meshed_edges < 12 * 11 / 2);
}

TEST_CASE("meshed adjacency vector is zero exactly at non-edges") {
    Rng rng(7);
    const auto cloud = random_cloud(8, rng);
    const auto tris = delaunay_triangulation(cloud);
    const auto edges = triangle_edges(tris);
    const auto vec = adjacency_vector(delaunay_graph(cloud));
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            const double w = vec.entries[edge_index(i, j, 8) - 1];
            if (edges.count({i - 1, j - 1}))
                CHECK(w > 0.0);
            else
                CHECK(w == 0.0);
        }
}

TEST_CASE("integer grids full of cocircular ties triangulate consistently") {
    // every unit square of the grid is a cocircular quadruple
    PointCloud grid;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) grid.points.push_back({double(x), double(y)});
    const auto tris = delaunay_triangulation(grid);
    // Euler: 2n - 2 - hull for a triangulation of the convex hull
    CHECK(tris.size() == 2 * 16 - 2 - 12);
    for (const auto& t : tris) {
        Point a = grid.points[t.a], b = grid.points[t.b], c = grid.points[t.c];
        if (geom::orient2d_sign(a, b, c) < 0) std::swap(b, c);
        for (int d = 0; d < 16; ++d) {
            if (d == t.a || d == t.b || d == t.c) continue;
            // non-strict emptiness: cocircular points may lie on the circle
            CHECK(geom::incircle_sign(a, b, c, grid.points[d]) <= 0);
        }
    }
    const auto edges = triangle_edges(tris);
    CHECK(edges.size() <= 3u * 16 - 6);
    // insertion-order independence: a reshuffled input yields the same edges
    // up to the index permutation
    PointCloud shuffled;
    std::vector<int> perm = {15, 3, 8, 0, 12, 7, 1, 11, 5, 14, 2, 9, 6, 13, 4, 10};
    for (int idx : perm) shuffled.points.push_back(grid.points[idx]);
    const auto tris2 = delaunay_triangulation(shuffled);
    std::set<std::pair<int, int>> edges2_in_grid_indices;
    for (const auto& [u, v] : triangle_edges(tris2)) {
        const int gu = perm[u], gv = perm[v];
        edges2_in_grid_indices.insert({std::min(gu, gv), std::max(gu, gv)});
    }
    CHECK(edges2_in_grid_indices == edges);
}

TEST_CASE("synthetic mouths triangulate at every subset size") {
    Rng face_rng(321);
    const PointCloud mouth = extract_mouth(synthesize_face(Label::happy, 1.4, face_rng));
    for (int n : {4, 7, 12, 20}) {
        Rng sel(1000 + n);
        const PointCloud sub = select_vertices(mouth, n, sel);
        const auto tris = delaunay_triangulation(sub);
        CHECK(!tris.empty());
        CHECK(triangle_edges(tris).size() <= static_cast<std::size_t>(3 * n - 6));
    }
}

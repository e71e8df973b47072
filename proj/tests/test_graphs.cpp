#include <doctest.h>

#include <cmath>
#include <set>

#include "graphiq/graphs.hpp"
#include "graphiq/rng.hpp"

using namespace graphiq;

namespace {

PointCloud cloud_of(std::vector<Point> pts) {
    PointCloud c;
    c.points = std::move(pts);
    return c;
}

}  // namespace

TEST_CASE("complete_graph computes Euclidean weights") {
    const auto g = complete_graph(cloud_of({{0, 0}, {3, 4}}));
    CHECK(g.at(0, 1) == doctest::Approx(5.0));
    CHECK(g.at(1, 0) == doctest::Approx(5.0));
    CHECK(g.at(0, 0) == 0.0);
    CHECK(g.at(1, 1) == 0.0);
}

TEST_CASE("complete_graph rejects fewer than 2 points") {
    CHECK_THROWS_AS(complete_graph(cloud_of({{0, 0}})), ContractError);
}

TEST_CASE("complete_graph is symmetric with zero diagonal and positive entries") {
    Rng rng(14);
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) pts.push_back({rng.uniform(0, 100), rng.uniform(0, 100)});
    const auto g = complete_graph(cloud_of(pts));
    for (int i = 0; i < 4; ++i) {
        CHECK(g.at(i, i) == 0.0);
        for (int j = 0; j < 4; ++j) {
            CHECK(g.at(i, j) == g.at(j, i));
            if (i != j) {
                // pairwise-distance oracle
                const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
                CHECK(g.at(i, j) == doctest::Approx(std::sqrt(dx * dx + dy * dy)));
                CHECK(g.at(i, j) > 0.0);
            }
        }
    }
}

TEST_CASE("edge_index matches the closed form on pinned cases") {
    CHECK(edge_index(1, 2, 4) == 1);
    CHECK(edge_index(3, 4, 4) == 6);
    CHECK_THROWS_AS(edge_index(2, 2, 4), ContractError);
    CHECK_THROWS_AS(edge_index(3, 2, 4), ContractError);
    CHECK_THROWS_AS(edge_index(1, 5, 4), ContractError);
}

TEST_CASE("edge_index is a bijection onto 1..n(n-1)/2 for n in [2, 20]") {
    for (int n = 2; n <= 20; ++n) {
        std::set<int> seen;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int k = edge_index(i, j, n);
                CHECK(k >= 1);
                CHECK(k <= n * (n - 1) / 2);
                CHECK(seen.insert(k).second);
            }
        CHECK(static_cast<int>(seen.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("adjacency_vector lays out the upper triangle row-major") {
    SUBCASE("n = 2 single weight") {
        const auto g = complete_graph(cloud_of({{0, 0}, {3, 4}}));
        const auto v = adjacency_vector(g);
        REQUIRE(v.entries.size() == 1);
        CHECK(v.entries[0] == doctest::Approx(5.0));
    }
    SUBCASE("n = 4 order (a12,a13,a14,a23,a24,a34)") {
        WeightedGraph g(4);
        int next = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.set(i, j, next++);
        const auto v = adjacency_vector(g);
        REQUIRE(v.entries.size() == 6);
        for (int k = 0; k < 6; ++k) CHECK(v.entries[k] == doctest::Approx(k + 1));
    }
}

TEST_CASE("adjacency_vector round-trips the matrix exactly") {
    Rng rng(55);
    std::vector<Point> pts;
    for (int k = 0; k < 7; ++k) pts.push_back({rng.uniform(0, 50), rng.uniform(0, 50)});
    const auto g = complete_graph(cloud_of(pts));
    const auto v = adjacency_vector(g);
    WeightedGraph rebuilt(7);
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            rebuilt.set(i - 1, j - 1, v.entries[edge_index(i, j, 7) - 1]);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(rebuilt.at(i, j) == g.at(i, j));
}

TEST_CASE("graph JSON lists n and nonzero edges with 1-based indices") {
    WeightedGraph g(3);
    g.set(0, 2, 2.5);
    const std::string json = graph_to_json(g);
    CHECK(json == R"({"edges":[[1,3,2.5]],"n":3})");
}

#include "graphiq/graphs.hpp"

#include <cmath>
#include <json.hpp>

namespace graphiq {

void WeightedGraph::set(int i, int j, double w) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw ContractError("WeightedGraph::set: invalid vertex pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
    if (!(w >= 0.0) || !std::isfinite(w))
        throw ContractError("WeightedGraph::set: weight must be finite and >= 0");
    weights_[static_cast<std::size_t>(i) * n_ + j] = w;
    weights_[static_cast<std::size_t>(j) * n_ + i] = w;
}

std::vector<std::array<double, 3>> WeightedGraph::edges() const {
    std::vector<std::array<double, 3>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != 0.0)
                out.push_back({static_cast<double>(i + 1), static_cast<double>(j + 1), at(i, j)});
    return out;
}

namespace {
double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }
}  // namespace

WeightedGraph complete_graph(const PointCloud& cloud) {
    const int n = static_cast<int>(cloud.points.size());
    if (n < 2) throw ContractError("complete_graph: need at least 2 points, got " + std::to_string(n));
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set(i, j, distance(cloud.points[i], cloud.points[j]));
    return g;
}

WeightedGraph delaunay_graph(const PointCloud& cloud) {
    const auto triangles = delaunay_triangulation(cloud);
    WeightedGraph g(static_cast<int>(cloud.points.size()));
    for (const auto& t : triangles) {
        g.set(t.a, t.b, distance(cloud.points[t.a], cloud.points[t.b]));
        g.set(t.b, t.c, distance(cloud.points[t.b], cloud.points[t.c]));
        g.set(t.a, t.c, distance(cloud.points[t.a], cloud.points[t.c]));
    }
    return g;
}

int edge_index(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n))
        throw ContractError("edge_index: require 1 <= i < j <= n, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j) + " n=" + std::to_string(n));
    return i * n - i * (i + 1) / 2 - n + j;
}

AdjacencyVector adjacency_vector(const WeightedGraph& graph) {
    const int n = graph.size();
    AdjacencyVector vec;
    vec.n = n;
    vec.entries.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            vec.entries[edge_index(i, j, n) - 1] = graph.at(i - 1, j - 1);
    return vec;
}

std::string graph_to_json(const WeightedGraph& graph) {
    nlohmann::json j;
    j["n"] = graph.size();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges())
        j["edges"].push_back({static_cast<int>(e[0]), static_cast<int>(e[1]), e[2]});
    return j.dump();
}

}  // namespace graphiq

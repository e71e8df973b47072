#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphiq/types.hpp"

namespace graphiq {

// Symmetric nonnegative weight matrix over n vertices, zero diagonal.
// Weights are Euclidean pixel distances.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n) : n_(n), weights_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return weights_[static_cast<std::size_t>(i) * n_ + j]; }

    // Sets both (i, j) and (j, i); i != j, w >= 0 and finite.
    void set(int i, int j, double w);

    // Upper-triangle edges (i < j) with nonzero weight, in row-major order.
    std::vector<std::array<double, 3>> edges() const;  // {i, j, w} with 1-based i, j

private:
    int n_ = 0;
    std::vector<double> weights_;
};

// Row-major upper triangle of a weighted adjacency matrix, flattened.
struct AdjacencyVector {
    int n = 0;                    // vertex count of the source graph
    std::vector<double> entries;  // length n(n-1)/2
};

// Triangle of a triangulation, vertex indices into the source cloud.
struct Triangle {
    int a, b, c;
};

// Pairwise-distance graph over all point pairs. Requires >= 2 points.
WeightedGraph complete_graph(const PointCloud& cloud);

// Delaunay triangulation by incremental insertion (Bowyer-Watson) with exact
// predicates; ties on cocircular point sets are broken deterministically.
// Requires >= 3 points, not all collinear, no duplicates.
std::vector<Triangle> delaunay_triangulation(const PointCloud& cloud);

// Graph whose edges are the Delaunay edges, weighted by Euclidean distance.
WeightedGraph delaunay_graph(const PointCloud& cloud);

// 1-based position of edge (i, j), i < j, in the row-major upper-triangle
// order: k = i*n - i(i+1)/2 - n + j. Bijective onto [1, n(n-1)/2].
int edge_index(int i, int j, int n);

// entries[edge_index(i,j,n) - 1] = weights[i][j] for all i < j.
AdjacencyVector adjacency_vector(const WeightedGraph& graph);

// {"n": n, "edges": [[i, j, w], ...]} with 1-based vertex indices.
std::string graph_to_json(const WeightedGraph& graph);

}  // namespace graphiq

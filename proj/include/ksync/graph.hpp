#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ksync/rng.hpp"

namespace ksync {

/// Marker returned by diameter() for disconnected graphs.
inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

/// Undirected simple graph. Vertices are 0-indexed internally; file formats
/// and human-facing output use 1-indexing. Immutable after construction.
class Graph {
public:
    /// Builds a graph on n vertices from an edge list. Edge order and
    /// endpoint order are canonicalized (i<j, sorted, duplicates merged).
    /// Throws std::invalid_argument on self-loops or out-of-range vertices.
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    static Graph complete(int n);
    static Graph path(int n);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edge list: pairs (i,j) with i<j, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int i, int j) const { return adj_[flat(i, j)] != 0; }
    const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }
    int degree(int i) const { return static_cast<int>(nbrs_[i].size()); }

    /// Vertices adjacent to both i and j, ascending.
    std::vector<int> common_neighbors(int i, int j) const;

    /// Position of edge {i,j} in edges(), or -1 if absent.
    int edge_index(int i, int j) const;

private:
    std::size_t flat(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::pair<int, int>> edges_;
};

/// Pairwise structural weights: values(i,j) = #common neighbors of i and j,
/// plus 2 if i~j. Every off-diagonal entry is >= 1 iff the diameter is <= 2.
/// Diagonal is 0 by convention.
class PMatrix {
public:
    PMatrix(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int operator()(int i, int j) const {
        return values_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, int v) {
        values_[static_cast<std::size_t>(i) * n_ + j] = v;
        values_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

private:
    int n_;
    std::vector<int> values_;
};

/// Maximum over vertex pairs of the shortest-path edge count (BFS from every
/// vertex); kInfiniteDiameter when the graph is disconnected.
int diameter(const Graph& g);

PMatrix p_matrix(const Graph& g);

/// Graph Laplacian diag(deg) - A, row-major n*n.
std::vector<double> laplacian(const Graph& g);

/// Second-smallest Laplacian eigenvalue. 0 for disconnected graphs; values
/// below the eigensolver tolerance are clamped to 0.
double algebraic_connectivity(const Graph& g);

/// Applies the transposed incidence matrix of the complete graph on
/// n = x.size() vertices: the vector of differences x_i - x_j over all pairs
/// i<j in lexicographic order. Length n(n-1)/2.
std::vector<double> complete_incidence_transpose_apply(std::span<const double> x);

/// Grows a graph from the empty edge set by inserting uniformly random
/// absent edges, stopping the first time the diameter equals two.
/// Deterministic given the generator state. Requires n >= 3.
Graph random_diameter2_graph(int n, SplitMix64& rng);

}  // namespace ksync

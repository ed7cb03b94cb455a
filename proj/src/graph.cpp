#include "ksync/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "ksync/jacobi.hpp"

namespace ksync {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    for (auto& [i, j] : edge_list) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (i == j) throw std::invalid_argument("Graph: self-loop");
        if (i > j) std::swap(i, j);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.assign(n, {});
    for (const auto& [i, j] : edges_) {
        adj_[flat(i, j)] = 1;
        adj_[flat(j, i)] = 1;
        nbrs_[i].push_back(j);
        nbrs_[j].push_back(i);
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

std::vector<int> Graph::common_neighbors(int i, int j) const {
    std::vector<int> out;
    const auto& a = nbrs_[i];
    const auto& b = nbrs_[j];
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

int Graph::edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(),
                                     std::make_pair(i, j));
    if (it == edges_.end() || *it != std::make_pair(i, j)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int diameter(const Graph& g) {
    const int n = g.n();
    int worst = 0;
    std::vector<int> dist(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) return kInfiniteDiameter;
            worst = std::max(worst, dist[v]);
        }
    }
    return worst;
}

PMatrix p_matrix(const Graph& g) {
    const int n = g.n();
    PMatrix p(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int common = static_cast<int>(g.common_neighbors(i, j).size());
            p.set(i, j, common + 2 * (g.adjacent(i, j) ? 1 : 0));
        }
    }
    return p;
}

std::vector<double> laplacian(const Graph& g) {
    const int n = g.n();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        l[static_cast<std::size_t>(i) * n + i] = g.degree(i);
        for (int j : g.neighbors(i)) l[static_cast<std::size_t>(i) * n + j] = -1.0;
    }
    return l;
}

double algebraic_connectivity(const Graph& g) {
    if (g.n() < 2)
        throw std::invalid_argument("algebraic_connectivity: need n >= 2");
    const auto eig = symmetric_eigenvalues(laplacian(g), g.n());
    const double lambda2 = eig[1];
    return (lambda2 < 1e-10) ? 0.0 : lambda2;
}

std::vector<double> complete_incidence_transpose_apply(std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    if (n < 2)
        throw std::invalid_argument("complete_incidence_transpose_apply: need n >= 2");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(x[i] - x[j]);
    return out;
}

Graph random_diameter2_graph(int n, SplitMix64& rng) {
    if (n < 3)
        throw std::invalid_argument("random_diameter2_graph: need n >= 3");
    std::vector<std::pair<int, int>> absent;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) absent.emplace_back(i, j);

    std::vector<std::pair<int, int>> chosen;
    while (!absent.empty()) {
        const std::size_t k = rng.below(absent.size());
        chosen.push_back(absent[k]);
        absent.erase(absent.begin() + static_cast<std::ptrdiff_t>(k));
        Graph g(n, chosen);
        if (diameter(g) == 2) return g;
    }
    // Unreachable: the complete graph minus one edge already has diameter 2,
    // so the loop stops before the edge pool is exhausted.
    throw std::logic_error("random_diameter2_graph: edge pool exhausted");
}

}  // namespace ksync

#ifndef WFTG_TEST_SUPPORT_HPP
#define WFTG_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "wftg/graph.hpp"

namespace wftg::testing {

inline Graph graph_from_edges(Eigen::Index n,
                              const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<Eigen::Triplet<double>> triplets;
    for (const auto& [i, j, w] : edges) {
        triplets.emplace_back(i, j, w);
        triplets.emplace_back(j, i, w);
    }
    Graph g;
    g.adjacency = SparseMatrix(n, n);
    g.adjacency.setFromTriplets(triplets.begin(), triplets.end());
    g.adjacency.makeCompressed();
    g.degrees = g.adjacency * Eigen::VectorXd::Ones(n);
    return g;
}

inline Graph k2_graph(double weight = 1.0) { return graph_from_edges(2, {{0, 1, weight}}); }

inline Graph path3_graph() { return graph_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

inline Graph cycle_graph(int n) {
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n, 1.0);
    return graph_from_edges(n, edges);
}

inline Graph complete_graph(int n, double weight = 1.0) {
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j, weight);
    return graph_from_edges(n, edges);
}

// Two complete blocks of size m joined by a single weak edge.
inline Graph two_cliques_graph(int m, double bridge_weight = 0.01) {
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            edges.emplace_back(i, j, 1.0);
            edges.emplace_back(m + i, m + j, 1.0);
        }
    edges.emplace_back(m - 1, m, bridge_weight);
    return graph_from_edges(2 * m, edges);
}

inline Eigen::VectorXd random_vector(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
}

// Random geometric k-NN graph on seeded 3-d points; retries with a larger
// neighbor count until connected.
inline Graph random_connected_graph(int n, std::uint64_t seed, int k = 6) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd pts(n, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) pts(i, j) = normal(rng);
    for (int kk = k; kk < n; kk += 3) {
        try {
            return build_knn_graph(PointCloud{pts}, kk, 2.0);
        } catch (const DisconnectedGraph&) {
        }
    }
    return build_knn_graph(PointCloud{pts}, n - 1, 2.0);
}

} // namespace wftg::testing

#endif // WFTG_TEST_SUPPORT_HPP

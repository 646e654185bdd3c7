#include "wftg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace wftg {

void PointCloud::validate() const {
    if (points.rows() < 2)
        throw DegenerateInput("point cloud needs at least 2 points, got " +
                              std::to_string(points.rows()));
    if (points.cols() < 1)
        throw DegenerateInput("point cloud needs dimension >= 1");
    if (!points.allFinite())
        throw DegenerateInput("point cloud contains non-finite coordinates");
}

namespace {

// BFS over the adjacency pattern.
bool single_component(const SparseMatrix& a) {
    const Eigen::Index k = a.rows();
    if (k == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    Eigen::Index visited = 1;
    while (!stack.empty()) {
        const Eigen::Index v = stack.back();
        stack.pop_back();
        for (SparseMatrix::InnerIterator it(a, v); it; ++it) {
            if (!seen[static_cast<std::size_t>(it.col())]) {
                seen[static_cast<std::size_t>(it.col())] = 1;
                ++visited;
                stack.push_back(it.col());
            }
        }
    }
    return visited == k;
}

} // namespace

bool Graph::connected() const { return single_component(adjacency); }

void Graph::validate() const {
    const Eigen::Index k = adjacency.rows();
    if (adjacency.cols() != k) throw InputError("adjacency not square");
    if (degrees.size() != k) throw InputError("degree vector length mismatch");

    SparseMatrix diff = SparseMatrix(adjacency.transpose()) - adjacency;
    for (Eigen::Index i = 0; i < diff.outerSize(); ++i)
        for (SparseMatrix::InnerIterator it(diff, i); it; ++it)
            if (std::abs(it.value()) > 1e-12)
                throw InputError("adjacency not symmetric within 1e-12");

    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(k);
    for (Eigen::Index i = 0; i < adjacency.outerSize(); ++i) {
        for (SparseMatrix::InnerIterator it(adjacency, i); it; ++it) {
            if (it.row() == it.col() && it.value() != 0.0)
                throw InputError("adjacency has a nonzero diagonal entry");
            if (it.value() < 0.0) throw InputError("adjacency has a negative weight");
            row_sums[it.row()] += it.value();
        }
    }
    if ((row_sums - degrees).cwiseAbs().maxCoeff() > 1e-12)
        throw InputError("degrees inconsistent with adjacency row sums");

    if (!connected()) throw DisconnectedGraph("graph has more than one component");
}

SparseOperator::SparseOperator(SparseMatrix m, bool symmetric)
    : matrix_(std::move(m)), symmetric_(symmetric) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("operator matrix must be square");
    matrix_.makeCompressed();
}

Eigen::VectorXd SparseOperator::apply(const Eigen::VectorXd& x) const {
    if (x.size() != matrix_.cols())
        throw DimensionMismatch("operator dimension " + std::to_string(matrix_.cols()) +
                                ", vector length " + std::to_string(x.size()));
    apply_count_.fetch_add(1, std::memory_order_relaxed);
    return matrix_ * x;
}

Graph build_knn_graph(const PointCloud& pc, int k, double sigma) {
    pc.validate();
    const Eigen::Index n = pc.size();
    if (k < 1 || k >= n)
        throw InputError("neighbor count k must satisfy 1 <= k < K");
    if (!(sigma > 0.0)) throw InputError("sigma must be positive");

    // Exact O(K^2) search; fine at desk scale.
    Eigen::VectorXd sq = pc.points.rowwise().squaredNorm();
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * k));

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    Eigen::VectorXd d2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d2 = (sq.array() + sq[i] - 2.0 * (pc.points * pc.points.row(i).transpose()).array())
                 .max(0.0);
        d2[i] = std::numeric_limits<double>::infinity(); // no self-loop
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::nth_element(order.begin(), order.begin() + (k - 1), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return d2[a] < d2[b]; });
        for (int m = 0; m < k; ++m) {
            const Eigen::Index j = order[static_cast<std::size_t>(m)];
            const double w = std::exp(-d2[j] / sigma);
            triplets.emplace_back(i, j, w);
            triplets.emplace_back(j, i, w);
        }
    }

    SparseMatrix a(n, n);
    // Duplicates from mutual selections collapse to one edge.
    a.setFromTriplets(triplets.begin(), triplets.end(),
                      [](const double& existing, const double&) { return existing; });
    a.makeCompressed();

    Graph g;
    g.adjacency = std::move(a);
    g.degrees = g.adjacency * Eigen::VectorXd::Ones(n);
    if (!g.connected())
        throw DisconnectedGraph(
            "union-symmetrized k-NN graph is disconnected; increase k (k=" +
            std::to_string(k) + ")");
    return g;
}

SparseOperator laplacian(const Graph& g, LaplacianKind kind) {
    const Eigen::Index n = g.size();
    SparseMatrix ident(n, n);
    ident.setIdentity();

    switch (kind) {
    case LaplacianKind::Unnormalized: {
        SparseMatrix deg(n, n);
        deg.reserve(Eigen::VectorXi::Constant(static_cast<int>(n), 1));
        for (Eigen::Index i = 0; i < n; ++i) deg.insert(i, i) = g.degrees[i];
        SparseMatrix l = deg - g.adjacency;
        l.makeCompressed();
        return SparseOperator(std::move(l), /*symmetric=*/true);
    }
    case LaplacianKind::RandomWalk: {
        for (Eigen::Index i = 0; i < n; ++i)
            if (g.degrees[i] <= 0.0)
                throw ZeroDegree("vertex " + std::to_string(i) + " has zero degree");
        SparseMatrix scaled = g.adjacency;
        for (Eigen::Index i = 0; i < scaled.outerSize(); ++i)
            for (SparseMatrix::InnerIterator it(scaled, i); it; ++it)
                it.valueRef() /= g.degrees[it.row()];
        SparseMatrix l = ident - scaled;
        l.makeCompressed();
        return SparseOperator(std::move(l), /*symmetric=*/false);
    }
    case LaplacianKind::Symmetric: {
        for (Eigen::Index i = 0; i < n; ++i)
            if (g.degrees[i] <= 0.0)
                throw ZeroDegree("vertex " + std::to_string(i) + " has zero degree");
        SparseMatrix scaled = g.adjacency;
        for (Eigen::Index i = 0; i < scaled.outerSize(); ++i)
            for (SparseMatrix::InnerIterator it(scaled, i); it; ++it)
                it.valueRef() /= std::sqrt(g.degrees[it.row()] * g.degrees[it.col()]);
        SparseMatrix l = ident - scaled;
        l.makeCompressed();
        return SparseOperator(std::move(l), /*symmetric=*/true);
    }
    }
    throw InputError("unknown Laplacian kind");
}

const char* to_string(LaplacianKind kind) {
    switch (kind) {
    case LaplacianKind::Unnormalized: return "unnormalized";
    case LaplacianKind::RandomWalk: return "random-walk";
    case LaplacianKind::Symmetric: return "symmetric";
    }
    return "?";
}

LaplacianKind laplacian_kind_from_string(const std::string& s) {
    if (s == "unnormalized") return LaplacianKind::Unnormalized;
    if (s == "random-walk") return LaplacianKind::RandomWalk;
    if (s == "symmetric") return LaplacianKind::Symmetric;
    throw InputError("unknown Laplacian kind: " + s);
}

} // namespace wftg

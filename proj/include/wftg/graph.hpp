#ifndef WFTG_GRAPH_HPP
#define WFTG_GRAPH_HPP

#include <atomic>
#include <cstdint>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "wftg/errors.hpp"

namespace wftg {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// A set of K points in R^D, one row per vertex.
struct PointCloud {
    Eigen::MatrixXd points;

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }

    /// Throws DegenerateInput unless K >= 2, D >= 1 and all coordinates are finite.
    void validate() const;
};

/// Weighted undirected graph: symmetric nonnegative adjacency with zero
/// diagonal, degrees d[k] = sum_k' a(k,k').
struct Graph {
    SparseMatrix adjacency;
    Eigen::VectorXd degrees;

    Eigen::Index size() const { return adjacency.rows(); }

    /// Checks symmetry, zero diagonal, nonnegativity, degree consistency and
    /// connectivity. Throws on violation.
    void validate() const;

    bool connected() const;
};

enum class LaplacianKind {
    Unnormalized, // D - A
    RandomWalk,   // I - D^{-1} A
    Symmetric     // I - D^{-1/2} A D^{-1/2}
};

/// Sparse symmetric-aware linear operator of fixed dimension K.
/// Immutable after construction; apply() is safe to call concurrently.
class SparseOperator {
public:
    SparseOperator(SparseMatrix m, bool symmetric);

    // The instrumentation counter travels with the value.
    SparseOperator(const SparseOperator& other)
        : matrix_(other.matrix_),
          symmetric_(other.symmetric_),
          apply_count_(other.apply_count()) {}
    SparseOperator(SparseOperator&& other) noexcept
        : matrix_(std::move(other.matrix_)),
          symmetric_(other.symmetric_),
          apply_count_(other.apply_count()) {}
    SparseOperator& operator=(const SparseOperator& other) {
        matrix_ = other.matrix_;
        symmetric_ = other.symmetric_;
        apply_count_.store(other.apply_count(), std::memory_order_relaxed);
        return *this;
    }
    SparseOperator& operator=(SparseOperator&& other) noexcept {
        matrix_ = std::move(other.matrix_);
        symmetric_ = other.symmetric_;
        apply_count_.store(other.apply_count(), std::memory_order_relaxed);
        return *this;
    }

    Eigen::Index dimension() const { return matrix_.rows(); }
    bool symmetric() const { return symmetric_; }
    const SparseMatrix& matrix() const { return matrix_; }

    /// y = M x. Throws DimensionMismatch if x has the wrong length.
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

    /// Number of apply() calls since construction (instrumentation for tests).
    std::int64_t apply_count() const { return apply_count_.load(std::memory_order_relaxed); }

private:
    SparseMatrix matrix_;
    bool symmetric_;
    mutable std::atomic<std::int64_t> apply_count_{0};
};

/// Build the union-symmetrized k-nearest-neighbor graph with Gaussian weights
/// w(v, v') = exp(-||v - v'||_2^2 / sigma). An edge survives if either
/// endpoint selects the other among its k nearest; self-loops are excluded.
/// Throws DisconnectedGraph when the result is not a single component.
Graph build_knn_graph(const PointCloud& pc, int k, double sigma);

/// Graph Laplacian of the requested kind as a sparse operator.
/// Throws ZeroDegree when a normalized kind meets a zero-degree vertex.
SparseOperator laplacian(const Graph& g, LaplacianKind kind);

const char* to_string(LaplacianKind kind);
LaplacianKind laplacian_kind_from_string(const std::string& s);

} // namespace wftg

#endif // WFTG_GRAPH_HPP

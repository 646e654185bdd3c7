#ifndef WFTG_SOLVERS_HPP
#define WFTG_SOLVERS_HPP

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "wftg/transform.hpp"

namespace wftg {

/// Degree-weighted norms ||f||_{p,G} = (sum_k |f[k]|^p d[k])^{1/p}, p in {1,2}.
struct GraphNorms {
    Eigen::VectorXd degrees;

    double norm(const Eigen::VectorXd& f, int p) const;
};

/// Per-band shrinkage weights: nu_{j,l} = 4^{-l+1} nu for j >= 1, zero for the
/// low-pass remainder (0, L).
struct ThresholdSchedule {
    double nu = 0.0;

    double weight(int band, int level) const {
        return band == 0 ? 0.0 : std::ldexp(nu, -2 * (level - 1));
    }
};

/// Known labels: vertex indices with 0/1 class values; both classes present.
struct LabelSet {
    std::vector<Eigen::Index> indices;
    std::vector<int> values;

    void validate(Eigen::Index graph_size) const;
};

/// Componentwise shrinkage S_tau(y) = sign(y) max(|y| - tau, 0).
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& y, const Eigen::VectorXd& tau);

/// Threshold vector for one band: nu_{j,l} * d[k] / mu.
Eigen::VectorXd band_threshold(const ThresholdSchedule& sched, const Eigen::VectorXd& degrees,
                               double mu, int band, int level);

struct SolverOptions {
    double mu = 1.0;
    int iterations = 200;
    /// When positive, stop once ||u^{k+1} - u^k||_2 / ||u^k||_2 drops below it.
    double early_stop_tol = 0.0;
    /// Observer invoked after each u-update (diagnostics and tests).
    std::function<void(int, const Eigen::VectorXd&)> on_iterate;
};

struct SolverReport {
    int iterations_run = 0;
};

/// Split-Bregman denoising of f on the graph:
///   u <- (D + mu I)^{-1} (D f + mu W^T(d - b))
///   d <- S_{nu_G/mu}(W u + b),  b <- b + W u - d
/// from zero initialization. Throws NonFinite on divergence.
Eigen::VectorXd denoise(const Graph& g, const TransformPlan& plan, const Eigen::VectorXd& f,
                        const ThresholdSchedule& sched, const SolverOptions& options,
                        SolverReport* report = nullptr);

struct ClusterOptions : SolverOptions {
    double beta = 0.5; // threshold for the final indicator
    /// Weight the label fidelity by vertex degree in the u-update (the
    /// consistent minimizer of the degree-weighted fidelity). When false, the
    /// plain-f variant is used instead.
    bool fidelity_degree_weighted = true;
    /// Reuse an already-computed Fiedler vector (sign convention applied)
    /// instead of running the deflated power method again.
    std::optional<Eigen::VectorXd> precomputed_fiedler;
};

/// Initial relaxed labeling from the Fiedler vector: 0 where positive, 1
/// otherwise. The sign convention inside fiedler_vector makes this invariant
/// to the eigenvector's arbitrary global sign.
Eigen::VectorXd cluster_initialization(const Eigen::VectorXd& fiedler);

/// Semi-supervised binary clustering; returns the 0/1 indicator u >= beta.
/// Throws SingleClassLabels when the label set misses a class, NonFinite on
/// divergence.
Eigen::VectorXi cluster(const Graph& g, const TransformPlan& plan, const LabelSet& labels,
                        const ThresholdSchedule& sched, const ClusterOptions& options,
                        SolverReport* report = nullptr);

/// ||u - uref||_2 / ||uref||_2. Throws ZeroReference.
double relative_error(const Eigen::VectorXd& u, const Eigen::VectorXd& uref);

/// Percentage of misclassified vertices outside the labeled set.
double classification_error(const Eigen::VectorXi& predicted, const Eigen::VectorXi& truth,
                            const LabelSet& labels);

/// Denoising objective nu-weighted ||W u||_{1,G} + (1/2)||u - f||_{2,G}^2.
double denoising_objective(const Graph& g, const TransformPlan& plan, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& f, const ThresholdSchedule& sched);

} // namespace wftg

#endif // WFTG_SOLVERS_HPP

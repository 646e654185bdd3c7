#ifndef WFTG_SPECTRAL_HPP
#define WFTG_SPECTRAL_HPP

#include <Eigen/Core>

#include "wftg/graph.hpp"

namespace wftg {

/// Estimated largest eigenvalue together with the dilation scale N,
/// the smallest integer with lambda_max <= 2^N * pi.
struct SpectralBound {
    double lambda_max = 0.0;
    int dilation_scale = 0; // N; may be negative for weakly weighted graphs
};

/// Full dense eigendecomposition L = U diag(lambda) U^T, eigenvalues ascending.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors; // orthonormal columns
};

struct PowerIterationOptions {
    double tol = 1e-10;
    int max_iter = 10000;
    std::uint64_t seed = 42;
};

/// Smallest integer N with lambda_max <= 2^N * pi.
int dilation_scale_for(double lambda_max);

/// Power-iteration estimate of the largest eigenvalue of a symmetric L,
/// inflated by (1 + 1e-6) so the whole spectrum falls in [0, 2^N pi].
/// Throws NoConvergence if the relative change has not dropped below tol
/// within max_iter iterations.
SpectralBound estimate_lambda_max(const SparseOperator& l,
                                  const PowerIterationOptions& opt = {});

/// Unit-norm eigenvector of the second-smallest eigenvalue, computed by a
/// shifted power method deflated against the constant vector (the nullvector
/// of the unnormalized Laplacian of a connected graph). The sign is fixed so
/// the first entry with magnitude above 1e-12 * ||v||_inf is positive.
/// Throws NearDegenerate when the second and third eigenvalues differ by
/// less than 1e-10, NoConvergence on an exhausted budget.
Eigen::VectorXd fiedler_vector(const SparseOperator& l,
                               const PowerIterationOptions& opt = {});

/// Exact dense decomposition; the oracle the fast paths are tested against.
/// Throws TooLarge above the cap.
EigenDecomposition dense_eigendecomposition(const SparseOperator& l,
                                            Eigen::Index cap = 2000);

} // namespace wftg

#endif // WFTG_SPECTRAL_HPP

#include "wftg/spectral.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace wftg {

int dilation_scale_for(double lambda_max) {
    if (!(lambda_max > 0.0)) return 0;
    int n = static_cast<int>(std::ceil(std::log2(lambda_max / M_PI)));
    while (lambda_max > std::ldexp(M_PI, n)) ++n;
    while (n > std::numeric_limits<int>::min() && lambda_max <= std::ldexp(M_PI, n - 1)) --n;
    return n;
}

namespace {

Eigen::VectorXd seeded_unit_vector(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
    v.normalize();
    return v;
}

} // namespace

SpectralBound estimate_lambda_max(const SparseOperator& l, const PowerIterationOptions& opt) {
    if (!l.symmetric()) throw InputError("estimate_lambda_max requires a symmetric operator");
    if (!(opt.tol > 0.0)) throw InputError("tolerance must be positive");
    const Eigen::Index n = l.dimension();

    Eigen::VectorXd x = seeded_unit_vector(n, opt.seed);
    double estimate = 0.0;
    bool converged = false;
    for (int it = 0; it < opt.max_iter; ++it) {
        Eigen::VectorXd y = l.apply(x);
        const double norm = y.norm();
        if (norm == 0.0) { // x in the nullspace; restart off it
            x = seeded_unit_vector(n, opt.seed + 1 + static_cast<std::uint64_t>(it));
            continue;
        }
        const double rayleigh = x.dot(y);
        x = y / norm;
        const double change = std::abs(rayleigh - estimate);
        estimate = rayleigh;
        if (it > 0 && change <= opt.tol * std::max(std::abs(estimate), 1e-300)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("power iteration did not reach tol within " +
                            std::to_string(opt.max_iter) + " iterations");

    SpectralBound bound;
    bound.lambda_max = estimate * (1.0 + 1e-6); // one-sided safety inflation
    bound.dilation_scale = dilation_scale_for(bound.lambda_max);
    return bound;
}

namespace {

struct DeflatedPowerResult {
    Eigen::VectorXd vector;
    double eigenvalue; // of L, not of the shifted operator
    bool converged;
};

// Power iteration on shift*I - L, re-orthogonalized against `deflate` columns.
DeflatedPowerResult deflated_power(const SparseOperator& l, double shift,
                                   const Eigen::MatrixXd& deflate,
                                   const PowerIterationOptions& opt,
                                   std::uint64_t seed_offset) {
    const Eigen::Index n = l.dimension();
    Eigen::VectorXd x = seeded_unit_vector(n, opt.seed + seed_offset);
    x -= deflate * (deflate.transpose() * x);
    x.normalize();

    DeflatedPowerResult res{x, 0.0, false};
    for (int it = 0; it < opt.max_iter; ++it) {
        Eigen::VectorXd y = shift * x - l.apply(x);
        y -= deflate * (deflate.transpose() * y);
        const double norm = y.norm();
        if (norm == 0.0) {
            x = seeded_unit_vector(n, opt.seed + seed_offset + 1 + static_cast<std::uint64_t>(it));
            x -= deflate * (deflate.transpose() * x);
            x.normalize();
            continue;
        }
        y /= norm;
        if (y.dot(x) < 0.0) y = -y; // align signs before measuring change
        const double change = (y - x).cwiseAbs().maxCoeff();
        x = y;
        if (it > 0 && change <= opt.tol) {
            res.converged = true;
            break;
        }
    }
    res.vector = x;
    res.eigenvalue = x.dot(l.apply(x));
    return res;
}

} // namespace

Eigen::VectorXd fiedler_vector(const SparseOperator& l, const PowerIterationOptions& opt) {
    if (!l.symmetric()) throw InputError("fiedler_vector requires a symmetric operator");
    const Eigen::Index n = l.dimension();
    if (n < 2) throw InputError("fiedler_vector needs dimension >= 2");

    PowerIterationOptions bound_opt = opt;
    bound_opt.tol = std::max(opt.tol, 1e-10);
    const SpectralBound bound = estimate_lambda_max(l, bound_opt);

    Eigen::MatrixXd deflate(n, 1);
    deflate.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

    DeflatedPowerResult first = deflated_power(l, bound.lambda_max, deflate, opt, 101);
    if (!first.converged)
        throw NoConvergence("deflated power iteration for the Fiedler vector did not converge");

    if (n >= 3) {
        // Estimate the next eigenvalue to detect an ill-defined eigenvector.
        Eigen::MatrixXd deflate2(n, 2);
        deflate2.col(0) = deflate.col(0);
        deflate2.col(1) = first.vector;
        PowerIterationOptions probe = opt;
        probe.max_iter = std::min(opt.max_iter, 500);
        DeflatedPowerResult second = deflated_power(l, bound.lambda_max, deflate2, probe, 202);
        if (std::abs(second.eigenvalue - first.eigenvalue) < 1e-10)
            throw NearDegenerate("second and third eigenvalues coincide within 1e-10");
    }

    Eigen::VectorXd v = first.vector;
    v.normalize();
    const double cutoff = 1e-12 * v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v[i]) > cutoff) {
            if (v[i] < 0.0) v = -v;
            break;
        }
    }
    return v;
}

EigenDecomposition dense_eigendecomposition(const SparseOperator& l, Eigen::Index cap) {
    if (!l.symmetric()) throw InputError("dense_eigendecomposition requires a symmetric operator");
    if (l.dimension() > cap)
        throw TooLarge("dimension " + std::to_string(l.dimension()) +
                       " exceeds the dense oracle cap " + std::to_string(cap));
    Eigen::MatrixXd dense(l.matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense eigendecomposition failed");
    return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace wftg

#include "wftg/transform.hpp"

#include <algorithm>
#include <cmath>

namespace wftg {

FrameCoefficients::FrameCoefficients(CoefficientMeta meta) : meta_(std::move(meta)) {
    if (meta_.band_count < 1 || meta_.levels < 1)
        throw InputError("coefficient meta needs band_count >= 1 and levels >= 1");
    bands_.assign(static_cast<std::size_t>(meta_.band_count * meta_.levels + 1),
                  Eigen::VectorXd::Zero(meta_.size));
}

int FrameCoefficients::flat_index(int band, int level) const {
    const int r = meta_.band_count;
    const int levels = meta_.levels;
    if (band == 0) {
        if (level != levels)
            throw InputError("low-pass band exists only at the deepest level");
        return r * levels;
    }
    if (band < 1 || band > r || level < 1 || level > levels)
        throw InputError("band index (" + std::to_string(band) + "," + std::to_string(level) +
                         ") outside the index set");
    return (level - 1) * r + (band - 1);
}

Eigen::VectorXd& FrameCoefficients::at(int band, int level) {
    return bands_[static_cast<std::size_t>(flat_index(band, level))];
}

const Eigen::VectorXd& FrameCoefficients::at(int band, int level) const {
    return bands_[static_cast<std::size_t>(flat_index(band, level))];
}

BandIndex FrameCoefficients::index_of(int i) const {
    const int r = meta_.band_count;
    if (i == r * meta_.levels) return BandIndex{0, meta_.levels};
    return BandIndex{i % r + 1, i / r + 1};
}

double FrameCoefficients::dot(const FrameCoefficients& other) const {
    if (!(meta_ == other.meta_)) throw MetaMismatch("coefficient metadata differs");
    double acc = 0.0;
    for (std::size_t i = 0; i < bands_.size(); ++i) acc += bands_[i].dot(other.bands_[i]);
    return acc;
}

double FrameCoefficients::squared_norm() const {
    double acc = 0.0;
    for (const auto& b : bands_) acc += b.squaredNorm();
    return acc;
}

bool FrameCoefficients::all_finite() const {
    for (const auto& b : bands_)
        if (!b.allFinite()) return false;
    return true;
}

TransformPlan::TransformPlan(const Graph& g, LaplacianKind kind, MaskFamily family, int levels,
                             TransformMode mode, const PlanOptions& options)
    : laplacian_(laplacian(g, kind)),
      kind_(kind),
      family_(std::move(family)),
      levels_(levels),
      mode_(mode),
      options_(options),
      bound_(estimate_lambda_max(laplacian_, options.power)),
      dilation_scale_(0) {
    if (levels_ < 1) throw InputError("levels must be >= 1");

    // All mask arguments must stay in [0, pi]; the binding one is the top
    // level, 2^{-N+L-1} lambda_max.
    if (options_.dilation_scale) {
        dilation_scale_ = *options_.dilation_scale;
        if (std::ldexp(bound_.lambda_max, -dilation_scale_ + levels_ - 1) > M_PI * (1.0 + 1e-9))
            throw ScaleOverflow("levels=" + std::to_string(levels_) + " with dilation scale " +
                                std::to_string(dilation_scale_) +
                                " pushes mask arguments beyond pi");
    } else {
        dilation_scale_ = dilation_scale_for(bound_.lambda_max) + (levels_ - 1);
    }

    if (mode_ == TransformMode::Exact) {
        eig_ = dense_eigendecomposition(laplacian_, options_.dense_cap);
    } else {
        approxes_.reserve(static_cast<std::size_t>(family_.band_count()) + 1);
        for (int j = 0; j <= family_.band_count(); ++j) {
            approxes_.push_back(cheb_coeffs([this, j](double xi) { return family_.eval(j, xi); },
                                            options_.cheb_order, options_.quad_points));
        }
    }
}

double TransformPlan::level_scale(int level) const {
    return std::ldexp(1.0, -dilation_scale_ + level - 1);
}

CoefficientMeta TransformPlan::meta() const {
    return CoefficientMeta{family_.name(), family_.band_count(), levels_, dilation_scale_,
                           options_.cheb_order, kind_, laplacian_.dimension()};
}

Eigen::VectorXd TransformPlan::apply_mask(int band, int level, const Eigen::VectorXd& x) const {
    const double s = level_scale(level);
    if (mode_ == TransformMode::Fast)
        return cheb_apply(approxes_[static_cast<std::size_t>(band)], laplacian_, s, x);

    // Exact spectral multiplier U a_j(s Lambda) U^T x. Arguments are clamped
    // into [0, pi]; the inflated spectral bound keeps overshoot at roundoff.
    const auto& eig = *eig_;
    Eigen::VectorXd coeff = eig.eigenvectors.transpose() * x;
    for (Eigen::Index i = 0; i < coeff.size(); ++i) {
        const double arg = std::clamp(s * eig.eigenvalues[i], 0.0, M_PI);
        coeff[i] *= family_.eval(band, arg);
    }
    return eig.eigenvectors * coeff;
}

FrameCoefficients TransformPlan::decompose(const Eigen::VectorXd& f) const {
    if (f.size() != laplacian_.dimension())
        throw DimensionMismatch("signal length " + std::to_string(f.size()) +
                                " does not match graph size " +
                                std::to_string(laplacian_.dimension()));
    FrameCoefficients coeffs(meta());
    Eigen::VectorXd low = f;
    for (int l = 1; l <= levels_; ++l) {
        for (int j = 1; j <= family_.band_count(); ++j)
            coeffs.at(j, l) = apply_mask(j, l, low);
        low = apply_mask(0, l, low);
    }
    coeffs.at(0, levels_) = std::move(low);
    return coeffs;
}

Eigen::VectorXd TransformPlan::reconstruct(const FrameCoefficients& coeffs) const {
    if (!(coeffs.meta() == meta()))
        throw MetaMismatch("coefficient metadata does not match this plan");
    Eigen::VectorXd low = coeffs.at(0, levels_);
    for (int l = levels_; l >= 1; --l) {
        Eigen::VectorXd next = apply_mask(0, l, low);
        for (int j = 1; j <= family_.band_count(); ++j)
            next += apply_mask(j, l, coeffs.at(j, l));
        low = std::move(next);
    }
    return low;
}

double TransformPlan::adjoint_identity_check(const Eigen::VectorXd& f,
                                             const FrameCoefficients& coeffs) const {
    const FrameCoefficients wf = decompose(f);
    const Eigen::VectorXd wt = reconstruct(coeffs);
    return std::abs(wf.dot(coeffs) - f.dot(wt));
}

} // namespace wftg

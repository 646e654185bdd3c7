#ifndef WFTG_TRANSFORM_HPP
#define WFTG_TRANSFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "wftg/chebyshev.hpp"
#include "wftg/graph.hpp"
#include "wftg/masks.hpp"
#include "wftg/spectral.hpp"

namespace wftg {

/// Band/level pair. Valid members: (j, l) with 1 <= j <= r, 1 <= l <= L,
/// plus the low-pass remainder (0, L).
struct BandIndex {
    int band = 0;  // j
    int level = 0; // l
};

struct CoefficientMeta {
    std::string family;
    int band_count = 0;     // r
    int levels = 0;         // L
    int dilation_scale = 0; // N
    int cheb_order = 0;     // n
    LaplacianKind kind = LaplacianKind::Unnormalized;
    Eigen::Index size = 0; // K

    bool operator==(const CoefficientMeta&) const = default;
};

/// The indexed coefficient set {alpha_{j,l} : (j,l) in B}, stored in B-order:
/// (1,1), ..., (r,1), (1,2), ..., (r,L), (0,L).
class FrameCoefficients {
public:
    FrameCoefficients() = default;
    FrameCoefficients(CoefficientMeta meta);

    const CoefficientMeta& meta() const { return meta_; }
    int entry_count() const { return static_cast<int>(bands_.size()); } // r*L + 1

    Eigen::VectorXd& at(int band, int level);
    const Eigen::VectorXd& at(int band, int level) const;
    Eigen::VectorXd& at_index(int i) { return bands_[static_cast<std::size_t>(i)]; }
    const Eigen::VectorXd& at_index(int i) const { return bands_[static_cast<std::size_t>(i)]; }

    BandIndex index_of(int i) const;

    /// sum over all bands of <a_band, b_band>.
    double dot(const FrameCoefficients& other) const;
    double squared_norm() const;

    bool all_finite() const;

private:
    int flat_index(int band, int level) const;

    CoefficientMeta meta_;
    std::vector<Eigen::VectorXd> bands_;
};

enum class TransformMode { Fast, Exact };

struct PlanOptions {
    int cheb_order = 8;     // n
    int quad_points = 4096; // trapezoid subintervals for the coefficient integral
    PowerIterationOptions power = {};
    Eigen::Index dense_cap = 2000;
    /// When set, forces the dilation scale; throws ScaleOverflow if the top
    /// level would push mask arguments beyond pi. When unset, the smallest
    /// admissible integer is chosen.
    std::optional<int> dilation_scale;
};

/// Precomputed multi-level tight-frame transform on one graph: Laplacian,
/// spectral bound, per-mask Chebyshev approximants (Fast) or the dense
/// eigendecomposition (Exact). Immutable; decompose/reconstruct are pure.
class TransformPlan {
public:
    TransformPlan(const Graph& g, LaplacianKind kind, MaskFamily family, int levels,
                  TransformMode mode, const PlanOptions& options = {});

    FrameCoefficients decompose(const Eigen::VectorXd& f) const;
    Eigen::VectorXd reconstruct(const FrameCoefficients& coeffs) const;

    /// |<W f, alpha> - <f, W^T alpha>|.
    double adjoint_identity_check(const Eigen::VectorXd& f, const FrameCoefficients& coeffs) const;

    const SparseOperator& laplacian_operator() const { return laplacian_; }
    const MaskFamily& family() const { return family_; }
    const SpectralBound& spectral_bound() const { return bound_; }
    int levels() const { return levels_; }
    int dilation_scale() const { return dilation_scale_; }
    int cheb_order() const { return options_.cheb_order; }
    const PowerIterationOptions& power_options() const { return options_.power; }
    TransformMode mode() const { return mode_; }
    CoefficientMeta meta() const;

    /// Scale 2^{-N+l-1} applied to the Laplacian at level l.
    double level_scale(int level) const;

private:
    Eigen::VectorXd apply_mask(int band, int level, const Eigen::VectorXd& x) const;

    SparseOperator laplacian_;
    LaplacianKind kind_;
    MaskFamily family_;
    int levels_;
    TransformMode mode_;
    PlanOptions options_;
    SpectralBound bound_;
    int dilation_scale_;
    std::vector<ChebApprox> approxes_;           // per mask j = 0..r (Fast)
    std::optional<EigenDecomposition> eig_;      // Exact
};

} // namespace wftg

#endif // WFTG_TRANSFORM_HPP

#ifndef WFTG_DATASETS_HPP
#define WFTG_DATASETS_HPP

#include <cstdint>

#include <Eigen/Core>

#include "wftg/graph.hpp"

namespace wftg {

/// Two half unit circles, centers (0,0) and (1,0.5), lifted to ambient_dim
/// dimensions by i.i.d. Gaussian noise of the given variance per coordinate.
struct TwoMoonsSpec {
    int points_per_moon = 1000;
    int ambient_dim = 100;
    double noise_variance = 0.02;
    std::uint64_t seed = 0;
};

struct TwoMoons {
    PointCloud points;
    Eigen::VectorXi labels; // 0 = upper moon, 1 = lower moon
};

TwoMoons gen_two_moons(const TwoMoonsSpec& spec);

enum class SphereSignal {
    Cap,      // 1 inside a 60-degree spherical cap around +z, 0 outside
    Harmonic, // the z coordinate
    Step      // 1 on the x >= 0 hemisphere, 0 on the other
};

struct SphereSpec {
    int vertex_count = 2000;
    std::uint64_t seed = 0;
    SphereSignal signal = SphereSignal::Cap;
};

struct SphereData {
    PointCloud points; // unit-norm rows
    Eigen::VectorXd signal;
};

/// Seeded uniform points on the unit sphere (normalized Gaussians) plus the
/// requested signal.
SphereData gen_sphere(const SphereSpec& spec);

/// f plus seeded i.i.d. N(0, std^2).
Eigen::VectorXd add_gaussian_noise(const Eigen::VectorXd& f, double std, std::uint64_t seed);

SphereSignal sphere_signal_from_string(const std::string& s);

} // namespace wftg

#endif // WFTG_DATASETS_HPP

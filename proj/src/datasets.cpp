#include "wftg/datasets.hpp"

#include <cmath>
#include <random>

namespace wftg {

TwoMoons gen_two_moons(const TwoMoonsSpec& spec) {
    if (spec.points_per_moon < 1) throw InputError("points_per_moon must be >= 1");
    if (spec.ambient_dim < 2) throw InputError("ambient_dim must be >= 2");
    if (spec.noise_variance < 0.0) throw InputError("noise_variance must be >= 0");

    const int per = spec.points_per_moon;
    const int k = 2 * per;
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> angle(0.0, M_PI);

    Eigen::MatrixXd points = Eigen::MatrixXd::Zero(k, spec.ambient_dim);
    Eigen::VectorXi labels(k);
    for (int i = 0; i < per; ++i) { // upper half circle at (0, 0)
        const double t = angle(rng);
        points(i, 0) = std::cos(t);
        points(i, 1) = std::sin(t);
        labels[i] = 0;
    }
    for (int i = 0; i < per; ++i) { // reflected lower half circle at (1, 0.5)
        const double t = angle(rng);
        points(per + i, 0) = 1.0 - std::cos(t);
        points(per + i, 1) = 0.5 - std::sin(t);
        labels[per + i] = 1;
    }
    if (spec.noise_variance > 0.0) {
        std::normal_distribution<double> noise(0.0, std::sqrt(spec.noise_variance));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < spec.ambient_dim; ++j) points(i, j) += noise(rng);
    }
    return TwoMoons{PointCloud{std::move(points)}, std::move(labels)};
}

SphereData gen_sphere(const SphereSpec& spec) {
    if (spec.vertex_count < 10) throw InputError("vertex_count must be >= 10");

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd points(spec.vertex_count, 3);
    for (int i = 0; i < spec.vertex_count; ++i) {
        Eigen::Vector3d v;
        do {
            v << normal(rng), normal(rng), normal(rng);
        } while (v.norm() < 1e-12);
        points.row(i) = v.normalized();
    }

    Eigen::VectorXd signal(spec.vertex_count);
    const double cap_cos = std::cos(M_PI / 3.0); // 60-degree cap
    for (int i = 0; i < spec.vertex_count; ++i) {
        switch (spec.signal) {
        case SphereSignal::Cap: signal[i] = points(i, 2) >= cap_cos ? 1.0 : 0.0; break;
        case SphereSignal::Harmonic: signal[i] = points(i, 2); break;
        case SphereSignal::Step: signal[i] = points(i, 0) >= 0.0 ? 1.0 : 0.0; break;
        }
    }
    return SphereData{PointCloud{std::move(points)}, std::move(signal)};
}

Eigen::VectorXd add_gaussian_noise(const Eigen::VectorXd& f, double std, std::uint64_t seed) {
    if (std < 0.0) throw InputError("noise std must be >= 0");
    if (std == 0.0) return f;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, std);
    Eigen::VectorXd out = f;
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += noise(rng);
    return out;
}

SphereSignal sphere_signal_from_string(const std::string& s) {
    if (s == "cap") return SphereSignal::Cap;
    if (s == "harmonic") return SphereSignal::Harmonic;
    if (s == "step") return SphereSignal::Step;
    throw InputError("unknown sphere signal kind: " + s);
}

} // namespace wftg

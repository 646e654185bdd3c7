#include "wftg/solvers.hpp"

#include <cmath>
#include <set>

namespace wftg {

double GraphNorms::norm(const Eigen::VectorXd& f, int p) const {
    if (f.size() != degrees.size())
        throw DimensionMismatch("signal and degree vector lengths differ");
    switch (p) {
    case 1: return (f.cwiseAbs().array() * degrees.array()).sum();
    case 2: return std::sqrt((f.array().square() * degrees.array()).sum());
    default: throw InputError("graph norm defined for p in {1, 2}");
    }
}

void LabelSet::validate(Eigen::Index graph_size) const {
    if (indices.empty()) throw SingleClassLabels("label set is empty");
    if (indices.size() != values.size())
        throw InputError("label indices and values have different lengths");
    bool has0 = false, has1 = false;
    std::set<Eigen::Index> seen;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= graph_size)
            throw InputError("label index " + std::to_string(indices[i]) + " out of range");
        if (!seen.insert(indices[i]).second)
            throw InputError("duplicate label index " + std::to_string(indices[i]));
        if (values[i] == 0) has0 = true;
        else if (values[i] == 1) has1 = true;
        else throw InputError("labels must be 0 or 1");
    }
    if (!has0 || !has1) throw SingleClassLabels("both classes must be represented");
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& y, const Eigen::VectorXd& tau) {
    if (y.size() != tau.size()) throw DimensionMismatch("soft_threshold length mismatch");
    if ((tau.array() < 0.0).any()) throw InputError("thresholds must be nonnegative");
    return y.array().sign() * (y.array().abs() - tau.array()).max(0.0);
}

Eigen::VectorXd band_threshold(const ThresholdSchedule& sched, const Eigen::VectorXd& degrees,
                               double mu, int band, int level) {
    return (sched.weight(band, level) / mu) * degrees;
}

namespace {

struct BandState {
    // d and b live in the transform domain and share the plan's band layout.
    FrameCoefficients d;
    FrameCoefficients b;
};

std::vector<Eigen::VectorXd> all_band_thresholds(const TransformPlan& plan,
                                                 const ThresholdSchedule& sched,
                                                 const Eigen::VectorXd& degrees, double mu) {
    const CoefficientMeta meta = plan.meta();
    std::vector<Eigen::VectorXd> taus;
    taus.reserve(static_cast<std::size_t>(meta.band_count * meta.levels + 1));
    FrameCoefficients probe(meta);
    for (int i = 0; i < probe.entry_count(); ++i) {
        const BandIndex bi = probe.index_of(i);
        taus.push_back(band_threshold(sched, degrees, mu, bi.band, bi.level));
    }
    return taus;
}

FrameCoefficients coeff_difference(const FrameCoefficients& a, const FrameCoefficients& b) {
    FrameCoefficients out(a.meta());
    for (int i = 0; i < a.entry_count(); ++i) out.at_index(i) = a.at_index(i) - b.at_index(i);
    return out;
}

void shrink_and_update(const FrameCoefficients& wu, BandState& state,
                       const std::vector<Eigen::VectorXd>& taus) {
    for (int i = 0; i < wu.entry_count(); ++i) {
        const Eigen::VectorXd y = wu.at_index(i) + state.b.at_index(i);
        state.d.at_index(i) = soft_threshold(y, taus[static_cast<std::size_t>(i)]);
        state.b.at_index(i) = y - state.d.at_index(i);
    }
}

void check_finite(const Eigen::VectorXd& u, const BandState& state, int iter) {
    if (!u.allFinite() || !state.d.all_finite() || !state.b.all_finite())
        throw NonFinite("solver state became non-finite at iteration " + std::to_string(iter));
}

} // namespace

Eigen::VectorXd denoise(const Graph& g, const TransformPlan& plan, const Eigen::VectorXd& f,
                        const ThresholdSchedule& sched, const SolverOptions& options,
                        SolverReport* report) {
    if (f.size() != g.size()) throw DimensionMismatch("signal length does not match graph size");
    if (!f.allFinite()) throw InputError("input signal contains non-finite entries");
    if (!(options.mu > 0.0)) throw InputError("mu must be positive");

    const Eigen::VectorXd& deg = g.degrees;
    const Eigen::ArrayXd inv_diag = 1.0 / (deg.array() + options.mu);
    const std::vector<Eigen::VectorXd> taus = all_band_thresholds(plan, sched, deg, options.mu);

    Eigen::VectorXd u = Eigen::VectorXd::Zero(f.size());
    BandState state{FrameCoefficients(plan.meta()), FrameCoefficients(plan.meta())};

    int ran = 0;
    for (int k = 0; k < options.iterations; ++k) {
        const Eigen::VectorXd wt = plan.reconstruct(coeff_difference(state.d, state.b));
        Eigen::VectorXd u_next =
            (inv_diag * (deg.array() * f.array() + options.mu * wt.array())).matrix();

        shrink_and_update(plan.decompose(u_next), state, taus);
        check_finite(u_next, state, k);

        const double change = (u_next - u).norm();
        const double base = u.norm();
        u = std::move(u_next);
        ran = k + 1;
        if (options.on_iterate) options.on_iterate(ran, u);
        if (options.early_stop_tol > 0.0 && k > 0 && base > 0.0 &&
            change <= options.early_stop_tol * base)
            break;
    }
    if (report) report->iterations_run = ran;
    return u;
}

Eigen::VectorXd cluster_initialization(const Eigen::VectorXd& fiedler) {
    Eigen::VectorXd u0(fiedler.size());
    for (Eigen::Index i = 0; i < fiedler.size(); ++i) u0[i] = fiedler[i] > 0.0 ? 0.0 : 1.0;
    return u0;
}

Eigen::VectorXi cluster(const Graph& g, const TransformPlan& plan, const LabelSet& labels,
                        const ThresholdSchedule& sched, const ClusterOptions& options,
                        SolverReport* report) {
    labels.validate(g.size());
    if (!(options.beta > 0.0 && options.beta < 1.0)) throw InputError("beta must lie in (0, 1)");
    if (!(options.mu > 0.0)) throw InputError("mu must be positive");

    const Eigen::VectorXd& deg = g.degrees;
    const std::vector<Eigen::VectorXd> taus = all_band_thresholds(plan, sched, deg, options.mu);

    const Eigen::VectorXd fiedler =
        options.precomputed_fiedler
            ? *options.precomputed_fiedler
            : fiedler_vector(plan.laplacian_operator(), plan.power_options());
    if (fiedler.size() != g.size())
        throw DimensionMismatch("precomputed Fiedler vector has the wrong length");
    Eigen::VectorXd u = cluster_initialization(fiedler);
    FrameCoefficients wu0 = plan.decompose(u);
    BandState state{wu0, wu0};

    int ran = 0;
    for (int k = 0; k < options.iterations; ++k) {
        const Eigen::VectorXd wt = plan.reconstruct(coeff_difference(state.d, state.b));
        Eigen::VectorXd u_half = wt;
        for (std::size_t i = 0; i < labels.indices.size(); ++i) {
            const Eigen::Index v = labels.indices[i];
            const double fv = static_cast<double>(labels.values[i]);
            const double numer_f = options.fidelity_degree_weighted ? deg[v] * fv : fv;
            u_half[v] = (numer_f + options.mu * wt[v]) / (deg[v] + options.mu);
        }
        Eigen::VectorXd u_next = u_half.cwiseMax(0.0).cwiseMin(1.0);

        shrink_and_update(plan.decompose(u_next), state, taus);
        check_finite(u_next, state, k);

        const double change = (u_next - u).norm();
        const double base = u.norm();
        u = std::move(u_next);
        ran = k + 1;
        if (options.on_iterate) options.on_iterate(ran, u);
        if (options.early_stop_tol > 0.0 && k > 0 && base > 0.0 &&
            change <= options.early_stop_tol * base)
            break;
    }
    if (report) report->iterations_run = ran;

    Eigen::VectorXi indicator(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) indicator[i] = u[i] >= options.beta ? 1 : 0;
    return indicator;
}

double relative_error(const Eigen::VectorXd& u, const Eigen::VectorXd& uref) {
    if (u.size() != uref.size()) throw DimensionMismatch("relative_error length mismatch");
    const double ref = uref.norm();
    if (ref == 0.0) throw ZeroReference("reference vector is zero");
    return (u - uref).norm() / ref;
}

double classification_error(const Eigen::VectorXi& predicted, const Eigen::VectorXi& truth,
                            const LabelSet& labels) {
    if (predicted.size() != truth.size())
        throw DimensionMismatch("classification_error length mismatch");
    std::vector<char> labeled(static_cast<std::size_t>(predicted.size()), 0);
    for (const Eigen::Index i : labels.indices) labeled[static_cast<std::size_t>(i)] = 1;
    Eigen::Index wrong = 0, total = 0;
    for (Eigen::Index i = 0; i < predicted.size(); ++i) {
        if (labeled[static_cast<std::size_t>(i)]) continue;
        ++total;
        if (predicted[i] != truth[i]) ++wrong;
    }
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(wrong) / static_cast<double>(total);
}

double denoising_objective(const Graph& g, const TransformPlan& plan, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& f, const ThresholdSchedule& sched) {
    const GraphNorms norms{g.degrees};
    const FrameCoefficients wu = plan.decompose(u);
    double reg = 0.0;
    for (int i = 0; i < wu.entry_count(); ++i) {
        const BandIndex bi = wu.index_of(i);
        reg += sched.weight(bi.band, bi.level) * norms.norm(wu.at_index(i), 1);
    }
    const double fidelity = norms.norm(u - f, 2);
    return reg + 0.5 * fidelity * fidelity;
}

} // namespace wftg

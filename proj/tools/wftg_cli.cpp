// Command-line front end: graph construction, spectral estimates, mask checks,
// transforms, denoising, clustering, benchmarks and self-verification.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "wftg/datasets.hpp"
#include "wftg/io.hpp"
#include "wftg/solvers.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumerical = 3;
constexpr int kMetricsFormatVersion = 1;

// Flat/nested JSON config files; command-line flags override file values.
class ConfigJson : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json j = json::parse(input);
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

private:
    static void collect(const json& j, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto deeper = parents;
                deeper.push_back(key);
                collect(value, deeper, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(to_text(v));
            } else {
                item.inputs.push_back(to_text(value));
            }
            items.push_back(std::move(item));
        }
    }

    static std::string to_text(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

struct CommonArgs {
    std::string points_path;
    std::string edges_path;
    bool skip_header = false;
    int k = 10;
    double sigma = 10.0;
    std::string laplacian = "unnormalized";
    std::string family = "linear";
    int bspline_r = 0;
    int levels = 1;
    int order = 8;
    std::string mode = "fast";
    std::uint64_t seed = 42;
};

void add_graph_inputs(CLI::App* cmd, CommonArgs& a) {
    auto* pts = cmd->add_option("--points", a.points_path, "point cloud CSV (rows = vertices)");
    auto* edg = cmd->add_option("--edges", a.edges_path, "edge list CSV i,j,weight");
    pts->excludes(edg);
    cmd->add_flag("--header", a.skip_header, "skip the first CSV row");
    cmd->add_option("--k", a.k, "nearest-neighbor count")->capture_default_str();
    cmd->add_option("--sigma", a.sigma, "Gaussian weight scale")->capture_default_str();
}

void add_family_options(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--family", a.family, "haar | linear | quadratic | bspline[:r]")
        ->capture_default_str();
    cmd->add_option("--r", a.bspline_r, "B-spline order when --family bspline");
}

std::string family_name(const CommonArgs& a) {
    if (a.family == "bspline" && a.bspline_r > 0)
        return "bspline:" + std::to_string(a.bspline_r);
    return a.family;
}

wftg::Graph load_graph(const CommonArgs& a) {
    if (!a.edges_path.empty()) return wftg::read_edge_list_csv(a.edges_path);
    if (a.points_path.empty()) throw wftg::InputError("need --points or --edges");
    const wftg::PointCloud pc = wftg::read_points_csv(a.points_path, a.skip_header);
    return wftg::build_knn_graph(pc, a.k, a.sigma);
}

wftg::TransformPlan make_plan(const wftg::Graph& g, const CommonArgs& a) {
    wftg::PlanOptions options;
    options.cheb_order = a.order;
    options.power.seed = a.seed;
    const auto mode = a.mode == "exact" ? wftg::TransformMode::Exact : wftg::TransformMode::Fast;
    return wftg::TransformPlan(g, wftg::laplacian_kind_from_string(a.laplacian),
                               wftg::MaskFamily::parse(family_name(a)), a.levels, mode, options);
}

json config_echo(const CommonArgs& a) {
    return json{{"points", a.points_path}, {"edges", a.edges_path},   {"k", a.k},
                {"sigma", a.sigma},        {"laplacian", a.laplacian}, {"family", family_name(a)},
                {"levels", a.levels},      {"order", a.order},         {"mode", a.mode},
                {"seed", a.seed}};
}

void emit_metrics(const std::string& path, const json& report) {
    if (path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw wftg::InputError("cannot write " + path);
    out << report.dump(2) << '\n';
}

double max_abs(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

struct CheckLine {
    std::string name;
    bool pass;
    double measured;
    double limit;
};

void print_checks(const std::vector<CheckLine>& checks) {
    for (const auto& c : checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": measured " << c.measured
                  << " (limit " << c.limit << ")\n";
}

int run_verify(const CommonArgs& a) {
    std::vector<CheckLine> checks;
    const wftg::MaskFamily family = wftg::MaskFamily::parse(family_name(a));

    const double uep = wftg::verify_uep(family, 10000);
    checks.push_back({"UEP residual (" + family.name() + ")", uep <= 1e-12, uep, 1e-12});

    // Seeded random geometric graph.
    wftg::SphereSpec sphere;
    sphere.vertex_count = 120;
    sphere.seed = a.seed;
    const wftg::SphereData data = wftg::gen_sphere(sphere);
    const wftg::Graph g = wftg::build_knn_graph(data.points, 8, a.sigma);

    CommonArgs exact = a;
    exact.mode = "exact";
    exact.levels = std::max(a.levels, 2);
    // Higher-order B-spline masks are higher-degree trigonometric polynomials
    // and need a higher Chebyshev order for the same accuracy.
    exact.order = std::max(8, 2 * family.band_count() + 4);
    const wftg::TransformPlan plan_exact = make_plan(g, exact);
    CommonArgs fast = exact;
    fast.mode = "fast";
    const wftg::TransformPlan plan_fast = make_plan(g, fast);

    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd f(g.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = normal(rng);

    const wftg::FrameCoefficients alpha = plan_exact.decompose(f);
    const double pr = max_abs(plan_exact.reconstruct(alpha) - f);
    checks.push_back({"exact perfect reconstruction", pr <= 1e-10, pr, 1e-10});

    const double parseval = std::abs(alpha.squared_norm() - f.squaredNorm());
    checks.push_back({"Parseval identity", parseval <= 1e-10, parseval, 1e-10});

    const wftg::FrameCoefficients alpha_fast = plan_fast.decompose(f);
    double num = 0.0;
    for (int i = 0; i < alpha.entry_count(); ++i)
        num += (alpha_fast.at_index(i) - alpha.at_index(i)).squaredNorm();
    const double rel = std::sqrt(num / alpha.squared_norm());
    checks.push_back({"fast-vs-exact agreement", rel <= 1e-4, rel, 1e-4});

    print_checks(checks);
    for (const auto& c : checks)
        if (!c.pass) return kExitVerifyFailure;
    return kExitOk;
}

int run_bench(const CommonArgs& a, int vertices, const std::string& metrics_path) {
    wftg::SphereSpec sphere;
    sphere.vertex_count = vertices;
    sphere.seed = a.seed;
    const wftg::SphereData data = wftg::gen_sphere(sphere);
    const wftg::Graph g = wftg::build_knn_graph(data.points, a.k, a.sigma);
    const wftg::TransformPlan plan = make_plan(g, a);

    const auto start = std::chrono::steady_clock::now();
    const wftg::FrameCoefficients alpha = plan.decompose(data.signal);
    const Eigen::VectorXd back = plan.reconstruct(alpha);
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();

    json report;
    report["format_version"] = kMetricsFormatVersion;
    report["config"] = config_echo(a);
    report["config"]["vertices"] = vertices;
    report["metrics"] = {
        {"wall_time_seconds", seconds},
        {"reconstruction_inf_error", max_abs(back - data.signal)},
        {"redundancy_factor", plan.family().band_count() * plan.levels() + 1},
    };
    emit_metrics(metrics_path, report);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight wavelet frames on graphs: transforms, denoising, clustering"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<ConfigJson>());
    app.set_config("--config", "", "JSON config file (flags override)");

    CommonArgs a;
    app.add_option("--seed", a.seed, "root random seed")->capture_default_str();

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate synthetic data sets");
    std::string gen_kind = "two-moons", gen_signal = "cap";
    std::string gen_points_out, gen_signal_out, gen_labels_out;
    int gen_vertices = 2000, gen_per_moon = 1000, gen_dim = 100;
    double gen_variance = 0.02, gen_noise_std = 0.0;
    gen->add_option("--kind", gen_kind, "two-moons | sphere")->capture_default_str();
    gen->add_option("--out", gen_points_out, "points CSV output")->required();
    gen->add_option("--signal-out", gen_signal_out, "signal CSV output (sphere)");
    gen->add_option("--labels-out", gen_labels_out, "truth labels CSV output (two-moons)");
    gen->add_option("--vertices", gen_vertices, "sphere vertex count")->capture_default_str();
    gen->add_option("--signal", gen_signal, "cap | harmonic | step")->capture_default_str();
    gen->add_option("--per-moon", gen_per_moon, "points per moon")->capture_default_str();
    gen->add_option("--dim", gen_dim, "ambient dimension")->capture_default_str();
    gen->add_option("--variance", gen_variance, "noise variance per coordinate")
        ->capture_default_str();
    gen->add_option("--noise-std", gen_noise_std, "additive Gaussian noise on the signal")
        ->capture_default_str();

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "build a k-NN graph and export its edge list");
    std::string graph_out;
    add_graph_inputs(graph_cmd, a);
    graph_cmd->add_option("--out", graph_out, "edge list CSV output")->required();

    // ---- spectral ----
    auto* spectral_cmd = app.add_subcommand("spectral", "largest eigenvalue and dilation scale");
    add_graph_inputs(spectral_cmd, a);
    spectral_cmd->add_option("--laplacian", a.laplacian, "unnormalized | random-walk | symmetric")
        ->capture_default_str();

    // ---- masks verify ----
    auto* masks_cmd = app.add_subcommand("masks", "mask family utilities");
    auto* masks_verify = masks_cmd->add_subcommand("verify", "partition-identity residual");
    add_family_options(masks_verify, a);
    int masks_grid = 10000;
    masks_verify->add_option("--grid", masks_grid, "grid size")->capture_default_str();

    // ---- cheb error ----
    auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev approximation utilities");
    auto* cheb_error = cheb_cmd->add_subcommand("error", "per-mask sup approximation errors");
    add_family_options(cheb_error, a);
    cheb_error->add_option("--n", a.order, "number of Chebyshev terms")->capture_default_str();
    int cheb_grid = 10000;
    cheb_error->add_option("--grid", cheb_grid, "grid size")->capture_default_str();

    // ---- transform / itransform ----
    auto* transform_cmd = app.add_subcommand("transform", "multi-level decomposition");
    std::string signal_path, coeff_path;
    add_graph_inputs(transform_cmd, a);
    add_family_options(transform_cmd, a);
    transform_cmd->add_option("--signal", signal_path, "signal CSV")->required();
    transform_cmd->add_option("--levels", a.levels)->capture_default_str();
    transform_cmd->add_option("--order", a.order)->capture_default_str();
    transform_cmd->add_option("--mode", a.mode, "fast | exact")->capture_default_str();
    transform_cmd->add_option("--out", coeff_path, "coefficient file output")->required();
    bool no_sidecar = false;
    transform_cmd->add_flag("--no-sidecar", no_sidecar, "skip the JSON sidecar");

    auto* itransform_cmd = app.add_subcommand("itransform", "reconstruction from coefficients");
    std::string recon_out;
    add_graph_inputs(itransform_cmd, a);
    itransform_cmd->add_option("--coeffs", coeff_path, "coefficient file")->required();
    itransform_cmd->add_option("--out", recon_out, "signal CSV output")->required();
    itransform_cmd->add_option("--mode", a.mode, "fast | exact")->capture_default_str();
    itransform_cmd->add_option("--order", a.order)->capture_default_str();

    // ---- denoise ----
    auto* denoise_cmd = app.add_subcommand("denoise", "split-Bregman graph denoising");
    double nu = 0.04, mu = 1.0, beta = 0.5;
    int iterations = 200, trials = 1;
    double noise_std = 0.0, label_fraction = 0.1;
    std::string truth_path, out_path, metrics_path;
    add_graph_inputs(denoise_cmd, a);
    add_family_options(denoise_cmd, a);
    denoise_cmd->add_option("--signal", signal_path, "observed signal CSV")->required();
    denoise_cmd->add_option("--nu", nu, "regularization strength")->capture_default_str();
    denoise_cmd->add_option("--mu", mu, "splitting penalty")->capture_default_str();
    denoise_cmd->add_option("--iters", iterations)->capture_default_str();
    denoise_cmd->add_option("--levels", a.levels)->capture_default_str();
    denoise_cmd->add_option("--order", a.order)->capture_default_str();
    denoise_cmd->add_option("--mode", a.mode, "fast | exact")->capture_default_str();
    denoise_cmd->add_option("--truth", truth_path, "clean signal CSV for error reporting");
    denoise_cmd->add_option("--trials", trials, "noisy replicas of --signal (needs --noise-std)")
        ->capture_default_str();
    denoise_cmd->add_option("--noise-std", noise_std, "per-trial noise std")
        ->capture_default_str();
    denoise_cmd->add_option("--out", out_path, "denoised signal CSV");
    denoise_cmd->add_option("--metrics", metrics_path, "metrics JSON path (stdout if empty)");

    // ---- cluster ----
    auto* cluster_cmd = app.add_subcommand("cluster", "semi-supervised binary clustering");
    std::string labels_path, truth_labels_path;
    bool paper_fidelity = false;
    add_graph_inputs(cluster_cmd, a);
    add_family_options(cluster_cmd, a);
    cluster_cmd->add_option("--labels", labels_path, "known labels CSV index,label");
    cluster_cmd->add_option("--truth-labels", truth_labels_path,
                            "dense truth labels CSV (for --trials sampling and error)");
    cluster_cmd->add_option("--label-fraction", label_fraction)->capture_default_str();
    cluster_cmd->add_option("--nu", nu)->capture_default_str();
    cluster_cmd->add_option("--mu", mu)->capture_default_str();
    cluster_cmd->add_option("--beta", beta)->capture_default_str();
    cluster_cmd->add_option("--iters", iterations)->capture_default_str();
    cluster_cmd->add_option("--levels", a.levels)->capture_default_str();
    cluster_cmd->add_option("--order", a.order)->capture_default_str();
    cluster_cmd->add_option("--mode", a.mode, "fast | exact")->capture_default_str();
    cluster_cmd->add_option("--trials", trials, "random label draws (needs --truth-labels)")
        ->capture_default_str();
    cluster_cmd->add_flag("--paper-fidelity", paper_fidelity,
                          "use the plain-f fidelity numerator in the u-update");
    cluster_cmd->add_option("--out", out_path, "predicted labels CSV");
    cluster_cmd->add_option("--metrics", metrics_path, "metrics JSON path (stdout if empty)");

    // ---- verify / bench ----
    auto* verify_cmd = app.add_subcommand("verify", "self-checks: UEP, reconstruction, Parseval");
    add_family_options(verify_cmd, a);
    verify_cmd->add_option("--levels", a.levels)->capture_default_str();
    verify_cmd->add_option("--sigma", a.sigma)->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "time a 4-level transform on a sphere graph");
    int bench_vertices = 2000;
    add_family_options(bench_cmd, a);
    bench_cmd->add_option("--levels", a.levels, "")->default_val(4);
    bench_cmd->add_option("--vertices", bench_vertices)->capture_default_str();
    bench_cmd->add_option("--k", a.k)->capture_default_str();
    bench_cmd->add_option("--sigma", a.sigma)->capture_default_str();
    bench_cmd->add_option("--metrics", metrics_path, "metrics JSON path (stdout if empty)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (gen_kind == "two-moons") {
                wftg::TwoMoonsSpec spec;
                spec.points_per_moon = gen_per_moon;
                spec.ambient_dim = gen_dim;
                spec.noise_variance = gen_variance;
                spec.seed = a.seed;
                const wftg::TwoMoons moons = wftg::gen_two_moons(spec);
                wftg::write_points_csv(gen_points_out, moons.points);
                if (!gen_labels_out.empty()) wftg::write_labels_csv(gen_labels_out, moons.labels);
            } else if (gen_kind == "sphere") {
                wftg::SphereSpec spec;
                spec.vertex_count = gen_vertices;
                spec.seed = a.seed;
                spec.signal = wftg::sphere_signal_from_string(gen_signal);
                const wftg::SphereData data = wftg::gen_sphere(spec);
                wftg::write_points_csv(gen_points_out, data.points);
                if (!gen_signal_out.empty()) {
                    Eigen::VectorXd s = data.signal;
                    if (gen_noise_std > 0.0)
                        s = wftg::add_gaussian_noise(s, gen_noise_std, a.seed + 1);
                    wftg::write_signal_csv(gen_signal_out, s);
                }
            } else {
                throw wftg::InputError("unknown gen kind: " + gen_kind);
            }
            return kExitOk;
        }

        if (graph_cmd->parsed()) {
            wftg::write_edge_list_csv(graph_out, load_graph(a));
            return kExitOk;
        }

        if (spectral_cmd->parsed()) {
            const wftg::Graph g = load_graph(a);
            const wftg::SparseOperator l =
                wftg::laplacian(g, wftg::laplacian_kind_from_string(a.laplacian));
            wftg::PowerIterationOptions opt;
            opt.seed = a.seed;
            const wftg::SpectralBound bound = wftg::estimate_lambda_max(l, opt);
            std::cout << json{{"lambda_max", bound.lambda_max}, {"N", bound.dilation_scale}}.dump()
                      << '\n';
            return kExitOk;
        }

        if (masks_verify->parsed()) {
            const double residual =
                wftg::verify_uep(wftg::MaskFamily::parse(family_name(a)), masks_grid);
            std::cout << json{{"family", family_name(a)}, {"residual", residual}}.dump() << '\n';
            return kExitOk;
        }

        if (cheb_error->parsed()) {
            const wftg::MaskFamily family = wftg::MaskFamily::parse(family_name(a));
            json errors = json::array();
            for (int j = 0; j <= family.band_count(); ++j) {
                const auto g = [&](double xi) { return family.eval(j, xi); };
                const wftg::ChebApprox approx = wftg::cheb_coeffs(g, a.order);
                errors.push_back(wftg::cheb_sup_error(approx, g, cheb_grid));
            }
            std::cout << json{{"family", family_name(a)}, {"n", a.order}, {"sup_errors", errors}}
                             .dump()
                      << '\n';
            return kExitOk;
        }

        if (transform_cmd->parsed()) {
            const wftg::Graph g = load_graph(a);
            const Eigen::VectorXd f = wftg::read_signal_csv(signal_path, a.skip_header);
            const wftg::TransformPlan plan = make_plan(g, a);
            wftg::write_coefficients(coeff_path, plan.decompose(f), !no_sidecar);
            return kExitOk;
        }

        if (itransform_cmd->parsed()) {
            const wftg::Graph g = load_graph(a);
            const wftg::FrameCoefficients coeffs = wftg::read_coefficients(coeff_path);
            a.family = coeffs.meta().family;
            a.bspline_r = 0;
            a.levels = coeffs.meta().levels;
            a.order = coeffs.meta().cheb_order;
            a.laplacian = wftg::to_string(coeffs.meta().kind);
            wftg::PlanOptions options;
            options.cheb_order = a.order;
            options.power.seed = a.seed;
            options.dilation_scale = coeffs.meta().dilation_scale;
            const auto mode =
                a.mode == "exact" ? wftg::TransformMode::Exact : wftg::TransformMode::Fast;
            const wftg::TransformPlan plan(g, coeffs.meta().kind,
                                           wftg::MaskFamily::parse(a.family),
                                           coeffs.meta().levels, mode, options);
            wftg::write_signal_csv(recon_out, plan.reconstruct(coeffs));
            return kExitOk;
        }

        if (denoise_cmd->parsed()) {
            const wftg::Graph g = load_graph(a);
            const Eigen::VectorXd observed = wftg::read_signal_csv(signal_path, a.skip_header);
            const wftg::TransformPlan plan = make_plan(g, a);
            const wftg::ThresholdSchedule sched{nu};
            wftg::SolverOptions options;
            options.mu = mu;
            options.iterations = iterations;

            std::optional<Eigen::VectorXd> truth;
            if (!truth_path.empty()) truth = wftg::read_signal_csv(truth_path, a.skip_header);

            json trial_metrics = json::array();
            Eigen::VectorXd last;
            const auto start = std::chrono::steady_clock::now();
            if (trials <= 1) {
                last = wftg::denoise(g, plan, observed, sched, options);
                if (truth)
                    trial_metrics.push_back({{"relative_error",
                                              wftg::relative_error(last, *truth)}});
            } else {
                if (noise_std <= 0.0)
                    throw wftg::InputError("--trials needs --noise-std > 0");
                std::vector<std::future<Eigen::VectorXd>> futures;
                for (int t = 0; t < trials; ++t) {
                    const std::uint64_t trial_seed = a.seed + static_cast<std::uint64_t>(t + 1);
                    futures.push_back(std::async(std::launch::async, [&, trial_seed] {
                        const Eigen::VectorXd noisy =
                            wftg::add_gaussian_noise(observed, noise_std, trial_seed);
                        return wftg::denoise(g, plan, noisy, sched, options);
                    }));
                }
                for (auto& fut : futures) {
                    last = fut.get();
                    if (truth)
                        trial_metrics.push_back({{"relative_error",
                                                  wftg::relative_error(last, *truth)}});
                }
            }
            const auto stop = std::chrono::steady_clock::now();

            if (!out_path.empty()) wftg::write_signal_csv(out_path, last);
            json report;
            report["format_version"] = kMetricsFormatVersion;
            report["config"] = config_echo(a);
            report["config"]["nu"] = nu;
            report["config"]["mu"] = mu;
            report["config"]["iterations"] = iterations;
            report["config"]["trials"] = trials;
            report["metrics"] = {
                {"wall_time_seconds", std::chrono::duration<double>(stop - start).count()},
                {"trials", trial_metrics},
            };
            emit_metrics(metrics_path, report);
            return kExitOk;
        }

        if (cluster_cmd->parsed()) {
            const wftg::Graph g = load_graph(a);
            const wftg::TransformPlan plan = make_plan(g, a);
            const wftg::ThresholdSchedule sched{nu};
            wftg::ClusterOptions options;
            options.mu = mu;
            options.iterations = iterations;
            options.beta = beta;
            options.fidelity_degree_weighted = !paper_fidelity;

            std::optional<Eigen::VectorXi> truth;
            if (!truth_labels_path.empty())
                truth = wftg::read_dense_labels_csv(truth_labels_path);

            json trial_metrics = json::array();
            Eigen::VectorXi last;
            const auto start = std::chrono::steady_clock::now();
            if (!labels_path.empty()) {
                const wftg::LabelSet labels = wftg::read_label_set_csv(labels_path);
                last = wftg::cluster(g, plan, labels, sched, options);
                if (truth)
                    trial_metrics.push_back(
                        {{"error_percent", wftg::classification_error(last, *truth, labels)}});
            } else {
                if (!truth) throw wftg::InputError("need --labels or --truth-labels");
                std::vector<std::future<std::pair<Eigen::VectorXi, double>>> futures;
                for (int t = 0; t < trials; ++t) {
                    const std::uint64_t trial_seed = a.seed + static_cast<std::uint64_t>(t + 1);
                    futures.push_back(std::async(std::launch::async, [&, trial_seed] {
                        std::mt19937_64 rng(trial_seed);
                        std::vector<Eigen::Index> order(static_cast<std::size_t>(g.size()));
                        std::iota(order.begin(), order.end(), Eigen::Index{0});
                        std::shuffle(order.begin(), order.end(), rng);
                        const auto count = static_cast<std::size_t>(
                            std::lround(label_fraction * static_cast<double>(g.size())));
                        wftg::LabelSet labels;
                        for (std::size_t i = 0; i < count; ++i) {
                            labels.indices.push_back(order[i]);
                            labels.values.push_back((*truth)[order[i]]);
                        }
                        const Eigen::VectorXi pred =
                            wftg::cluster(g, plan, labels, sched, options);
                        return std::make_pair(pred,
                                              wftg::classification_error(pred, *truth, labels));
                    }));
                }
                double mean = 0.0;
                for (auto& fut : futures) {
                    auto [pred, err] = fut.get();
                    last = pred;
                    mean += err / static_cast<double>(trials);
                    trial_metrics.push_back({{"error_percent", err}});
                }
                trial_metrics.push_back({{"mean_error_percent", mean}});
            }
            const auto stop = std::chrono::steady_clock::now();

            if (!out_path.empty()) wftg::write_labels_csv(out_path, last);
            json report;
            report["format_version"] = kMetricsFormatVersion;
            report["config"] = config_echo(a);
            report["config"]["nu"] = nu;
            report["config"]["mu"] = mu;
            report["config"]["beta"] = beta;
            report["config"]["iterations"] = iterations;
            report["config"]["trials"] = trials;
            report["config"]["label_fraction"] = label_fraction;
            report["config"]["fidelity_degree_weighted"] = options.fidelity_degree_weighted;
            report["metrics"] = {
                {"wall_time_seconds", std::chrono::duration<double>(stop - start).count()},
                {"trials", trial_metrics},
            };
            emit_metrics(metrics_path, report);
            return kExitOk;
        }

        if (verify_cmd->parsed()) return run_verify(a);
        if (bench_cmd->parsed()) return run_bench(a, bench_vertices, metrics_path);
    } catch (const wftg::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const wftg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "test_support.hpp"
#include "wftg/datasets.hpp"
#include "wftg/io.hpp"
#include "wftg/transform.hpp"

using namespace wftg;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("wftg_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("points CSV round trip preserves doubles exactly") {
    TempDir tmp;
    TwoMoonsSpec spec;
    spec.points_per_moon = 40;
    spec.ambient_dim = 7;
    spec.seed = 2;
    const TwoMoons moons = gen_two_moons(spec);
    write_points_csv(tmp.file("pts.csv"), moons.points);
    const PointCloud back = read_points_csv(tmp.file("pts.csv"));
    CHECK(back.size() == moons.points.size());
    CHECK((back.points - moons.points.points).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("header rows can be skipped") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("h.csv"));
        out << "x,y\n1.5,2.5\n-3.0,4.0\n";
    }
    const PointCloud pc = read_points_csv(tmp.file("h.csv"), true);
    CHECK(pc.size() == 2);
    CHECK(pc.points(0, 0) == 1.5);
    CHECK_THROWS_AS(read_points_csv(tmp.file("h.csv"), false), InputError);
}

TEST_CASE("signal and label round trips") {
    TempDir tmp;
    const Eigen::VectorXd f = testing::random_vector(31, 4);
    write_signal_csv(tmp.file("sig.csv"), f);
    CHECK((read_signal_csv(tmp.file("sig.csv")) - f).cwiseAbs().maxCoeff() == 0.0);

    LabelSet labels;
    labels.indices = {0, 5, 9};
    labels.values = {1, 0, 1};
    write_label_set_csv(tmp.file("lab.csv"), labels);
    const LabelSet back = read_label_set_csv(tmp.file("lab.csv"));
    CHECK(back.indices == labels.indices);
    CHECK(back.values == labels.values);
}

TEST_CASE("edge list round trip rebuilds the same graph") {
    TempDir tmp;
    const Graph g = testing::random_connected_graph(25, 6);
    write_edge_list_csv(tmp.file("edges.csv"), g);
    const Graph back = read_edge_list_csv(tmp.file("edges.csv"));
    CHECK(back.size() == g.size());
    CHECK((Eigen::MatrixXd(back.adjacency) - Eigen::MatrixXd(g.adjacency))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // i < j and 0-based in the file
    std::ifstream in(tmp.file("edges.csv"));
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const auto comma2 = line.find(',', comma + 1);
        CHECK(std::stol(line.substr(0, comma)) <
              std::stol(line.substr(comma + 1, comma2 - comma - 1)));
    }
}

TEST_CASE("coefficient files survive a binary round trip with sidecar") {
    TempDir tmp;
    const Graph g = testing::random_connected_graph(30, 8);
    const TransformPlan plan(g, LaplacianKind::Unnormalized, MaskFamily::bspline(3), 2,
                             TransformMode::Fast);
    const FrameCoefficients coeffs = plan.decompose(testing::random_vector(g.size(), 12));

    write_coefficients(tmp.file("c.bin"), coeffs);
    const FrameCoefficients back = read_coefficients(tmp.file("c.bin"));
    CHECK(back.meta() == coeffs.meta());
    for (int i = 0; i < coeffs.entry_count(); ++i)
        CHECK((back.at_index(i) - coeffs.at_index(i)).cwiseAbs().maxCoeff() == 0.0);

    CHECK(std::filesystem::exists(tmp.file("c.bin.json")));
    // Reconstruction from the file matches reconstruction from memory.
    CHECK((plan.reconstruct(back) - plan.reconstruct(coeffs)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("corrupted coefficient files are rejected") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("bad.bin"), std::ios::binary);
        out << "definitely not a coefficient file";
    }
    CHECK_THROWS_AS(read_coefficients(tmp.file("bad.bin")), Error);

    const Graph g = testing::random_connected_graph(12, 9);
    const TransformPlan plan(g, LaplacianKind::Unnormalized, MaskFamily::haar(), 1,
                             TransformMode::Fast);
    const FrameCoefficients coeffs = plan.decompose(testing::random_vector(g.size(), 3));
    write_coefficients(tmp.file("t.bin"), coeffs, false);
    // Truncate the payload.
    std::filesystem::resize_file(tmp.file("t.bin"), 40);
    CHECK_THROWS_AS(read_coefficients(tmp.file("t.bin")), Error);
}

TEST_CASE("missing files raise input errors") {
    CHECK_THROWS_AS(read_points_csv("/nonexistent/nope.csv"), InputError);
    CHECK_THROWS_AS(read_coefficients("/nonexistent/nope.bin"), InputError);
}

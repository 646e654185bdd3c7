#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "test_support.hpp"
#include "wftg/graph.hpp"

using namespace wftg;

TEST_CASE("two points at distance sqrt(sigma) get a single edge of weight 1/e") {
    const double sigma = 3.7;
    Eigen::MatrixXd pts(2, 1);
    pts << 0.0, std::sqrt(sigma);
    const Graph g = build_knn_graph(PointCloud{pts}, 1, sigma);
    CHECK(g.size() == 2);
    CHECK(g.adjacency.coeff(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(g.adjacency.coeff(1, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(g.adjacency.coeff(0, 0) == 0.0);
}

TEST_CASE("three collinear points with k=1 link only adjacent pairs") {
    const double sigma = 5.0;
    Eigen::MatrixXd pts(3, 1);
    pts << 0.0, 1.0, 2.0;
    const Graph g = build_knn_graph(PointCloud{pts}, 1, sigma);
    // Exhaustive pairwise check: (0,1) and (1,2) at distance 1, (0,2) at 2.
    const double w = std::exp(-1.0 / sigma);
    CHECK(g.adjacency.coeff(0, 1) == doctest::Approx(w).epsilon(1e-14));
    CHECK(g.adjacency.coeff(1, 2) == doctest::Approx(w).epsilon(1e-14));
    CHECK(g.adjacency.coeff(0, 2) == 0.0);
    g.validate();
}

TEST_CASE("coincident points are allowed and get weight 1") {
    Eigen::MatrixXd pts(3, 2);
    pts << 0.0, 0.0, 0.0, 0.0, 1.0, 0.0;
    const Graph g = build_knn_graph(PointCloud{pts}, 2, 1.0);
    CHECK(g.adjacency.coeff(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("degenerate and invalid inputs are rejected") {
    Eigen::MatrixXd one(1, 2);
    one << 0.0, 0.0;
    CHECK_THROWS_AS(build_knn_graph(PointCloud{one}, 1, 1.0), DegenerateInput);

    Eigen::MatrixXd nan_pts(2, 1);
    nan_pts << 0.0, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(build_knn_graph(PointCloud{nan_pts}, 1, 1.0), DegenerateInput);

    Eigen::MatrixXd pts(4, 1);
    pts << 0.0, 1.0, 2.0, 3.0;
    CHECK_THROWS_AS(build_knn_graph(PointCloud{pts}, 0, 1.0), InputError);
    CHECK_THROWS_AS(build_knn_graph(PointCloud{pts}, 4, 1.0), InputError);
    CHECK_THROWS_AS(build_knn_graph(PointCloud{pts}, 1, 0.0), InputError);
}

TEST_CASE("far-apart pairs with k=1 raise DisconnectedGraph") {
    Eigen::MatrixXd pts(4, 1);
    pts << 0.0, 0.1, 100.0, 100.1;
    CHECK_THROWS_AS(build_knn_graph(PointCloud{pts}, 1, 1.0), DisconnectedGraph);
}

TEST_CASE("unnormalized Laplacian matches hand values") {
    SUBCASE("K2 with weight w") {
        const double w = 2.5;
        const SparseOperator l = laplacian(testing::k2_graph(w), LaplacianKind::Unnormalized);
        const Eigen::MatrixXd dense(l.matrix());
        Eigen::MatrixXd expect(2, 2);
        expect << w, -w, -w, w;
        CHECK((dense - expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
        CHECK(l.symmetric());
    }
    SUBCASE("path P3 with unit weights") {
        const SparseOperator l = laplacian(testing::path3_graph(), LaplacianKind::Unnormalized);
        Eigen::MatrixXd expect(3, 3);
        expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
        CHECK((Eigen::MatrixXd(l.matrix()) - expect).cwiseAbs().maxCoeff() ==
              doctest::Approx(0.0));
    }
}

TEST_CASE("unnormalized Laplacian annihilates constants and row sums vanish") {
    const Graph g = testing::random_connected_graph(40, 7);
    const SparseOperator l = laplacian(g, LaplacianKind::Unnormalized);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.size());
    CHECK(l.apply(ones).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("quadratic form equals weighted sum of squared differences") {
    const Graph g = testing::random_connected_graph(30, 11);
    const SparseOperator l = laplacian(g, LaplacianKind::Unnormalized);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Eigen::VectorXd x = testing::random_vector(g.size(), 100 + seed);
        double expect = 0.0;
        for (Eigen::Index i = 0; i < g.adjacency.outerSize(); ++i)
            for (SparseMatrix::InnerIterator it(g.adjacency, i); it; ++it)
                if (it.row() < it.col())
                    expect += it.value() * std::pow(x[it.row()] - x[it.col()], 2);
        const double got = x.dot(l.apply(x));
        CHECK(got == doctest::Approx(expect).epsilon(1e-10));
        CHECK(got >= -1e-12);
    }
}

TEST_CASE("normalized kinds") {
    const Graph g = testing::path3_graph();
    SUBCASE("random walk rows sum to zero and matrix is flagged asymmetric") {
        const SparseOperator l = laplacian(g, LaplacianKind::RandomWalk);
        CHECK_FALSE(l.symmetric());
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(3);
        CHECK(l.apply(ones).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("symmetric kind is symmetric") {
        const SparseOperator l = laplacian(g, LaplacianKind::Symmetric);
        CHECK(l.symmetric());
        const Eigen::MatrixXd dense(l.matrix());
        CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
        // D^{1/2} 1 is the nullvector.
        const Eigen::VectorXd null = g.degrees.cwiseSqrt();
        CHECK(l.apply(null).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("zero degree vertex rejected for normalized kinds") {
        Graph iso = testing::graph_from_edges(3, {{0, 1, 1.0}});
        CHECK_THROWS_AS(laplacian(iso, LaplacianKind::RandomWalk), ZeroDegree);
        CHECK_THROWS_AS(laplacian(iso, LaplacianKind::Symmetric), ZeroDegree);
    }
}

TEST_CASE("knn graph construction is permutation-equivariant") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int n = 25;
    Eigen::MatrixXd pts(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) pts(i, j) = normal(rng);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd permuted(n, 2);
    for (int i = 0; i < n; ++i) permuted.row(perm[static_cast<std::size_t>(i)]) = pts.row(i);

    const Graph g = build_knn_graph(PointCloud{pts}, 4, 1.5);
    const Graph h = build_knn_graph(PointCloud{permuted}, 4, 1.5);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            worst = std::max(worst,
                             std::abs(g.adjacency.coeff(i, j) -
                                      h.adjacency.coeff(perm[static_cast<std::size_t>(i)],
                                                        perm[static_cast<std::size_t>(j)])));
    CHECK(worst <= 1e-15);
}

TEST_CASE("operator apply checks dimensions and counts applications") {
    const SparseOperator l = laplacian(testing::k2_graph(), LaplacianKind::Unnormalized);
    CHECK_THROWS_AS(l.apply(Eigen::VectorXd::Zero(3)), DimensionMismatch);
    const auto before = l.apply_count();
    l.apply(Eigen::VectorXd::Zero(2));
    CHECK(l.apply_count() == before + 1);
}

TEST_CASE("sphere sample at k=10 keeps every neighbor count in [10, 20]") {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int n = 400;
    Eigen::MatrixXd pts(n, 3);
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
        pts.row(i) = v.normalized();
    }
    const Graph g = build_knn_graph(PointCloud{pts}, 10, 10.0);
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (SparseMatrix::InnerIterator it(g.adjacency, i); it; ++it) ++count;
        CHECK(count >= 10);
        CHECK(count <= 20);
    }
}

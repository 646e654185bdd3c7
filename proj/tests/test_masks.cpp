#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wftg/masks.hpp"

using namespace wftg;

TEST_CASE("haar values at the endpoints") {
    const MaskFamily haar = MaskFamily::haar();
    CHECK(haar.band_count() == 1);
    CHECK(haar.eval(0, M_PI) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(haar.eval(1, M_PI) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(haar.eval(0, 0.0) == doctest::Approx(1.0));
    CHECK(haar.eval(1, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("linear family at pi/2") {
    const MaskFamily linear = MaskFamily::linear();
    CHECK(linear.eval(0, M_PI / 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(linear.eval(1, M_PI / 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(linear.eval(2, M_PI / 2) == doctest::Approx(0.5).epsilon(1e-15));
    const double sum = 0.25 + 0.5 + 0.25;
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("low-pass behavior at zero: a_0(0) = 1, a_j(0) = 0") {
    for (const auto& family :
         {MaskFamily::haar(), MaskFamily::linear(), MaskFamily::quadratic(),
          MaskFamily::bspline(5)}) {
        CHECK(family.eval(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        for (int j = 1; j <= family.band_count(); ++j)
            CHECK(family.eval(j, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("partition identity on the shipped families") {
    for (const auto& family :
         {MaskFamily::haar(), MaskFamily::linear(), MaskFamily::quadratic()}) {
        CHECK(verify_uep(family, 10000) <= 1e-12);
    }
    for (int r = 1; r <= 6; ++r) CHECK(verify_uep(MaskFamily::bspline(r), 10000) <= 1e-12);
}

TEST_CASE("explicit families coincide with the matching B-spline orders") {
    const int grid = 1001;
    const MaskFamily pairs[][2] = {
        {MaskFamily::haar(), MaskFamily::bspline(1)},
        {MaskFamily::linear(), MaskFamily::bspline(2)},
        {MaskFamily::quadratic(), MaskFamily::bspline(3)},
    };
    for (const auto& [named, spline] : pairs) {
        REQUIRE(named.band_count() == spline.band_count());
        double worst = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double xi = M_PI * i / (grid - 1);
            for (int j = 0; j <= named.band_count(); ++j)
                worst = std::max(worst, std::abs(named.eval(j, xi) - spline.eval(j, xi)));
        }
        CHECK(worst <= 1e-14);
    }
}

TEST_CASE("a deliberately broken family is caught by the residual") {
    const MaskFamily broken("broken", 1,
                            [](int, double xi) { return std::cos(xi / 2); });
    const double residual = verify_uep(broken, 101);
    CHECK(residual >= 0.9); // at xi = 0 the sum of squares is 2
}

TEST_CASE("b-spline low-pass masks are nonincreasing on the grid") {
    for (int r : {1, 2, 3, 4, 6}) {
        const MaskFamily family = MaskFamily::bspline(r);
        double prev = family.eval(0, 0.0);
        for (int i = 1; i < 2000; ++i) {
            const double cur = family.eval(0, M_PI * i / 1999.0);
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("family parsing") {
    CHECK(MaskFamily::parse("haar").band_count() == 1);
    CHECK(MaskFamily::parse("linear").band_count() == 2);
    CHECK(MaskFamily::parse("quadratic").band_count() == 3);
    CHECK(MaskFamily::parse("bspline:4").band_count() == 4);
    CHECK(MaskFamily::parse("bspline:4").name() == "bspline:4");
    CHECK_THROWS_AS(MaskFamily::parse("cubic"), UnknownFamily);
    CHECK_THROWS_AS(MaskFamily::parse("bspline:x"), UnknownFamily);
    CHECK_THROWS_AS(MaskFamily::bspline(0), InputError);
}

TEST_CASE("verify_uep rejects a degenerate grid") {
    CHECK_THROWS_AS(verify_uep(MaskFamily::haar(), 1), InputError);
}

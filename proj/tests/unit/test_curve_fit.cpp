#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "uavlink/curve_fit.hpp"
#include "uavlink/error.hpp"
#include "uavlink/rng.hpp"

using namespace uavlink;

namespace {

// Brute-force nearest grid row, written independently of the library lookup.
std::uint64_t enumerate_grid(const LossCurve& c, double y) {
    std::uint64_t best = 0;
    double best_err = 1e300;
    for (int i = 1; i <= 1000; ++i) {
        const double x = 10.0 * i;
        const double v = c.a * std::log(x) + c.b;
        if (v > 0.0 && std::abs(v - y) < best_err) {
            best_err = std::abs(v - y);
            best = static_cast<std::uint64_t>(x);
        }
    }
    return best;
}

std::vector<FitPoint> sample_curve(double a, double b, std::initializer_list<double> xs) {
    std::vector<FitPoint> pts;
    for (double x : xs) pts.push_back({x, a * std::log(x) + b});
    return pts;
}

} // namespace

TEST_CASE("reference family") {
    const auto family = reference_curve_family();
    REQUIRE(family.curves().size() == 3);
    CHECK(family.curves()[0] == LossCurve{6.8, 26.0, 5.0});
    CHECK(family.curves()[1] == LossCurve{7.1, 4.0, 7.0});
    CHECK(family.curves()[2] == LossCurve{6.2, -6.0, 9.0});
    CHECK(family.find(7.0)->a == 7.1);
    CHECK(family.find(8.0) == nullptr);
}

TEST_CASE("family invariants") {
    CHECK_THROWS_AS(CurveFamily({}), Error);
    CHECK_THROWS_AS(CurveFamily({{1.0, 0.0, 7.0}, {1.0, 0.0, 5.0}}), Error);
    CHECK_THROWS_AS(CurveFamily({{1.0, 0.0, 5.0}, {1.0, 0.0, 5.0}}), Error);
    CHECK_NOTHROW(CurveFamily({{1.0, 0.0, 5.0}}));
}

TEST_CASE("fit recovers exact models") {
    const auto pts = sample_curve(6.8, 26.0, {10, 100, 1000, 10000});
    const auto c = fit_log_curve(pts, 5.0);
    CHECK(std::abs(c.a - 6.8) < 1e-9);
    CHECK(std::abs(c.b - 26.0) < 1e-9);
    CHECK(c.power_dbm == 5.0);

    SUBCASE("two points interpolate") {
        const std::vector<FitPoint> two{{20.0, 3.0}, {500.0, 41.0}};
        const auto line = fit_log_curve(two, 0.0);
        CHECK(evaluate_curve(line, 20.0) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(evaluate_curve(line, 500.0) == doctest::Approx(41.0).epsilon(1e-12));
    }
}

TEST_CASE("fit recovery property over random (a, b)") {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const double a = 0.1 + 99.9 * rng.next_uniform();
        const double b = -100.0 + 200.0 * rng.next_uniform();
        std::vector<FitPoint> pts;
        const int n = 2 + static_cast<int>(rng.next_uniform() * 10);
        for (int k = 0; k < n; ++k) {
            const double x = 1.0 + std::pow(10.0, 5.0 * rng.next_uniform()) + k;
            pts.push_back({x, a * std::log(x) + b});
        }
        const auto c = fit_log_curve(pts, 0.0);
        REQUIRE(std::abs(c.a - a) <= 1e-9 * std::abs(a));
        REQUIRE(std::abs(c.b - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("fit error paths") {
    const std::vector<FitPoint> one{{10.0, 1.0}};
    CHECK_THROWS_AS(fit_log_curve(one, 0.0), Error);
    const std::vector<FitPoint> same_x{{10.0, 1.0}, {10.0, 2.0}, {10.0, 3.0}};
    CHECK_THROWS_AS(fit_log_curve(same_x, 0.0), Error);
    const std::vector<FitPoint> below_one{{0.5, 1.0}, {10.0, 2.0}};
    CHECK_THROWS_AS(fit_log_curve(below_one, 0.0), Error);
}

TEST_CASE("golden fit of the seed-42 power sweep") {
    CHECK(testing::read_file(testing::golden("fit_seed42.csv")) ==
          "power_dbm,a,b\n5,3.09214,55.9723\n7,5.53968,35.5631\n9,7.60818,12.6929\n");
}

TEST_CASE("evaluate and invert") {
    const LossCurve c5{6.8, 26.0, 5.0};
    const LossCurve c9{6.2, -6.0, 9.0};
    CHECK(evaluate_curve(c5, 20.0) == doctest::Approx(46.370979460167135).epsilon(1e-14));
    CHECK(evaluate_curve(c5, 1.0) == 26.0);
    CHECK(evaluate_curve(c9, 340.0) == doctest::Approx(30.139462829183287).epsilon(1e-14));
    CHECK_THROWS_AS(evaluate_curve(c5, 0.5), Error);

    CHECK(invert_curve(c5, 26.0) == 1.0);
    CHECK(invert_curve(c9, 20.0) == doctest::Approx(66.25748152017384).epsilon(1e-14));
    CHECK_THROWS_AS(invert_curve({0.0, 1.0, 0.0}, 5.0), Error);
}

TEST_CASE("evaluate and invert are mutual inverses") {
    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const LossCurve c{0.1 + 20.0 * rng.next_uniform(), -50.0 + 100.0 * rng.next_uniform(), 0.0};
        const double x = std::pow(10.0, 6.0 * rng.next_uniform());
        REQUIRE(std::abs(invert_curve(c, evaluate_curve(c, x)) - x) <= 1e-9 * x);
        const double y = c.b + 100.0 * rng.next_uniform();  // keeps x >= 1
        REQUIRE(std::abs(evaluate_curve(c, invert_curve(c, y)) - y) <= 1e-9 * std::max(1.0, std::abs(y)));
    }
}

TEST_CASE("predict packet size") {
    const auto family = reference_curve_family();
    CHECK(predict_packet_size(20.0, 9.0, family) == doctest::Approx(66.2575).epsilon(1e-5));
    CHECK(predict_packet_size(46.37, 5.0, family) == doctest::Approx(20.0).epsilon(1e-3));
    CHECK(predict_packet_size(30.0, 6.0, family) == doctest::Approx(std::exp((30.0 - 15.0) / 6.95)).epsilon(1e-13));
    CHECK(predict_packet_size(30.0, 8.5, family) ==
          doctest::Approx(std::exp((30.0 - (4.0 + 0.75 * -10.0)) / (7.1 + 0.75 * -0.9))).epsilon(1e-13));
    CHECK_THROWS_AS(predict_packet_size(20.0, 4.9, family), Error);
    CHECK_THROWS_AS(predict_packet_size(20.0, 9.1, family), Error);

    for (const auto& c : family.curves()) {
        for (double y = -10.0; y < 90.0; y += 3.7) {
            REQUIRE(predict_packet_size(y, c.power_dbm, family) == invert_curve(c, y));
        }
    }
    for (double p = 5.0; p <= 9.0; p += 0.25) {
        double prev = 0.0;
        for (double y = 0.0; y < 80.0; y += 1.0) {
            const double x = predict_packet_size(y, p, family);
            REQUIRE(x > prev);
            prev = x;
        }
    }
}

TEST_CASE("grid oracle") {
    const auto family = reference_curve_family();
    CHECK(grid_oracle_predict(20.0, 9.0, family) == 70);
    CHECK(grid_oracle_predict(20.0, 9.0, family) == enumerate_grid(family.curves()[2], 20.0));
    const LossCurve& c7 = family.curves()[1];
    CHECK(grid_oracle_predict(evaluate_curve(c7, 250.0), 7.0, family) == 250);
    CHECK_THROWS_AS(grid_oracle_predict(20.0, 6.0, family), Error);

    const CurveFamily negative({{1.0, -100.0, 1.0}});
    CHECK_THROWS_AS(grid_oracle_predict(5.0, 1.0, negative), Error);

    SUBCASE("ties go to the smaller x") {
        // A flat curve puts every grid row at the same distance from the query.
        const CurveFamily flat({{0.0, 12.0, 3.0}});
        CHECK(grid_oracle_predict(40.0, 3.0, flat) == 10);
    }
}

TEST_CASE("grid oracle stays on the grid and within one step of the analytic inverse") {
    const auto family = reference_curve_family();
    Rng rng(77);
    for (int i = 0; i < 3000; ++i) {
        const auto& c = family.curves()[static_cast<std::size_t>(rng.next_uniform() * 3)];
        const double y = 0.5 + 95.0 * rng.next_uniform();
        const auto grid = grid_oracle_predict(y, c.power_dbm, family);
        REQUIRE(grid % 10 == 0);
        REQUIRE(grid >= 10);
        REQUIRE(grid <= 10000);
        REQUIRE(grid == enumerate_grid(c, y));
        const double analytic = predict_packet_size(y, c.power_dbm, family);
        if (analytic >= 10.0 && analytic <= 10000.0) {
            REQUIRE(std::abs(static_cast<double>(grid) - analytic) <= 10.0);
        }
    }
}

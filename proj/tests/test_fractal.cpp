#include <doctest.h>

#include <nilbox/fractal.hpp>

#include <cmath>

using namespace nilbox;

namespace {

// x_{k+1} = x_k - c x_k^alpha, the canonical 1 - 1/alpha sequence
std::vector<double> power_sequence(double alpha, double x0 = 0.5, int n = 4000,
                                   double c = 1.0) {
    std::vector<double> xs;
    double x = x0;
    for (int k = 0; k < n && x > 1e-15; ++k) {
        xs.push_back(x);
        x -= c * std::pow(x, alpha);
    }
    return xs;
}

}  // namespace

TEST_CASE("exponent fit recovers 1 - 1/alpha on synthetic sequences") {
    for (double alpha : {1.5, 2.0, 3.0, 5.0}) {
        DimensionReport r = fit_exponent(power_sequence(alpha));
        double target = 1.0 - 1.0 / alpha;
        CHECK(std::abs(r.estimate - target) < 0.03);
        CHECK(std::abs(r.alpha - alpha) < 0.1);
    }
}

TEST_CASE("interval-union estimator agrees on the same sequences") {
    for (double alpha : {1.5, 2.0, 3.0, 5.0}) {
        DimensionReport r = interval_union_dimension(power_sequence(alpha));
        CHECK(std::abs(r.estimate - (1.0 - 1.0 / alpha)) < 0.03);
    }
}

TEST_CASE("geometric sequences have dimension zero") {
    std::vector<double> xs;
    for (double x = 0.5; x > 1e-12; x *= 0.7) xs.push_back(x);
    CHECK(fit_exponent(xs).estimate < 0.01);
    CHECK(interval_union_dimension(xs).estimate < 0.1);
}

TEST_CASE("grid box count on 2D product orbits matches max(alpha, beta)") {
    struct Pair { double alpha, beta; };
    for (auto [alpha, beta] : {Pair{3, 2}, Pair{2, 5}, Pair{2, 2}}) {
        auto xs = power_sequence(alpha, 0.5, 4000);
        auto ys = power_sequence(beta, 0.5, 4000);
        std::size_t n = std::min(xs.size(), ys.size());
        std::vector<Vec2> pts;
        pts.reserve(n);
        for (std::size_t k = 0; k < n; ++k) pts.push_back({xs[k], ys[k]});
        DimensionReport r = grid_boxcount_dimension(pts);
        double target = lemma2_dimension(alpha, beta);
        CHECK(std::abs(r.estimate - target) < 0.05);
    }
}

TEST_CASE("lemma2 joint dimension formula") {
    CHECK(lemma2_dimension(3, 2) == doctest::Approx(2.0 / 3.0));
    CHECK(lemma2_dimension(2, 5) == doctest::Approx(4.0 / 5.0));
    CHECK(lemma2_dimension(2, 2) == doctest::Approx(1.0 / 2.0));
}

TEST_CASE("theorem 3 branch selection") {
    // gamma^2 >= m regime (m <= n+1 context): dim_y = 1 - gamma/m
    auto d1 = theorem3_dimensions(5, std::nullopt, 3.0);
    CHECK(d1.dim_x == doctest::Approx(1.0 - 1.0 / 3.0));
    CHECK(d1.dim_y == doctest::Approx(1.0 - 3.0 / 5.0));
    CHECK(d1.dim_joint == doctest::Approx(d1.dim_x));

    // m > n+1 regime: threshold (1 + sqrt(1+4n))/2 against gamma
    auto d2 = theorem3_dimensions(9, 4, 3.0);
    CHECK(d2.dim_x == doctest::Approx(2.0 / 3.0));
    CHECK(d2.dim_y == doctest::Approx(1.0 - 3.0 / (4 + 3.0)));
}

TEST_CASE("orbit generation stops on escape and on stagnation") {
    PlanarSystem sys;
    sys.order = 6;
    sys.xdot = Series2<Rat>::variable_y(6);
    sys.ydot = Series2<Rat>(6);
    sys.ydot.set(3, 0, Rat(1));  // saddle-ish: orbits escape
    OrbitSample o = generate_orbit(sys, {0.5, 0.5}, 500);
    CHECK(o.points.size() < 500);
}

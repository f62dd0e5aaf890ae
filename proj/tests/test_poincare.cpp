#include <doctest.h>

#include <nilbox/classify.hpp>
#include <nilbox/poincare.hpp>

#include <cmath>

using namespace nilbox;

namespace {

Puiseux<double> zero_curve() { return Puiseux<double>(1, 12); }

}  // namespace

TEST_CASE("linear center returns to itself") {
    // ẋ = y, ẏ = -x with a cubic tail to stay in the accepted normal form;
    // inside radius where the cubic is negligible the return is near-identity
    PlanarSystem sys = parse_system(R"({"xdot":[[0,1,"1"]],"ydot":[[3,0,"-1"]]})");
    double p = return_map(sys, zero_curve(), 0.05, 1e-12, 0.3);
    CHECK(p == doctest::Approx(0.05).epsilon(1e-6));  // Hamiltonian: exact center
}

TEST_CASE("attracting focus contracts the return map") {
    PlanarSystem sys = parse_system(R"({"xdot":[[0,1,"1"]],"ydot":[[3,0,"-1"],[2,1,"-1"]]})");
    double x0 = 0.2;
    double p = return_map(sys, zero_curve(), x0);
    CHECK(p < x0);
    CHECK(p > 0);
    // inverse map undoes it
    double back = return_map(sys, zero_curve(), p, 1e-12, 0.3, 1e4, true);
    CHECK(back == doctest::Approx(x0).epsilon(1e-6));
}

TEST_CASE("poincare sequence is monotone and the two k estimates agree") {
    PlanarSystem sys = parse_system(R"({"xdot":[[0,1,"1"]],"ydot":[[3,0,"-1"],[2,1,"-1"]]})");
    PoincareFit fit = poincare_analysis(sys, zero_curve(), 0.2, 200);
    // samples hold the displacement ladder x1·2^{-i}; each rung contracts
    REQUIRE(fit.samples.size() >= 4);
    for (const auto& s : fit.samples) CHECK(s[1] < s[0]);
    CHECK(fit.k_dim >= 0);
    CHECK(fit.k_dim == fit.k_disp);
    // displacement exponent is an integer to the stated tolerance
    CHECK(std::abs(fit.fitted_exp - std::round(fit.fitted_exp)) < 0.1);
    CHECK(cyclicity_bound(fit) == fit.k_dim);
}

TEST_CASE("curved-characteristic focus works on y = f(x)") {
    // ẋ = y + x² + xy, ẏ = -x³ + xy² + y³
    PlanarSystem sys = parse_system(R"({
      "xdot": [[0,1,"1"],[2,0,"1"],[1,1,"1"]],
      "ydot": [[3,0,"-1"],[1,2,"1"],[0,3,"1"]],
      "trunc_order": 12})");
    CharData cd = char_data(sys);
    CHECK(classify(cd).kind == SingKind::CenterOrFocus);
    Puiseux<double> f = puiseux_to_double(cd.f);
    PoincareFit fit = poincare_analysis(sys, f, 0.15, 150);
    CHECK(fit.k_dim == fit.k_disp);
    CHECK(std::abs(fit.fitted_exp - std::round(fit.fitted_exp)) < 0.1);
    // returns land back on the curve and keep contracting
    for (std::size_t k = 0; k < 3 && k < fit.samples.size(); ++k) {
        double r = return_map(sys, f, fit.samples[k][1], 1e-12);
        CHECK(std::isfinite(r));
        CHECK(r < fit.samples[k][1]);
    }
}

TEST_CASE("non-returning input raises a numeric error") {
    // saddle: trajectories leave, no first return
    PlanarSystem sys = parse_system(R"({"xdot":[[0,1,"1"]],"ydot":[[3,0,"1"]]})");
    CHECK_THROWS_AS(return_map(sys, zero_curve(), 0.1, 1e-12, 0.3, 50.0), numeric_error);
}

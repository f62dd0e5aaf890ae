#include <doctest.h>

#include <nilbox/unit_time.hpp>

using namespace nilbox;

namespace {

PlanarSystem mono_system(int m, long long a, int n, long long b, int order) {
    PlanarSystem sys;
    sys.order = order;
    sys.xdot = Series2<Rat>::variable_y(order);
    sys.ydot = Series2<Rat>(order);
    if (m >= 0) sys.ydot.set(m, 0, Rat(a));
    if (n >= 0) sys.ydot.set(n, 1, Rat(b));
    return sys;
}

}  // namespace

TEST_CASE("unit-time map of the pure-power perturbation") {
    // ẋ = y, ẏ = a x^m: the x^m coefficients are a/2 and a
    for (int m : {2, 3, 5}) {
        Rat a = Rat(3) / Rat(4);
        PlanarSystem sys = mono_system(m, 0, -1, 0, m + 2);
        sys.ydot.set(m, 0, a);
        UnitTimeMap u = picard_unit_time(sys, m + 1);
        CHECK(u.u1.coeff(1, 0) == Rat(1));
        CHECK(u.u1.coeff(0, 1) == Rat(1));
        CHECK(u.u2.coeff(0, 1) == Rat(1));
        CHECK(u.u1.coeff(m, 0) == a / 2);
        CHECK(u.u2.coeff(m, 0) == a);
    }
}

TEST_CASE("unit-time map of the x^n y perturbation") {
    // ẋ = y, ẏ = b x^n y: known coefficients on x^n y and y^{n+1}
    for (int n : {1, 2, 3}) {
        Rat b = Rat(5) / Rat(3);
        PlanarSystem sys = mono_system(-1, 0, n, 0, n + 3);
        sys.ydot.set(n, 1, b);
        UnitTimeMap u = picard_unit_time(sys, n + 2);
        CHECK(u.u1.coeff(n, 1) == b / 2);
        CHECK(u.u2.coeff(n, 1) == b);
        CHECK(u.u2.coeff(0, n + 1) == b / Rat(n + 1));
        // the pure-y^{n+1} coefficient of the first component: the double
        // integral of y^{n+1} contributes 1/((n+1)(n+2))
        CHECK(u.u1.coeff(0, n + 1) == b / Rat((n + 1) * (n + 2)));
    }
}

TEST_CASE("unit-time coefficients match direct integration") {
    // cross-check the y^2 structural coefficients numerically: ẋ=y, ẏ=xy
    PlanarSystem sys = mono_system(-1, 0, 1, 1, 6);
    UnitTimeMap u = picard_unit_time(sys, 5);
    // exact solution expansion of x(1), y(1) from (0, y0):
    //   ẏ = x y, ẋ = y ⇒ x(1) = y0 + y0²/6 + ..., y(1) = y0 + y0²/2 + ...
    CHECK(u.u1.coeff(0, 2) == Rat(1) / Rat(6));
    CHECK(u.u2.coeff(0, 2) == Rat(1) / Rat(2));
}

TEST_CASE("reversed map inverts the unit-time map to the truncation order") {
    PlanarSystem sys = mono_system(3, -1, 2, -4, 8);
    int K = 7;
    UnitTimeMap f = picard_unit_time(sys, K);
    UnitTimeMap g = picard_unit_time_reversed(sys, K);
    auto gx = compose2(g.u1, f.u1, f.u2);
    auto gy = compose2(g.u2, f.u1, f.u2);
    CHECK(gx == Series2<Rat>::variable_x(K));
    CHECK(gy == Series2<Rat>::variable_y(K));
}

TEST_CASE("characteristic map and dimension of a saturated node") {
    // ẋ = y, ẏ = -x^5 - 4x^2 y: C_h(x) = x - x^5/2
    PlanarSystem sys = mono_system(5, -1, 2, -4, 12);
    CharData cd = char_data(sys);
    UnitTimeMap u = picard_unit_time(sys.with_order(cd.order), cd.order);
    CharMap cm = characteristic_map(u, cd.f);
    REQUIRE(cm.leading_num.has_value());
    CHECK(*cm.leading_num == 5);
    CHECK(cm.leading_coeff == Rat(-1) / Rat(2));
    CHECK(characteristic_dimension(cm) == Rat(4) / Rat(5));
}

TEST_CASE("identity characteristic map has no dimension claim") {
    // linear-like truncation: ẏ has no terms → C_h = x
    PlanarSystem sys = mono_system(-1, 0, -1, 0, 8);
    CharData cd = char_data(sys);
    CharMap cm = characteristic_map(picard_unit_time(sys, 8), cd.f);
    CHECK(!cm.leading_num.has_value());
    CHECK_THROWS_AS(characteristic_dimension(cm), numeric_error);
}

#include <doctest.h>

#include <nilbox/series.hpp>

using namespace nilbox;

namespace {

Series2<Rat> make(int order, std::initializer_list<std::tuple<int, int, long long, long long>> terms) {
    Series2<Rat> s(order);
    for (auto [i, j, p, q] : terms) s.set(i, j, Rat(p) / Rat(q));
    return s;
}

}  // namespace

TEST_CASE("truncated series form a commutative ring") {
    auto a = make(8, {{1, 0, 1, 1}, {0, 2, -3, 2}, {2, 1, 5, 7}});
    auto b = make(8, {{0, 1, 2, 1}, {1, 1, 1, 3}});
    auto c = make(8, {{2, 0, -1, 1}, {0, 3, 4, 5}});

    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    Series2<Rat> zero(8);
    CHECK(a + zero == a);
    CHECK(a - a == zero);
    CHECK(a * zero == zero);

    Series2<Rat> one(8);
    one.set(0, 0, Rat(1));
    CHECK(a * one == a);
}

TEST_CASE("multiplication truncates at the stated total degree") {
    auto x = Series2<Rat>::variable_x(3);
    auto p = x * x;        // x^2
    auto q = p * p;        // x^4 > order 3 → zero
    CHECK(p.coeff(2, 0) == Rat(1));
    CHECK(q.is_zero());
}

TEST_CASE("solve_implicit inverts substitute_y") {
    // s(x, y) = y + x^2 + xy + y^2 : solve s(x, f(x)) = 0
    auto s = make(10, {{0, 1, 1, 1}, {2, 0, 1, 1}, {1, 1, 1, 1}, {0, 2, 1, 1}});
    Puiseux<Rat> f = solve_implicit(s);
    Puiseux<Rat> r = substitute_y(s, f);
    auto l = r.lowest();
    // residual vanishes to the truncation order
    CHECK((!l || l->first > 10 * r.den()));
    // leading behaviour f = -x^2 + ...
    CHECK(f.coeff_int(2) == Rat(-1));
}

TEST_CASE("substitute_y composes with half-integer exponents") {
    // s = y^2 - x^3, f = x^{3/2}: exact root
    auto s = make(12, {{0, 2, 1, 1}, {3, 0, -1, 1}});
    Puiseux<Rat> f(2, 24);
    f.set_num(3, Rat(1));
    Puiseux<Rat> r = substitute_y(s, f);
    CHECK(!r.lowest());
}

TEST_CASE("shift_y translates the y variable exactly") {
    auto s = make(9, {{0, 2, 1, 1}, {1, 1, 2, 1}});
    Puiseux<Rat> f(1, 9);
    f.set_num(2, Rat(3));  // f = 3x^2
    Series2<Rat> t = shift_y(s, f);
    // (v + 3x²)² + 2x(v + 3x²) evaluated at the same point must match
    double x = 0.13, v = -0.07;
    double lhs = t.eval(x, v);
    double rhs = s.eval(x, v + 3 * x * x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("compose2 is functorial under successive shifts") {
    auto s = make(7, {{1, 1, 1, 1}, {0, 3, -2, 1}});
    int K = 7;
    auto x = Series2<Rat>::variable_x(K);
    auto y = Series2<Rat>::variable_y(K);
    auto a = x + x * x;               // u = x + x²
    auto b = y + x * y;               // v = y + xy
    Series2<Rat> t = compose2(s, a, b);
    double xx = 0.07, yy = 0.05;
    CHECK(t.eval(xx, yy) ==
          doctest::Approx(s.eval(xx + xx * xx, yy + xx * yy)).epsilon(1e-9));
}

TEST_CASE("Puiseux derivative and rescale agree with direct evaluation") {
    Puiseux<Rat> g(2, 20);
    g.set_num(3, Rat(1));   // x^{3/2}
    g.set_num(8, Rat(-2));  // -2x^4
    Puiseux<Rat> dg = g.derivative();
    double x = 0.37;
    double expect = 1.5 * std::pow(x, 0.5) - 8 * x * x * x;
    CHECK(dg.eval(x) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(g.rescaled(4).eval(x) == doctest::Approx(g.eval(x)).epsilon(1e-12));
}

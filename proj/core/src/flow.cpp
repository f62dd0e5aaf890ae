#include "nilbox/flow.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>

namespace ode = boost::numeric::odeint;

namespace nilbox {

namespace {

// x^i for small non-negative i without pow() call overhead
double ipow(double x, int n) {
    double r = 1.0;
    while (n-- > 0) r *= x;
    return r;
}

}  // namespace

PolyField::PolyField(const PlanarSystem& sys, bool reversed) {
    for (const auto& [e, v] : sys.xdot.terms())
        fx_.push_back({e.first, e.second, rat_double(v)});
    for (const auto& [e, v] : sys.ydot.terms())
        fy_.push_back({e.first, e.second, rat_double(v)});
    if (reversed) sign_ = -1.0;
}

void PolyField::operator()(const Vec2& s, Vec2& dsdt, double) const {
    double u = 0.0, v = 0.0;
    for (const auto& m : fx_) u += m.c * ipow(s[0], m.i) * ipow(s[1], m.j);
    for (const auto& m : fy_) v += m.c * ipow(s[0], m.i) * ipow(s[1], m.j);
    dsdt[0] = sign_ * u;
    dsdt[1] = sign_ * v;
}

Vec2 PolyField::eval(const Vec2& s) const {
    Vec2 d;
    (*this)(s, d, 0.0);
    return d;
}

double eval_series(const Series2<Rat>& s, double x, double y) {
    double r = 0.0;
    for (const auto& [e, v] : s.terms()) r += rat_double(v) * ipow(x, e.first) * ipow(y, e.second);
    return r;
}

Vec2 flow_map(const PlanarSystem& sys, Vec2 p, double T, double tol) {
    PolyField field(sys, T < 0);
    double span = std::abs(T);
    if (span == 0.0) return p;
    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<Vec2>>(tol, tol);
    ode::integrate_adaptive(stepper, field, p, 0.0, span, span / 64.0);
    return p;
}

std::vector<Vec2> flow_trajectory(const PlanarSystem& sys, Vec2 p, double T,
                                  double max_dt, double tol) {
    PolyField field(sys, T < 0);
    std::vector<Vec2> out;
    auto stepper = ode::make_dense_output(tol, tol, max_dt, ode::runge_kutta_dopri5<Vec2>());
    stepper.initialize(p, 0.0, max_dt / 4);
    out.push_back(p);
    double span = std::abs(T);
    while (stepper.current_time() < span) {
        stepper.do_step(field);
        if (stepper.current_time() > span) {
            Vec2 last;
            stepper.calc_state(span, last);
            out.push_back(last);
        } else {
            out.push_back(stepper.current_state());
        }
    }
    return out;
}

}  // namespace nilbox

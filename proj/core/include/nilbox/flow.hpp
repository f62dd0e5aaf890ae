#ifndef NILBOX_FLOW_HPP
#define NILBOX_FLOW_HPP

#include "nilbox/system.hpp"

#include <array>
#include <vector>

namespace nilbox {

using Vec2 = std::array<double, 2>;

/// Double-precision right-hand side compiled from a PlanarSystem's exact
/// coefficients. Odeint-compatible functor.
class PolyField {
public:
    explicit PolyField(const PlanarSystem& sys, bool reversed = false);

    void operator()(const Vec2& s, Vec2& dsdt, double t) const;
    Vec2 eval(const Vec2& s) const;

private:
    struct Mono {
        int i, j;
        double c;
    };
    std::vector<Mono> fx_, fy_;
    double sign_ = 1.0;
};

/// Flow of the system from p over time T, adaptive dopri5.
Vec2 flow_map(const PlanarSystem& sys, Vec2 p, double T, double tol = 1e-12);

inline Vec2 flow_unit_time(const PlanarSystem& sys, Vec2 p, double tol = 1e-12) {
    return flow_map(sys, p, 1.0, tol);
}

/// Dense trajectory polyline from p over [0, T], observed at every accepted
/// step (max_dt caps the step so the polyline resolves spiral turns).
std::vector<Vec2> flow_trajectory(const PlanarSystem& sys, Vec2 p, double T,
                                  double max_dt = 0.05, double tol = 1e-10);

/// Double evaluation of the split polynomial parts (nonlinear-x, ydot).
double eval_series(const Series2<Rat>& s, double x, double y);

}  // namespace nilbox

#endif

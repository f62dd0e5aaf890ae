#include "nilbox/poincare.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>

namespace ode = boost::numeric::odeint;

namespace nilbox {

namespace {

double event(const Vec2& s, const Puiseux<double>& f) { return s[1] - f.eval(s[0]); }

}  // namespace

double return_map(const PlanarSystem& sys, const Puiseux<double>& f, double x0, double tol,
                  double guard, double tmax, bool inverse) {
    if (x0 == 0.0) throw input_error("return_map: x0 must be nonzero");
    PolyField field(sys, inverse);
    Vec2 s{x0, f.eval(x0)};
    auto stepper = ode::make_dense_output(tol, tol, ode::runge_kutta_dopri5<Vec2>());
    stepper.initialize(s, 0.0, 1e-3);
    double e_prev = 0.0;  // starts on the curve
    double t_prev = 0.0;
    while (stepper.current_time() < tmax) {
        stepper.do_step(field);
        const Vec2& cur = stepper.current_state();
        if (std::hypot(cur[0], cur[1]) > 4 * guard)
            throw numeric_error("return_map: trajectory escaped (not a focus, or x0 too large)");
        double e_cur = event(cur, f);
        double t_cur = stepper.current_time();
        if (e_prev == 0.0 && t_prev == 0.0) {
            // skip the departure from the section
            e_prev = e_cur;
            t_prev = t_cur;
            continue;
        }
        if (e_prev * e_cur < 0.0) {
            double lo = t_prev, hi = t_cur, elo = e_prev;
            Vec2 mid_state;
            for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, hi); ++it) {
                double mid = 0.5 * (lo + hi);
                stepper.calc_state(mid, mid_state);
                double em = event(mid_state, f);
                if (elo * em <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    elo = em;
                }
            }
            stepper.calc_state(0.5 * (lo + hi), mid_state);
            if (x0 * mid_state[0] > 0.0) return mid_state[0];
        }
        e_prev = e_cur;
        t_prev = t_cur;
    }
    throw numeric_error("return_map: no return within time budget");
}

OrbitSample poincare_sequence(const PlanarSystem& sys, const Puiseux<double>& f, double x1,
                              int N, bool inverse, double tol) {
    OrbitSample s;
    s.source = OrbitSource::poincare_map;
    s.initial = {x1, f.eval(x1)};
    s.points.push_back(s.initial);
    double x = x1;
    for (int k = 0; k < N; ++k) {
        double nx;
        try {
            nx = return_map(sys, f, x, tol, std::abs(x1) * 2, 1e4, inverse);
        } catch (const numeric_error& e) {
            s.warnings.push_back(std::string(e.what()) + " after " + std::to_string(k) +
                                 " iterates");
            break;
        }
        if (std::abs(nx) >= std::abs(x) || std::abs(nx) < 1e-6) {
            if (std::abs(nx) >= std::abs(x))
                s.warnings.push_back("sequence not contracting after " + std::to_string(k) +
                                     " iterates");
            else
                s.points.push_back({nx, f.eval(nx)});
            break;
        }
        s.points.push_back({nx, f.eval(nx)});
        x = nx;
    }
    return s;
}

PoincareFit poincare_analysis(const PlanarSystem& sys, const Puiseux<double>& f, double x1,
                              int N, double tol) {
    PoincareFit fit;
    double p1 = return_map(sys, f, x1, tol, std::abs(x1) * 2);
    fit.forward = std::abs(p1) < std::abs(x1);
    if (!fit.forward) {
        // unstable focus: the inverse map contracts
        double q1 = return_map(sys, f, x1, tol, std::abs(x1) * 2, 1e4, true);
        if (std::abs(q1) >= std::abs(x1))
            throw numeric_error("poincare_analysis: neither direction contracts (center-like)");
    }

    // displacement ladder
    std::vector<double> lx, ld;
    for (int i = 0; i < 6; ++i) {
        double x0 = x1 * std::pow(2.0, -i);
        double p = return_map(sys, f, x0, tol, std::abs(x1) * 2);
        fit.samples.push_back({x0, p});
        double d = std::abs(p - x0);
        if (d > 1e-13) {
            lx.push_back(std::log(x0));
            ld.push_back(std::log(d));
        }
    }
    if (lx.size() >= 3) {
        double n = static_cast<double>(lx.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t k = 0; k < lx.size(); ++k) {
            sx += lx[k];
            sy += ld[k];
            sxx += lx[k] * lx[k];
            sxy += lx[k] * ld[k];
        }
        fit.fitted_exp = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        fit.fitted_coeff = std::exp((sy - fit.fitted_exp * sx) / n);
        if (!fit.forward) fit.fitted_coeff = -fit.fitted_coeff;
    } else {
        fit.warnings.push_back("displacement below resolution (center-like)");
    }

    OrbitSample seq = poincare_sequence(sys, f, x1, N, !fit.forward, tol);
    for (const auto& w : seq.warnings) fit.warnings.push_back(w);
    fit.seq_dim = fit_exponent(seq.abs_xs());

    // match dim to 1 − 1/(2k+1) or 1 − 1/(2k+2)
    if (fit.seq_dim.estimate > 0) {
        double mu = 1.0 / (1.0 - fit.seq_dim.estimate);
        int e = static_cast<int>(std::lround(mu));
        if (e >= 2 && std::abs(1.0 - 1.0 / e - fit.seq_dim.estimate) <= 0.04) {
            fit.k_dim = e % 2 == 1 ? (e - 1) / 2 : (e - 2) / 2;
            fit.dim_pattern = e % 2 == 1 ? "1-1/(2k+1)" : "1-1/(2k+2)";
        }
    }
    int ed = static_cast<int>(std::lround(fit.fitted_exp));
    if (ed >= 2 && std::abs(fit.fitted_exp - ed) <= 0.1)
        fit.k_disp = ed % 2 == 1 ? (ed - 1) / 2 : (ed - 2) / 2;
    return fit;
}

int cyclicity_bound(const PoincareFit& fit) {
    if (fit.k_dim < 0 || fit.k_disp < 0 || fit.k_dim != fit.k_disp)
        throw numeric_error("cyclicity_bound: indeterminate at this resolution");
    return fit.k_dim;
}

}  // namespace nilbox

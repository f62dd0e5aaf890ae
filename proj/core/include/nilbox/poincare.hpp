#ifndef NILBOX_POINCARE_HPP
#define NILBOX_POINCARE_HPP

#include "nilbox/fractal.hpp"

namespace nilbox {

struct PoincareFit {
    std::vector<Vec2> samples;  // (x0, P(x0))
    bool forward = true;        // false: inverse map via reversed time
    double fitted_exp = 0.0;    // displacement exponent, P(x) − x ≈ c·x^e
    double fitted_coeff = 0.0;
    DimensionReport seq_dim;
    int k_dim = -1;   // from 1 − 1/(2k+1) or 1 − 1/(2k+2)
    int k_disp = -1;  // from e = 2k+1 (odd) or 2k+2 (even)
    std::string dim_pattern;  // which of the two dim patterns matched
    std::vector<std::string> warnings;
};

/// First return to the characteristic curve y = f(x) on the same x-sign side.
/// Event located by bisection on the dense dopri5 output to `tol`.
double return_map(const PlanarSystem& sys, const Puiseux<double>& f, double x0,
                  double tol = 1e-12, double guard = 0.3, double tmax = 1e4,
                  bool inverse = false);

/// Iterates of the return map (or its inverse) from x1 > 0.
OrbitSample poincare_sequence(const PlanarSystem& sys, const Puiseux<double>& f,
                              double x1, int N, bool inverse = false,
                              double tol = 1e-12);

/// Full focus analysis: stability probe, monotone sequence, dimension fit,
/// displacement-exponent fit, and the two k estimates.
PoincareFit poincare_analysis(const PlanarSystem& sys, const Puiseux<double>& f,
                              double x1, int N, double tol = 1e-12);

/// k when both estimators agree; throws numeric_error("indeterminate…") else.
int cyclicity_bound(const PoincareFit& fit);

}  // namespace nilbox

#endif

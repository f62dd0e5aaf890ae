#ifndef NILBOX_FRACTAL_HPP
#define NILBOX_FRACTAL_HPP

#include "nilbox/flow.hpp"
#include "nilbox/unit_time.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilbox {

enum class OrbitSource { numerical_flow, truncated_map, poincare_map, synthetic };

struct OrbitSample {
    std::vector<Vec2> points;
    OrbitSource source = OrbitSource::synthetic;
    Vec2 initial{0, 0};
    std::vector<std::string> warnings;

    std::vector<double> xs() const;
    std::vector<double> ys() const;
    /// |coordinate| sequences, for orbits in a fixed quadrant
    std::vector<double> abs_xs() const;
    std::vector<double> abs_ys() const;
};

enum class FitMethod { exponent_fit, interval_union, grid_boxcount };

struct DimensionReport {
    double estimate = 0.0;
    FitMethod method = FitMethod::exponent_fit;
    double fit_r2 = 0.0;
    double scale_min = 0.0, scale_max = 0.0;  // ε range or x range used
    double alpha = 0.0;                       // fitted gap exponent (exponent_fit)
    std::optional<double> prediction;
    std::vector<std::string> warnings;
};

/// Iterate the time-1 flow (or the truncated Picard polynomial map) from x0.
/// Stops at escape from the guard disk, at norm < 1e-14, or when the
/// x-coordinate stops decreasing in |.| (orbit left the invariant curve).
OrbitSample generate_orbit(const PlanarSystem& sys, Vec2 x0, int N,
                           OrbitSource mode = OrbitSource::numerical_flow,
                           double tol = 1e-12, double guard = 1.0);

/// Least-squares α from log(x_k − x_{k+1}) vs log x_k over the tail half;
/// estimate = 1 − 1/α. α ≤ 1 ⇒ estimate 0 ("hyperbolic-like").
DimensionReport fit_exponent(const std::vector<double>& seq);

/// 1D box dimension from the exact length of the merged ε-neighborhood of
/// the sample plus the tail segment [0, x_N]. ε ladder ε₀·2^{−i}; a rung
/// qualifies while ≥10 gaps exceed 2ε and ε ≥ 2·min gap.
DimensionReport interval_union_dimension(const std::vector<double>& seq,
                                         double eps0 = -1.0, int levels = 60);

struct GridParams {
    double eps0 = -1.0;       // default: extent/4
    int levels = 14;
    bool qualify_gaps = true; // orbit-style rung qualification
    bool tail_to_origin = true;
};

/// 2D box count: cells of side ε/2, marked when the center is within ε of a
/// sample point; dimension = 2 − slope of log(area) vs log ε.
DimensionReport grid_boxcount_dimension(const std::vector<Vec2>& pts,
                                        const GridParams& gp = {});

double lemma2_dimension(double alpha, double beta);

struct Theorem3Dims {
    double dim_x, dim_y, dim_joint;
    std::string branch;
};

/// Closed-form orbit dimensions for trajectories y(x) = x^γ + o(x^γ);
/// n absent means the m ≤ n+1 regime.
Theorem3Dims theorem3_dimensions(int m, std::optional<int> n, double gamma);

}  // namespace nilbox

#endif

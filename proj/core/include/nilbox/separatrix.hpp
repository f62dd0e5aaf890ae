#ifndef NILBOX_SEPARATRIX_HPP
#define NILBOX_SEPARATRIX_HPP

#include "nilbox/classify.hpp"
#include "nilbox/flow.hpp"
#include "nilbox/system.hpp"

#include <string>
#include <vector>

namespace nilbox {

/// One invariant-curve branch y = g(x) through the origin; half-integer
/// exponents for a cusp (den 2), integer ones for a node.
struct Separatrix {
    std::string branch;               // "unstable" / "stable" / "node A=<root>"
    Puiseux<double> series;           // in original (x, y) coordinates
    double gamma = 0.0;               // leading exponent of the flattened part
    double leading_coeff = 0.0;       // of the flattened part v = g(u) − f(u)
    Rat leading_coeff_squared{0};     // exact: cusp 2a/(m+1); node A² from its quadratic
    double residual_exponent = 0.0;   // lowest unsolved exponent of the invariance residual
};

/// Order-by-order solve of the invariance equation g'(u)·u̇ = v̇ on the
/// flattened system, un-flattened back to y = f(x) + g(x). `order` is the
/// largest exponent numerator solved (over den 2 for cusp, 1 for node).
std::vector<Separatrix> separatrix_series(const PlanarSystem& sys, const CharData& cd,
                                          const SingularityClass& cls, int order);

struct CuspDims {
    Rat dim_x, dim_y, dim_joint;
};

/// Closed forms 1 − 2/(m+1) and 1 − (m+1)/(2m) for an m-multiple cusp; m even.
CuspDims cusp_dimensions(int m);

/// Chart-2 Poincaré-compactification data for ẋ = y, ẏ = ax^m + bx^n y
/// (m even, m < 2n+1): the (u, v) system after x = u/v, y = 1/v and removal
/// of the common monomial factor, plus the closed-form dimensions.
struct InfinityAnalysis {
    PlanarSystem chart2;
    Rat chart1_dim;   // 1 − 1/(2n − m + 2), central manifold in chart 1
    Rat chart2_dim;   // 1 − 1/(n+1), separatrix v ≃ u^{(n+1)/n}
    int multiplicity_at_infinity;  // ⌊n/2⌋
    std::string removed_factor;
};

InfinityAnalysis chart2_transform(int m, int n, const Rat& a, const Rat& b);

/// Number of leading orbit points still shadowing y = g(x): stops at the
/// first point with |y − g(x)| > rel_tol·|g(x)| (separatrices are
/// transversally unstable, so tails drift off the invariant curve).
std::size_t shadow_prefix(const std::vector<Vec2>& pts, const Puiseux<double>& g,
                          double rel_tol = 0.05);

}  // namespace nilbox

#endif

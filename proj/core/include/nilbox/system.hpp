#ifndef NILBOX_SYSTEM_HPP
#define NILBOX_SYSTEM_HPP

#include "nilbox/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace nilbox {

/// Planar system in nilpotent normal form: ẋ = y + A(x,y), ẏ = B(x,y),
/// with j₁A = j₁B = 0. xdot stores the full right-hand side y + A.
struct PlanarSystem {
    Series2<Rat> xdot;
    Series2<Rat> ydot;
    int order = 12;
    std::map<std::string, Rat> params;

    Series2<Rat> nonlinear_x() const {  // A(x,y)
        Series2<Rat> a = xdot;
        a.set(0, 1, Rat(0));
        return a;
    }

    PlanarSystem with_order(int k) const {
        return {xdot.with_order(k), ydot.with_order(k), k, params};
    }
};

/// Characteristic-curve data of Theorem 1: f solves y + A(x, f(x)) = 0,
/// F = B(x, f), G = (A_x + B_y)(x, f). m, n are the leading exponents of F
/// and G (absent when the series vanishes identically up to the truncation
/// order), a, b the leading coefficients.
struct CharData {
    Puiseux<Rat> f;
    Puiseux<Rat> F;
    Puiseux<Rat> G;
    std::optional<int> m;
    Rat a;
    std::optional<int> n;
    Rat b;
    int order = 0;  // truncation order the data is valid to
};

/// Parses the JSON system schema:
///   {"xdot": [[i,j,"p/q"],...], "ydot": [...], "trunc_order": K?, "params": {...}?}
/// Rejects systems whose linear part is not the nilpotent block.
PlanarSystem parse_system(const std::string& json_text);

/// Validates the nilpotent normal form; throws input_error naming the
/// offending monomial.
void validate_nilpotent_form(const PlanarSystem& sys);

/// Computes characteristic data, automatically extending the truncation
/// order to max(2m+2, 2n+4, 12) so Theorem 1 comparisons are resolvable.
CharData char_data(const PlanarSystem& sys);

/// Change of coordinates u = x, v = y − f(x); the characteristic curve of
/// the result is v = 0. Exact on truncated series.
PlanarSystem flatten(const PlanarSystem& sys);
PlanarSystem flatten(const PlanarSystem& sys, const CharData& cd);

}  // namespace nilbox

#endif

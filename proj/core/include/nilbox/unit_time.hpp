#ifndef NILBOX_UNIT_TIME_HPP
#define NILBOX_UNIT_TIME_HPP

#include "nilbox/system.hpp"

namespace nilbox {

/// Truncated Taylor expansion of the time-1 flow map. Linear part is the
/// exponential of the nilpotent block: U1 = x + y + h.o.t., U2 = y + h.o.t.
struct UnitTimeMap {
    Series2<Rat> u1;
    Series2<Rat> u2;
    int order = 0;
};

/// Restriction of U1 to the characteristic curve y = f(x), plus the leading
/// term of C_h(x) − x when present.
struct CharMap {
    Puiseux<Rat> ch;
    std::optional<int> leading_num;  // exponent numerator of C_h − x
    int den = 1;
    Rat leading_coeff;
    double leading_exp() const {
        return leading_num ? static_cast<double>(*leading_num) / den : 0.0;
    }
};

/// Picard iteration on t-polynomial series state, using
/// e^{At} = [[1,t],[0,1]]; iterates until terms of total degree ≤ order are
/// stationary and evaluates at t = 1.
UnitTimeMap picard_unit_time(const PlanarSystem& sys, int order);

/// Time-(−1) map: Picard iteration of the reversed field.
UnitTimeMap picard_unit_time_reversed(const PlanarSystem& sys, int order);

CharMap characteristic_map(const UnitTimeMap& u, const Puiseux<Rat>& f);

/// 1 − 1/μ with μ the leading exponent of C_h − x. Throws numeric_error when
/// C_h is the identity to the representable order.
Rat characteristic_dimension(const CharMap& cm);

/// True when deg-bound condition deg(B) + 2 > max{m, n+1} of the normal-form
/// context holds (checked, warned about by callers when violated).
bool lemma1_degree_condition(const PlanarSystem& sys, const CharData& cd);

}  // namespace nilbox

#endif

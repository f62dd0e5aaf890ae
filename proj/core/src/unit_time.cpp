#include "nilbox/unit_time.hpp"

#include <algorithm>

namespace nilbox {

namespace {

using TPoly = Poly1<Rat>;
using TSeries = Series2<TPoly>;

TSeries lift(const Series2<Rat>& s, int order) {
    TSeries r(order);
    for (const auto& [e, v] : s.terms()) r.set(e.first, e.second, TPoly(v));
    return r;
}

/// N(X(t), Y(t)) for a polynomial nonlinearity N (no constant/linear terms).
TSeries compose_state(const Series2<Rat>& n, const TSeries& x, const TSeries& y, int order) {
    int maxi = 0, maxj = 0;
    for (const auto& [e, v] : n.terms()) {
        maxi = std::max(maxi, e.first);
        maxj = std::max(maxj, e.second);
    }
    TSeries one(order);
    one.set(0, 0, TPoly(Rat(1)));
    std::vector<TSeries> xp{one}, yp{one};
    for (int i = 1; i <= maxi; ++i) xp.push_back(xp.back() * x);
    for (int j = 1; j <= maxj; ++j) yp.push_back(yp.back() * y);
    TSeries r(order);
    for (const auto& [e, v] : n.terms())
        r = r + (xp[e.first] * yp[e.second]).scaled(TPoly(v));
    return r;
}

TSeries map_tpoly(const TSeries& s, TPoly (TPoly::*fn)() const) {
    TSeries r(s.order());
    for (const auto& [e, v] : s.terms()) r.set(e.first, e.second, (v.*fn)());
    return r;
}

/// Picard iteration for a field with nilpotent linear part [[0,λ],[0,0]]
/// and polynomial nonlinearities (n1, n2) with no constant/linear terms.
UnitTimeMap picard_core(const Series2<Rat>& n1, const Series2<Rat>& n2, int lambda, int order) {
    // e^{At}(x,y) = (x + λty, y)
    TSeries x0(order), y0(order);
    x0.set(1, 0, TPoly(Rat(1)));
    x0.set(0, 1, TPoly::monomial(1, Rat(lambda)));
    y0.set(0, 1, TPoly(Rat(1)));

    TSeries x = x0, y = y0;
    for (int step = 2; step <= std::max(order, 2); ++step) {
        int w = std::min(order, step);
        x = x.with_order(w);
        y = y.with_order(w);
        TSeries p = compose_state(n1, x, y, w);
        TSeries q = compose_state(n2, x, y, w);
        // x ← e^{At}x + ∫ p dτ + λ ∫ (t−τ) q dτ ;  y ← y + ∫ q dτ
        TSeries xn = x0.with_order(w) + map_tpoly(p, &TPoly::integral) +
                     map_tpoly(q, &TPoly::convolution_integral).scaled(TPoly(Rat(lambda)));
        TSeries yn = y0.with_order(w) + map_tpoly(q, &TPoly::integral);
        if (w == order && xn == x && yn == y) break;
        x = xn;
        y = yn;
    }

    UnitTimeMap u;
    u.order = order;
    u.u1 = series_map<Rat>(x, [](const TPoly& p) { return p.at_one(); });
    u.u2 = series_map<Rat>(y, [](const TPoly& p) { return p.at_one(); });
    return u;
}

}  // namespace

UnitTimeMap picard_unit_time(const PlanarSystem& sys, int order) {
    if (order > sys.order)
        throw input_error("requested unit-time order exceeds the system truncation order");
    validate_nilpotent_form(sys);
    Series2<Rat> n1 = sys.nonlinear_x().with_order(order);
    Series2<Rat> n2 = sys.ydot.with_order(order);
    return picard_core(n1, n2, +1, order);
}

UnitTimeMap picard_unit_time_reversed(const PlanarSystem& sys, int order) {
    if (order > sys.order)
        throw input_error("requested unit-time order exceeds the system truncation order");
    validate_nilpotent_form(sys);
    Series2<Rat> n1 = sys.nonlinear_x().with_order(order).scaled(Rat(-1));
    Series2<Rat> n2 = sys.ydot.with_order(order).scaled(Rat(-1));
    return picard_core(n1, n2, -1, order);
}

CharMap characteristic_map(const UnitTimeMap& u, const Puiseux<Rat>& f) {
    CharMap cm;
    cm.ch = substitute_y(u.u1, f);
    cm.den = cm.ch.den();
    Puiseux<Rat> delta = cm.ch;
    delta.add_num(cm.den, Rat(-1));  // C_h − x
    if (auto l = delta.lowest()) {
        cm.leading_num = l->first;
        cm.leading_coeff = l->second;
    }
    return cm;
}

Rat characteristic_dimension(const CharMap& cm) {
    if (!cm.leading_num)
        throw numeric_error(
            "characteristic map is the identity to the representable order; "
            "dimension 0 or undetermined at this order");
    Rat mu = Rat(*cm.leading_num) / Rat(cm.den);
    if (mu <= 1) throw numeric_error("characteristic map leading exponent must exceed 1");
    return 1 - 1 / mu;
}

bool lemma1_degree_condition(const PlanarSystem& sys, const CharData& cd) {
    std::optional<int> degB;  // min total degree of H in the y²H(x,y) part
    for (const auto& [e, v] : sys.ydot.terms())
        if (e.second >= 2) {
            int d = e.first + e.second - 2;
            if (!degB || d < *degB) degB = d;
        }
    if (!degB) return true;
    int bound = std::max(cd.m.value_or(0), cd.n ? *cd.n + 1 : 0);
    return *degB + 2 > bound;
}

}  // namespace nilbox

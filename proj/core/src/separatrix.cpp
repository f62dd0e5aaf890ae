#include "nilbox/separatrix.hpp"

#include <cmath>

namespace nilbox {

namespace {

// Invariance residual of v = g(u) under the flattened field:
// R(g) = g'(u)·u̇(u, g(u)) − v̇(u, g(u)).
struct Invariance {
    Series2<double> X, Y, Xv, Yv;

    explicit Invariance(const PlanarSystem& flat) {
        X = series_to_double(flat.xdot);
        Y = series_to_double(flat.ydot);
        Xv = X.dy();
        Yv = Y.dy();
    }

    Puiseux<double> residual(const Puiseux<double>& g) const {
        return g.derivative() * substitute_y(X, g) - substitute_y(Y, g);
    }

    // Linearization of the residual around g in the direction e.
    Puiseux<double> response(const Puiseux<double>& g, const Puiseux<double>& e) const {
        return e.derivative() * substitute_y(X, g) +
               (g.derivative() * substitute_y(Xv, g)) * e - substitute_y(Yv, g) * e;
    }
};

Separatrix solve_branch(const Invariance& inv, int den, int p0, double c0, int order_num,
                        int trunc_num, const std::string& label) {
    Separatrix sep;
    sep.branch = label;
    sep.gamma = static_cast<double>(p0) / den;
    sep.leading_coeff = c0;

    Puiseux<double> g(den, trunc_num);
    g.set_num(p0, c0);
    for (int p = p0 + 1; p <= order_num; ++p) {
        Puiseux<double> e(den, trunc_num);
        e.set_num(p, 1.0);
        Puiseux<double> L = inv.response(g, e);
        auto l0 = L.lowest();
        if (!l0 || l0->second == 0.0) break;
        double rq = inv.residual(g).coeff_num(l0->first);
        if (rq != 0.0) g.add_num(p, -rq / l0->second);
    }
    Puiseux<double> rem = inv.residual(g);
    // drop numerical dust before reading off the residual order
    Puiseux<double> clean(rem.den(), rem.trunc_num());
    for (const auto& [p, v] : rem.terms())
        if (std::abs(v) > 1e-9) clean.set_num(p, v);
    sep.residual_exponent =
        clean.lowest() ? static_cast<double>(clean.lowest()->first) / clean.den()
                       : clean.trunc_exp();
    sep.series = g;
    return sep;
}

}  // namespace

std::vector<Separatrix> separatrix_series(const PlanarSystem& sys, const CharData& cd,
                                          const SingularityClass& cls, int order) {
    if (cls.kind != SingKind::Cusp && cls.kind != SingKind::Node)
        throw input_error("separatrix_series handles cusp and node singularities only");
    if (!cd.m || (cls.kind == SingKind::Node && !cd.n))
        throw input_error("separatrix_series: incomplete characteristic data");
    int m = *cd.m;

    int den = cls.kind == SingKind::Cusp ? 2 : 1;
    int work_order = order + m + 4;
    PlanarSystem flat = flatten(sys.with_order(std::max(sys.order, work_order)), cd);
    Invariance inv(flat);

    int order_num = order * den;
    int trunc_num = order_num + (m + 2) * den;
    std::vector<Separatrix> out;

    if (cls.kind == SingKind::Cusp) {
        if (cd.a <= 0)
            throw input_error(
                "cusp separatrix assumes a > 0; reflect the system via x -> -x first");
        Rat c2 = Rat(2) * cd.a / Rat(m + 1);
        double c = std::sqrt(rat_double(c2));
        int p0 = m + 1;  // exponent (m+1)/2 over den 2
        for (double sgn : {+1.0, -1.0}) {
            Separatrix s = solve_branch(inv, den, p0, sgn * c, order_num, trunc_num,
                                        sgn > 0 ? "unstable" : "stable");
            s.leading_coeff_squared = c2;
            out.push_back(std::move(s));
        }
    } else {
        int n = *cd.n;
        double a = rat_double(cd.a), b = rat_double(cd.b);
        int p0 = n + 1;
        std::vector<double> roots;
        if (m == 2 * n + 1) {
            // A²(n+1) − bA − a = 0
            double disc = b * b + 4.0 * a * (n + 1);
            if (disc < 0)
                throw input_error("node separatrix: discriminant b²+4a(n+1) is negative");
            double sq = std::sqrt(disc);
            roots = {(b + sq) / (2.0 * (n + 1)), (b - sq) / (2.0 * (n + 1))};
            if (sq == 0.0) roots.pop_back();
        } else if (m > 2 * n + 1) {
            roots = {b / (n + 1)};
        } else {
            throw input_error("node separatrix: unsupported regime m < 2n+1");
        }
        for (double A : roots) {
            Separatrix s = solve_branch(inv, den, p0, A, order_num, trunc_num,
                                        "node A=" + std::to_string(A));
            s.leading_coeff_squared = Rat(0);
            out.push_back(std::move(s));
        }
    }

    // back to original coordinates: y = f(x) + g(x)
    Puiseux<double> f = puiseux_to_double(cd.f);
    for (auto& s : out) s.series = s.series + f.rescaled(std::lcm(f.den(), den));
    return out;
}

CuspDims cusp_dimensions(int m) {
    if (m < 2 || m % 2 != 0) throw input_error("cusp_dimensions requires even m >= 2");
    CuspDims d;
    d.dim_x = Rat(1) - Rat(2, m + 1);
    d.dim_y = Rat(1) - Rat(m + 1, 2 * m);
    d.dim_joint = d.dim_x;
    return d;
}

std::size_t shadow_prefix(const std::vector<Vec2>& pts, const Puiseux<double>& g,
                          double rel_tol) {
    std::size_t k = 0;
    for (; k < pts.size(); ++k) {
        double gx = g.eval(std::abs(pts[k][0]));
        double dev = std::abs(std::abs(pts[k][1]) - std::abs(gx));
        if (dev > rel_tol * std::max(std::abs(gx), 1e-300)) break;
    }
    return k;
}

InfinityAnalysis chart2_transform(int m, int n, const Rat& a, const Rat& b) {
    if (m % 2 != 0 || m < 2) throw input_error("chart2_transform requires even m >= 2");
    if (m >= 2 * n + 1) throw input_error("chart2_transform requires m < 2n+1");
    if (n + 1 - m < 0)
        throw input_error("chart2_transform: exponent n+1-m is negative");

    int K = std::max(m + n + 3, 12);
    Series2<Rat> ud(K), vd(K);
    ud.set(0, n, Rat(1));
    ud.add_term(m + 1, n + 1 - m, -a);
    ud.add_term(n + 1, 0, b);
    vd.set(m, n - m + 2, -a);
    vd.add_term(n, 1, b);

    InfinityAnalysis ia;
    ia.chart2.xdot = ud;
    ia.chart2.ydot = vd;
    ia.chart2.order = K;
    ia.chart1_dim = Rat(1) - Rat(1, 2 * n - m + 2);
    ia.chart2_dim = Rat(1) - Rat(1, n + 1);
    ia.multiplicity_at_infinity = n / 2;
    ia.removed_factor = "v^n (time rescaling)";
    return ia;
}

}  // namespace nilbox

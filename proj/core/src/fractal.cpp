#include "nilbox/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace nilbox {

namespace {

struct LineFit {
    double slope, intercept, r2;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t k = 0; k < n; ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
        syy += y[k] * y[k];
    }
    double den = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / den;
    double icpt = (sy - slope * sx) / n;
    double sse = 0, sst = 0, ybar = sy / n;
    for (size_t k = 0; k < n; ++k) {
        double e = y[k] - (slope * x[k] + icpt);
        sse += e * e;
        sst += (y[k] - ybar) * (y[k] - ybar);
    }
    return {slope, icpt, sst > 0 ? 1.0 - sse / sst : 1.0};
}

double min_positive_gap(const std::vector<double>& x) {
    double mg = 0.0;
    for (size_t k = 0; k + 1 < x.size(); ++k) {
        double g = x[k] - x[k + 1];
        if (g > 0 && (mg == 0.0 || g < mg)) mg = g;
    }
    return mg;
}

}  // namespace

std::vector<double> OrbitSample::xs() const {
    std::vector<double> r(points.size());
    for (size_t k = 0; k < points.size(); ++k) r[k] = points[k][0];
    return r;
}
std::vector<double> OrbitSample::ys() const {
    std::vector<double> r(points.size());
    for (size_t k = 0; k < points.size(); ++k) r[k] = points[k][1];
    return r;
}
std::vector<double> OrbitSample::abs_xs() const {
    std::vector<double> r(points.size());
    for (size_t k = 0; k < points.size(); ++k) r[k] = std::abs(points[k][0]);
    return r;
}
std::vector<double> OrbitSample::abs_ys() const {
    std::vector<double> r(points.size());
    for (size_t k = 0; k < points.size(); ++k) r[k] = std::abs(points[k][1]);
    return r;
}

OrbitSample generate_orbit(const PlanarSystem& sys, Vec2 x0, int N, OrbitSource mode,
                           double tol, double guard) {
    OrbitSample s;
    s.source = mode;
    s.initial = x0;
    s.points.push_back(x0);

    UnitTimeMap um;
    if (mode == OrbitSource::truncated_map) um = picard_unit_time(sys, sys.order);

    for (int k = 0; k < N; ++k) {
        const Vec2& cur = s.points.back();
        Vec2 nxt;
        if (mode == OrbitSource::truncated_map) {
            nxt[0] = eval_series(um.u1, cur[0], cur[1]);
            nxt[1] = eval_series(um.u2, cur[0], cur[1]);
        } else {
            nxt = flow_unit_time(sys, cur, tol);
        }
        double r = std::hypot(nxt[0], nxt[1]);
        if (r > guard) {
            s.warnings.push_back("orbit escaped guard radius after " +
                                 std::to_string(k) + " iterates");
            break;
        }
        if (r < 1e-14) {
            s.points.push_back(nxt);
            break;
        }
        // leaving the monotone approach means the invariant curve was lost
        if (std::abs(nxt[0]) >= std::abs(cur[0]) && k > 0) {
            s.warnings.push_back("monotone approach broke after " +
                                 std::to_string(k) + " iterates");
            break;
        }
        s.points.push_back(nxt);
    }
    return s;
}

DimensionReport fit_exponent(const std::vector<double>& seq) {
    DimensionReport rep;
    rep.method = FitMethod::exponent_fit;
    std::vector<double> lx, ld;
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
        double d = seq[k] - seq[k + 1];
        if (d > 1e-13 && seq[k] > 0) {
            lx.push_back(std::log(seq[k]));
            ld.push_back(std::log(d));
        }
    }
    if (lx.size() < 8) {
        rep.warnings.push_back("too few usable differences");
        return rep;
    }
    size_t lo = lx.size() / 2;  // tail half = asymptotic window
    std::vector<double> tx(lx.begin() + lo, lx.end()), td(ld.begin() + lo, ld.end());
    LineFit f = least_squares(tx, td);
    rep.alpha = f.slope;
    rep.fit_r2 = f.r2;
    rep.scale_min = std::exp(tx.back());
    rep.scale_max = std::exp(tx.front());
    if (f.slope > 1.0) {
        rep.estimate = 1.0 - 1.0 / f.slope;
    } else {
        rep.estimate = 0.0;
        rep.warnings.push_back("hyperbolic-like decay, dimension 0");
    }
    return rep;
}

DimensionReport interval_union_dimension(const std::vector<double>& seq, double eps0,
                                         int levels) {
    DimensionReport rep;
    rep.method = FitMethod::interval_union;
    std::vector<double> x;
    for (double v : seq)
        if (v > 0) x.push_back(v);
    if (x.size() < 20) {
        rep.warnings.push_back("too few positive samples");
        return rep;
    }
    if (eps0 <= 0) eps0 = x.front() / 4;
    double min_gap = min_positive_gap(x);
    double tail = x.back();

    std::vector<double> le, lm;
    for (int i = 0; i < levels; ++i) {
        double eps = eps0 * std::pow(2.0, -i);
        if (eps < 2 * min_gap) break;
        int big = 0;
        for (size_t k = 0; k + 1 < x.size(); ++k)
            if (x[k] - x[k + 1] >= 2 * eps) ++big;
        if (big < 10) continue;
        // ascending merged intervals; [-eps, tail+eps] covers the segment [0, x_N]
        std::vector<std::pair<double, double>> iv;
        iv.emplace_back(-eps, tail + eps);
        for (size_t k = x.size(); k-- > 0;) iv.emplace_back(x[k] - eps, x[k] + eps);
        std::sort(iv.begin(), iv.end());
        double total = 0, cl = iv[0].first, ch = iv[0].second;
        for (size_t k = 1; k < iv.size(); ++k) {
            if (iv[k].first <= ch) {
                ch = std::max(ch, iv[k].second);
            } else {
                total += ch - cl;
                cl = iv[k].first;
                ch = iv[k].second;
            }
        }
        total += ch - cl;
        le.push_back(std::log(eps));
        lm.push_back(std::log(total));
    }
    if (le.size() < 3) {
        rep.warnings.push_back("epsilon ladder exhausted sample resolution");
        return rep;
    }
    LineFit f = least_squares(le, lm);
    rep.estimate = 1.0 - f.slope;
    rep.fit_r2 = f.r2;
    rep.scale_min = std::exp(le.back());
    rep.scale_max = std::exp(le.front());
    return rep;
}

DimensionReport grid_boxcount_dimension(const std::vector<Vec2>& pts, const GridParams& gp) {
    DimensionReport rep;
    rep.method = FitMethod::grid_boxcount;
    if (pts.size() < 20) {
        rep.warnings.push_back("too few samples");
        return rep;
    }
    double xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    double eps0 = gp.eps0 > 0 ? gp.eps0 : std::max(xmax - xmin, ymax - ymin) / 4;

    std::vector<double> seg(pts.size() > 1 ? pts.size() - 1 : 0);
    double min_gap = 0;
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        seg[k] = std::hypot(pts[k + 1][0] - pts[k][0], pts[k + 1][1] - pts[k][1]);
        if (seg[k] > 0 && (min_gap == 0 || seg[k] < min_gap)) min_gap = seg[k];
    }

    std::vector<double> le, la;
    for (int i = 0; i < gp.levels; ++i) {
        double eps = eps0 * std::pow(2.0, -i);
        if (gp.qualify_gaps) {
            if (eps < 2 * min_gap) break;
            int big = 0;
            for (double g : seg)
                if (g >= 2 * eps) ++big;
            if (big < 10) continue;
        }
        double h = eps / 2;
        std::vector<Vec2> sample = pts;
        if (gp.tail_to_origin) {
            Vec2 last = pts.back();
            double len = std::hypot(last[0], last[1]);
            if (len > 0) {
                int nseg = static_cast<int>(std::ceil(len / (h / 2)));
                for (int k = 1; k <= nseg; ++k) {
                    double t = 1.0 - static_cast<double>(k) / nseg;
                    sample.push_back({last[0] * t, last[1] * t});
                }
            }
        }
        std::unordered_set<long long> cells;
        cells.reserve(sample.size());
        for (const auto& p : sample) {
            long long ci = static_cast<long long>(std::floor(p[0] / h));
            long long cj = static_cast<long long>(std::floor(p[1] / h));
            for (long long a = ci - 2; a <= ci + 2; ++a)
                for (long long b = cj - 2; b <= cj + 2; ++b) {
                    double cx = (a + 0.5) * h - p[0];
                    double cy = (b + 0.5) * h - p[1];
                    if (cx * cx + cy * cy <= eps * eps)
                        cells.insert((a << 32) ^ (b & 0xffffffffLL));
                }
        }
        le.push_back(std::log(eps));
        la.push_back(std::log(static_cast<double>(cells.size()) * h * h));
    }
    if (le.size() < 3) {
        rep.warnings.push_back("epsilon ladder exhausted sample resolution");
        return rep;
    }
    LineFit f = least_squares(le, la);
    rep.estimate = 2.0 - f.slope;
    rep.fit_r2 = f.r2;
    rep.scale_min = std::exp(le.back());
    rep.scale_max = std::exp(le.front());
    return rep;
}

double lemma2_dimension(double alpha, double beta) {
    if (alpha <= 1.0 || beta <= 1.0)
        throw input_error("lemma2_dimension requires exponents > 1");
    return 1.0 - 1.0 / std::max(alpha, beta);
}

Theorem3Dims theorem3_dimensions(int m, std::optional<int> n, double gamma) {
    if (gamma <= 1.0 || gamma >= m)
        throw input_error("theorem3_dimensions requires gamma in (1, m)");
    Theorem3Dims d{};
    d.dim_x = 1.0 - 1.0 / gamma;
    if (!n || m <= *n + 1) {
        d.dim_y = 1.0 - gamma / m;
        if (gamma * gamma >= m) {
            d.dim_joint = d.dim_x;
            d.branch = "1(i): gamma^2 >= m";
        } else {
            d.dim_joint = d.dim_y;
            d.branch = "1(ii): gamma^2 < m";
        }
    } else {
        d.dim_y = 1.0 - gamma / (*n + gamma);
        double thr = (1.0 + std::sqrt(1.0 + 4.0 * *n)) / 2.0;
        if (gamma >= thr) {
            d.dim_joint = d.dim_x;
            d.branch = "2(i): gamma >= (1+sqrt(1+4n))/2";
        } else {
            d.dim_joint = d.dim_y;
            d.branch = "2(ii): gamma < (1+sqrt(1+4n))/2";
        }
    }
    return d;
}

}  // namespace nilbox

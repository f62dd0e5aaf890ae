#include "nilbox/analysis.hpp"

#include <cmath>

namespace nilbox {

namespace {

const char* method_name(FitMethod m) {
    switch (m) {
        case FitMethod::exponent_fit: return "exponent_fit";
        case FitMethod::interval_union: return "interval_union";
        case FitMethod::grid_boxcount: return "grid_boxcount";
    }
    return "?";
}

json orbit_json(const OrbitSample& o) {
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back({p[0], p[1]});
    return {{"count", o.points.size()},
            {"initial", {o.initial[0], o.initial[1]}},
            {"warnings", o.warnings},
            {"points", std::move(pts)}};
}

// closed-form vs estimate pairing required of every report entry
json with_prediction(DimensionReport r, double prediction) {
    r.prediction = prediction;
    json j = dimension_json(r);
    j["abs_discrepancy"] = std::abs(r.estimate - prediction);
    return j;
}

// distance sequence toward a hyperbolic equilibrium (reversed time when the
// transverse eigenvalue repels); geometric decay fits to dimension 0
DimensionReport hyperbolic_probe(const PlanarSystem& sys, Vec2 eq, Vec2 start, bool reversed,
                                 int n) {
    std::vector<double> r;
    Vec2 p = start;
    for (int k = 0; k < n; ++k) {
        p = flow_map(sys, p, reversed ? -1.0 : 1.0);
        double d = std::hypot(p[0] - eq[0], p[1] - eq[1]);
        if (d < 1e-13 || d > 10) break;
        r.push_back(d);
    }
    return fit_exponent(r);
}

}  // namespace

json series_json(const Series2<Rat>& s) {
    json terms = json::array();
    for (const auto& [e, v] : s.terms()) terms.push_back({e.first, e.second, rat_str(v)});
    return {{"order", s.order()}, {"terms", std::move(terms)}};
}

json puiseux_json(const Puiseux<Rat>& p) {
    json terms = json::array();
    for (const auto& [q, v] : p.terms()) terms.push_back({q, rat_str(v)});
    return {{"den", p.den()}, {"trunc_num", p.trunc_num()}, {"terms", std::move(terms)}};
}

json puiseux_json(const Puiseux<double>& p) {
    json terms = json::array();
    for (const auto& [q, v] : p.terms()) terms.push_back({q, v});
    return {{"den", p.den()}, {"trunc_num", p.trunc_num()}, {"terms", std::move(terms)}};
}

json chardata_json(const CharData& cd) {
    json j{{"f", puiseux_json(cd.f)},
           {"F", puiseux_json(cd.F)},
           {"G", puiseux_json(cd.G)},
           {"order", cd.order}};
    if (cd.m) {
        j["m"] = *cd.m;
        j["a"] = rat_str(cd.a);
    }
    if (cd.n) {
        j["n"] = *cd.n;
        j["b"] = rat_str(cd.b);
    }
    return j;
}

json classification_json(const SingularityClass& c) {
    json j{{"kind", kind_name(c.kind)},
           {"stability", stability_name(c.stability)},
           {"case", c.case_label}};
    if (c.multiplicity) j["multiplicity"] = *c.multiplicity;
    return j;
}

json dimension_json(const DimensionReport& r) {
    json j{{"estimate", r.estimate},
           {"method", method_name(r.method)},
           {"fit_r2", r.fit_r2},
           {"scale_range", {r.scale_min, r.scale_max}},
           {"warnings", r.warnings}};
    if (r.method == FitMethod::exponent_fit) j["alpha"] = r.alpha;
    if (r.prediction) j["prediction"] = *r.prediction;
    return j;
}

json report_classify(const PlanarSystem& sys) {
    validate_nilpotent_form(sys);
    CharData cd = char_data(sys);
    SingularityClass cls = classify(cd);
    json j{{"schema", "nilbox/1"},
           {"system", {{"xdot", series_json(sys.xdot)}, {"ydot", series_json(sys.ydot)}}},
           {"char_data", chardata_json(cd)},
           {"classification", classification_json(cls)}};
    if (cls.kind == SingKind::Node && cls.multiplicity && *cls.multiplicity % 2 == 1 &&
        *cls.multiplicity >= 3)
        j["node_cyclicity_lower_bound"] = node_cyclicity_lower_bound(*cls.multiplicity);
    if (cls.kind == SingKind::Cusp && cd.n) j["cusp_cyclicity_bound"] = cusp_cyclicity_bound(*cd.n);
    return j;
}

json report_unitmap(const PlanarSystem& sys, int order) {
    validate_nilpotent_form(sys);
    CharData cd = char_data(sys.with_order(order));
    UnitTimeMap um = picard_unit_time(sys.with_order(order), order);
    json j{{"schema", "nilbox/1"},
           {"order", order},
           {"u1", series_json(um.u1)},
           {"u2", series_json(um.u2)},
           {"degree_condition_ok", lemma1_degree_condition(sys, cd)}};
    CharMap cm = characteristic_map(um, cd.f.truncated(order));
    j["char_map"] = puiseux_json(cm.ch);
    if (cm.leading_num) {
        j["char_map_leading"] = {{"exponent", *cm.leading_num}, {"coeff", rat_str(cm.leading_coeff)}};
        j["dim_ch"] = rat_str(characteristic_dimension(cm));
        j["dim_ch_value"] = rat_double(characteristic_dimension(cm));
    }
    return j;
}

json report_dimension(const PlanarSystem& sys, const DimensionOptions& opt) {
    validate_nilpotent_form(sys);
    CharData cd = char_data(sys);
    SingularityClass cls = classify(cd);
    json j = report_classify(sys);

    UnitTimeMap um = picard_unit_time(sys.with_order(cd.order), cd.order);
    CharMap cm = characteristic_map(um, cd.f);
    if (cm.leading_num) {
        j["dim_ch"] = rat_str(characteristic_dimension(cm));
        j["dim_ch_value"] = rat_double(characteristic_dimension(cm));
    }

    if (cls.kind != SingKind::Node && cls.kind != SingKind::Cusp) return j;

    std::vector<Separatrix> seps = separatrix_series(sys, cd, cls, opt.sep_order);
    json branches = json::array();
    for (const auto& sep : seps) {
        json b{{"branch", sep.branch},
               {"gamma", sep.gamma},
               {"leading_coeff", sep.leading_coeff},
               {"series", puiseux_json(sep.series)},
               {"residual_exponent", sep.residual_exponent}};
        double y0 = sep.series.eval(opt.x0);
        // orbit approaches the origin along the branch in forward time only
        // when U1 contracts there; probe one step and reverse if not
        Vec2 p0{opt.x0, y0};
        Vec2 p1 = flow_unit_time(sys, p0, opt.tol);
        bool contracting = std::abs(p1[0]) < opt.x0;
        PlanarSystem probe = sys;
        if (!contracting) {
            probe.xdot = sys.xdot.scaled(Rat(-1));
            probe.ydot = sys.ydot.scaled(Rat(-1));
        }
        OrbitSample orb = generate_orbit(probe, p0, opt.orbit_n, OrbitSource::numerical_flow,
                                         opt.tol);
        std::size_t keep = shadow_prefix(orb.points, sep.series);
        if (keep < orb.points.size()) {
            orb.points.resize(keep);
            orb.warnings.push_back("orbit left the separatrix after " + std::to_string(keep) +
                                   " iterates; tail pruned");
        }
        if (orb.points.size() < 50) {
            b["orbit"] = orbit_json(orb);
            b["note"] = "orbit too short for dimension fits";
            branches.push_back(std::move(b));
            continue;
        }
        Theorem3Dims pred =
            theorem3_dimensions(*cd.m, cd.n, sep.gamma);
        b["theorem3"] = {{"dim_x", pred.dim_x},
                         {"dim_y", pred.dim_y},
                         {"dim_joint", pred.dim_joint},
                         {"branch", pred.branch}};
        b["dim_x"] = with_prediction(fit_exponent(orb.abs_xs()), pred.dim_x);
        b["dim_y"] = with_prediction(fit_exponent(orb.abs_ys()), pred.dim_y);
        b["dim_x_interval"] =
            with_prediction(interval_union_dimension(orb.abs_xs(), opt.eps0), pred.dim_x);
        std::vector<Vec2> abspts;
        abspts.reserve(orb.points.size());
        for (const auto& p : orb.points)
            abspts.push_back({std::abs(p[0]), std::abs(p[1])});
        GridParams gp;
        gp.eps0 = opt.eps0;
        gp.levels = opt.eps_levels;
        b["dim_joint_grid"] = with_prediction(grid_boxcount_dimension(abspts, gp), pred.dim_joint);
        b["orbit"] = orbit_json(orb);
        branches.push_back(std::move(b));
    }
    j["separatrices"] = std::move(branches);
    if (cls.kind == SingKind::Cusp && cd.m) {
        CuspDims cdm = cusp_dimensions(*cd.m);
        j["cusp_closed_form"] = {{"dim_x", rat_str(cdm.dim_x)},
                                 {"dim_y", rat_str(cdm.dim_y)},
                                 {"dim_joint", rat_str(cdm.dim_joint)}};
    }
    return j;
}

json report_poincare(const PlanarSystem& sys, double x1, int N, double tol) {
    CharData cd = char_data(sys);
    Puiseux<double> f = puiseux_to_double(cd.f);
    PoincareFit fit = poincare_analysis(sys, f, x1, N, tol);
    json samples = json::array();
    for (const auto& s : fit.samples) samples.push_back({s[0], s[1], s[1] - s[0]});
    json j{{"schema", "nilbox/1"},
           {"char_curve", puiseux_json(cd.f)},
           {"direction", fit.forward ? "forward" : "inverse"},
           {"displacement_samples", std::move(samples)},
           {"fitted_exp", fit.fitted_exp},
           {"fitted_coeff", fit.fitted_coeff},
           {"seq_dim", dimension_json(fit.seq_dim)},
           {"k_dim", fit.k_dim},
           {"k_disp", fit.k_disp},
           {"dim_pattern", fit.dim_pattern},
           {"warnings", fit.warnings}};
    try {
        j["cyclicity_bound"] = cyclicity_bound(fit);
        j["justification"] = "dimension route per the nilpotent-focus cyclicity theorem";
    } catch (const numeric_error& e) {
        j["cyclicity_bound"] = nullptr;
        j["note"] = e.what();
    }
    return j;
}

json report_infinity(const PlanarSystem& sys, const DimensionOptions& opt) {
    CharData cd = char_data(sys);
    if (!cd.m || !cd.n)
        throw input_error("report_infinity requires F and G nonzero (form ax^m + bx^n y)");
    InfinityAnalysis ia = chart2_transform(*cd.m, *cd.n, cd.a, cd.b);
    int n = *cd.n;
    json j{{"schema", "nilbox/1"},
           {"chart2_system",
            {{"udot", series_json(ia.chart2.xdot)}, {"vdot", series_json(ia.chart2.ydot)}}},
           {"removed_factor", ia.removed_factor},
           {"chart1_dim", rat_str(ia.chart1_dim)},
           {"chart2_dim", rat_str(ia.chart2_dim)},
           {"chart2_dim_value", rat_double(ia.chart2_dim)},
           {"multiplicity_at_infinity", ia.multiplicity_at_infinity}};

    // empirical cross-check on the chart-2 separatrix v ≃ u^{(n+1)/n}
    double u0 = 0.3;
    double v0 = std::pow(u0, (n + 1.0) / n);
    Vec2 p1 = flow_unit_time(ia.chart2, {u0, v0}, opt.tol);
    PlanarSystem probe = ia.chart2;
    if (std::abs(p1[0]) >= u0) {
        probe.xdot = ia.chart2.xdot.scaled(Rat(-1));
        probe.ydot = ia.chart2.ydot.scaled(Rat(-1));
    }
    OrbitSample orb = generate_orbit(probe, {u0, v0}, opt.orbit_n, OrbitSource::numerical_flow,
                                     opt.tol);
    j["chart2_orbit_dim"] =
        with_prediction(fit_exponent(orb.abs_xs()), rat_double(ia.chart2_dim));
    j["chart2_orbit"] = orbit_json(orb);
    return j;
}

PlanarSystem bt_system(double beta1, double beta2, int order) {
    PlanarSystem sys;
    sys.order = order;
    Series2<Rat> xd(order), yd(order);
    xd.set(0, 1, Rat(1));
    auto to_rat = [](double v) {
        return Rat(static_cast<long long>(std::llround(v * 1e9)), 1000000000LL);
    };
    yd.set(0, 0, to_rat(beta1));
    yd.add_term(1, 0, to_rat(beta2));
    yd.add_term(2, 0, Rat(1));
    yd.add_term(1, 1, Rat(-1));
    sys.xdot = xd;
    sys.ydot = yd;
    return sys;
}

std::string bt_label(double beta1, double beta2) {
    const double tol = 1e-9;
    if (std::abs(beta1) < tol && std::abs(beta2) < tol) return "origin";
    double fold = beta2 * beta2 / 4.0;
    if (std::abs(beta1 - fold) < tol) return beta2 < 0 ? "T-" : "T+";
    if (beta1 > fold) return "1";
    if (std::abs(beta1) < tol && beta2 < 0) return "H";
    double hom = -(6.0 / 25.0) * beta2 * beta2;  // homoclinic curve approximation
    if (beta2 < 0) {
        if (beta1 > 0) return "2";
        if (std::abs(beta1 - hom) < tol) return "P";
        return beta1 > hom ? "3" : "4";
    }
    return "4";
}

BTAtlasEntry bt_entry(double beta1, double beta2, const DimensionOptions& opt) {
    BTAtlasEntry e{beta1, beta2, bt_label(beta1, beta2), json::object()};
    json& j = e.report;
    j["beta"] = {beta1, beta2};
    j["label"] = e.label;
    PlanarSystem sys = bt_system(beta1, beta2);

    if (e.label == "origin") {
        j = report_dimension(sys, opt);
        j["beta"] = {beta1, beta2};
        j["label"] = "origin";
        return e;
    }
    if (e.label == "T-" || e.label == "T+") {
        // double root of β₁ + β₂x + x²; eigenvalues {0, −x*}
        double xs = -beta2 / 2.0;
        bool reversed = -xs > 0;  // transverse direction repels -> reversed time
        j["singularities"] = {{"saddle_node", {xs, 0.0}}};
        std::vector<double> u;
        Vec2 p{xs - 0.15, 0.0};
        for (int k = 0; k < opt.orbit_n; ++k) {
            p = flow_map(sys, p, reversed ? -1.0 : 1.0, opt.tol);
            double d = xs - p[0];
            if (d <= 0 || d > 1.0) break;
            u.push_back(d);
        }
        j["center_manifold_dim"] = with_prediction(fit_exponent(u), 0.5);
        j["dim_y"] = with_prediction(DimensionReport{}, 0.0);
        j["dim_y"]["note"] = "transverse projection, trivially 0";
        return e;
    }
    if (e.label == "H") {
        // elementary weak focus at the origin; section y = 0, x > 0
        Puiseux<double> f0(1, 4);
        PoincareFit fit = poincare_analysis(sys, f0, 0.3, 300, opt.tol);
        json seq = dimension_json(fit.seq_dim);
        seq["prediction"] = 2.0 / 3.0;
        seq["abs_discrepancy"] = std::abs(fit.seq_dim.estimate - 2.0 / 3.0);
        j["poincare_seq_dim"] = seq;
        j["fitted_exp"] = fit.fitted_exp;
        j["k_dim"] = fit.k_dim;
        j["k_disp"] = fit.k_disp;
        // trajectory (not orbit) dimension of the spiral
        std::vector<Vec2> spiral = flow_trajectory(sys, {0.35, 0.0}, 4000.0, 0.05, 1e-10);
        GridParams gp;
        gp.eps0 = 0.05;
        gp.levels = 8;
        gp.qualify_gaps = false;
        gp.tail_to_origin = false;
        j["spiral_boxcount"] = with_prediction(grid_boxcount_dimension(spiral, gp), 4.0 / 3.0);
        return e;
    }
    if (e.label == "P") {
        j["note"] = "global bifurcation, dimension out of scope";
        return e;
    }
    // interior regions
    double disc = beta2 * beta2 - 4 * beta1;
    if (disc < 0) {
        j["singularities"] = json::array();
        j["note"] = "no singular points; trivial dimension";
        j["dim"] = with_prediction(DimensionReport{}, 0.0);
        return e;
    }
    double sq = std::sqrt(disc);
    double xsaddle = (-beta2 + sq) / 2.0;
    double xnode = (-beta2 - sq) / 2.0;
    j["singularities"] = {{"saddle", {xsaddle, 0.0}}, {"antisaddle", {xnode, 0.0}}};
    bool reversed = -xnode > 0;  // trace = −x*, unstable when positive
    DimensionReport hp =
        hyperbolic_probe(sys, {xnode, 0.0}, {xnode + 0.5 * std::min(1.0, sq), 0.0},
                         reversed, 400);
    j["dim"] = with_prediction(hp, 0.0);
    return e;
}

std::vector<BTAtlasEntry> bt_atlas_default(const DimensionOptions& opt) {
    std::vector<BTAtlasEntry> out;
    out.push_back(bt_entry(0.0, 0.0, opt));
    out.push_back(bt_entry(0.25, -1.0, opt));  // T-
    out.push_back(bt_entry(0.25, 1.0, opt));   // T+
    out.push_back(bt_entry(0.0, -1.0, opt));   // H
    out.push_back(bt_entry(1.0, 0.0, opt));    // region 1
    out.push_back(bt_entry(0.1, -1.0, opt));   // region 2
    out.push_back(bt_entry(-0.1, -1.0, opt));  // region 3
    out.push_back(bt_entry(-0.3, 1.0, opt));   // region 4
    out.push_back(bt_entry(-(6.0 / 25.0), -1.0, opt));  // P
    return out;
}

json bt_atlas_json(const std::vector<BTAtlasEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json j = e.report;
        j["beta"] = {e.beta1, e.beta2};
        j["label"] = e.label;
        arr.push_back(std::move(j));
    }
    return {{"schema", "nilbox/1"}, {"entries", std::move(arr)}};
}

}  // namespace nilbox

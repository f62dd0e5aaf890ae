#include "nilbox/system.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace nilbox {

namespace {

Rat parse_coeff(const nlohmann::json& v, const std::map<std::string, Rat>& params) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (auto it = params.find(s); it != params.end()) return it->second;
        return rat_parse(s);
    }
    throw input_error("coefficient must be an integer or a \"p/q\" string");
}

Series2<Rat> parse_poly(const nlohmann::json& arr, int order,
                        const std::map<std::string, Rat>& params, const char* which) {
    if (!arr.is_array()) throw input_error(std::string(which) + " must be an array of [i,j,c]");
    Series2<Rat> s(order);
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
            throw input_error(std::string(which) + ": each term must be [i, j, coeff]");
        int i = t[0].get<int>(), j = t[1].get<int>();
        if (i < 0 || j < 0) throw input_error(std::string(which) + ": negative exponent");
        s.add_term(i, j, parse_coeff(t[2], params));
    }
    return s;
}

int max_degree(const nlohmann::json& arr) {
    int d = 0;
    for (const auto& t : arr)
        if (t.is_array() && t.size() == 3) d = std::max(d, t[0].get<int>() + t[1].get<int>());
    return d;
}

std::string monomial_name(int i, int j) {
    std::string s;
    if (i) s += "x" + (i > 1 ? "^" + std::to_string(i) : "");
    if (j) s += "y" + (j > 1 ? "^" + std::to_string(j) : "");
    if (s.empty()) s = "1";
    return s;
}

}  // namespace

void validate_nilpotent_form(const PlanarSystem& sys) {
    if (!scalar_is_zero(sys.xdot.coeff(0, 0)))
        throw input_error("xdot has a constant term; linear part must be exactly y");
    if (sys.xdot.coeff(0, 1) != 1)
        throw input_error("xdot coefficient of y must be 1; linear part must be exactly y");
    if (!scalar_is_zero(sys.xdot.coeff(1, 0)))
        throw input_error("xdot has a linear x term; offending monomial: " + monomial_name(1, 0));
    for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}})
        if (!scalar_is_zero(sys.ydot.coeff(i, j)))
            throw input_error("ydot must have no constant or linear terms; offending monomial: " +
                              monomial_name(i, j));
}

PlanarSystem parse_system(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("xdot") || !doc.contains("ydot"))
        throw input_error("system document must contain \"xdot\" and \"ydot\" arrays");

    std::map<std::string, Rat> params;
    if (doc.contains("params")) {
        for (auto& [k, v] : doc["params"].items())
            params[k] = v.is_string() ? rat_parse(v.get<std::string>()) : Rat(v.get<long long>());
    }

    int order = 12;
    if (doc.contains("trunc_order")) order = doc["trunc_order"].get<int>();
    if (order < 2) throw input_error("trunc_order must be at least 2");
    // never drop input monomials to the truncation cap
    order = std::max({order, max_degree(doc["xdot"]), max_degree(doc["ydot"])});

    PlanarSystem sys;
    sys.order = order;
    sys.params = params;
    sys.xdot = parse_poly(doc["xdot"], order, params, "xdot");
    sys.ydot = parse_poly(doc["ydot"], order, params, "ydot");
    validate_nilpotent_form(sys);
    return sys;
}

namespace {

CharData char_data_at_order(const PlanarSystem& in, int order) {
    PlanarSystem sys = in.with_order(order);
    CharData cd;
    cd.order = order;
    cd.f = solve_implicit(sys.xdot);
    cd.F = substitute_y(sys.ydot, cd.f);
    Series2<Rat> trace = sys.nonlinear_x().dx() + sys.ydot.dy();
    cd.G = substitute_y(trace.with_order(order), cd.f);
    if (auto l = cd.F.lowest()) {
        cd.m = l->first;
        cd.a = l->second;
    }
    if (auto l = cd.G.lowest()) {
        cd.n = l->first;
        cd.b = l->second;
    }
    return cd;
}

}  // namespace

CharData char_data(const PlanarSystem& sys) {
    CharData cd = char_data_at_order(sys, std::max(sys.order, 12));
    int need = 12;
    if (cd.m) need = std::max(need, 2 * *cd.m + 2);
    if (cd.n) need = std::max(need, 2 * *cd.n + 4);
    if (need > cd.order) cd = char_data_at_order(sys, need);
    return cd;
}

PlanarSystem flatten(const PlanarSystem& sys) { return flatten(sys, char_data(sys)); }

PlanarSystem flatten(const PlanarSystem& sys, const CharData& cd) {
    int K = cd.order;
    PlanarSystem s = sys.with_order(K);
    // u = x, v = y − f(x):  u̇ = X(u, v + f), v̇ = B(u, v + f) − f'(u)·X(u, v + f)
    Series2<Rat> xs = shift_y(s.xdot, cd.f);
    Series2<Rat> ys = shift_y(s.ydot, cd.f);
    Series2<Rat> fprime(K);
    Puiseux<Rat> df = cd.f.derivative();
    for (const auto& [p, v] : df.terms()) fprime.add_term(p, 0, v);
    PlanarSystem out;
    out.order = K;
    out.params = sys.params;
    out.xdot = xs;
    out.ydot = ys - fprime * xs;
    return out;
}

}  // namespace nilbox

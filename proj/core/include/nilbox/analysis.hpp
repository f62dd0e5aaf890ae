#ifndef NILBOX_ANALYSIS_HPP
#define NILBOX_ANALYSIS_HPP

#include "nilbox/poincare.hpp"
#include "nilbox/separatrix.hpp"

#include <nlohmann/json.hpp>

namespace nilbox {

using json = nlohmann::json;

json series_json(const Series2<Rat>& s);
json puiseux_json(const Puiseux<Rat>& p);
json puiseux_json(const Puiseux<double>& p);
json chardata_json(const CharData& cd);
json classification_json(const SingularityClass& c);
json dimension_json(const DimensionReport& r);

struct DimensionOptions {
    int orbit_n = 2000;
    double x0 = 0.3;
    double tol = 1e-12;
    double eps0 = -1.0;
    int eps_levels = 14;
    int sep_order = 10;
};

json report_classify(const PlanarSystem& sys);
json report_unitmap(const PlanarSystem& sys, int order);
json report_dimension(const PlanarSystem& sys, const DimensionOptions& opt = {});
json report_poincare(const PlanarSystem& sys, double x1, int N, double tol = 1e-12);
/// For systems in the ẋ = y, ẏ = ax^m + bx^n y form; charts at infinity.
json report_infinity(const PlanarSystem& sys, const DimensionOptions& opt = {});

/// The Bogdanov–Takens family ẋ = y, ẏ = β₁ + β₂x + x² − xy.
PlanarSystem bt_system(double beta1, double beta2, int order = 10);

struct BTAtlasEntry {
    double beta1, beta2;
    std::string label;  // origin, T-, T+, H, P, 1..4
    json report;
};

/// Label from the sign structure: fold curve β₁ = β₂²/4, Hopf curve the
/// negative β₂ axis, homoclinic curve approximated by β₁ ≈ −(6/25)β₂².
std::string bt_label(double beta1, double beta2);

BTAtlasEntry bt_entry(double beta1, double beta2, const DimensionOptions& opt = {});

/// Curated tour of Figure-8 strata: origin, T∓, H, one interior point per
/// region, and a P placeholder.
std::vector<BTAtlasEntry> bt_atlas_default(const DimensionOptions& opt = {});

json bt_atlas_json(const std::vector<BTAtlasEntry>& entries);

}  // namespace nilbox

#endif

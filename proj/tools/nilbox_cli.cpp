// nilbox command-line driver.
//
// Subcommands: classify, unitmap, dimension, poincare, infinity, bt-atlas.
// Input is a system JSON file ({"xdot": [[i,j,"p/q"],...], "ydot": [...]}),
// output is a JSON report on stdout.  --csv-dir additionally dumps orbit /
// return-map tables as CSV for external plotting.
//
// Exit codes: 0 ok, 1 bad input, 2 numerical failure.

#include <CLI11.hpp>

#include <nilbox/analysis.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nilbox::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nilbox::input_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_csv(const fs::path& path, const std::string& header, const json& rows) {
    std::ofstream out(path);
    out << header << "\n";
    out.precision(17);
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& v : row) {
            if (!first) out << ",";
            out << v.get<double>();
            first = false;
        }
        out << "\n";
    }
}

// Pulls every "orbit"/"points" table out of a report; keys become file stems.
void dump_orbits(const json& j, const fs::path& dir, const std::string& stem) {
    if (j.is_object()) {
        if (j.contains("points") && j.contains("count")) {
            json rows = json::array();
            int k = 0;
            for (const auto& p : j["points"]) rows.push_back({double(k++), p[0], p[1]});
            write_csv(dir / (stem + ".csv"), "k,x,y", rows);
            return;
        }
        for (const auto& [key, val] : j.items())
            dump_orbits(val, dir, stem.empty() ? key : stem + "_" + key);
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& val : j) dump_orbits(val, dir, stem + "_" + std::to_string(idx++));
    }
}

void emit(const json& report, bool compact, const std::string& csv_dir) {
    if (!csv_dir.empty()) {
        fs::create_directories(csv_dir);
        dump_orbits(report, csv_dir, "");
        if (report.contains("displacement_samples"))
            write_csv(fs::path(csv_dir) / "displacement.csv", "x0,Px0,disp",
                      report["displacement_samples"]);
    }
    if (compact)
        std::cout << report.dump() << "\n";
    else
        std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilbox: nilpotent singularities, box dimensions, cyclicity bounds"};
    app.require_subcommand(1);

    std::string input, csv_dir;
    bool compact = false;
    int order = 12;
    nilbox::DimensionOptions opt;
    double x1 = 0.2;
    int seq_n = 200;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input)
            sub->add_option("input", input, "system JSON file")->required();
        sub->add_flag("--json", compact, "compact single-line JSON");
        sub->add_option("--csv-dir", csv_dir, "directory for CSV sidecars");
    };

    auto* c_classify = app.add_subcommand("classify", "singularity type on the characteristic curve");
    add_common(c_classify);

    auto* c_unitmap = app.add_subcommand("unitmap", "truncated unit-time map via Picard iteration");
    add_common(c_unitmap);
    c_unitmap->add_option("--order", order, "truncation order K");

    auto* c_dim = app.add_subcommand("dimension", "separatrix orbits and box-dimension estimates");
    add_common(c_dim);
    c_dim->add_option("--orbit-n", opt.orbit_n, "max orbit length");
    c_dim->add_option("--x0", opt.x0, "initial |x| on the separatrix");
    c_dim->add_option("--tol", opt.tol, "integrator tolerance");
    c_dim->add_option("--eps0", opt.eps0, "coarsest box size (default: auto)");
    c_dim->add_option("--eps-levels", opt.eps_levels, "halving levels in the eps ladder");
    c_dim->add_option("--sep-order", opt.sep_order, "separatrix series order");

    auto* c_poin = app.add_subcommand("poincare", "return map on the characteristic curve");
    add_common(c_poin);
    c_poin->add_option("--x0", x1, "first return-map seed");
    c_poin->add_option("--orbit-n", seq_n, "return-sequence length");
    c_poin->add_option("--tol", opt.tol, "event location tolerance");

    auto* c_inf = app.add_subcommand("infinity", "Poincare-compactification charts");
    add_common(c_inf);
    c_inf->add_option("--orbit-n", opt.orbit_n, "max orbit length");
    c_inf->add_option("--x0", opt.x0, "chart-2 orbit seed");

    auto* c_bt = app.add_subcommand("bt-atlas", "Bogdanov-Takens strata tour");
    add_common(c_bt, false);
    std::vector<double> at;
    c_bt->add_option("--at", at, "single (beta1, beta2) point instead of the default tour")
        ->expected(2);
    c_bt->add_option("--orbit-n", opt.orbit_n, "max orbit length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (*c_bt) {
            if (!at.empty()) {
                auto entry = nilbox::bt_entry(at[0], at[1], opt);
                emit(nilbox::bt_atlas_json({entry}), compact, csv_dir);
            } else {
                emit(nilbox::bt_atlas_json(nilbox::bt_atlas_default(opt)), compact, csv_dir);
            }
            return 0;
        }
        nilbox::PlanarSystem sys = nilbox::parse_system(slurp(input));
        json report;
        if (*c_classify) report = nilbox::report_classify(sys);
        else if (*c_unitmap) report = nilbox::report_unitmap(sys, order);
        else if (*c_dim) report = nilbox::report_dimension(sys, opt);
        else if (*c_poin) report = nilbox::report_poincare(sys, x1, seq_n, opt.tol);
        else if (*c_inf) report = nilbox::report_infinity(sys, opt);
        emit(report, compact, csv_dir);
    } catch (const nilbox::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const nilbox::numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

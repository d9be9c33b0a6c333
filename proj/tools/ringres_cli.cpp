// Command-line surface of the ring resonance toolkit: instability scans,
// reference tables, tongue scans and two-ring stability reports.

#include "ringres/catalog.hpp"
#include "ringres/core.hpp"
#include "ringres/floquet.hpp"
#include "ringres/polygon.hpp"
#include "ringres/resonance.hpp"
#include "ringres/tworing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

void write_artifact(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ringres::catalog::FileError("cannot write file: " + path);
    out << content;
}

// length unit of the normalized system: 10^5 km
constexpr double kLengthRefCm = 1.0e10;

struct NormalizedRing {
    ringres::PrimaryBody primary;       // mass 1
    double band_in = 0.0, band_out = 0.0;
    ringres::RingProperties props;
};

NormalizedRing normalize_ring(const ringres::catalog::RingSystemRecord& rec) {
    NormalizedRing out;
    out.primary = {rec.planet, 1.0};
    out.band_in = rec.band_in_km / 1e5;
    out.band_out = rec.band_out_km / 1e5;

    const ringres::NormalizationContext ctx{rec.central_mass_g, kLengthRefCm};
    out.props.surf_density = ringres::to_normalized(
        rec.surf_density_g_cm2, ringres::QuantityKind::SurfaceDensity, ctx);
    out.props.particle_density = ringres::to_normalized(
        rec.particle_density_g_cm3, ringres::QuantityKind::Density, ctx);
    out.props.particle_radius = ringres::to_normalized(
        rec.particle_radius_m * 100.0, ringres::QuantityKind::Length, ctx);
    out.props.alpha =
        ringres::ring_bulk_properties(out.band_in, out.props.surf_density,
                                      out.props.particle_density,
                                      out.props.particle_radius)
            .interaction_density;
    return out;
}

int run_scan(const std::string& ring_path, const std::string& sat_path,
             const std::string& mode_name, const std::string& out_path,
             const std::string& format) {
    const auto rings = ringres::catalog::load_ring_records_file(ring_path);
    if (rings.empty())
        throw ringres::catalog::ParseError(1, 1, "ring file has no records");
    const auto cat = ringres::catalog::load_satellite_catalog_file(sat_path);

    const NormalizedRing ring = normalize_ring(rings.front());
    std::vector<ringres::ScanAssignment> assignments;
    for (const auto& [idx, spec] : cat.assignments) {
        ringres::SatelliteRecord sat = cat.satellites[idx];
        sat.orbit_radius /= 1e5;
        assignments.push_back({sat, spec});
    }

    const ringres::ScanMode mode = mode_name == "system"
                                       ? ringres::ScanMode::System
                                       : ringres::ScanMode::Single;
    ringres::ScanResult result =
        ringres::scan(ring.primary, ring.band_in, ring.band_out, assignments,
                      mode, ring.props);
    for (auto& zone : result.zones) {
        zone.center *= 1e5;
        zone.half_width *= 1e5;
    }

    for (const auto& w : result.warnings)
        std::cerr << "warning: " << w << '\n';

    if (format == "json") {
        json doc;
        doc["zones"] = json::array();
        for (const auto& z : result.zones)
            doc["zones"].push_back({{"satellite", z.satellite},
                                    {"p", z.spec.p},
                                    {"q", z.spec.q},
                                    {"n", z.spec.order},
                                    {"branch", to_string(z.branch)},
                                    {"center_km", z.center},
                                    {"half_width_km", z.half_width}});
        doc["warnings"] = result.warnings;
        write_artifact(out_path, doc.dump(2) + "\n");
    } else {
        write_artifact(out_path, ringres::catalog::zones_to_csv(result.zones));
    }
    return kExitOk;
}

int run_table(int which, const std::string& variant,
              const std::string& rings_path, const std::string& sats_path,
              const std::string& out_path, const std::string& format) {
    const auto rings = ringres::catalog::load_ring_records_file(rings_path);
    if (rings.empty())
        throw ringres::catalog::ParseError(1, 1, "ring file has no records");

    if (which == 1) {
        const auto rows = ringres::catalog::table1_pipeline(rings);
        if (format == "json") {
            json doc = json::array();
            for (const auto& r : rows)
                doc.push_back({{"planet", r.planet},
                               {"band_in_km", r.band_in_km},
                               {"band_out_km", r.band_out_km},
                               {"fill_lo", r.fill_lo},
                               {"fill_hi", r.fill_hi},
                               {"critical_radius_km", r.critical_radius_km},
                               {"instability_possible", r.instability_possible}});
            write_artifact(out_path, doc.dump(2) + "\n");
        } else {
            write_artifact(out_path, ringres::catalog::table1_to_csv(rows));
        }
        return kExitOk;
    }

    const auto cat = ringres::catalog::load_satellite_catalog_file(sats_path);
    const auto rows = ringres::catalog::table2_pipeline(
        rings.front(), cat, variant == "perturbed");
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            json row = {{"index", r.index},
                        {"resonance", std::to_string(r.p) + ":" + std::to_string(r.q)},
                        {"distance_unperturbed_1e5_km", r.unperturbed_1e5_km},
                        {"satellite", r.satellite}};
            if (r.perturbed) {
                row["distance_inner_1e5_km"] = r.inner_1e5_km;
                row["distance_outer_1e5_km"] = r.outer_1e5_km;
            }
            doc.push_back(row);
        }
        write_artifact(out_path, doc.dump(2) + "\n");
    } else {
        write_artifact(out_path, ringres::catalog::table2_to_csv(rows));
    }
    return kExitOk;
}

bool parse_harmonic(const std::string& text, std::pair<int, double>& out) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        return false;
    int n = 0;
    double h = 0.0;
    const char* s = text.data();
    auto r1 = std::from_chars(s, s + eq, n);
    auto r2 = std::from_chars(s + eq + 1, s + text.size(), h);
    if (r1.ec != std::errc() || r1.ptr != s + eq || r2.ec != std::errc() ||
        r2.ptr != s + text.size() || n < 1)
        return false;
    out = {n, h};
    return true;
}

bool parse_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        return false;
    const char* s = text.data();
    auto r1 = std::from_chars(s, s + colon, lo);
    auto r2 = std::from_chars(s + colon + 1, s + text.size(), hi);
    return r1.ec == std::errc() && r1.ptr == s + colon &&
           r2.ec == std::errc() && r2.ptr == s + text.size();
}

int run_floquet(double omega0, const std::vector<std::string>& harmonic_args,
                const std::string& range_text, int resolution,
                const std::string& out_path, const std::string& format) {
    std::vector<std::pair<int, double>> harmonics;
    for (const auto& arg : harmonic_args) {
        std::pair<int, double> h;
        if (!parse_harmonic(arg, h)) {
            std::cerr << "error: harmonic must be given as n=h, got '" << arg
                      << "'\n";
            return kExitUsage;
        }
        harmonics.push_back(h);
    }
    double nu_lo = 0.0, nu_hi = 0.0;
    if (!parse_range(range_text, nu_lo, nu_hi) || !(nu_lo < nu_hi) ||
        !(nu_lo > 0.0)) {
        std::cerr << "error: --nu-range must be lo:hi with 0 < lo < hi, got '"
                  << range_text << "'\n";
        return kExitUsage;
    }

    const auto intervals = ringres::tongue_scan(omega0, harmonics, nu_lo,
                                                nu_hi, resolution);
    if (format == "json") {
        json doc = json::array();
        for (const auto& t : intervals)
            doc.push_back({{"nu_lo", t.nu_lo},
                           {"nu_hi", t.nu_hi},
                           {"max_growth_exponent", t.max_growth_exponent}});
        write_artifact(out_path, doc.dump(2) + "\n");
    } else {
        std::string csv = "nu_lo,nu_hi,max_growth_exponent\n";
        for (const auto& t : intervals)
            csv += ringres::catalog::format_number(t.nu_lo) + "," +
                   ringres::catalog::format_number(t.nu_hi) + "," +
                   ringres::catalog::format_number(t.max_growth_exponent) +
                   "\n";
        write_artifact(out_path, csv);
    }
    return kExitOk;
}

int run_tworing(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in)
        throw ringres::catalog::FileError("cannot read file: " + config_path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw ringres::catalog::ParseError(1, 1, e.what());
    }

    ringres::TwoRingSystem sys;
    try {
        sys.count = cfg.at("count").get<int>();
        sys.inner_particle_mass = cfg.at("inner_particle_mass").get<double>();
        sys.outer_particle_mass = cfg.at("outer_particle_mass").get<double>();
        sys.inner_radius = cfg.at("inner_radius").get<double>();
        sys.separation = cfg.at("separation").get<double>();
        sys.central_mass = cfg.at("central_mass").get<double>();
        sys.reference_particle_mass =
            cfg.value("reference_particle_mass",
                      std::max(sys.inner_particle_mass, sys.outer_particle_mass));
        if (cfg.value("alignment", "noncollinear") == std::string("collinear"))
            sys.alignment = ringres::RingAlignment::Collinear;
    } catch (const json::exception& e) {
        throw ringres::catalog::ParseError(1, 1, e.what());
    }

    const ringres::StabilityReport rep = ringres::stability_report(sys);
    json doc;
    doc["verdict"] = to_string(rep.verdict);
    doc["reasons"] = rep.reasons;
    doc["radial_ok_inner"] = rep.radial_ok_inner;
    doc["radial_ok_outer"] = rep.radial_ok_outer;
    doc["tangential_ok_inner"] = rep.tangential_ok_inner;
    doc["tangential_ok_outer"] = rep.tangential_ok_outer;
    doc["mass_ratio_band"] = {{"lo", rep.band_lo},
                              {"hi", rep.band_hi},
                              {"width", rep.band_width}};
    doc["ratio_in_band"] = rep.ratio_in_band;
    doc["separation_min"] = rep.separation_min;
    doc["separation_ok"] = rep.separation_ok;
    doc["shear_parameter"] = rep.shear_parameter;
    write_artifact(out_path, doc.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ring resonance toolkit"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "locate instability zones");
    std::string scan_ring, scan_sats, scan_mode = "single", scan_out,
                scan_format = "csv";
    scan->add_option("--ring", scan_ring, "ring system CSV")->required();
    scan->add_option("--satellites", scan_sats, "satellite catalog CSV")
        ->required();
    scan->add_option("--mode", scan_mode, "single|system")
        ->check(CLI::IsMember({"single", "system"}));
    scan->add_option("--out", scan_out, "output path (default stdout)");
    scan->add_option("--format", scan_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // table
    auto* table = app.add_subcommand("table", "reference table pipelines");
    int table_which = 0;
    std::string table_variant = "unperturbed", table_rings, table_sats,
                table_out, table_format = "csv";
    table->add_option("--which", table_which, "1|2")->required();
    table->add_option("--variant", table_variant, "unperturbed|perturbed")
        ->check(CLI::IsMember({"unperturbed", "perturbed"}));
    table->add_option("--rings", table_rings, "ring system CSV")->required();
    table->add_option("--satellites", table_sats,
                      "satellite catalog CSV (table 2)");
    table->add_option("--out", table_out, "output path (default stdout)");
    table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // floquet
    auto* floquet = app.add_subcommand("floquet", "instability tongue scan");
    double fl_omega0 = 1.0;
    std::vector<std::string> fl_harmonics;
    std::string fl_range, fl_out, fl_format = "csv";
    int fl_resolution = 400;
    floquet->add_option("--omega0", fl_omega0, "natural frequency")->required();
    floquet->add_option("--harmonic", fl_harmonics, "harmonic as n=h")
        ->required();
    floquet->add_option("--nu-range", fl_range, "forcing range lo:hi")
        ->required();
    floquet->add_option("--resolution", fl_resolution, "grid points (>= 100)");
    floquet->add_option("--out", fl_out, "output path (default stdout)");
    floquet->add_option("--format", fl_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // tworing
    auto* tworing = app.add_subcommand("tworing", "two-ring stability report");
    std::string tr_config, tr_out;
    tworing->add_option("--config", tr_config, "system JSON")->required();
    tworing->add_option("--out", tr_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (scan->parsed())
            return run_scan(scan_ring, scan_sats, scan_mode, scan_out,
                            scan_format);
        if (table->parsed()) {
            if (table_which != 1 && table_which != 2) {
                std::cerr << "error: --which must be 1 or 2\n";
                return kExitUsage;
            }
            if (table_which == 2 && table_sats.empty()) {
                std::cerr << "error: table 2 requires --satellites\n";
                return kExitUsage;
            }
            return run_table(table_which, table_variant, table_rings,
                             table_sats, table_out, table_format);
        }
        if (floquet->parsed())
            return run_floquet(fl_omega0, fl_harmonics, fl_range,
                               fl_resolution, fl_out, fl_format);
        if (tworing->parsed())
            return run_tworing(tr_config, tr_out);
    } catch (const ringres::catalog::FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ringres::catalog::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const ringres::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const ringres::NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

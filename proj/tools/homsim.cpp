// homsim command-line frontend: delay scans, Bell-table report, coherence
// maps and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homsim/coherence.hpp"
#include "homsim/config.hpp"
#include "homsim/interference.hpp"
#include "homsim/symmetry.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace homsim;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "start:stop:count" with start/stop in units of sigma_z.
std::vector<double> parse_range(const std::string& text, double sigma_z) {
    double start = 0.0, stop = 0.0;
    int count = 0;
    char extra;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &start, &stop, &count, &extra) != 3 ||
        count < 1)
        throw UsageError("bad --z0-range, expected start:stop:count");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = (count == 1 ? start : start + (stop - start) * i / (count - 1)) * sigma_z;
    return grid;
}

// helical:m | sector-a:m | sector-b:m:phi0 | image:path:width | none.
// The image width is given in units of lambda_c.
MaskPtr parse_mask(const std::string& text, double lambda_c) {
    if (text.empty() || text == "none") return nullptr;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts[0] == "helical" && parts.size() == 2)
            return helical_mask(std::stoi(parts[1]));
        if (parts[0] == "sector-a" && parts.size() == 2)
            return sector_a_mask(std::stoi(parts[1]));
        if (parts[0] == "sector-b" && parts.size() == 3)
            return sector_b_mask(std::stoi(parts[1]), std::stod(parts[2]));
        if (parts[0] == "image" && parts.size() == 3)
            return image_mask_from_file(parts[1], std::stod(parts[2]) * lambda_c);
    } catch (const PgmParseError& e) {
        throw IoError(std::string("mask image: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw IoError(std::string("mask image: ") + e.what());
    } catch (const std::logic_error& e) {
        throw UsageError(std::string("bad mask spec '") + text + "': " + e.what());
    }
    throw UsageError("bad mask spec '" + text +
                     "' (helical:m | sector-a:m | sector-b:m:phi0 | image:path:width | none)");
}

TransversePoint parse_point(const std::string& text, double lambda_c) {
    double x = 0.0, y = 0.0;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &x, &y, &extra) != 2)
        throw UsageError("bad point, expected x,y in units of lambda_c");
    return {x * lambda_c, y * lambda_c};
}

void write_text_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw IoError("cannot write " + path);
}

// --- scan ----------------------------------------------------------------

int cmd_scan(const RunConfig& cfg, const std::string& scenario, int m, double theta,
             double phi0, const std::string& range, const std::string& mask_a,
             const std::string& mask_b, const std::string& out) {
    ScenarioSpec spec;
    bool found = false;
    for (ScenarioKind k :
         {ScenarioKind::ProductOppositeOam, ScenarioKind::ProductSameOam,
          ScenarioKind::EntangledSymSameOam, ScenarioKind::EntangledAntisymSameOam,
          ScenarioKind::EntangledOppositeOamPlus, ScenarioKind::EntangledOppositeOamMinus,
          ScenarioKind::Polarization, ScenarioKind::SectorMasked, ScenarioKind::DovePrism,
          ScenarioKind::ImageMasked})
        if (scenario_name(k) == scenario) {
            spec.kind = k;
            found = true;
        }
    if (!found) throw UsageError("unknown scenario '" + scenario + "'");

    const PulseParams pp = pulse_params(cfg.pulse);
    spec.m = m;
    spec.theta = theta;
    spec.phi0 = phi0;
    spec.envelope = envelope_from(cfg);
    spec.mask_a = parse_mask(mask_a, pp.lambda_c);
    spec.mask_b = parse_mask(mask_b, pp.lambda_c);
    if (spec.kind == ScenarioKind::ImageMasked && (!spec.mask_a || !spec.mask_b))
        throw UsageError("image-masked scenario needs --mask-a and --mask-b");

    EvalContext ctx(quadrature_from(cfg));
    const ScanResult result = scan(spec, parse_range(range, pp.sigma_z), ctx);

    std::ostringstream csv;
    csv << "z0_over_sigma_z,P\n";
    for (size_t i = 0; i < result.z0.size(); ++i)
        csv << fmt17(result.z0[i] / pp.sigma_z) << ',' << fmt17(result.p[i]) << '\n';
    write_text_file(out, csv.str());
    return 0;
}

// --- bell-table ------------------------------------------------------------

int cmd_bell_table(const RunConfig& cfg, int m, bool as_json, bool inject_flip) {
    EvalContext ctx(quadrature_from(cfg));
    ClassifyOptions opts;
    opts.accept = cfg.numerics.accept_residual;
    opts.reject = cfg.numerics.reject_residual;

    auto catalog = bell_catalog(envelope_from(cfg), m);
    if (inject_flip && !catalog.empty())
        catalog[0].expected_s = -catalog[0].expected_s;  // negative-control hook

    int matched = 0;
    json rows = json::array();
    for (const auto& entry : catalog) {
        const SymmetryReport rep = classify(entry.state, opts, ctx);
        const double p0 = coincidence_probability(entry.state, 0.0, ctx);
        const bool s_ok = rep.s == entry.expected_s;
        const bool end_to_end =
            entry.expected == HomPrediction::Dip ? p0 <= 0.01 : p0 >= 0.99;
        const bool ok = s_ok && rep.prediction == entry.expected && end_to_end;
        matched += ok ? 1 : 0;
        if (as_json) {
            rows.push_back({{"pol", entry.pol_label},
                            {"oam", entry.oam_label},
                            {"s", rep.s},
                            {"expected_s", entry.expected_s},
                            {"prediction", prediction_name(rep.prediction)},
                            {"expected", prediction_name(entry.expected)},
                            {"p0", p0},
                            {"residual_plus", rep.residual_plus},
                            {"residual_minus", rep.residual_minus},
                            {"match", ok}});
        } else {
            std::printf("%-5s x %-4s  s=%+d (expected %+d)  %-4s  P(0)=%.6f  %s\n",
                        entry.pol_label.c_str(), entry.oam_label.c_str(), rep.s,
                        entry.expected_s, prediction_name(rep.prediction).c_str(), p0,
                        ok ? "ok" : "MISMATCH");
        }
    }
    if (as_json) {
        json doc = {{"m", m}, {"matched", matched}, {"total", (int)catalog.size()},
                    {"rows", rows}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::printf("matched %d/%zu\n", matched, catalog.size());
    }
    return matched == static_cast<int>(catalog.size()) ? 0 : kExitVerify;
}

// --- g2 / g4 maps ----------------------------------------------------------

void write_map(const RunConfig& cfg, const CoherenceMap& map, const json& meta,
               const std::string& out_base) {
    json sidecar = meta;
    sidecar["theoretical_max"] = map.theoretical_max;
    sidecar["grid"] = {{"n", map.grid.n}, {"extent_m", map.grid.extent}};
    if (!map.note.empty()) sidecar["note"] = map.note;

    if (cfg.output.map_format == "csv") {
        std::ostringstream csv;
        csv << "x,y,g\n";
        for (int row = 0; row < map.grid.n; ++row)
            for (int col = 0; col < map.grid.n; ++col) {
                const TransversePoint p = map.grid.point(row, col);
                csv << fmt17(p.x) << ',' << fmt17(p.y) << ','
                    << fmt17(map.values[row * map.grid.n + col]) << '\n';
            }
        write_text_file(out_base + ".csv", csv.str());
    } else {
        GrayImage img;
        img.width = img.height = map.grid.n;
        img.pixels.resize(map.values.size());
        for (size_t i = 0; i < map.values.size(); ++i) {
            const double v = 255.0 * map.values[i] / map.theoretical_max;
            img.pixels[i] = static_cast<unsigned char>(
                std::lround(std::min(255.0, std::max(0.0, v))));
        }
        try {
            write_pgm(out_base + ".pgm", img);
        } catch (const std::runtime_error& e) {
            throw IoError(e.what());
        }
    }
    write_text_file(out_base + ".json", json(sidecar).dump(2) + "\n");
}

int cmd_g2(const RunConfig& cfg, const std::string& scheme, const std::string& mask_a,
           const std::string& mask_b, int grid_n, double phi_prime,
           const std::string& fixed, const std::string& out_base) {
    const PulseParams pp = pulse_params(cfg.pulse);
    auto env = envelope_from(cfg);
    MaskPtr ma = parse_mask(mask_a, pp.lambda_c);
    MaskPtr mb = parse_mask(mask_b, pp.lambda_c);

    MapGrid grid;
    grid.n = grid_n;
    grid.extent = default_map_extent(*env);

    // r' defaults to the main-lobe radius at azimuth --phi-prime.
    TransversePoint r_prime{0.0, 0.0};
    if (!fixed.empty()) {
        r_prime = parse_point(fixed, pp.lambda_c);
    } else {
        const double rho = 2.404825557695773 / env->rho_tc();
        r_prime = {rho * std::cos(phi_prime), rho * std::sin(phi_prime)};
    }

    CoherenceMap map;
    if (scheme == "hom")
        map = g2_hom_map(env, ma, mb, grid, r_prime);
    else if (scheme == "entangled")
        map = g2_entangled_map(env, ma, mb, grid, r_prime);
    else
        throw UsageError("unknown --scheme '" + scheme + "' (hom | entangled)");

    write_map(cfg, map,
              {{"command", "g2"},
               {"scheme", scheme},
               {"mask_a", mask_a},
               {"mask_b", mask_b},
               {"r_prime_m", {r_prime.x, r_prime.y}}},
              out_base);
    return 0;
}

int cmd_g4(const RunConfig& cfg, const std::array<std::string, 4>& mask_args, int grid_n,
           const std::vector<std::string>& fixed, bool conj_on_v,
           const std::string& out_base) {
    const PulseParams pp = pulse_params(cfg.pulse);
    auto env = envelope_from(cfg);
    std::array<MaskPtr, 4> masks;
    for (int i = 0; i < 4; ++i) masks[i] = parse_mask(mask_args[i], pp.lambda_c);

    MapGrid grid;
    grid.n = grid_n;
    grid.extent = default_map_extent(*env);

    std::array<TransversePoint, 3> pts{};  // r2, r3, r4; default on-axis offsets
    if (!fixed.empty() && fixed.size() != 3)
        throw UsageError("--fixed-point must be given three times (r2, r3, r4)");
    for (size_t i = 0; i < fixed.size(); ++i) pts[i] = parse_point(fixed[i], pp.lambda_c);

    const CoherenceMap map = g4_map(masks, grid, pts, conj_on_v);
    write_map(cfg, map,
              {{"command", "g4"},
               {"masks", {mask_args[0], mask_args[1], mask_args[2], mask_args[3]}},
               {"conj_on_v", conj_on_v}},
              out_base);
    return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyState {
    bool verbose = false;
    int failures = 0;
    int checks = 0;

    void check(const std::string& name, double residual, double tol) {
        ++checks;
        const bool ok = residual <= tol;
        if (!ok) ++failures;
        if (verbose || !ok)
            std::printf("  %-52s residual=%.3e tol=%.1e %s\n", name.c_str(), residual,
                        tol, ok ? "ok" : "FAIL");
    }
};

int cmd_verify(const RunConfig& cfg, bool fast, bool verbose) {
    const double tol = fast ? 1e-4 : 1e-6;
    VerifyState v;
    v.verbose = verbose;

    const PulseParams pp = pulse_params(cfg.pulse);
    auto env = envelope_from(cfg);
    EvalContext ctx(quadrature_from(cfg));
    if (fast) ctx.quad().angular_nodes = 2048;

    // Envelope normalization.
    {
        BesselGaussEnvelope copy = *env;
        const double before = copy.normalize();
        v.check("envelope normalization idempotent", std::fabs(copy.normalize() - 1.0),
                1e-9);
        (void)before;
    }

    // Delay-scan closed forms.
    auto scenario_p0 = [&](ScenarioKind kind, int m, double theta, double phi0) {
        ScenarioSpec spec;
        spec.kind = kind;
        spec.m = m;
        spec.theta = theta;
        spec.phi0 = phi0;
        spec.envelope = env;
        return coincidence_probability(build_scenario(spec), 0.0, ctx);
    };
    {
        ScenarioSpec spec;
        spec.kind = ScenarioKind::ProductOppositeOam;
        spec.envelope = env;
        const PhotonState st = build_scenario(spec);
        double worst = 0.0;
        for (double z : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const double z0 = z * pp.sigma_z;
            const double analytic =
                0.5 * (1.0 - std::exp(-z0 * z0 / (4.0 * pp.sigma_z * pp.sigma_z)));
            worst = std::max(worst,
                             std::fabs(coincidence_probability(st, z0, ctx) - analytic));
        }
        v.check("dip profile vs analytic Gaussian", worst, tol);
    }
    v.check("same-OAM flat 1/2",
            std::fabs(scenario_p0(ScenarioKind::ProductSameOam, 1, 0, 0) - 0.5), 1e-9);
    v.check("antisymmetric peak P(0)=1",
            std::fabs(scenario_p0(ScenarioKind::EntangledAntisymSameOam, 1, 0, 0) - 1.0),
            tol);
    v.check("opposite-OAM plus dip",
            scenario_p0(ScenarioKind::EntangledOppositeOamPlus, 1, 0, 0), tol);
    v.check("opposite-OAM minus dip",
            scenario_p0(ScenarioKind::EntangledOppositeOamMinus, 1, 0, 0), tol);
    {
        double worst = 0.0;
        for (double theta : {-kPi / 4, -kPi / 6, 0.0, kPi / 6, kPi / 4})
            worst = std::max(
                worst, std::fabs(scenario_p0(ScenarioKind::Polarization, 0, theta, 0) -
                                 (0.5 - 0.5 * std::sin(2.0 * theta))));
        v.check("polarization P(0)=1/2-sin(2theta)/2", worst, tol);
    }
    {
        double worst = 0.0;
        for (int m : {1, 2, 4})
            for (int i = 0; i < (fast ? 5 : 20); ++i) {
                const double phi0 = (i + 0.5) / (fast ? 5 : 20) * kPi / m;
                worst = std::max(
                    worst, std::fabs(scenario_p0(ScenarioKind::SectorMasked, m, 0, phi0) -
                                     coincidence_sector(m, phi0)));
            }
        v.check("sector-mask P(0) closed form", worst, tol);
    }
    {
        double worst = 0.0;
        for (int m : {1, 2})
            for (int i = 0; i < 16; ++i) {
                const double phi0 = i * kTwoPi / 16.0;
                worst = std::max(
                    worst, std::fabs(scenario_p0(ScenarioKind::DovePrism, m, 0, phi0) -
                                     (0.5 - 0.5 * std::cos(4.0 * m * phi0))));
            }
        v.check("Dove prism P(0) closed form", worst, tol);
    }

    // Bell catalog.
    {
        ClassifyOptions opts;
        int bad = 0;
        for (const auto& entry : bell_catalog(env, 1)) {
            const SymmetryReport rep = classify(entry.state, opts, ctx);
            const double p0 = coincidence_probability(entry.state, 0.0, ctx);
            if (rep.s != entry.expected_s || rep.prediction != entry.expected ||
                (entry.expected == HomPrediction::Dip ? p0 > 0.01 : p0 < 0.99))
                ++bad;
        }
        v.check("Bell catalog 16/16", bad, 0.5);
    }

    // Coherence oracles: contraction engine vs closed forms on random points.
    {
        std::mt19937 rng(2024);
        const double rc = 2.404825557695773 / env->rho_tc();
        std::uniform_real_distribution<double> ur(0.2 * rc, 1.5 * rc);
        std::uniform_real_distribution<double> ua(0.0, kTwoPi);
        auto rpt = [&] {
            const double r = ur(rng), a = ua(rng);
            return TransversePoint{r * std::cos(a), r * std::sin(a)};
        };
        const int trials = fast ? 5 : 25;

        auto ma = sector_a_mask(2), mb = sector_b_mask(2, kPi / 8.0);
        auto hom = beam_splitter(masked_product_pair(env, ma, mb));
        double worst = 0.0;
        for (int i = 0; i < trials; ++i) {
            auto r1 = rpt(), r2 = rpt();
            worst = std::max(worst, std::fabs(g2_engine(hom, Port::D, r1, Port::C, r2, ctx) -
                                              g2_hom_value(ma, mb, r1, r2)));
        }
        v.check("g2 HOM engine vs closed form", worst, tol);

        auto ent = entangled_masked_pair(env, ma, mb);
        worst = 0.0;
        for (int i = 0; i < trials; ++i) {
            auto r1 = rpt(), r2 = rpt();
            worst = std::max(worst,
                             std::fabs(g2_engine_circular(ent, Port::A, r1, Port::B, r2,
                                                          ctx) -
                                       g2_entangled_value(ma, mb, r1, r2)));
        }
        v.check("g2 entangled engine vs closed form", worst, tol);

        std::array<MaskPtr, 4> masks{ma, mb, helical_mask(1), nullptr};
        auto four = four_photon_state(env, masks);
        v.check("four-photon state norm",
                std::fabs(std::abs(inner_product(four, four, ctx)) - 1.0), tol);
        worst = 0.0;
        for (int i = 0; i < trials; ++i) {
            std::array<TransversePoint, 4> pts{rpt(), rpt(), rpt(), rpt()};
            worst = std::max(worst, std::fabs(g4_engine(four, pts, ctx) -
                                              g4_value(masks, pts, false)));
        }
        v.check("g4 engine vs closed form", worst, tol);

        auto bare = masked_product_pair(env, nullptr, nullptr);
        auto dressed = masked_product_pair(env, ma, helical_mask(2));
        worst = 0.0;
        for (int i = 0; i < trials; ++i) {
            auto r = rpt();
            worst = std::max(worst, std::fabs(number_density(bare, Port::A, r, ctx) -
                                              number_density(dressed, Port::A, r, ctx)));
        }
        v.check("density invariance under masks", worst, 1e-9);
    }

    std::printf("verify: %d/%d checks passed%s\n", v.checks - v.failures, v.checks,
                fast ? " (fast mode)" : "");
    return v.failures == 0 ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HOM interference and quantum-coherence simulator for 3D-structured "
                 "photon pairs"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON configuration file");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "delay scan of the coincidence probability");
    std::string scenario = "product-opposite-oam", range = "-4:4:161", scan_out = "-";
    std::string scan_mask_a = "none", scan_mask_b = "none";
    int scan_m = 1;
    double scan_theta = 0.0, scan_phi0 = 0.0;
    scan_cmd->add_option("--scenario", scenario, "scenario name");
    scan_cmd->add_option("--m", scan_m, "OAM quantum number");
    scan_cmd->add_option("--theta", scan_theta, "polarization mixing angle (rad)");
    scan_cmd->add_option("--phi0", scan_phi0, "sector offset / Dove angle (rad)");
    scan_cmd->add_option("--z0-range", range, "start:stop:count in units of sigma_z");
    scan_cmd->add_option("--mask-a", scan_mask_a, "mask for the image-masked scenario");
    scan_cmd->add_option("--mask-b", scan_mask_b, "mask for the image-masked scenario");
    scan_cmd->add_option("--out", scan_out, "CSV output path ('-' for stdout)");

    // bell-table
    auto* bell_cmd = app.add_subcommand("bell-table", "classify the 16 hyperentangled "
                                                      "Bell states");
    bool bell_json = false, bell_flip = false;
    int bell_m = 1;
    bell_cmd->add_flag("--json", bell_json, "machine-readable output");
    bell_cmd->add_option("--m", bell_m, "OAM quantum number (nonzero)");
    bell_cmd->add_flag("--inject-flip", bell_flip,
                       "negative-control hook: flip one expectation");

    // g2
    auto* g2_cmd = app.add_subcommand("g2", "second-order coherence map");
    std::string g2_scheme = "hom", g2_mask_a = "none", g2_mask_b = "none";
    std::string g2_fixed, g2_out = "g2_map";
    int g2_grid = 256;
    double g2_phi_prime = 0.0;
    g2_cmd->add_option("--scheme", g2_scheme, "hom | entangled");
    g2_cmd->add_option("--mask-a", g2_mask_a, "mask spec for path A");
    g2_cmd->add_option("--mask-b", g2_mask_b, "mask spec for path B");
    g2_cmd->add_option("--grid", g2_grid, "map resolution (NxN)");
    g2_cmd->add_option("--phi-prime", g2_phi_prime, "azimuth of r' (rad)");
    g2_cmd->add_option("--fixed-point", g2_fixed, "r' as x,y in units of lambda_c");
    g2_cmd->add_option("--out", g2_out, "output base name (.pgm/.csv + .json)");

    // g4
    auto* g4_cmd = app.add_subcommand("g4", "fourth-order coherence map");
    std::array<std::string, 4> g4_masks{"none", "none", "none", "none"};
    std::vector<std::string> g4_fixed;
    std::string g4_out = "g4_map";
    int g4_grid = 256;
    bool g4_conj = false;
    g4_cmd->add_option("--mask-a", g4_masks[0], "mask spec for port A");
    g4_cmd->add_option("--mask-b", g4_masks[1], "mask spec for port B");
    g4_cmd->add_option("--mask-c", g4_masks[2], "mask spec for port C");
    g4_cmd->add_option("--mask-d", g4_masks[3], "mask spec for port D");
    g4_cmd->add_option("--grid", g4_grid, "map resolution (NxN)");
    g4_cmd->add_option("--fixed-point", g4_fixed,
                       "r2, r3, r4 as x,y in units of lambda_c (three times)");
    g4_cmd->add_flag("--conj-on-v", g4_conj, "conjugate phases on the V photons");
    g4_cmd->add_option("--out", g4_out, "output base name (.pgm/.csv + .json)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in checks");
    bool fast = false, verbose = false;
    verify_cmd->add_flag("--fast", fast, "smaller samples, relaxed tolerances (1e-4)");
    verify_cmd->add_flag("--verbose", verbose, "print every residual");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);

        if (*scan_cmd)
            return cmd_scan(cfg, scenario, scan_m, scan_theta, scan_phi0, range,
                            scan_mask_a, scan_mask_b, scan_out);
        if (*bell_cmd) return cmd_bell_table(cfg, bell_m, bell_json, bell_flip);
        if (*g2_cmd)
            return cmd_g2(cfg, g2_scheme, g2_mask_a, g2_mask_b, g2_grid, g2_phi_prime,
                          g2_fixed, g2_out);
        if (*g4_cmd) return cmd_g4(cfg, g4_masks, g4_grid, g4_fixed, g4_conj, g4_out);
        if (*verify_cmd) return cmd_verify(cfg, fast, verbose);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

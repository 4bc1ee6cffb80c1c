#include "ferro/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferro/cli/config.hpp"
#include "ferro/cli/csv.hpp"
#include "ferro/cli/synth.hpp"
#include "ferro/compensation.hpp"
#include "ferro/errors.hpp"
#include "ferro/forward_model.hpp"
#include "ferro/inversion.hpp"
#include "ferro/spectrum.hpp"

namespace ferro::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string config;
    std::string out;
    std::string reference;
    std::string air;
    std::optional<std::uint64_t> seed;
    bool despike = false;
    bool no_compensation = false;
    bool diagnostics = false;
};

struct ReportRow {
    double lift_off = 0.0;  // m
    std::optional<double> true_mu;
    InversionResult result;
    bool compensated = true;
};

RunConfig config_for(const Options& o) { return o.config.empty() ? default_config() : load_config(o.config); }

void require_plate(const RunConfig& cfg) {
    if (!cfg.plate_given) throw ConfigError("config: missing key plate (conductivity is required for inversion)");
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
    fs::path p = out;
    p.replace_extension();
    p += suffix;
    return p;
}

void check_same_grid(const FrequencyGrid& a, const FrequencyGrid& b, const std::string& name_a,
                     const std::string& name_b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            std::ostringstream os;
            os << "frequency grids differ at data row " << (i + 1) << " (line " << (i + 2) << "): " << name_a << " "
               << format_double(a[i]) << " Hz vs " << name_b << " " << format_double(b[i]) << " Hz";
            throw InputError(os.str());
        }
    }
    if (a.size() != b.size()) {
        std::ostringstream os;
        os << "frequency grids differ at data row " << (n + 1) << ": " << name_a << " has " << a.size() << " rows, "
           << name_b << " has " << b.size();
        throw InputError(os.str());
    }
}

InductanceSpectrum ingest_files(const fs::path& sample_path, const fs::path& air_path, bool despike_flag) {
    const auto sample = read_impedance_csv(sample_path);
    const auto air = read_impedance_csv(air_path);
    check_same_grid(sample.grid, air.grid, sample_path.string(), air_path.string());
    auto spec = to_inductance(ImpedanceSweep(sample.grid, sample.values, air.values));
    return despike_flag ? despike(spec) : spec;
}

ordered_json features_json(const CompensationFeatures& f, std::optional<double> liftoff_est) {
    ordered_json j;
    j["omega1_rad_s"] = f.omega1;
    j["delta_l0_h"] = f.delta_l0;
    j["delta_lm_h"] = f.delta_lm;
    j["ln_ratio"] = f.ln_ratio;
    j["omega0_rad_s"] = f.omega0;
    j["liftoff_est_m"] = liftoff_est ? ordered_json(*liftoff_est) : ordered_json(nullptr);
    return j;
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(path.string() + ": cannot open for writing");
    out << j.dump(2) << '\n';
}

ordered_json row_json(const ReportRow& r) {
    ordered_json j;
    j["lift_off_mm"] = r.lift_off * 1e3;
    j["true_mu_r"] = r.true_mu ? ordered_json(*r.true_mu) : ordered_json(nullptr);
    j["recovered_mu_r"] = r.result.mu_r;
    j["relative_error"] =
        r.true_mu ? ordered_json(std::abs(r.result.mu_r - *r.true_mu) / *r.true_mu) : ordered_json(nullptr);
    j["residual_deg"] = r.result.residual;
    j["compensated"] = r.compensated;
    j["converged"] = r.result.converged;
    j["iterations"] = r.result.iterations;
    j["scan_minima"] = r.result.scan_minima;
    return j;
}

void print_table(std::ostream& out, const std::vector<ReportRow>& rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %-10s %-15s %-11s %-15s %s\n", "lift-off(mm)", "true_mu_r",
                  "recovered_mu_r", "rel_error", "residual(deg)", "phase");
    out << line;
    for (const auto& r : rows) {
        std::string truth = "-";
        std::string err = "-";
        if (r.true_mu) {
            char b[32];
            std::snprintf(b, sizeof b, "%.2f", *r.true_mu);
            truth = b;
            std::snprintf(b, sizeof b, "%.2f%%", 100.0 * std::abs(r.result.mu_r - *r.true_mu) / *r.true_mu);
            err = b;
        }
        std::snprintf(line, sizeof line, "%-14.2f %-10s %-15.2f %-11s %-15.4f %s%s\n", r.lift_off * 1e3,
                      truth.c_str(), r.result.mu_r, err.c_str(), r.result.residual,
                      r.compensated ? "compensated" : "raw", r.result.converged ? "" : " (not converged)");
        out << line;
    }
    for (const auto& r : rows)
        if (r.result.scan_minima > 1)
            out << "warning: misfit scan found " << r.result.scan_minima
                << " local minima; objective is not unimodal over mu_bounds\n";
}

InversionProblem problem_for(const RunConfig& cfg, const PhaseSpectrum& phase) {
    InversionProblem p;
    p.compensated_phase = phase;
    p.geometry = cfg.geometry.with_lift_off(cfg.reference_lift_off);
    p.conductivity = cfg.plate.conductivity;
    p.mu_bounds = cfg.mu_bounds;
    p.fit_band = cfg.fit_band_for(phase.grid);
    p.quadrature = cfg.quadrature;
    return p;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const auto cfg = config_for(o);
    const auto grid = cfg.grid.build();
    const ForwardModel model(cfg.geometry, cfg.quadrature);
    auto spec = model.sweep(cfg.plate, grid);
    if (cfg.noise || o.seed) {
        const double sigma = cfg.noise ? cfg.noise->relative_sigma : 0.0;
        const std::uint64_t seed = o.seed ? *o.seed : cfg.noise->seed;
        if (sigma > 0.0) spec = add_relative_noise(spec, sigma, seed);
    }
    write_inductance_csv(o.out, spec);
    try {
        const auto zc = find_zero_crossing(spec);
        out << "zero-crossing frequency: " << format_double(zc.frequency_hz()) << " Hz (omega1 "
            << format_double(zc.omega1) << " rad/s)\n";
    } catch (const FeatureAbsent&) {
        out << "zero-crossing frequency: none on grid\n";
    }
    if (o.diagnostics) {
        out << "alpha0: " << format_double(kernel_peak_alpha0(cfg.geometry)) << " 1/m\n";
        out << "|dL| at " << format_double(grid.back()) << " Hz: " << format_double(std::abs(spec.values.back()))
            << " H\n";
    }
    return kOk;
}

int cmd_ingest(const Options& o, std::ostream& out) {
    const auto spec = ingest_files(o.input, o.air, o.despike);
    write_inductance_csv(o.out, spec);
    out << "wrote " << spec.size() << " rows to " << o.out << "\n";
    return kOk;
}

int cmd_compensate(const Options& o, std::ostream& out) {
    const auto cfg = config_for(o);
    fs::path ref_path = o.reference;
    if (ref_path.empty()) {
        if (!cfg.reference_path) throw ConfigError("config: missing key compensation.reference (or --reference)");
        ref_path = *cfg.reference_path;
    }
    const auto spec = read_inductance_csv(o.input);
    const auto reference = read_inductance_csv(ref_path);
    check_same_grid(spec.grid, reference.grid, o.input, ref_path.string());

    const auto features = extract_features(spec, reference);
    const auto raw = phase_of(spec);
    const auto comp = compensate_phase(raw, features.omega1, features.ln_ratio);

    std::optional<double> liftoff;
    if (o.diagnostics) liftoff = estimate_liftoff(features.ln_ratio, kernel_peak_alpha0(cfg.geometry));

    write_phase_csv(o.out, comp);
    const auto features_path = sibling(o.out, ".features.json");
    write_json(features_path, features_json(features, liftoff));
    out << "omega1 " << format_double(features.omega1) << " rad/s, ln(dL0/dLm) " << format_double(features.ln_ratio)
        << ", omega0 " << format_double(features.omega0) << " rad/s\n";
    if (liftoff) out << "estimated lift-off: " << format_double(*liftoff * 1e3) << " mm\n";
    out << "wrote " << o.out << " and " << features_path.string() << "\n";
    return kOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
    if (o.config.empty()) throw ConfigError("config: --config is required for invert");
    const auto cfg = load_config(o.config);
    require_plate(cfg);
    const auto phase = read_phase_csv(o.input);
    ReportRow row;
    row.lift_off = cfg.geometry.lift_off;
    if (cfg.mu_known) row.true_mu = cfg.plate.relative_permeability;
    row.compensated = !o.no_compensation;
    const auto problem = problem_for(cfg, phase);
    row.result = o.no_compensation ? invert_uncompensated(phase, problem) : invert_permeability(problem);

    print_table(out, {row});
    if (!o.out.empty()) {
        ordered_json report;
        report["rows"] = ordered_json::array({row_json(row)});
        write_json(o.out, report);
    }
    return kOk;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
    if (o.config.empty()) throw ConfigError("config: --config is required for pipeline");
    const auto cfg = load_config(o.config);
    require_plate(cfg);

    const auto spec = ingest_files(o.input, o.air, o.despike);

    fs::path ref_path = o.reference;
    if (ref_path.empty()) {
        if (!cfg.reference_path) throw ConfigError("config: missing key compensation.reference (or --reference)");
        ref_path = *cfg.reference_path;
    }
    const auto ref_columns = read_complex_csv(ref_path);
    InductanceSpectrum reference;
    if (ref_columns.kind == CsvKind::Impedance) {
        reference = ingest_files(ref_path, o.air, o.despike);
    } else {
        reference = InductanceSpectrum(ref_columns.grid, ref_columns.values);
    }
    check_same_grid(spec.grid, reference.grid, o.input, ref_path.string());

    const auto features = extract_features(spec, reference);
    const auto raw = phase_of(spec);
    const auto comp = compensate_phase(raw, features.omega1, features.ln_ratio);
    std::optional<double> liftoff;
    if (o.diagnostics) liftoff = estimate_liftoff(features.ln_ratio, kernel_peak_alpha0(cfg.geometry));

    const fs::path report_path = o.out;
    write_inductance_csv(sibling(report_path, ".inductance.csv"), spec);
    write_inductance_csv(sibling(report_path, ".reference.csv"), reference);
    write_phase_csv(sibling(report_path, ".phase_raw.csv"), raw);
    write_phase_csv(sibling(report_path, ".phase_compensated.csv"), comp);
    write_plot_csv(sibling(report_path, ".plot.csv"), spec, raw, comp);
    write_json(sibling(report_path, ".features.json"), features_json(features, liftoff));

    const auto problem = problem_for(cfg, comp);
    std::vector<ReportRow> rows;
    for (bool compensated : {true, false}) {
        ReportRow row;
        row.lift_off = cfg.geometry.lift_off;
        if (cfg.mu_known) row.true_mu = cfg.plate.relative_permeability;
        row.compensated = compensated;
        row.result = compensated ? invert_permeability(problem) : invert_uncompensated(raw, problem);
        rows.push_back(row);
    }

    print_table(out, rows);
    ordered_json report;
    report["features"] = features_json(features, liftoff);
    report["rows"] = ordered_json::array();
    for (const auto& r : rows) report["rows"].push_back(row_json(r));
    write_json(report_path, report);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lift-off compensated permeability measurement from eddy-current spectra", "ferro"};
    app.require_subcommand(1);
    Options o;

    auto* sim = app.add_subcommand("simulate", "Synthesise an inductance spectrum from the forward model");
    sim->add_option("--config", o.config, "Run configuration (JSON)");
    sim->add_option("--out", o.out, "Inductance CSV to write")->required();
    sim->add_option("--seed", o.seed, "Noise seed (overrides noise.seed)");
    sim->add_flag("--diagnostics", o.diagnostics, "Print kernel peak and high-frequency magnitude");

    auto* ing = app.add_subcommand("ingest", "Convert impedance sweeps to an inductance spectrum");
    ing->add_option("sample", o.input, "Impedance CSV measured over the specimen")->required();
    ing->add_option("--air", o.air, "Impedance CSV measured in air")->required();
    ing->add_option("--out", o.out, "Inductance CSV to write")->required();
    ing->add_flag("--despike", o.despike, "Median-of-3 filter on Re and Im");

    auto* comp = app.add_subcommand("compensate", "Lift-off compensation of the phase spectrum");
    comp->add_option("spectrum", o.input, "Inductance CSV at unknown lift-off")->required();
    comp->add_option("--reference", o.reference, "Inductance CSV at the minimal lift-off");
    comp->add_option("--config", o.config, "Run configuration (JSON)");
    comp->add_option("--out", o.out, "Compensated phase CSV to write")->required();
    comp->add_flag("--diagnostics", o.diagnostics, "Estimate lift-off from the kernel peak");

    auto* inv = app.add_subcommand("invert", "Recover relative permeability from a phase spectrum");
    inv->add_option("phase", o.input, "Phase CSV")->required();
    inv->add_option("--config", o.config, "Run configuration (JSON)");
    inv->add_option("--out", o.out, "Report JSON to write");
    inv->add_flag("--no-compensation", o.no_compensation, "Input phase is raw (uncompensated)");

    auto* pipe = app.add_subcommand("pipeline", "ingest -> compensate -> invert in one run");
    pipe->add_option("sample", o.input, "Impedance CSV measured over the specimen")->required();
    pipe->add_option("--air", o.air, "Impedance CSV measured in air")->required();
    pipe->add_option("--reference", o.reference, "Reference sweep (impedance or inductance CSV)");
    pipe->add_option("--config", o.config, "Run configuration (JSON)");
    pipe->add_option("--out", o.out, "Report JSON; artifacts are written beside it")->required();
    pipe->add_flag("--despike", o.despike, "Median-of-3 filter on Re and Im");
    pipe->add_flag("--diagnostics", o.diagnostics, "Estimate lift-off from the kernel peak");

    std::vector<std::string> argv_store{"ferro"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (sim->parsed()) return cmd_simulate(o, out);
        if (ing->parsed()) return cmd_ingest(o, out);
        if (comp->parsed()) return cmd_compensate(o, out);
        if (inv->parsed()) return cmd_invert(o, out);
        if (pipe->parsed()) return cmd_pipeline(o, out);
    } catch (const FeatureAbsent& e) {
        err << "error: " << e.what() << "\n";
        return kFeatureAbsent;
    } catch (const CompensationOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kCompensationOutOfRange;
    } catch (const InversionFailure& e) {
        err << "error: " << e.what() << "\n";
        return kInversionFailure;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const UndefinedPhase& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const Error& e) {
        // ConfigError, InputError, GridMismatch
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace ferro::cli

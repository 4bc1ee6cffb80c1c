// Acceptance suite: one PASS/FAIL line per criterion, measured values beside
// each verdict. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ferro/cli/synth.hpp"
#include "ferro/compensation.hpp"
#include "ferro/constants.hpp"
#include "ferro/forward_model.hpp"
#include "ferro/inversion.hpp"
#include "ferro/spectrum.hpp"

using namespace ferro;

namespace {

using Clock = std::chrono::steady_clock;

const SensorGeometry kProbe = SensorGeometry::reference_probe();
constexpr double kRefLiftOff = 0.8e-3;
const double kLiftOffs[] = {0.8e-3, 2.3e-3, 3.8e-3};

struct Plate {
    const char* name;
    PlateProperties props;
};

const Plate kPlates[] = {
    {"DP600", PlateProperties::dp600()},
    {"DP800", PlateProperties::dp800()},
    {"DP1000", PlateProperties::dp1000()},
};

const FrequencyGrid& grid() {
    static const FrequencyGrid g = FrequencyGrid::log_spaced(310.0, 3e6, 120);
    return g;
}

InductanceSpectrum synth(const PlateProperties& plate, double l0) {
    return sweep(kProbe.with_lift_off(l0), plate, grid());
}

InversionProblem problem_for(const PhaseSpectrum& phase, const PlateProperties& plate) {
    InversionProblem p;
    p.compensated_phase = phase;
    p.geometry = kProbe.with_lift_off(kRefLiftOff);
    p.conductivity = plate.conductivity;
    p.fit_band = FitBand::default_for(phase.grid);
    return p;
}

struct CellResult {
    double comp_err = 0.0;
    double raw_err = 0.0;
    double comp_mu = 0.0;
    double raw_mu = 0.0;
};

CellResult invert_cell(const InductanceSpectrum& meas, const InductanceSpectrum& ref, const PlateProperties& plate,
                       bool with_raw) {
    const auto f = extract_features(meas, ref);
    const auto raw = phase_of(meas);
    const auto problem = problem_for(compensate_phase(raw, f.omega1, f.ln_ratio), plate);
    const double mu = plate.relative_permeability;
    CellResult c;
    c.comp_mu = invert_permeability(problem).mu_r;
    c.comp_err = std::abs(c.comp_mu - mu) / mu;
    if (with_raw) {
        c.raw_mu = invert_uncompensated(raw, problem).mu_r;
        c.raw_err = std::abs(c.raw_mu - mu) / mu;
    }
    return c;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

// A library exception turns into a FAIL line for that criterion only.
void run_criterion(int id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        verdict(id, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(const char* f, double a) {
    char b[96];
    std::snprintf(b, sizeof b, f, a);
    return b;
}

// Cells of criteria 1 and 2, computed once.
CellResult g_cells[3][3];

void criteria_1_and_2() {
    const auto t0 = Clock::now();
    std::printf("\nround trip, noise-free (reference at 0.8 mm)\n");
    std::printf("%-7s %-9s %-8s %-12s %-10s %-12s %-10s\n", "plate", "l0(mm)", "true", "comp_mu", "comp_err",
                "raw_mu", "raw_err");
    for (int p = 0; p < 3; ++p) {
        const auto& plate = kPlates[p].props;
        const auto ref = synth(plate, kRefLiftOff);
        for (int l = 0; l < 3; ++l) {
            auto& c = g_cells[p][l];
            c = invert_cell(synth(plate, kLiftOffs[l]), ref, plate, true);
            std::printf("%-7s %-9.1f %-8.0f %-12.3f %-10s %-12.3f %-10s\n", kPlates[p].name, kLiftOffs[l] * 1e3,
                        plate.relative_permeability, c.comp_mu, fmt("%.2f%%", 100 * c.comp_err).c_str(), c.raw_mu,
                        fmt("%.2f%%", 100 * c.raw_err).c_str());
        }
    }
    const double elapsed = seconds_since(t0);

    double worst = 0.0;
    for (auto& row : g_cells)
        for (auto& c : row) worst = std::max(worst, c.comp_err);
    verdict(1, worst < 0.02 && elapsed < 120.0,
            "worst compensated error " + fmt("%.2f%%", 100 * worst) + " (limit 2%), " + fmt("%.1f s", elapsed));

    bool ordered = true;
    bool monotone = true;
    for (auto& row : g_cells) {
        for (int l = 1; l < 3; ++l) {
            ordered = ordered && row[l].raw_err > row[l].comp_err;
            monotone = monotone && row[l].raw_err > row[l - 1].raw_err;
        }
    }
    verdict(2, ordered && monotone,
            std::string("raw > compensated in all lifted cells: ") + (ordered ? "yes" : "no") +
                ", raw error increasing in lift-off: " + (monotone ? "yes" : "no"));
}

void criterion_3() {
    const auto plate = PlateProperties::dp800();
    const auto ref = synth(plate, kRefLiftOff);
    const auto far = synth(plate, 3.8e-3);
    const auto raw_ref = phase_of(ref);
    const auto raw_far = phase_of(far);
    const auto f_ref = extract_features(ref, ref);
    const auto f_far = extract_features(far, ref);
    const auto comp_ref = compensate_phase(raw_ref, f_ref.omega1, f_ref.ln_ratio);
    const auto comp_far = compensate_phase(raw_far, f_far.omega1, f_far.ln_ratio);
    const auto band = FitBand::default_for(grid());
    double raw_gap = 0.0;
    double comp_gap = 0.0;
    for (std::size_t i = 0; i < grid().size(); ++i) {
        if (grid()[i] < band.f_lo || grid()[i] > band.f_hi) continue;
        raw_gap = std::max(raw_gap, std::abs(raw_far.theta_deg[i] - raw_ref.theta_deg[i]));
        comp_gap = std::max(comp_gap, std::abs(comp_far.theta_deg[i] - comp_ref.theta_deg[i]));
    }
    const double ratio = raw_gap / comp_gap;
    verdict(3, ratio >= 3.0,
            "max raw gap " + fmt("%.3f deg", raw_gap) + ", max compensated gap " + fmt("%.3f deg", comp_gap) +
                ", reduction " + fmt("%.2fx", ratio) + " (need 3x)");
}

void criterion_4() {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (const auto& plate : kPlates) {
        for (double l0 : kLiftOffs) {
            const auto spec = synth(plate.props, l0);
            const auto th = phase_of(spec);
            const double w1 = find_zero_crossing(spec).omega1;
            for (auto form : {CorrectionForm::ScaledArgument, CorrectionForm::CompensatedZcf}) {
                const auto out = compensate_phase(th, w1, 0.0, form);
                for (std::size_t i = 0; i < th.size(); ++i, ++checked)
                    if (out.theta_deg[i] != th.theta_deg[i]) ++mismatches;
            }
        }
    }
    verdict(4, mismatches == 0,
            std::to_string(mismatches) + " of " + std::to_string(checked) + " samples differ from the input");
}

void criterion_5() {
    const double lifts[] = {0.8e-3, 2.3e-3, 3.8e-3, 5.0e-3};
    bool mag_ok = true;
    bool zcf_ok = true;
    std::string zcfs;
    for (const auto& plate : kPlates) {
        std::vector<InductanceSpectrum> specs;
        for (double l0 : lifts) specs.push_back(synth(plate.props, l0));
        zcfs += std::string(zcfs.empty() ? "" : "; ") + plate.name + " ZCF";
        double prev_zcf = INFINITY;
        for (std::size_t k = 0; k < specs.size(); ++k) {
            const double z = find_zero_crossing(specs[k]).frequency_hz();
            zcfs += fmt(" %.0f", z);
            zcf_ok = zcf_ok && z < prev_zcf;
            prev_zcf = z;
            if (k == 0) continue;
            for (std::size_t i = 0; i < grid().size(); ++i)
                mag_ok = mag_ok && std::abs(specs[k].values[i]) < std::abs(specs[k - 1].values[i]);
        }
    }
    verdict(5, mag_ok && zcf_ok,
            std::string("|dL| decreasing: ") + (mag_ok ? "yes" : "no") + ", ZCF decreasing: " +
                (zcf_ok ? "yes" : "no") + " (" + zcfs + " Hz)");
}

void criterion_6() {
    const auto t0 = Clock::now();
    const auto spots = FrequencyGrid::log_spaced(310.0, 3e6, 10);
    QuadratureConfig doubled;
    doubled.nodes *= 2;
    doubled.alpha_max_scale *= 2.0;
    double worst = 0.0;
    for (const auto& plate : kPlates) {
        for (double l0 : {0.8e-3, 5.0e-3}) {
            const auto g = kProbe.with_lift_off(l0);
            const auto base = sweep(g, plate.props, spots);
            const auto fine = sweep(g, plate.props, spots, doubled);
            for (std::size_t i = 0; i < spots.size(); ++i)
                worst = std::max(worst, std::abs(base.values[i] - fine.values[i]) / std::abs(fine.values[i]));
        }
    }
    const double elapsed = seconds_since(t0);
    verdict(6, worst < 1e-3 && elapsed < 30.0,
            "max relative change " + fmt("%.2e", worst) + " (limit 1e-3), " + fmt("%.2f s", elapsed));
}

// Phase of the single-spatial-frequency model with zero crossing wz.
PhaseSpectrum analytic_phase(double omega_z) {
    std::vector<Complex> v(grid().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex s = std::sqrt(Complex(0.0, grid().angular(i) / omega_z));
        v[i] = 1e-6 * (1.0 - s) / (1.0 + s);
    }
    return phase_of(InductanceSpectrum(grid(), std::move(v)));
}

void criterion_7() {
    double forms = 0.0;
    for (const auto& plate : kPlates) {
        const auto ref = synth(plate.props, kRefLiftOff);
        const auto far = synth(plate.props, 3.8e-3);
        const auto f = extract_features(far, ref);
        const auto th = phase_of(far);
        const auto a = compensate_phase(th, f.omega1, f.ln_ratio, CorrectionForm::ScaledArgument);
        const auto b = compensate_phase(th, f.omega1, f.ln_ratio, CorrectionForm::CompensatedZcf);
        for (std::size_t i = 0; i < th.size(); ++i) forms = std::max(forms, std::abs(a.theta_deg[i] - b.theta_deg[i]));
    }

    double chain = 0.0;
    const double w1 = 2.0 * pi * 4000.0;
    for (double ln : {-0.02, -0.12, -0.5, -1.2, -2.0}) {
        const auto out = compensate_phase(analytic_phase(w1), w1, ln);
        const auto target = analytic_phase(compensate_zcf(w1, ln));
        for (std::size_t i = 0; i < out.size(); ++i) chain = std::max(chain, std::abs(out.theta_deg[i] - target.theta_deg[i]));
    }

    double offset = 0.0;
    double principal = 0.0;
    {
        const auto spec = synth(PlateProperties::dp800(), 3.8e-3);
        const auto ref = synth(PlateProperties::dp800(), kRefLiftOff);
        const auto f = extract_features(spec, ref);
        const auto cont = phase_of(spec);
        const auto prin = principal_phase(spec);
        for (std::size_t i = 0; i < cont.size(); ++i)
            principal = std::max(principal, std::abs(prin.theta_deg[i] - (cont.theta_deg[i] - 90.0)));
        auto shifted = cont;
        for (auto& t : shifted.theta_deg) t -= 90.0;
        const auto a = compensate_phase(cont, f.omega1, f.ln_ratio);
        const auto b = compensate_phase(shifted, f.omega1, f.ln_ratio);
        for (std::size_t i = 0; i < cont.size(); ++i)
            offset = std::max(offset, std::abs((a.theta_deg[i] - b.theta_deg[i]) - 90.0));
    }
    const bool pass = forms < 1e-9 && chain < 1e-6 && offset < 1e-9 && principal < 1e-9;
    verdict(7, pass,
            "(a) forms differ by " + fmt("%.1e deg", forms) + ", (b) analytic chain " + fmt("%.1e deg", chain) +
                ", (c) offset invariance " + fmt("%.1e deg", offset) + ", principal-branch offset error " +
                fmt("%.1e deg", principal));
}

void criterion_8() {
    const auto t0 = Clock::now();
    constexpr int kSeeds = 20;
    constexpr double kSigma = 0.01;
    double worst = 0.0;
    double worst_mean = 0.0;
    int failed_runs = 0;
    std::printf("\nnoise robustness, 1%% relative noise on sample and reference, %d seeds\n", kSeeds);
    std::printf("%-7s %-9s %-12s %-12s\n", "plate", "l0(mm)", "mean_err", "max_err");
    for (int p = 0; p < 3; ++p) {
        const auto& plate = kPlates[p].props;
        const auto ref_clean = synth(plate, kRefLiftOff);
        for (int l = 0; l < 3; ++l) {
            const auto meas_clean = synth(plate, kLiftOffs[l]);
            double sum = 0.0;
            double cell_max = 0.0;
            for (int s = 0; s < kSeeds; ++s) {
                const std::uint64_t seed = 1000u * static_cast<std::uint64_t>(p * 3 + l) + static_cast<std::uint64_t>(s);
                const auto ref = cli::add_relative_noise(ref_clean, kSigma, 2 * seed + 1);
                const auto meas = cli::add_relative_noise(meas_clean, kSigma, 2 * seed);
                double err = 1.0;
                try {
                    err = invert_cell(meas, ref, plate, false).comp_err;
                } catch (const std::exception&) {
                    ++failed_runs;
                }
                sum += err;
                cell_max = std::max(cell_max, err);
            }
            worst = std::max(worst, cell_max);
            worst_mean = std::max(worst_mean, sum / kSeeds);
            std::printf("%-7s %-9.1f %-12s %-12s\n", kPlates[p].name, kLiftOffs[l] * 1e3,
                        fmt("%.2f%%", 100 * sum / kSeeds).c_str(), fmt("%.2f%%", 100 * cell_max).c_str());
        }
    }
    verdict(8, worst < 0.05 && failed_runs == 0,
            "worst error over 180 noisy runs " + fmt("%.2f%%", 100 * worst) + " (limit 5%), worst cell mean " +
                fmt("%.2f%%", 100 * worst_mean) + ", " + std::to_string(failed_runs) + " runs raised, " +
                fmt("%.1f s", seconds_since(t0)));
}

void criterion_9() {
    const auto dense_grid = FrequencyGrid::log_spaced(310.0, 3e6, 10000);
    double worst = 0.0;
    std::string detail;
    for (const auto& plate : kPlates) {
        const double coarse = find_zero_crossing(synth(plate.props, kRefLiftOff)).frequency_hz();
        const double dense =
            find_zero_crossing(sweep(kProbe.with_lift_off(kRefLiftOff), plate.props, dense_grid)).frequency_hz();
        const double rel = std::abs(coarse - dense) / dense;
        worst = std::max(worst, rel);
        detail += std::string(detail.empty() ? "" : ", ") + plate.name + fmt(" %.2f Hz", coarse) +
                  fmt(" vs %.2f Hz", dense);
    }
    verdict(9, worst < 0.01, "worst deviation " + fmt("%.3f%%", 100 * worst) + " (limit 1%); " + detail);
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    std::printf("acceptance suite: reference probe, 120 log-spaced points 310 Hz - 3 MHz, %d quadrature nodes\n",
                QuadratureConfig{}.nodes);

    run_criterion(1, criteria_1_and_2);
    run_criterion(3, criterion_3);
    run_criterion(4, criterion_4);
    run_criterion(5, criterion_5);
    run_criterion(6, criterion_6);
    run_criterion(7, criterion_7);
    run_criterion(8, criterion_8);
    run_criterion(9, criterion_9);

    std::printf("\n%d criteria failed, total %.1f s\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}

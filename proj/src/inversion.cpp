#include "ferro/inversion.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ferro/errors.hpp"
#include "ferro/optimize.hpp"
#include "ferro/spectrum.hpp"

namespace ferro {
namespace {

constexpr int kScanProbes = 16;
constexpr double kMuTolerance = 0.1;

const SensorGeometry& checked_geometry(const InversionProblem& problem) {
    problem.validate();
    return problem.geometry;
}

}  // namespace

FitBand FitBand::default_for(const FrequencyGrid& grid) {
    if (grid.empty()) throw std::invalid_argument("fit band: empty grid");
    return {10.0 * grid.front(), grid.back() / 3.0};
}

void InversionProblem::validate() const {
    geometry.validate();
    if (!(conductivity > 0.0)) throw std::invalid_argument("inversion: conductivity must be positive");
    if (!(mu_bounds.lo >= 1.0) || !(mu_bounds.hi > mu_bounds.lo))
        throw std::invalid_argument("inversion: mu_bounds must satisfy 1 <= lo < hi");
    if (compensated_phase.grid.empty()) throw std::invalid_argument("inversion: empty phase spectrum");
    if (!(fit_band.f_hi > fit_band.f_lo)) throw std::invalid_argument("inversion: empty fit band");
    if (fit_band.f_lo < compensated_phase.grid.front() || fit_band.f_hi > compensated_phase.grid.back())
        throw std::invalid_argument("inversion: fit band outside the measured frequency range");
}

PhaseMisfit::PhaseMisfit(const InversionProblem& problem)
    : model_(checked_geometry(problem), problem.quadrature), conductivity_(problem.conductivity) {
    const auto& grid = problem.compensated_phase.grid;
    std::vector<double> hz;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= problem.fit_band.f_lo && grid[i] <= problem.fit_band.f_hi) {
            band_.push_back(i);
            hz.push_back(grid[i]);
            target_.push_back(problem.compensated_phase.theta_deg[i]);
        }
    }
    if (band_.empty()) throw std::invalid_argument("inversion: fit band contains no grid frequencies");
    band_grid_ = FrequencyGrid(std::move(hz));
}

double PhaseMisfit::operator()(double mu_r) const {
    const PlateProperties plate{conductivity_, mu_r, 1.0};
    const auto theta = phase_of(model_.sweep(plate, band_grid_));
    double ss = 0.0;
    for (std::size_t i = 0; i < target_.size(); ++i) {
        const double d = theta.theta_deg[i] - target_[i];
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(target_.size()));
}

double misfit(double mu_r, const InversionProblem& problem) {
    if (!(mu_r >= problem.mu_bounds.lo && mu_r <= problem.mu_bounds.hi))
        throw std::invalid_argument("misfit: mu_r outside mu_bounds");
    return PhaseMisfit(problem)(mu_r);
}

InversionResult invert_permeability(const InversionProblem& problem) {
    const PhaseMisfit objective(problem);
    const double lo = std::log(problem.mu_bounds.lo);
    const double hi = std::log(problem.mu_bounds.hi);

    std::array<double, kScanProbes> mu{};
    std::array<double, kScanProbes> f{};
    for (int i = 0; i < kScanProbes; ++i) mu[i] = std::exp(lo + (hi - lo) * i / (kScanProbes - 1));
    mu.front() = problem.mu_bounds.lo;
    mu.back() = problem.mu_bounds.hi;
    for (int i = 0; i < kScanProbes; ++i) f[i] = objective(mu[i]);

    int best = 0;
    for (int i = 1; i < kScanProbes; ++i)
        if (f[i] < f[best]) best = i;

    if (best == 0 || best == kScanProbes - 1) {
        std::ostringstream os;
        os << "inversion: misfit keeps decreasing towards the " << (best == 0 ? "lower" : "upper")
           << " bound mu_r=" << mu[best] << " (misfit " << f[best] << " deg); no interior minimum in ["
           << problem.mu_bounds.lo << ", " << problem.mu_bounds.hi << "]";
        throw InversionFailure(os.str());
    }

    InversionResult res;
    for (int i = 1; i + 1 < kScanProbes; ++i)
        if (f[i] < f[i - 1] && f[i] <= f[i + 1]) ++res.scan_minima;

    const auto g = golden_section_minimize(objective, mu[best - 1], mu[best + 1], kMuTolerance);
    res.mu_r = g.x;
    res.residual = g.fx;
    res.iterations = g.iterations;
    res.converged = g.converged;
    return res;
}

InversionResult invert_uncompensated(const PhaseSpectrum& raw_phase, const InversionProblem& problem) {
    InversionProblem p = problem;
    p.compensated_phase = raw_phase;
    return invert_permeability(p);
}

}  // namespace ferro

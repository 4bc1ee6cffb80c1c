#pragma once

#include <cstddef>
#include <vector>

#include "ferro/forward_model.hpp"
#include "ferro/types.hpp"

namespace ferro {

struct MuBounds {
    double lo = 1.0;
    double hi = 1000.0;
};

struct FitBand {
    double f_lo = 0.0;  // Hz, inclusive
    double f_hi = 0.0;

    /// [10 f_min, f_max / 3] of the given grid.
    static FitBand default_for(const FrequencyGrid& grid);
};

struct InversionProblem {
    PhaseSpectrum compensated_phase;
    SensorGeometry geometry;  // lift_off = reference lift-off
    double conductivity = 0.0;
    MuBounds mu_bounds;
    FitBand fit_band;
    QuadratureConfig quadrature;

    void validate() const;
};

struct InversionResult {
    double mu_r = 0.0;
    double residual = 0.0;  // RMS phase misfit, degrees
    int iterations = 0;     // golden-section iterations
    bool converged = false;
    // Interior local minima seen by the coarse scan; more than one means the
    // objective is not unimodal over the bounds and the global one was used.
    int scan_minima = 0;
};

/// RMS phase misfit over the fit band, reusing one tabulated forward model
/// for every permeability probe.
class PhaseMisfit {
public:
    explicit PhaseMisfit(const InversionProblem& problem);

    double operator()(double mu_r) const;

    std::size_t band_size() const noexcept { return band_.size(); }
    const FrequencyGrid& band_grid() const noexcept { return band_grid_; }

private:
    ForwardModel model_;
    double conductivity_;
    FrequencyGrid band_grid_;
    std::vector<std::size_t> band_;
    std::vector<double> target_;
};

/// Forward sweep at (geometry, sigma, mu_r) over the fit band, RMS phase
/// difference in degrees against problem.compensated_phase.
double misfit(double mu_r, const InversionProblem& problem);

/// Coarse scan with 16 log-spaced probes over mu_bounds, then golden-section
/// on the bracket around the best probe until it is narrower than 0.1.
/// Throws InversionFailure when the best probe lies on a bound.
InversionResult invert_permeability(const InversionProblem& problem);

/// Same machinery fed with the raw, uncompensated phase.
InversionResult invert_uncompensated(const PhaseSpectrum& raw_phase, const InversionProblem& problem);

}  // namespace ferro

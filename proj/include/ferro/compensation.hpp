#pragma once

#include "ferro/spectrum.hpp"
#include "ferro/types.hpp"

namespace ferro {

/// High-frequency magnitude comparison between a spectrum at unknown
/// lift-off and the minimal-lift-off reference sweep.
struct MagnitudeRatio {
    double delta_l0 = 0.0;  // |dL| of the spectrum at the highest grid frequency, H
    double delta_lm = 0.0;  // |dL| of the reference at the same frequency, H
    double ln_ratio = 0.0;  // ln(delta_l0 / delta_lm)
};

struct CompensationFeatures {
    double omega1 = 0.0;  // measured ZCF, rad/s
    double delta_l0 = 0.0;
    double delta_lm = 0.0;
    double ln_ratio = 0.0;
    double omega0 = 0.0;  // compensated ZCF, rad/s
};

/// Which algebraic form of the phase correction to evaluate. Both are
/// mathematically identical: G(c w; w1) == G(w; w1 / c).
enum class CorrectionForm {
    ScaledArgument,  // theta_r - G(w; w1) + G(c w; w1), c = 1 + 4 ln_ratio / pi^2
    CompensatedZcf,  // theta_r - G(w; w1) + G(w; w0)
};

/// Throws GridMismatch if the grids differ and UndefinedPhase if either
/// magnitude at the highest frequency is zero.
MagnitudeRatio magnitude_ratio(const InductanceSpectrum& spec, const InductanceSpectrum& reference);

/// w0 = pi^2 w1 / (pi^2 + 4 ln_ratio). Throws CompensationOutOfRange when
/// pi^2 + 4 ln_ratio <= 0.
double compensate_zcf(double omega1, double ln_ratio);

/// Continuous-branch arctangent of sqrt(2 wz / w) / (1 - wz / w), degrees.
/// Falls from 180 (w -> 0) through 90 (w = wz) to 0 (w -> inf).
double g_function(double omega, double omega_z);

/// Pointwise theta_r - G(w; w1) + G(c w; w1). The correction is formed
/// before it is added to theta_r so that ln_ratio = 0 returns theta_r
/// bit-for-bit.
PhaseSpectrum compensate_phase(const PhaseSpectrum& theta_r, double omega1, double ln_ratio,
                               CorrectionForm form = CorrectionForm::ScaledArgument);

/// Zero crossing of `spec` plus its magnitude ratio against `reference`.
CompensationFeatures extract_features(const InductanceSpectrum& spec, const InductanceSpectrum& reference);

/// First-order lift-off estimate (pi^2 - sqrt(pi^4 + 4 pi^2 ln_ratio)) / (4 a0),
/// the small root of the quadratic in a0 l0. Diagnostic only.
double estimate_liftoff(double ln_ratio, double alpha0);

}  // namespace ferro

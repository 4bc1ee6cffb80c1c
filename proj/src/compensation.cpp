#include "ferro/compensation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ferro/constants.hpp"
#include "ferro/errors.hpp"

namespace ferro {
namespace {

constexpr double kPi2 = pi * pi;

// 1 + 4 ln_ratio / pi^2, the frequency scale factor of the correction term.
double scale_factor(double ln_ratio) {
    const double window = kPi2 + 4.0 * ln_ratio;
    if (!(window > 0.0)) {
        std::ostringstream os;
        os << "compensation out of range: pi^2 + 4 ln(dL0/dLm) = " << window << " <= 0 (ln_ratio " << ln_ratio
           << "); lift-off too large for the small-angle correction";
        throw CompensationOutOfRange(os.str());
    }
    return 1.0 + 4.0 * ln_ratio / kPi2;
}

}  // namespace

MagnitudeRatio magnitude_ratio(const InductanceSpectrum& spec, const InductanceSpectrum& reference) {
    if (spec.values.empty()) throw std::invalid_argument("magnitude_ratio: empty spectrum");
    if (!(spec.grid == reference.grid)) throw GridMismatch("magnitude_ratio: spectrum and reference grids differ");
    MagnitudeRatio r;
    r.delta_l0 = std::abs(spec.values.back());
    r.delta_lm = std::abs(reference.values.back());
    if (r.delta_l0 == 0.0 || r.delta_lm == 0.0)
        throw UndefinedPhase("magnitude_ratio: zero inductance magnitude at the highest grid frequency");
    r.ln_ratio = std::log(r.delta_l0 / r.delta_lm);
    return r;
}

double compensate_zcf(double omega1, double ln_ratio) {
    // Same value as pi^2 w1 / (pi^2 + 4 ln_ratio); this form returns w1
    // exactly when ln_ratio is zero.
    return omega1 / scale_factor(ln_ratio);
}

double g_function(double omega, double omega_z) {
    if (!(omega > 0.0) || !(omega_z > 0.0)) throw std::invalid_argument("g_function: frequencies must be positive");
    const double u = omega_z / omega;
    return std::atan2(std::sqrt(2.0 * u), 1.0 - u) * (180.0 / pi);
}

PhaseSpectrum compensate_phase(const PhaseSpectrum& theta_r, double omega1, double ln_ratio, CorrectionForm form) {
    if (!(omega1 > 0.0)) throw std::invalid_argument("compensate_phase: omega1 must be positive");
    const double c = scale_factor(ln_ratio);
    const double omega0 = compensate_zcf(omega1, ln_ratio);
    std::vector<double> out(theta_r.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double w = theta_r.grid.angular(i);
        const double corrected = form == CorrectionForm::ScaledArgument ? g_function(c * w, omega1)
                                                                        : g_function(w, omega0);
        const double delta = corrected - g_function(w, omega1);
        out[i] = theta_r.theta_deg[i] + delta;
    }
    return PhaseSpectrum(theta_r.grid, std::move(out));
}

CompensationFeatures extract_features(const InductanceSpectrum& spec, const InductanceSpectrum& reference) {
    const auto zc = find_zero_crossing(spec);
    const auto ratio = magnitude_ratio(spec, reference);
    CompensationFeatures f;
    f.omega1 = zc.omega1;
    f.delta_l0 = ratio.delta_l0;
    f.delta_lm = ratio.delta_lm;
    f.ln_ratio = ratio.ln_ratio;
    f.omega0 = compensate_zcf(zc.omega1, ratio.ln_ratio);
    return f;
}

double estimate_liftoff(double ln_ratio, double alpha0) {
    if (!(alpha0 > 0.0)) throw std::invalid_argument("estimate_liftoff: alpha0 must be positive");
    const double disc = kPi2 * kPi2 + 4.0 * kPi2 * ln_ratio;
    if (disc < 0.0) {
        std::ostringstream os;
        os << "estimate_liftoff: negative discriminant " << disc << " for ln_ratio " << ln_ratio;
        throw CompensationOutOfRange(os.str());
    }
    return (kPi2 - std::sqrt(disc)) / (4.0 * alpha0);
}

}  // namespace ferro

#pragma once

#include <cstddef>

#include "ferro/types.hpp"

namespace ferro {

/// Raw mutual-impedance sweeps with and without the specimen, ohms.
struct ImpedanceSweep {
    FrequencyGrid grid;
    std::vector<Complex> z_sample;
    std::vector<Complex> z_air;

    ImpedanceSweep(FrequencyGrid g, std::vector<Complex> sample, std::vector<Complex> air);
};

struct ZeroCrossing {
    double omega1 = 0.0;         // rad/s
    double f_lo = 0.0;           // bracketing grid frequencies, Hz
    double f_hi = 0.0;
    std::size_t index = 0;       // grid index of f_lo
    std::size_t sign_changes = 0;

    double frequency_hz() const;
};

/// dL = (Z - Z_air) / (j w).
InductanceSpectrum to_inductance(const ImpedanceSweep& sweep);

/// Inverse of to_inductance for a given air reference.
std::vector<Complex> to_impedance(const InductanceSpectrum& spec, const std::vector<Complex>& z_air);

/// Phase of -dL in degrees via a two-argument arctangent. This is the
/// continuous convention: 180 at the low-frequency ferrous limit, exactly 90
/// where Re(dL) = 0 and decreasing towards 0. The principal-branch form
/// atan(-Re/Im) differs from it by a constant 90 degrees.
///
/// Throws UndefinedPhase when a sample has zero magnitude.
PhaseSpectrum phase_of(const InductanceSpectrum& spec);

/// atan(-Re dL / Im dL) on the principal branch, degrees in (-90, 90].
/// Provided for cross-checking against the continuous convention.
PhaseSpectrum principal_phase(const InductanceSpectrum& spec);

/// First sign change of Re(dL) scanning upward in frequency, located by
/// linear interpolation in (log f, Re dL). Throws FeatureAbsent when Re(dL)
/// keeps one sign over the whole grid.
ZeroCrossing find_zero_crossing(const InductanceSpectrum& spec);

/// Median-of-3 filter applied separately to Re and Im; end points are kept.
InductanceSpectrum despike(const InductanceSpectrum& spec);

}  // namespace ferro

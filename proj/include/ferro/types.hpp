#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ferro {

using Complex = std::complex<double>;

/// Two coaxial air-cored coils of identical cross-section (transmitter and
/// receiver) above a plate. All lengths in meters.
struct SensorGeometry {
    double r1 = 0.0;      // inner coil radius
    double r2 = 0.0;      // outer coil radius
    double h = 0.0;       // coil height
    double gap = 0.0;     // axial transmit/receive gap
    int n_turns = 1;      // turns per coil
    double lift_off = 0.0;

    /// Throws std::invalid_argument unless 0 < r1 < r2, h > 0, gap >= 0,
    /// lift_off >= 0 and n_turns >= 1.
    void validate() const;

    SensorGeometry with_lift_off(double l0) const;

    /// 32/34 mm diameters, 10.5 mm height, 15.5 mm gap, 30 turns, 0.8 mm lift-off.
    static SensorGeometry reference_probe();
};

struct PlateProperties {
    double conductivity = 0.0;          // S/m
    double relative_permeability = 1.0;
    double thickness = 0.0;             // m, recorded only

    void validate() const;

    static PlateProperties dp600();
    static PlateProperties dp800();
    static PlateProperties dp1000();
};

/// Strictly increasing list of positive frequencies in hertz.
class FrequencyGrid {
public:
    FrequencyGrid() = default;
    explicit FrequencyGrid(std::vector<double> hz);

    /// `count` points logarithmically spaced from f_min to f_max inclusive.
    /// A single-point grid holds f_min.
    static FrequencyGrid log_spaced(double f_min, double f_max, std::size_t count);

    std::size_t size() const noexcept { return hz_.size(); }
    bool empty() const noexcept { return hz_.empty(); }
    double operator[](std::size_t i) const { return hz_[i]; }
    double front() const { return hz_.front(); }
    double back() const { return hz_.back(); }
    std::span<const double> hz() const noexcept { return hz_; }

    double angular(std::size_t i) const;
    std::vector<double> angular() const;

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;

private:
    std::vector<double> hz_;
};

/// Complex sample-induced inductance change per frequency, henries.
struct InductanceSpectrum {
    FrequencyGrid grid;
    std::vector<Complex> values;

    InductanceSpectrum() = default;
    InductanceSpectrum(FrequencyGrid g, std::vector<Complex> v);
    std::size_t size() const noexcept { return values.size(); }
};

/// Phase in degrees per frequency. For ferrous plates values lie in
/// (0, 180): 180 at the low-frequency limit, 90 at the zero crossing of
/// Re(dL) and falling towards 0 at high frequency.
struct PhaseSpectrum {
    FrequencyGrid grid;
    std::vector<double> theta_deg;

    PhaseSpectrum() = default;
    PhaseSpectrum(FrequencyGrid g, std::vector<double> theta);
    std::size_t size() const noexcept { return theta_deg.size(); }
};

}  // namespace ferro

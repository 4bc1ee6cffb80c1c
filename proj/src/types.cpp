#include "ferro/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ferro/constants.hpp"

namespace ferro {

void SensorGeometry::validate() const {
    if (!(r1 > 0.0) || !(r2 > r1))
        throw std::invalid_argument("sensor geometry: require 0 < r1 < r2");
    if (!(h > 0.0)) throw std::invalid_argument("sensor geometry: coil height must be positive");
    if (!(gap >= 0.0)) throw std::invalid_argument("sensor geometry: gap must be non-negative");
    if (!(lift_off >= 0.0)) throw std::invalid_argument("sensor geometry: lift-off must be non-negative");
    if (n_turns < 1) throw std::invalid_argument("sensor geometry: n_turns must be >= 1");
}

SensorGeometry SensorGeometry::with_lift_off(double l0) const {
    SensorGeometry g = *this;
    g.lift_off = l0;
    return g;
}

SensorGeometry SensorGeometry::reference_probe() {
    return SensorGeometry{16.0e-3, 17.0e-3, 10.5e-3, 15.5e-3, 30, 0.8e-3};
}

void PlateProperties::validate() const {
    if (!(conductivity > 0.0)) throw std::invalid_argument("plate: conductivity must be positive");
    if (!(relative_permeability >= 1.0))
        throw std::invalid_argument("plate: relative permeability must be >= 1");
    if (!(thickness > 0.0)) throw std::invalid_argument("plate: thickness must be positive");
}

PlateProperties PlateProperties::dp600() { return {4.13e6, 222.0, 7.0e-3}; }
PlateProperties PlateProperties::dp800() { return {3.81e6, 144.0, 7.0e-3}; }
PlateProperties PlateProperties::dp1000() { return {3.80e6, 122.0, 7.0e-3}; }

FrequencyGrid::FrequencyGrid(std::vector<double> hz) : hz_(std::move(hz)) {
    for (std::size_t i = 0; i < hz_.size(); ++i) {
        if (!(hz_[i] > 0.0) || !std::isfinite(hz_[i]))
            throw std::invalid_argument("frequency grid: entry " + std::to_string(i) + " is not a positive finite value");
        if (i > 0 && !(hz_[i] > hz_[i - 1]))
            throw std::invalid_argument("frequency grid: not strictly increasing at index " + std::to_string(i));
    }
}

FrequencyGrid FrequencyGrid::log_spaced(double f_min, double f_max, std::size_t count) {
    if (count == 0) throw std::invalid_argument("frequency grid: count must be >= 1");
    if (!(f_min > 0.0)) throw std::invalid_argument("frequency grid: f_min must be positive");
    if (count == 1) return FrequencyGrid({f_min});
    if (!(f_max > f_min)) throw std::invalid_argument("frequency grid: f_max must exceed f_min");
    std::vector<double> hz(count);
    const double lo = std::log(f_min);
    const double step = (std::log(f_max) - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) hz[i] = std::exp(lo + step * static_cast<double>(i));
    hz.front() = f_min;
    hz.back() = f_max;
    return FrequencyGrid(std::move(hz));
}

double FrequencyGrid::angular(std::size_t i) const { return 2.0 * pi * hz_.at(i); }

std::vector<double> FrequencyGrid::angular() const {
    std::vector<double> w(hz_.size());
    for (std::size_t i = 0; i < hz_.size(); ++i) w[i] = 2.0 * pi * hz_[i];
    return w;
}

InductanceSpectrum::InductanceSpectrum(FrequencyGrid g, std::vector<Complex> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("inductance spectrum: value count does not match grid length");
}

PhaseSpectrum::PhaseSpectrum(FrequencyGrid g, std::vector<double> theta)
    : grid(std::move(g)), theta_deg(std::move(theta)) {
    if (theta_deg.size() != grid.size())
        throw std::invalid_argument("phase spectrum: value count does not match grid length");
}

}  // namespace ferro

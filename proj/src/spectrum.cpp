#include "ferro/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ferro/constants.hpp"
#include "ferro/errors.hpp"

namespace ferro {
namespace {

constexpr double kRadToDeg = 180.0 / pi;

double median3(double a, double b, double c) { return std::max(std::min(a, b), std::min(std::max(a, b), c)); }

}  // namespace

ImpedanceSweep::ImpedanceSweep(FrequencyGrid g, std::vector<Complex> sample, std::vector<Complex> air)
    : grid(std::move(g)), z_sample(std::move(sample)), z_air(std::move(air)) {
    if (z_sample.size() != grid.size() || z_air.size() != grid.size())
        throw std::invalid_argument("impedance sweep: sample/air lengths must match the grid");
}

double ZeroCrossing::frequency_hz() const { return omega1 / (2.0 * pi); }

InductanceSpectrum to_inductance(const ImpedanceSweep& sweep) {
    std::vector<Complex> dl(sweep.grid.size());
    for (std::size_t i = 0; i < dl.size(); ++i)
        dl[i] = (sweep.z_sample[i] - sweep.z_air[i]) / Complex(0.0, sweep.grid.angular(i));
    return InductanceSpectrum(sweep.grid, std::move(dl));
}

std::vector<Complex> to_impedance(const InductanceSpectrum& spec, const std::vector<Complex>& z_air) {
    if (z_air.size() != spec.size()) throw std::invalid_argument("to_impedance: air sweep length mismatch");
    std::vector<Complex> z(spec.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = z_air[i] + Complex(0.0, spec.grid.angular(i)) * spec.values[i];
    return z;
}

PhaseSpectrum phase_of(const InductanceSpectrum& spec) {
    if (spec.values.empty()) throw std::invalid_argument("phase_of: empty spectrum");
    std::vector<double> theta(spec.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const Complex v = spec.values[i];
        if (v == Complex(0.0, 0.0)) {
            std::ostringstream os;
            os << "phase_of: zero inductance at " << spec.grid[i] << " Hz, phase undefined";
            throw UndefinedPhase(os.str());
        }
        theta[i] = std::atan2(-v.imag(), -v.real()) * kRadToDeg;
    }
    return PhaseSpectrum(spec.grid, std::move(theta));
}

PhaseSpectrum principal_phase(const InductanceSpectrum& spec) {
    std::vector<double> theta(spec.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const Complex v = spec.values[i];
        theta[i] = v.imag() == 0.0 ? 90.0 : std::atan(-v.real() / v.imag()) * kRadToDeg;
    }
    return PhaseSpectrum(spec.grid, std::move(theta));
}

ZeroCrossing find_zero_crossing(const InductanceSpectrum& spec) {
    const auto& v = spec.values;
    ZeroCrossing zc;
    bool found = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double a = v[i].real();
        const double b = v[i + 1].real();
        const bool change = (a > 0.0 && b <= 0.0) || (a < 0.0 && b >= 0.0);
        if (!change) continue;
        ++zc.sign_changes;
        if (found) continue;
        found = true;
        const double la = std::log(spec.grid[i]);
        const double lb = std::log(spec.grid[i + 1]);
        const double t = a / (a - b);
        zc.omega1 = 2.0 * pi * std::exp(la + t * (lb - la));
        zc.f_lo = spec.grid[i];
        zc.f_hi = spec.grid[i + 1];
        zc.index = i;
    }
    if (!found) {
        std::ostringstream os;
        os << "find_zero_crossing: Re(dL) does not change sign between " << (v.empty() ? 0.0 : spec.grid.front())
           << " Hz and " << (v.empty() ? 0.0 : spec.grid.back()) << " Hz; widen the frequency range";
        throw FeatureAbsent(os.str());
    }
    return zc;
}

InductanceSpectrum despike(const InductanceSpectrum& spec) {
    std::vector<Complex> out = spec.values;
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        const auto& a = spec.values[i - 1];
        const auto& b = spec.values[i];
        const auto& c = spec.values[i + 1];
        out[i] = Complex(median3(a.real(), b.real(), c.real()), median3(a.imag(), b.imag(), c.imag()));
    }
    return InductanceSpectrum(spec.grid, std::move(out));
}

}  // namespace ferro

#include "ferro/cli/synth.hpp"

#include <random>

namespace ferro::cli {

InductanceSpectrum add_relative_noise(const InductanceSpectrum& spec, double relative_sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> out(spec.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double s = relative_sigma * std::abs(spec.values[i]);
        const double re = unit(rng);
        const double im = unit(rng);
        out[i] = spec.values[i] + Complex(s * re, s * im);
    }
    return InductanceSpectrum(spec.grid, std::move(out));
}

}  // namespace ferro::cli

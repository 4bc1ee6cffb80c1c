#pragma once

#include <cstdint>

#include "ferro/types.hpp"

namespace ferro::cli {

/// Adds independent zero-mean Gaussian noise to Re and Im of every sample,
/// with standard deviation relative_sigma * |dL| at that frequency.
/// Deterministic for a given seed.
InductanceSpectrum add_relative_noise(const InductanceSpectrum& spec, double relative_sigma, std::uint64_t seed);

}  // namespace ferro::cli

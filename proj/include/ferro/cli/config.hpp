#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "ferro/errors.hpp"
#include "ferro/forward_model.hpp"
#include "ferro/inversion.hpp"
#include "ferro/types.hpp"

namespace ferro::cli {

// Missing or invalid configuration. Exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct GridConfig {
    double f_min = 310.0;
    double f_max = 3.0e6;
    std::size_t count = 120;

    FrequencyGrid build() const { return FrequencyGrid::log_spaced(f_min, f_max, count); }
};

struct NoiseConfig {
    double relative_sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Run configuration in SI units. Files use millimetres for lengths and MS/m
/// for conductivity; load_config converts exactly once and sets
/// units_normalized.
struct RunConfig {
    SensorGeometry geometry = SensorGeometry::reference_probe();
    PlateProperties plate = PlateProperties::dp600();
    bool plate_given = false;
    bool mu_known = true;  // false when the plate block omits relative_permeability
    GridConfig grid;
    QuadratureConfig quadrature;
    std::optional<std::filesystem::path> reference_path;
    double reference_lift_off = 0.8e-3;
    MuBounds mu_bounds{1.0, 1000.0};
    std::optional<FitBand> fit_band;
    std::optional<NoiseConfig> noise;
    bool units_normalized = false;

    FitBand fit_band_for(const FrequencyGrid& grid) const {
        return fit_band ? *fit_band : FitBand::default_for(grid);
    }
};

/// Parses a configuration document. Relative file references resolve
/// against `base_dir`. Every block is optional; a block that is present must
/// carry all of its required keys.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);

RunConfig load_config(const std::filesystem::path& path);

/// Defaults from the reference probe and DP600, units normalised.
RunConfig default_config();

/// FERRO_QUAD_NODES overrides the quadrature node budget, rounded up to a
/// multiple of 16 (minimum 32).
void apply_env_overrides(RunConfig& cfg);

}  // namespace ferro::cli

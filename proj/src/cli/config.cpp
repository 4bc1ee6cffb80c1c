#include "ferro/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

namespace ferro::cli {
namespace {

using nlohmann::json;

constexpr double kMm = 1e-3;
constexpr double kMegaSiemens = 1e6;

class Block {
public:
    Block(const json& doc, std::string name, std::set<std::string> required, std::set<std::string> optional = {})
        : name_(std::move(name)) {
        if (!doc.is_object()) throw ConfigError("config: block '" + name_ + "' must be an object");
        obj_ = &doc;
        for (const auto& key : required)
            if (!doc.contains(key)) throw ConfigError("config: missing key " + name_ + "." + key);
        for (const auto& [key, _] : doc.items())
            if (!required.count(key) && !optional.count(key))
                throw ConfigError("config: unknown key " + name_ + "." + key);
    }

    bool has(const std::string& key) const { return obj_->contains(key); }

    double number(const std::string& key) const {
        const auto& v = obj_->at(key);
        if (!v.is_number()) throw ConfigError("config: " + name_ + "." + key + " must be a number");
        return v.get<double>();
    }

    std::int64_t integer(const std::string& key) const {
        const auto& v = obj_->at(key);
        if (!v.is_number_integer()) throw ConfigError("config: " + name_ + "." + key + " must be an integer");
        return v.get<std::int64_t>();
    }

    std::string string(const std::string& key) const {
        const auto& v = obj_->at(key);
        if (!v.is_string()) throw ConfigError("config: " + name_ + "." + key + " must be a string");
        return v.get<std::string>();
    }

    std::pair<double, double> pair(const std::string& key) const {
        const auto& v = obj_->at(key);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ConfigError("config: " + name_ + "." + key + " must be a two-number array");
        return {v[0].get<double>(), v[1].get<double>()};
    }

private:
    std::string name_;
    const json* obj_ = nullptr;
};

template <typename F>
void checked(const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("config: invalid " + what + ": " + e.what());
    }
}

}  // namespace

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    static const std::set<std::string> blocks{"geometry",     "plate",     "grid", "quadrature",
                                              "compensation", "inversion", "noise"};
    for (const auto& [key, _] : doc.items())
        if (!blocks.count(key)) throw ConfigError("config: unknown block " + key);

    RunConfig cfg;

    if (doc.contains("geometry")) {
        Block b(doc["geometry"], "geometry", {"r1_mm", "r2_mm", "h_mm", "gap_mm", "n_turns", "lift_off_mm"});
        cfg.geometry.r1 = b.number("r1_mm") * kMm;
        cfg.geometry.r2 = b.number("r2_mm") * kMm;
        cfg.geometry.h = b.number("h_mm") * kMm;
        cfg.geometry.gap = b.number("gap_mm") * kMm;
        cfg.geometry.n_turns = static_cast<int>(b.integer("n_turns"));
        cfg.geometry.lift_off = b.number("lift_off_mm") * kMm;
    }
    checked("geometry", [&] { cfg.geometry.validate(); });

    if (doc.contains("plate")) {
        Block b(doc["plate"], "plate", {"conductivity_ms_m", "thickness_mm"}, {"relative_permeability"});
        cfg.plate_given = true;
        cfg.plate.conductivity = b.number("conductivity_ms_m") * kMegaSiemens;
        cfg.plate.thickness = b.number("thickness_mm") * kMm;
        cfg.mu_known = b.has("relative_permeability");
        cfg.plate.relative_permeability = cfg.mu_known ? b.number("relative_permeability") : 1.0;
    }
    checked("plate", [&] { cfg.plate.validate(); });

    if (doc.contains("grid")) {
        Block b(doc["grid"], "grid", {"f_min_hz", "f_max_hz", "count"}, {"spacing"});
        if (b.has("spacing") && b.string("spacing") != "log")
            throw ConfigError("config: grid.spacing must be \"log\"");
        cfg.grid.f_min = b.number("f_min_hz");
        cfg.grid.f_max = b.number("f_max_hz");
        const auto count = b.integer("count");
        if (count < 1) throw ConfigError("config: grid.count must be >= 1");
        cfg.grid.count = static_cast<std::size_t>(count);
    }
    checked("grid", [&] { (void)cfg.grid.build(); });

    if (doc.contains("quadrature")) {
        Block b(doc["quadrature"], "quadrature", {"nodes", "alpha_max_scale"});
        cfg.quadrature.nodes = static_cast<int>(b.integer("nodes"));
        cfg.quadrature.alpha_max_scale = b.number("alpha_max_scale");
    }
    checked("quadrature", [&] { cfg.quadrature.validate(); });

    if (doc.contains("compensation")) {
        Block b(doc["compensation"], "compensation", {"reference"}, {"reference_lift_off_mm"});
        std::filesystem::path ref = b.string("reference");
        if (ref.is_relative()) ref = base_dir / ref;
        if (!std::filesystem::exists(ref))
            throw ConfigError("config: compensation.reference file does not exist: " + ref.string());
        cfg.reference_path = ref;
        if (b.has("reference_lift_off_mm")) cfg.reference_lift_off = b.number("reference_lift_off_mm") * kMm;
        if (!(cfg.reference_lift_off >= 0.0))
            throw ConfigError("config: compensation.reference_lift_off_mm must be non-negative");
    }

    if (doc.contains("inversion")) {
        Block b(doc["inversion"], "inversion", {"mu_bounds"}, {"fit_band_hz"});
        const auto [lo, hi] = b.pair("mu_bounds");
        if (!(lo >= 1.0) || !(hi > lo)) throw ConfigError("config: inversion.mu_bounds must satisfy 1 <= lo < hi");
        cfg.mu_bounds = {lo, hi};
        if (b.has("fit_band_hz")) {
            const auto [f_lo, f_hi] = b.pair("fit_band_hz");
            if (!(f_hi > f_lo)) throw ConfigError("config: inversion.fit_band_hz is empty");
            cfg.fit_band = FitBand{f_lo, f_hi};
        }
    }

    if (doc.contains("noise")) {
        Block b(doc["noise"], "noise", {"relative_sigma", "seed"});
        NoiseConfig n;
        n.relative_sigma = b.number("relative_sigma");
        const auto seed = b.integer("seed");
        if (!(n.relative_sigma >= 0.0)) throw ConfigError("config: noise.relative_sigma must be non-negative");
        if (seed < 0) throw ConfigError("config: noise.seed must be non-negative");
        n.seed = static_cast<std::uint64_t>(seed);
        cfg.noise = n;
    }

    cfg.units_normalized = true;
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    auto cfg = parse_config(doc, path.parent_path());
    apply_env_overrides(cfg);
    return cfg;
}

RunConfig default_config() {
    RunConfig cfg;
    cfg.units_normalized = true;
    apply_env_overrides(cfg);
    return cfg;
}

void apply_env_overrides(RunConfig& cfg) {
    const char* env = std::getenv("FERRO_QUAD_NODES");
    if (!env || !*env) return;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n <= 0) throw ConfigError(std::string("FERRO_QUAD_NODES: not a positive integer: ") + env);
    const int order = QuadratureConfig::kGaussOrder;
    cfg.quadrature.nodes = std::max(2 * order, static_cast<int>((n + order - 1) / order) * order);
}

}  // namespace ferro::cli

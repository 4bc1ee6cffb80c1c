#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ferro/errors.hpp"
#include "ferro/types.hpp"

namespace ferro::cli {

// Unreadable or malformed input file, or inconsistent inputs. Exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

enum class CsvKind { Impedance, Inductance, Phase };

inline constexpr const char* kImpedanceHeader = "frequency_hz,re_ohm,im_ohm";
inline constexpr const char* kInductanceHeader = "frequency_hz,re_h,im_h";
inline constexpr const char* kPhaseHeader = "frequency_hz,theta_deg";

struct ComplexColumns {
    CsvKind kind = CsvKind::Inductance;
    FrequencyGrid grid;
    std::vector<Complex> values;
};

/// Reads an impedance or inductance file, telling them apart by header.
ComplexColumns read_complex_csv(const std::filesystem::path& path);

InductanceSpectrum read_inductance_csv(const std::filesystem::path& path);
ComplexColumns read_impedance_csv(const std::filesystem::path& path);
PhaseSpectrum read_phase_csv(const std::filesystem::path& path);

void write_impedance_csv(const std::filesystem::path& path, const FrequencyGrid& grid,
                         const std::vector<Complex>& z);
void write_inductance_csv(const std::filesystem::path& path, const InductanceSpectrum& spec);
void write_phase_csv(const std::filesystem::path& path, const PhaseSpectrum& phase);

/// Frequency, Re/Im of dL, raw and compensated phase in one table.
void write_plot_csv(const std::filesystem::path& path, const InductanceSpectrum& spec, const PhaseSpectrum& raw,
                    const PhaseSpectrum& compensated);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

}  // namespace ferro::cli

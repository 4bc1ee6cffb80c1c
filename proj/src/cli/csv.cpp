#include "ferro/cli/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ferro::cli {
namespace {

struct Rows {
    std::string header;
    std::vector<std::vector<double>> rows;
};

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
    std::ostringstream os;
    os << path.string() << ":" << line << ": " << msg;
    throw InputError(os.str());
}

double parse_number(const std::string& s, const std::filesystem::path& path, std::size_t line) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || s.empty()) fail(path, line, "not a number: '" + s + "'");
    return v;
}

Rows read_rows(const std::filesystem::path& path, std::size_t columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    Rows out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            out.header = line;
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            row.push_back(parse_number(line.substr(start, comma - start), path, lineno));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (row.size() != columns)
            fail(path, lineno, "expected " + std::to_string(columns) + " columns, found " + std::to_string(row.size()));
        out.rows.push_back(std::move(row));
    }
    if (lineno == 0) throw InputError(path.string() + ": empty file, header row is mandatory");
    if (out.rows.empty()) fail(path, 2, "no data rows");
    return out;
}

FrequencyGrid grid_from(const Rows& rows, const std::filesystem::path& path) {
    std::vector<double> hz;
    hz.reserve(rows.rows.size());
    for (std::size_t i = 0; i < rows.rows.size(); ++i) {
        const double f = rows.rows[i][0];
        if (!(f > 0.0)) fail(path, i + 2, "frequency must be positive");
        if (!hz.empty() && !(f > hz.back())) fail(path, i + 2, "frequencies must be strictly increasing");
        hz.push_back(f);
    }
    return FrequencyGrid(std::move(hz));
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(path.string() + ": cannot open for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ComplexColumns read_complex_csv(const std::filesystem::path& path) {
    auto rows = read_rows(path, 3);
    ComplexColumns out;
    if (rows.header == kImpedanceHeader) {
        out.kind = CsvKind::Impedance;
    } else if (rows.header == kInductanceHeader) {
        out.kind = CsvKind::Inductance;
    } else {
        fail(path, 1, "unrecognised header '" + rows.header + "' (expected '" + kImpedanceHeader + "' or '" +
                          kInductanceHeader + "')");
    }
    out.grid = grid_from(rows, path);
    out.values.reserve(rows.rows.size());
    for (const auto& r : rows.rows) out.values.emplace_back(r[1], r[2]);
    return out;
}

InductanceSpectrum read_inductance_csv(const std::filesystem::path& path) {
    auto c = read_complex_csv(path);
    if (c.kind != CsvKind::Inductance)
        fail(path, 1, std::string("expected an inductance file with header '") + kInductanceHeader + "'");
    return InductanceSpectrum(std::move(c.grid), std::move(c.values));
}

ComplexColumns read_impedance_csv(const std::filesystem::path& path) {
    auto c = read_complex_csv(path);
    if (c.kind != CsvKind::Impedance)
        fail(path, 1, std::string("expected an impedance file with header '") + kImpedanceHeader + "'");
    return c;
}

PhaseSpectrum read_phase_csv(const std::filesystem::path& path) {
    auto rows = read_rows(path, 2);
    if (rows.header != kPhaseHeader)
        fail(path, 1, "unrecognised header '" + rows.header + "' (expected '" + kPhaseHeader + "')");
    auto grid = grid_from(rows, path);
    std::vector<double> theta;
    for (const auto& r : rows.rows) theta.push_back(r[1]);
    return PhaseSpectrum(std::move(grid), std::move(theta));
}

void write_impedance_csv(const std::filesystem::path& path, const FrequencyGrid& grid,
                         const std::vector<Complex>& z) {
    auto out = open_out(path);
    out << kImpedanceHeader << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << format_double(grid[i]) << ',' << format_double(z[i].real()) << ',' << format_double(z[i].imag())
            << '\n';
}

void write_inductance_csv(const std::filesystem::path& path, const InductanceSpectrum& spec) {
    auto out = open_out(path);
    out << kInductanceHeader << '\n';
    for (std::size_t i = 0; i < spec.size(); ++i)
        out << format_double(spec.grid[i]) << ',' << format_double(spec.values[i].real()) << ','
            << format_double(spec.values[i].imag()) << '\n';
}

void write_phase_csv(const std::filesystem::path& path, const PhaseSpectrum& phase) {
    auto out = open_out(path);
    out << kPhaseHeader << '\n';
    for (std::size_t i = 0; i < phase.size(); ++i)
        out << format_double(phase.grid[i]) << ',' << format_double(phase.theta_deg[i]) << '\n';
}

void write_plot_csv(const std::filesystem::path& path, const InductanceSpectrum& spec, const PhaseSpectrum& raw,
                    const PhaseSpectrum& compensated) {
    auto out = open_out(path);
    out << "frequency_hz,re_h,im_h,theta_raw_deg,theta_comp_deg\n";
    for (std::size_t i = 0; i < spec.size(); ++i)
        out << format_double(spec.grid[i]) << ',' << format_double(spec.values[i].real()) << ','
            << format_double(spec.values[i].imag()) << ',' << format_double(raw.theta_deg[i]) << ','
            << format_double(compensated.theta_deg[i]) << '\n';
}

}  // namespace ferro::cli

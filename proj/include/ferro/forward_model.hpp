#pragma once

#include <vector>

#include "ferro/types.hpp"

namespace ferro {

/// Discretisation of the improper spatial-frequency integral. The range is
/// truncated at alpha_max = alpha_max_scale / max(r2, h) and covered by a
/// composite 16-point Gauss-Legendre rule: one linear panel from zero to
/// 1e-5 * alpha_max, then log-spaced panels up to alpha_max.
struct QuadratureConfig {
    static constexpr int kGaussOrder = 16;

    int nodes = 2048;
    double alpha_max_scale = 60.0;
    // Accepted relative gap between the 16-point result and an embedded
    // 8-point estimate on the same panels.
    double rel_tol = 1e-6;

    void validate() const;
    int panels() const { return nodes / kGaussOrder; }
};

/// Half-space reflection coefficient (mu_r a - a1) / (mu_r a + a1) with
/// a1 = sqrt(a^2 + j w sigma mu_r mu0) on the principal branch.
Complex reflection_coefficient(double alpha, double omega, const PlateProperties& plate);

/// Integral of x J1(x) from alpha r1 to alpha r2. Throws NumericalFailure
/// when the adaptive rule misses its tolerance.
double coil_shape_integral(double alpha, const SensorGeometry& geom);

/// (1 - exp(-2 a h)) exp(-a (G + h + 2 l0)).
double axial_sensitivity(double alpha, const SensorGeometry& geom);

/// pi mu0 N^2 / (h^2 (r2 - r1)^2), henries per m^5 of kernel integral.
double coil_constant(const SensorGeometry& geom);

/// Real part of the integrand without the reflection coefficient:
/// P(a)^2 / a^6 * A(a).
double kernel(double alpha, const SensorGeometry& geom);

/// Sample-induced inductance change of the coil pair over a ferrous
/// half-space. The geometry-only part of the integrand is tabulated once at
/// construction so that repeated evaluations for different plates or
/// frequencies only pay for the reflection coefficient.
class ForwardModel {
public:
    explicit ForwardModel(const SensorGeometry& geom, const QuadratureConfig& quad = {});

    Complex delta_inductance(const PlateProperties& plate, double omega) const;

    /// Element-wise delta_inductance over the grid. NumericalFailure from a
    /// single frequency is rethrown with its grid index.
    InductanceSpectrum sweep(const PlateProperties& plate, const FrequencyGrid& grid) const;

    const SensorGeometry& geometry() const noexcept { return geom_; }
    const QuadratureConfig& quadrature() const noexcept { return quad_; }
    double alpha_max() const noexcept { return alpha_max_; }

private:
    struct Node {
        double alpha;
        double weight;  // K * P^2 / a^6 * A * gauss weight
    };

    static std::vector<Node> tabulate(const SensorGeometry& geom, const std::vector<double>& edges, int order);

    SensorGeometry geom_;
    QuadratureConfig quad_;
    double alpha_max_ = 0.0;
    double response_bound_ = 0.0;
    std::vector<Node> nodes_;
    std::vector<Node> embedded_;
};

Complex delta_inductance(const SensorGeometry& geom, const PlateProperties& plate, double omega,
                         const QuadratureConfig& quad = {});

InductanceSpectrum sweep(const SensorGeometry& geom, const PlateProperties& plate, const FrequencyGrid& grid,
                         const QuadratureConfig& quad = {});

/// Spatial frequency at which the geometry kernel peaks, evaluated at zero
/// lift-off whatever geom.lift_off holds.
double kernel_peak_alpha0(const SensorGeometry& geom);

/// First-order shift of the kernel peak under lift-off l0:
/// a0 - 4 a0^2 l0 / pi^2.
double shifted_alpha0(double alpha0, double lift_off);

}  // namespace ferro

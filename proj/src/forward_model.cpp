#include "ferro/forward_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "ferro/bessel.hpp"
#include "ferro/constants.hpp"
#include "ferro/errors.hpp"
#include "ferro/optimize.hpp"

namespace ferro {
namespace {

constexpr double kLowPanelFraction = 1e-5;

struct Rule {
    std::vector<double> x;  // on [-1, 1]
    std::vector<double> w;
};

// Boost stores the non-negative half of the symmetric rule.
template <unsigned N>
Rule gauss_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& ax = G::abscissa();
    const auto& wt = G::weights();
    Rule r;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        if (ax[i] == 0.0) {
            r.x.push_back(0.0);
            r.w.push_back(wt[i]);
            continue;
        }
        r.x.push_back(-ax[i]);
        r.w.push_back(wt[i]);
        r.x.push_back(ax[i]);
        r.w.push_back(wt[i]);
    }
    return r;
}

const Rule& rule_for(int order) {
    static const Rule r16 = gauss_rule<16>();
    static const Rule r8 = gauss_rule<8>();
    return order == 16 ? r16 : r8;
}

std::vector<double> panel_edges(double alpha_max, int panels) {
    std::vector<double> edges;
    edges.reserve(static_cast<std::size_t>(panels) + 1);
    edges.push_back(0.0);
    const double lo = std::log(alpha_max * kLowPanelFraction);
    const double hi = std::log(alpha_max);
    const int log_panels = panels - 1;
    for (int i = 0; i <= log_panels; ++i)
        edges.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(log_panels)));
    edges.back() = alpha_max;
    return edges;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (nodes < 2 * kGaussOrder || nodes % kGaussOrder != 0)
        throw std::invalid_argument("quadrature: node budget must be a multiple of 16 and at least 32");
    if (!(alpha_max_scale > 0.0)) throw std::invalid_argument("quadrature: alpha_max_scale must be positive");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("quadrature: rel_tol must be positive");
}

Complex reflection_coefficient(double alpha, double omega, const PlateProperties& plate) {
    const double mur = plate.relative_permeability;
    const Complex alpha1 = std::sqrt(Complex(alpha * alpha, omega * plate.conductivity * mur * mu0));
    const double mua = mur * alpha;
    return (mua - alpha1) / (mua + alpha1);
}

double coil_shape_integral(double alpha, const SensorGeometry& geom) {
    if (!(alpha > 0.0)) throw std::invalid_argument("coil_shape_integral: alpha must be positive");
    // Composite Gauss-Legendre with panels no wider than two radians, checked
    // against the same rule on twice as many panels.
    const double x0 = alpha * geom.r1;
    const double width = alpha * (geom.r2 - geom.r1);
    auto composite = [&](int panels) {
        const double step = 1.0 / panels;
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double a = step * p;
            sum += boost::math::quadrature::gauss<double, 16>::integrate(
                [&](double t) {
                    const double x = x0 + width * t;
                    return x * bessel_j1(x);
                },
                a, a + step);
        }
        return sum;
    };
    const int panels = std::max(1, static_cast<int>(std::ceil(width / 2.0)));
    const double unit = composite(2 * panels);
    double err = std::abs(unit - composite(panels));
    const double value = width * unit;
    err *= width;
    // Near a zero of P the value itself is no scale; fall back to the
    // integrand envelope |x J1(x)| <= sqrt(x).
    const double envelope = width * std::sqrt(x0 + width);
    if (!std::isfinite(value) || err > 1e-9 * std::max(std::abs(value), 1e-3 * envelope)) {
        std::ostringstream os;
        os << "coil_shape_integral: quadrature did not converge at alpha=" << alpha << " (estimate " << value
           << ", error " << err << ")";
        throw NumericalFailure(os.str(), value, err);
    }
    return value;
}

double axial_sensitivity(double alpha, const SensorGeometry& geom) {
    return -std::expm1(-2.0 * alpha * geom.h) * std::exp(-alpha * (geom.gap + geom.h + 2.0 * geom.lift_off));
}

double coil_constant(const SensorGeometry& geom) {
    const double dr = geom.r2 - geom.r1;
    const double n = static_cast<double>(geom.n_turns);
    return pi * mu0 * n * n / (geom.h * geom.h * dr * dr);
}

double kernel(double alpha, const SensorGeometry& geom) {
    const double p = coil_shape_integral(alpha, geom);
    const double a3 = alpha * alpha * alpha;
    return (p / a3) * (p / a3) * axial_sensitivity(alpha, geom);
}

ForwardModel::ForwardModel(const SensorGeometry& geom, const QuadratureConfig& quad) : geom_(geom), quad_(quad) {
    geom_.validate();
    quad_.validate();
    alpha_max_ = quad_.alpha_max_scale / std::max(geom_.r2, geom_.h);
    const auto edges = panel_edges(alpha_max_, quad_.panels());
    nodes_ = tabulate(geom_, edges, QuadratureConfig::kGaussOrder);
    embedded_ = tabulate(geom_, edges, QuadratureConfig::kGaussOrder / 2);
    for (const auto& n : nodes_) response_bound_ += std::abs(n.weight);
}

std::vector<ForwardModel::Node> ForwardModel::tabulate(const SensorGeometry& geom, const std::vector<double>& edges,
                                                       int order) {
    const Rule& rule = rule_for(order);
    const double k = coil_constant(geom);
    std::vector<Node> out;
    out.reserve((edges.size() - 1) * rule.x.size());
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        const double mid = 0.5 * (edges[p + 1] + edges[p]);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double a = mid + half * rule.x[i];
            out.push_back({a, k * kernel(a, geom) * half * rule.w[i]});
        }
    }
    return out;
}

Complex ForwardModel::delta_inductance(const PlateProperties& plate, double omega) const {
    if (!(omega > 0.0)) throw std::invalid_argument("delta_inductance: omega must be positive");
    Complex fine{0.0, 0.0};
    for (const auto& n : nodes_) fine += n.weight * reflection_coefficient(n.alpha, omega, plate);
    Complex coarse{0.0, 0.0};
    for (const auto& n : embedded_) coarse += n.weight * reflection_coefficient(n.alpha, omega, plate);

    const double bound = std::abs(fine - coarse);
    // |phi| <= 1, so response_bound_ caps |dL|; the floor keeps near-vanishing
    // responses from failing on round-off.
    const double tol = quad_.rel_tol * std::max(std::abs(fine), 1e-9 * response_bound_);
    if (!std::isfinite(fine.real()) || !std::isfinite(fine.imag()) || bound > tol) {
        std::ostringstream os;
        os << "delta_inductance: alpha integral not converged at omega=" << omega << " rad/s (|estimate| "
           << std::abs(fine) << " H, error bound " << bound << " H, " << quad_.nodes << " nodes)";
        throw NumericalFailure(os.str(), std::abs(fine), bound);
    }
    return fine;
}

InductanceSpectrum ForwardModel::sweep(const PlateProperties& plate, const FrequencyGrid& grid) const {
    std::vector<Complex> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            values[i] = delta_inductance(plate, grid.angular(i));
        } catch (const NumericalFailure& e) {
            throw NumericalFailure("sweep: frequency index " + std::to_string(i) + ": " + e.what(), e.estimate(),
                                   e.error_bound());
        }
    }
    return InductanceSpectrum(grid, std::move(values));
}

Complex delta_inductance(const SensorGeometry& geom, const PlateProperties& plate, double omega,
                         const QuadratureConfig& quad) {
    return ForwardModel(geom, quad).delta_inductance(plate, omega);
}

InductanceSpectrum sweep(const SensorGeometry& geom, const PlateProperties& plate, const FrequencyGrid& grid,
                         const QuadratureConfig& quad) {
    return ForwardModel(geom, quad).sweep(plate, grid);
}

double kernel_peak_alpha0(const SensorGeometry& geom) {
    SensorGeometry g = geom.with_lift_off(0.0);
    g.validate();
    const double length = std::max(g.r2, g.h);
    constexpr int kScan = 400;
    const double lo = std::log(1e-2 / length);
    const double hi = std::log(1e2 / length);
    const double step = (hi - lo) / (kScan - 1);

    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < kScan; ++i) {
        const double v = kernel(std::exp(lo + step * i), g);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == 0 || best == kScan - 1)
        throw NumericalFailure("kernel_peak_alpha0: kernel maximum sits on the scan boundary", std::exp(lo + step * best));

    const double scale = 1.0 / best_val;
    const auto r = golden_section_minimize([&](double t) { return -scale * kernel(std::exp(t), g); },
                                           lo + step * (best - 1), lo + step * (best + 1), 1e-11);
    if (!r.converged) throw NumericalFailure("kernel_peak_alpha0: golden-section did not converge", std::exp(r.x));
    return std::exp(r.x);
}

double shifted_alpha0(double alpha0, double lift_off) {
    return alpha0 - 4.0 * alpha0 * alpha0 * lift_off / (pi * pi);
}

}  // namespace ferro

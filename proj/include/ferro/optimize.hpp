#pragma once

#include <cmath>

namespace ferro {

struct GoldenResult {
    double x = 0.0;
    double fx = 0.0;
    double lo = 0.0;  // final bracket
    double hi = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Golden-section minimisation of `f` on [lo, hi]; stops once the bracket
/// is narrower than `width_tol`. Returns the better interior probe.
template <typename F>
GoldenResult golden_section_minimize(F&& f, double lo, double hi, double width_tol, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (b - a >= width_tol && it < max_iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    GoldenResult r;
    r.lo = a;
    r.hi = b;
    r.iterations = it;
    r.converged = (b - a) < width_tol;
    if (fc <= fd) {
        r.x = c;
        r.fx = fc;
    } else {
        r.x = d;
        r.fx = fd;
    }
    return r;
}

}  // namespace ferro

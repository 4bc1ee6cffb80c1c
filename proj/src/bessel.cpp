#include "ferro/bessel.hpp"

#include <cmath>

#include "ferro/constants.hpp"

namespace ferro {
namespace {

constexpr double kSeriesLimit = 8.0;
constexpr double kAsymptoticLimit = 25.0;

// Ascending power series; converges for all x, cancellation stays below
// ~1e-13 absolute for |x| < 8.
double j1_series(double x) {
    const double q = -0.25 * x * x;
    double term = 0.5 * x;
    double sum = term;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Miller's backward recurrence normalised by J0 + 2 sum J_2k = 1.
double j1_miller(double x) {
    const int start = 2 * ((static_cast<int>(x) + 40) / 2);
    const double two_over_x = 2.0 / x;
    double j_next = 0.0;
    double j_cur = 1e-30;
    double norm = 0.0;
    double j1 = 0.0;
    for (int n = start; n > 0; --n) {
        const double j_prev = static_cast<double>(n) * two_over_x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        if (std::abs(j_cur) > 1e250) {
            j_cur *= 1e-250;
            j_next *= 1e-250;
            norm *= 1e-250;
            j1 *= 1e-250;
        }
        // j_cur now holds J_{n-1}
        if (n - 1 == 1) j1 = j_cur;
        if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * j_cur;
    }
    norm += j_cur;  // J0
    return j1 / norm;
}

// Hankel asymptotic expansion, truncated at the smallest term.
double j1_asymptotic(double x) {
    constexpr double mu = 4.0;  // 4 * order^2
    const double eightx = 8.0 * x;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double prev_mag = 1.0;
    for (int k = 1; k < 80; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (static_cast<double>(k) * eightx);
        const double mag = std::abs(term);
        if (mag > prev_mag) break;
        prev_mag = mag;
        // k odd -> Q series, k even -> P series, alternating signs per pair
        if (k % 2 == 1) {
            q += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
        } else {
            p += ((k / 2) % 2 == 1 ? -1.0 : 1.0) * term;
        }
        if (mag < 1e-17) break;
    }
    const double chi = x - 0.75 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j1(double x) {
    const double ax = std::abs(x);
    double value;
    if (ax < kSeriesLimit) {
        return j1_series(x);
    } else if (ax < kAsymptoticLimit) {
        value = j1_miller(ax);
    } else {
        value = j1_asymptotic(ax);
    }
    return x < 0.0 ? -value : value;
}

}  // namespace ferro

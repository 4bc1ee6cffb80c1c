#pragma once

namespace ferro {

/// Bessel function of the first kind, order one, for real argument.
/// Absolute error below 1e-12 on the whole real line.
double bessel_j1(double x);

}  // namespace ferro

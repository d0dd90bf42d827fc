#pragma once

#include <functional>

namespace starlike {

/// Adaptive Gauss-Kronrod (7,15) quadrature of f over [a,b].
///
/// Intervals are split until the embedded error estimate meets abs_tol.
/// All integrands in this project are analytic on the closed interval, so
/// few splits are needed; the subdivision budget guards against misuse.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

} // namespace starlike

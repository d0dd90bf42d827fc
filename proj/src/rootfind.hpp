#pragma once

#include <functional>

namespace starlike {

/// Outcome of a bracketed solve: the root, the final sign-change bracket,
/// the residual at the root, and the iteration count. Every radius the
/// toolkit reports (Bohr, eta0, starlikeness, convexity threshold, Koebe
/// limit) is carried in this record so tolerances stay visible.
struct RadiusResult {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Brent's method on [a,b]. Requires f(a) and f(b) of opposite sign.
/// Iterates until both |f(value)| <= tol_residual and the bracket width
/// is <= tol_bracket (or the bracket collapses to machine resolution).
RadiusResult solve_bracketed(const std::function<double(double)>& f, double a, double b,
                             double tol_residual = 1e-12, double tol_bracket = 1e-10);

/// Golden-section minimization of f over [a,b] to the given abscissa
/// tolerance. Returns the abscissa; *minimum receives f there.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double x_tol, double* minimum = nullptr);

} // namespace starlike

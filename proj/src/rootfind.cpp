#include "rootfind.hpp"

#include "errors.hpp"

#include <cmath>

namespace starlike {

RadiusResult solve_bracketed(const std::function<double(double)>& f, double a, double b,
                             double tol_residual, double tol_bracket) {
    if (!(std::isfinite(a) && std::isfinite(b)) || a >= b)
        throw InvalidArgument("solve_bracketed: bad interval");
    double fa = f(a);
    double fb = f(b);
    if (!(std::isfinite(fa) && std::isfinite(fb)))
        throw InvalidArgument("solve_bracketed: non-finite endpoint value");
    if (fa == 0.0)
        return {a, a, b, 0.0, 0};
    if (fb == 0.0)
        return {b, a, b, 0.0, 0};
    if (fa * fb > 0.0)
        throw InvalidArgument("solve_bracketed: no sign change on the interval");

    const double lo0 = a, hi0 = b;
    double c = a, fc = fa;
    double d = b - a, e = b - a;
    // The internal step floor sits near machine resolution so the residual
    // tolerance stays reachable; tol_bracket only caps the reported bracket.
    const double half_step = 0.5 * std::min(tol_bracket, 1e-14);
    int iter = 0;
    constexpr int kMaxIter = 300;
    for (; iter < kMaxIter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + half_step;
        const double xm = 0.5 * (c - b);
        if ((std::abs(xm) <= tol1 && std::abs(fb) <= tol_residual) || fb == 0.0)
            break;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation, falling back to secant.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    if (iter == kMaxIter)
        throw NumericFailure("solve_bracketed: iteration limit reached");
    if (std::abs(b - c) > tol_bracket + 4e-16 * std::abs(b))
        throw NumericFailure("solve_bracketed: bracket did not shrink to tolerance");

    RadiusResult out;
    out.value = b;
    out.bracket_lo = std::min(b, c);
    out.bracket_hi = std::max(b, c);
    out.bracket_lo = std::max(out.bracket_lo, lo0);
    out.bracket_hi = std::min(out.bracket_hi, hi0);
    out.residual = fb;
    out.iterations = iter;
    return out;
}

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double x_tol, double* minimum) {
    if (!(a <= b))
        throw InvalidArgument("golden_min: bad interval");
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    const double x = f1 <= f2 ? x1 : x2;
    if (minimum)
        *minimum = std::min(f1, f2);
    return x;
}

} // namespace starlike

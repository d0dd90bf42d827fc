#include "radii.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace starlike {

namespace {

double bohr_alpha_max() {
    return 3.0 - 2.0 * std::sqrt(2.0);
}

} // namespace

double bohr_defining_function(double alpha, double r) {
    const Generator gen = Generator::booth(alpha);
    const double fhat_r = r * gen.extremal_ratio(cplx(r, 0.0)).real();
    const double koebe = gen.extremal_ratio(cplx(-1.0, 0.0)).real();
    return fhat_r - koebe;
}

RadiusResult bohr_radius_booth(double alpha) {
    if (!(alpha > 0.0 && alpha <= bohr_alpha_max() + 1e-12))
        throw HypothesisViolation("bohr_radius_booth: alpha must lie in (0, 3-2*sqrt(2)]");
    const Generator gen = Generator::booth(alpha);
    const double koebe = gen.extremal_ratio(cplx(-1.0, 0.0)).real();
    auto T = [&](double r) { return r * gen.extremal_ratio(cplx(r, 0.0)).real() - koebe; };

    RadiusResult res = solve_bracketed(T, 0.0, 1.0 / 3.0, 1e-12, 1e-10);
    if (!(res.value > 0.0 && res.value < 1.0 / 3.0))
        throw NumericFailure("bohr_radius_booth: root escaped (0, 1/3)");
    // T must be increasing from the root up to 1/3 (sampled check of the
    // uniqueness argument).
    double prev = T(res.value);
    for (int k = 1; k <= 32; ++k) {
        const double x = res.value + k * (1.0 / 3.0 - res.value) / 32.0;
        const double cur = T(x);
        if (cur < prev - 1e-14)
            throw NumericFailure("bohr_radius_booth: sampled monotonicity of T failed");
        prev = cur;
    }
    return res;
}

double eta0_polynomial(double gamma, double eta) {
    const double c[9] = {1.0 - gamma, 0.0,  3.0 * gamma - 10.0, 12.0, 8.0 - 3.0 * gamma,
                         -16.0,       2.0 + gamma, 4.0,         -1.0};
    double acc = c[8];
    for (int i = 7; i >= 0; --i)
        acc = acc * eta + c[i];
    return acc;
}

RadiusResult eta0(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw HypothesisViolation("eta0: gamma must lie in (0,1)");
    const double step = 1e-4;
    auto P = [gamma](double e) { return eta0_polynomial(gamma, e); };

    double prev_x = 0.0;
    double prev_v = P(0.0); // = 1 - gamma > 0
    for (int k = 1; k * step < 1.0; ++k) {
        const double x = k * step;
        const double v = P(x);
        if (v == 0.0)
            return {x, x, x, 0.0, 0};
        if (prev_v * v < 0.0) {
            RadiusResult res = solve_bracketed(P, prev_x, x, 1e-13, 1e-12);
            res.iterations += k;
            return res;
        }
        if (std::abs(v) < 7e-7) {
            // Possible grazing pair of roots inside the step; refine locally.
            const double fine = step / 1000.0;
            double px = std::max(0.0, x - step);
            double pv = P(px);
            for (int j = 1; j <= 2000; ++j) {
                const double xx = px + fine;
                const double vv = P(xx);
                if (pv * vv < 0.0) {
                    RadiusResult res = solve_bracketed(P, px, xx, 1e-13, 1e-12);
                    res.iterations += k;
                    return res;
                }
                px = xx;
                pv = vv;
            }
        }
        prev_x = x;
        prev_v = v;
    }
    throw NumericFailure("eta0: no root in (0,1); P(0+) = " + std::to_string(P(step)) +
                         ", P(1-) = " + std::to_string(P(1.0 - step)));
}

StarlikenessRadius starlikeness_radius(double gamma, double eta, double order) {
    if (!(gamma > 0.0))
        throw InvalidArgument("starlikeness_radius: gamma must be positive");
    if (!(eta >= 0.0 && eta < 1.0))
        throw InvalidArgument("starlikeness_radius: eta must lie in [0,1)");
    if (!(order >= 0.0 && order < 1.0))
        throw InvalidArgument("starlikeness_radius: order must lie in [0,1)");

    const double a = (1.0 - order) * eta * eta;
    const double b = -(2.0 * (1.0 - order) * eta + gamma);
    const double c = 1.0 - order;
    const double disc = b * b - 4.0 * a * c; // = gamma^2 + 4 gamma (1-order) eta > 0
    const double q = 0.5 * (-b + std::sqrt(disc));
    const double root = c / q;

    StarlikenessRadius out;
    out.root.value = root;
    out.root.bracket_lo = root;
    out.root.bracket_hi = root;
    out.root.residual = std::abs((a * root + b) * root + c);
    out.root.iterations = 0;
    out.whole_disk = root >= 1.0;
    return out;
}

RadiusResult convexity_threshold_modkoebe(double tol) {
    if (!(tol > 0.0))
        throw InvalidArgument("convexity_threshold_modkoebe: tol must be positive");
    auto margin = [](double eta) {
        return convexity_margin(Generator::modkoebe(1.0, eta), 2048);
    };
    const double bracket_tol = std::clamp(tol, 1e-12, 1e-8);
    return solve_bracketed(margin, 0.05, 0.6, 1e-13, bracket_tol);
}

} // namespace starlike

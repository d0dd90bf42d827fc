#include "growth.hpp"

#include "errors.hpp"
#include "quadrature.hpp"
#include "radii.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;

double log_growth_quad_upper(const Generator& gen, double r) {
    return integrate([&](double t) { return gen.psi_over_t(t); }, 0.0, r, 1e-12);
}

double log_growth_quad_lower(const Generator& gen, double r) {
    // int_0^r psi(-t)/t dt, with psi(-t)/t = -psi_over_t(-t).
    return integrate([&](double t) { return -gen.psi_over_t(-t); }, 0.0, r, 1e-12);
}

// Per-radius grid extremes of Re psi, used when no placement is proven.
double log_growth_grid(const Generator& gen, double r, bool upper) {
    auto integrand = [&](double t) {
        const RealExtremes ex = real_part_extremes(gen, t, 512);
        return (upper ? ex.max_re : ex.min_re) / t;
    };
    return integrate(integrand, 0.0, r, 1e-10);
}

double grid_max_abs_psi(const Generator& gen, double r, int grid) {
    double best = 0.0;
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        const double v = std::abs(gen.eval_closure(std::polar(r, 2.0 * kPi * k / grid)));
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    const double h = 2.0 * kPi / grid;
    double refined = best;
    golden_min([&](double th) { return -std::abs(gen.eval_closure(std::polar(r, th))); },
               (best_k - 1) * h, (best_k + 1) * h, 1e-10, &refined);
    return std::max(best, -refined);
}

} // namespace

GrowthInterval growth_interval(const Generator& gen, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw InvalidArgument("growth_interval: r must lie in (0,1)");
    GrowthInterval out;
    if (gen.has_closed_extremes()) {
        const double upper_closed = r * gen.extremal_ratio(cplx(r, 0.0)).real();
        const double lower_closed = r * gen.extremal_ratio(cplx(-r, 0.0)).real();
        const double upper_quad = r * std::exp(log_growth_quad_upper(gen, r));
        const double lower_quad = r * std::exp(log_growth_quad_lower(gen, r));
        if (std::abs(upper_quad - upper_closed) > 1e-9 * std::abs(upper_closed) ||
            std::abs(lower_quad - lower_closed) > 1e-9 * std::abs(lower_closed))
            throw NumericFailure("growth_interval: quadrature and closed form disagree for " +
                                 gen.describe());
        out.lower = lower_closed;
        out.upper = upper_closed;
        out.sharp = true;
        return out;
    }
    out.lower = r * std::exp(log_growth_grid(gen, r, false));
    out.upper = r * std::exp(log_growth_grid(gen, r, true));
    out.sharp = false;
    return out;
}

GrowthBounds auxiliary_bounds(const Generator& gen, double r, int grid) {
    const GrowthInterval gi = growth_interval(gen, r);
    GrowthBounds out;
    out.r = r;
    out.lower = gi.lower;
    out.upper = gi.upper;
    const double big_m = gi.upper / r;
    out.re_bound = big_m;

    const double psi_r = gen.eval(cplx(r, 0.0)).real();
    const double max_abs = grid_max_abs_psi(gen, r, grid);
    const bool hypothesis_holds =
        gi.sharp && psi_r > 0.0 && max_abs <= psi_r + std::max(1e-9 * psi_r, 1e-12);
    const double amp = hypothesis_holds ? psi_r : max_abs;
    out.deriv_bound = (1.0 + amp) * big_m;
    out.length_bound = 2.0 * kPi * r * (1.0 + amp) * big_m;
    out.sharp = hypothesis_holds;
    return out;
}

RadiusResult koebe_radius(const Generator& gen) {
    auto lower_at = [&](double r) -> double {
        if (gen.has_closed_extremal())
            return r * gen.extremal_ratio(cplx(-r, 0.0)).real();
        return r * std::exp(integrate([&](double s) { return -gen.psi_over_t(-s); }, 0.0, r, 1e-12));
    };
    double closed;
    if (gen.has_closed_extremal()) {
        closed = gen.extremal_ratio(cplx(-1.0, 0.0)).real();
    } else {
        closed = std::exp(integrate([&](double s) { return -gen.psi_over_t(-s); }, 0.0, 1.0, 1e-12));
    }
    if (!(std::isfinite(closed) && closed > 0.0))
        throw NumericFailure("koebe_radius: closed-form limit is not finite and positive");

    double prev = lower_at(1.0 - std::ldexp(1.0, -2));
    int k = 3;
    for (; k <= 48; ++k) {
        const double cur = lower_at(1.0 - std::ldexp(1.0, -k));
        const double diff = std::abs(cur - prev);
        if (k >= 8 && diff < 1e-9) {
            RadiusResult out;
            out.value = closed;
            out.bracket_lo = std::min(prev, cur);
            out.bracket_hi = std::max(prev, cur);
            out.residual = cur - closed;
            out.iterations = k;
            return out;
        }
        prev = cur;
    }
    throw NumericFailure("koebe_radius: numeric limit did not settle; possibly divergent");
}

double arg_bound(const Generator& gen, double r, int grid) {
    if (!(r > 0.0 && r <= 1.0))
        throw InvalidArgument("arg_bound: r must lie in (0,1]");
    switch (gen.family()) {
    case Family::Booth:
        if (!(gen.param1() > 0.0 && gen.param1() <= modkoebe_convex_eta_max() + 1e-12))
            throw HypothesisViolation(
                "arg_bound: booth requires alpha in (0, 2-sqrt(3)] (f/z subordination range)");
        break;
    case Family::ModKoebe: {
        const double gamma = gen.param1();
        const double eta = gen.param2();
        if (eta == 0.0) {
            if (!(gamma <= kPi / 2.0 + 1e-12))
                throw HypothesisViolation(
                    "arg_bound: modkoebe with eta = 0 requires gamma <= pi/2");
        } else {
            if (!(gamma > 0.0 && gamma < 1.0))
                throw HypothesisViolation(
                    "arg_bound: modkoebe requires gamma in (0,1) when eta > 0");
            const double cap = std::min(modkoebe_convex_eta_max(), eta0(gamma).value);
            if (!(eta <= cap + 1e-12))
                throw HypothesisViolation(
                    "arg_bound: modkoebe requires eta <= min(2-sqrt(3), eta0(gamma))");
        }
        break;
    }
    default:
        throw HypothesisViolation("arg_bound: no proven argument bound for family " +
                                  std::string(family_name(gen.family())));
    }

    double best = 0.0;
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        const double v = std::abs(std::arg(gen.extremal_ratio(std::polar(r, 2.0 * kPi * k / grid))));
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    const double h = 2.0 * kPi / grid;
    double refined = best;
    golden_min([&](double th) { return -std::abs(std::arg(gen.extremal_ratio(std::polar(r, th)))); },
               (best_k - 1) * h, (best_k + 1) * h, 1e-10, &refined);
    return std::max(best, -refined);
}

} // namespace starlike

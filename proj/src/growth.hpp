#pragma once

#include "catalog.hpp"
#include "rootfind.hpp"

namespace starlike {

/// Sharp growth envelope at |z| = r:
///   r exp int_0^r psi(-t)/t dt  <=  |f(z)|  <=  r exp int_0^r psi(t)/t dt.
/// For families with proven Re-extremes placement both ends are computed by
/// quadrature and by the closed form, cross-checked to 1e-9 relative, and
/// flagged sharp. Other families use per-radius grid extremes inside the
/// quadrature and come back flagged heuristic.
struct GrowthInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool sharp = false;
};
GrowthInterval growth_interval(const Generator& gen, double r);

/// All circle bounds at |z| = r derived from M(r) = exp int_0^r psi(t)/t dt:
/// max |f|, min |f|, Re f/z <= M(r), |f'| <= (1+A) M(r) and the arc length
/// L(f,r) <= 2 pi r (1+A) M(r), where A is psi(r) when the grid check
/// confirms max |psi| on the circle sits at z = r, else the grid max of
/// |psi| with the result flagged non-sharp.
struct GrowthBounds {
    double r = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double re_bound = 0.0;
    double deriv_bound = 0.0;
    double length_bound = 0.0;
    bool sharp = false;
};
GrowthBounds auxiliary_bounds(const Generator& gen, double r, int grid = 4096);

/// Koebe radius -f0(-1), the radius of the disk covered by every class
/// member's image. The closed form at z = -1 is cross-checked against the
/// numeric limit of -f0(-r) along r = 1 - 2^-k; the returned record carries
/// the last limit bracket, the limit-vs-closed-form residual and the number
/// of limit steps.
RadiusResult koebe_radius(const Generator& gen);

/// max over |z| = r of |arg f0(z)/z|, the sharp argument bound for the
/// families where f/z is subordinate to f0/z:
///   Booth with alpha in (0, 2-sqrt(3)],
///   ModKoebe with eta = 0 and gamma <= pi/2, or 0 < gamma < 1 and
///   0 < eta <= min(2-sqrt(3), eta0(gamma)).
/// Parameters outside those ranges raise HypothesisViolation naming the
/// violated hypothesis.
double arg_bound(const Generator& gen, double r, int grid = 4096);

} // namespace starlike

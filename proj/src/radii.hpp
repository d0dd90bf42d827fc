#pragma once

#include "catalog.hpp"
#include "rootfind.hpp"

namespace starlike {

/// T(r) = fhat(r) - (-fhat(-1)) for the Booth family, the function whose
/// unique positive root is the Bohr radius r(alpha). Exposed so sweeps and
/// sign-change scans can work with the raw function.
double bohr_defining_function(double alpha, double r);

/// Bohr radius r(alpha) for the Booth family, alpha in (0, 3-2 sqrt 2].
/// The root lies in (0, 1/3); T is verified increasing on [r(alpha), 1/3]
/// by sampling before the result is returned.
RadiusResult bohr_radius_booth(double alpha);

/// Degree-8 polynomial whose smallest positive root eta0(gamma) marks the
/// convexity threshold claimed for exp(gamma z/(1+eta z)^2):
///   (1-g) + (3g-10) e^2 + 12 e^3 + (8-3g) e^4 - 16 e^5 + (2+g) e^6 + 4 e^7 - e^8.
double eta0_polynomial(double gamma, double eta);

/// Smallest positive root of eta0_polynomial in (0,1) for gamma in (0,1),
/// located by a 1e-4 sign-change scan and a bracketed solve.
///
/// The scan step cannot skip the smallest root: on [0,1] the polynomial's
/// second derivative is bounded by sum i(i-1)|c_i| < 500, so two roots
/// within one 1e-4 step would force |P| < 500 * (1e-4)^2 / 8 < 7e-7
/// between them, and grid values that small trigger a local refinement.
RadiusResult eta0(double gamma);

struct StarlikenessRadius {
    RadiusResult root;
    bool whole_disk = false; // root >= 1: starlike of that order on the whole disk
};

/// Radius of starlikeness of the given order for the class generated by
/// gamma z/(1+eta z)^2: smallest positive root of
///   (1-a) eta^2 r^2 - (2(1-a) eta + gamma) r + (1-a) = 0,
/// solved in the cancellation-free form q = (|b| + sqrt(b^2-4ac))/2,
/// r = c/q (which also covers the eta = 0 linear case).
StarlikenessRadius starlikeness_radius(double gamma, double eta, double order);

/// The eta at which min over theta of Re(1 + zK''/K') on |z| = 1 crosses
/// zero for K(z) = z/(1+eta z)^2; expected 2 - sqrt(3).
RadiusResult convexity_threshold_modkoebe(double tol = 1e-12);

} // namespace starlike

#pragma once

#include "series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starlike {

enum class Family { Booth, Cissoid, ModKoebe, Mobius, Linear, DiLog, Parabola, Secant };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// eta threshold below which the bounded Koebe-style map z/(1+eta z)^2 is
/// convex on the unit disk; equals 2 - sqrt(3).
double modkoebe_convex_eta_max();

/// Dilogarithm sum_{n>=1} z^n/n^2 for |z| <= 1, z != 1.
cplx dilog(cplx z);

/// A generator psi: an analytic univalent self-map family of the unit disk
/// with psi(0) = 0. Each generator pins down one function class via the
/// subordination z f'(z)/f(z) - 1 < psi(z).
///
///   Booth(alpha)          z / (1 - alpha z^2),        alpha in [0,1)
///   Cissoid(beta)         z / ((1 - z)(1 + beta z)),  beta in [0,1)
///   ModKoebe(gamma,eta)   gamma z / (1 + eta z)^2,    gamma > 0, eta in [0,1)
///   Mobius(alpha,beta)    beta z / (1 + alpha z),     beta > 0, alpha in (0,1)
///   Linear(eta)           eta z,                      eta > 0
///   DiLog                 log(1 - z)
///   Parabola              -(log((1+sqrt(z))/(1-sqrt(z))))^2
///   Secant(beta)          z / cos(beta z),            beta in [0,1]
class Generator {
public:
    static Generator booth(double alpha);
    static Generator cissoid(double beta);
    static Generator modkoebe(double gamma, double eta);
    static Generator mobius(double alpha, double beta);
    static Generator linear(double eta);
    static Generator dilog_generator();
    static Generator parabola_generator();
    static Generator secant(double beta);
    static Generator from_family(Family f, const double* params, int n_params);

    Family family() const { return family_; }
    double param1() const { return p1_; }
    double param2() const { return p2_; }
    int param_count() const;
    std::string describe() const;

    /// psi(z) for |z| < 1 (the class-map contract; |z| >= 1 is an error).
    cplx eval(cplx z) const;
    /// psi(z) for |z| <= 1, used by boundary sampling and circle margins.
    cplx eval_closure(cplx z) const;
    cplx derivative(cplx z) const;
    cplx second_derivative(cplx z) const;
    double derivative_at_zero() const;

    /// psi(t)/t for real t in (-1,1); the removable singularity at t = 0 is
    /// evaluated exactly, so quadrature never sees a 0/0.
    double psi_over_t(double t) const;

    /// Taylor coefficients of psi about 0 to the given truncation order.
    PowerSeries series(int order) const;

    /// True when min/max of Re psi over |z|=r are proven to sit at -r / +r
    /// (Booth, Cissoid, Mobius, Linear; ModKoebe only for eta <= 2-sqrt(3)).
    bool has_closed_extremes() const;

    /// True when f0(z) = z exp int_0^z psi(t)/t dt has a closed form
    /// (every family except Parabola).
    bool has_closed_extremal() const;

    /// Closed form of f0(z)/z; throws when has_closed_extremal() is false.
    cplx extremal_ratio(cplx z) const;

    /// Radius of the circle used for convexity margins: 1 where psi is
    /// analytic on the closed disk, 0.999 for families singular at z = 1.
    double margin_circle_radius() const;

    /// Families whose boundary curve cannot be sampled at rho = 1.
    bool boundary_requires_rho_below_one() const;

private:
    Generator(Family f, double p1, double p2);
    Family family_;
    double p1_ = 0.0;
    double p2_ = 0.0;
};

struct RealExtremes {
    double min_re = 0.0;
    double max_re = 0.0;
    bool closed_form = false; // false: grid-scan result, numerical only
};

/// Extremes of Re psi over |z| = r. Closed-form families return psi(-r) and
/// psi(r); the rest get a grid scan refined by golden section, flagged
/// numerical.
RealExtremes real_part_extremes(const Generator& gen, double r, int grid = 4096);

/// The growth extremal f0(z) = z exp int_0^z psi(t)/t dt as a truncated
/// series, with the family's closed form attached when one exists. The two
/// representations are cross-checked on a small grid at construction.
struct ExtremalFunction {
    Generator generator;
    PowerSeries f; // normalized: coeff 0 is 0, coeff 1 is 1
    bool has_closed_form = false;

    cplx closed_ratio(cplx z) const;  // f0(z)/z
    cplx closed_eval(cplx z) const;   // f0(z)
};
ExtremalFunction extremal_function(const Generator& gen, int order);

/// min over the theta grid (golden refined) of Re(1 + z psi''/psi') on the
/// family's margin circle. A nonnegative margin certifies convexity of psi
/// at grid resolution. Throws if psi' vanishes on the grid.
double convexity_margin(const Generator& gen, int grid = 4096);

/// Same margin for the pointwise exponential exp(psi):
/// min Re(1 + z psi''/psi' + z psi').
double exp_convexity_margin(const Generator& gen, int grid = 4096);

/// Same margin for the extremal ratio f0(z)/z = exp int_0^z psi(t)/t dt on
/// |z| = rho: min Re(z psi'/psi + psi).
double extremal_ratio_convexity_margin(const Generator& gen, double rho, int grid = 4096);

/// The region 1 + psi(unit disk), the admissible set of z f'/f.
struct RegionSpec {
    Generator generator;
};

/// Membership of w in 1 + psi(disk). Mobius and Linear use their exact
/// inequality; other families delegate to the winding test.
bool region_contains(const RegionSpec& region, cplx w, int grid = 4096);

/// Winding-number membership of w in 1 + psi(disk), sampled at rho = 0.999.
bool boundary_winding_contains(const Generator& gen, cplx w, int grid = 4096);

/// [psi(rho e^{2 pi i k / samples})] for k = 0..samples-1.
std::vector<cplx> boundary_curve(const Generator& gen, double rho, int samples);

/// Closed sampled curve with winding-number membership queries. Points too
/// close to the sampled polyline are rejected as ambiguous.
class WindingRegion {
public:
    explicit WindingRegion(std::vector<cplx> closed_curve);
    int winding_number(cplx w) const;
    bool contains(cplx w) const { return winding_number(w) != 0; }
    double boundary_distance(cplx w) const;

private:
    std::vector<cplx> pts_;
    double scale_ = 1.0;
};

/// Region 1 + psi(rho * disk) as a winding region (curve sampled on |z|=rho).
WindingRegion shifted_range_region(const Generator& gen, int grid = 4096, double rho = 0.999);

/// Region swept by f0(z)/z over |z| <= rho, for subordination tests.
WindingRegion extremal_ratio_region(const Generator& gen, int grid = 4096, double rho = 0.999);

} // namespace starlike

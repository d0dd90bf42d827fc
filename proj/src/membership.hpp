#pragma once

#include "catalog.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace starlike {

/// An analytic self-map omega of the unit disk with omega(0) = 0. Composing
/// a generator with a witness and exponentiating the integrated series
/// produces a genuine member of the class F(psi). The Schwarz bound is
/// certified numerically on a 4096-point boundary grid at construction.
class SchwarzWitness {
public:
    static SchwarzWitness monomial(int k);                        // z^k, k >= 1
    static SchwarzWitness moebius_twist(cplx a);                  // z (z+a)/(1+conj(a) z), |a| < 1
    static SchwarzWitness scaled_poly(std::vector<cplx> coeffs);  // rescaled to sup norm < 1

    cplx eval(cplx z) const;
    PowerSeries series(int order) const;
    bool is_identity() const;
    std::string describe() const;

private:
    enum class Kind { Monomial, MoebiusTwist, ScaledPoly };
    explicit SchwarzWitness(Kind kind) : kind_(kind) {}
    void certify() const;

    Kind kind_;
    int power_ = 1;
    cplx a_{0.0, 0.0};
    std::vector<cplx> coeffs_;
};

/// Deterministic uniform double in [lo, hi) built from the engine's raw
/// bits, so seeded runs reproduce across standard libraries.
double uniform_real(std::mt19937_64& rng, double lo, double hi);

/// Witness mix used by the randomized verification suites.
SchwarzWitness random_witness(std::mt19937_64& rng);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CheckItem> items;
    std::uint64_t seed = 0;
    bool passed() const;
    void add(std::string name, bool ok, std::string detail = {});
    int failures() const;
};

/// A constructed class member f = z exp int_0^z psi(omega(t))/t dt together
/// with its witness. Construction asserts normalization and checks that
/// z f'/f - 1 stays inside 1 + psi(disk) at 256 points of |z| = 0.8.
struct MembershipSample {
    Generator generator;
    SchwarzWitness witness;
    PowerSeries f;

    cplx eval(cplx z) const { return f.eval(z); }
    /// z f'(z)/f(z) - 1 recomputed from the series.
    cplx log_deriv_ratio(cplx z) const;

    bool has_closed_form = false;
    cplx closed_eval(cplx z) const;

    // Set by sample_member; which closed form closed_eval dispatches to.
    enum class ClosedKind { None, ExtremalRatio, LinearMonomial };
    ClosedKind closed_kind = ClosedKind::None;
    int closed_power = 1;
};

MembershipSample sample_member(const Generator& gen, const SchwarzWitness& witness, int order,
                               const WindingRegion* cached_region = nullptr,
                               bool check_region = true);

/// Growth sandwich check: lower(r) - eps <= |f(r e^{i theta})| <= upper(r) + eps
/// on the theta grid, with eps = 1e-8 plus a truncation allowance derived
/// from rebuilding the sample at twice the order (the two orders must also
/// agree within the allowance). Radii are capped at 0.95 for series margin.
Report verify_growth(const MembershipSample& sample, std::span<const double> radii, int grid);

/// Bohr chain at radius r <= 1/3 for a Booth sample f and a subordination
/// witness: majorant(f o sub, r) <= majorant(f, r) <= fhat(r), and
/// fhat(r) <= -fhat(-1) whenever r is at most the Bohr radius.
Report verify_bohr_pair(const MembershipSample& f, const SchwarzWitness& sub, double r);

/// Subordination of f/z to the extremal ratio for ModKoebe samples with
/// eta <= 2-sqrt(3): every sampled value of f(z)/z at |z| in
/// {0.25, 0.5, 0.75, 0.9} must lie inside the winding region swept by the
/// extremal ratio at rho = 0.999.
Report verify_fz_subordination(const MembershipSample& sample, int grid);

struct VerifySuiteConfig {
    int witnesses = 100;
    std::vector<double> radii{0.2, 0.5, 0.8};
    int grid = 256;
    int order = 64;
    std::uint64_t seed = 7;
};

Report verify_growth_suite(const Generator& gen, const VerifySuiteConfig& cfg);
Report verify_bohr_suite(double alpha, int witnesses, std::uint64_t seed);
Report verify_subordination_suite(double gamma, double eta, int witnesses, int grid,
                                  std::uint64_t seed);

} // namespace starlike

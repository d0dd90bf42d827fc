#include "catalog.hpp"

#include "errors.hpp"
#include "rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;

// Parameter threshold below which Booth and Secant formulas switch to their
// alpha -> 0 / beta -> 0 limits (the exponents become 0/0 there).
constexpr double kDegenerateParam = 1e-8;

cplx pow_principal(cplx base, double expo) {
    return std::pow(base, expo);
}

// atanh(sqrt(z))/sqrt(z); single-valued in the disk (even in sqrt(z)).
cplx atanh_over_sqrt(cplx z) {
    if (std::abs(z) < 1e-6) {
        // 1 + z/3 + z^2/5 + z^3/7, error below 1e-25 here
        return cplx(1.0, 0.0) + z * (1.0 / 3.0 + z * (1.0 / 5.0 + z * (1.0 / 7.0)));
    }
    const cplx s = std::sqrt(z);
    return 0.5 * std::log((1.0 + s) / (1.0 - s)) / s;
}

cplx dilog_series(cplx z) {
    cplx acc(0.0, 0.0);
    cplx zn = z;
    for (int n = 1; n <= 200000; ++n) {
        const cplx term = zn / static_cast<double>(n) / static_cast<double>(n);
        acc += term;
        if (std::abs(term) <= 1e-18 * (1.0 + std::abs(acc)))
            return acc;
        zn *= z;
    }
    throw NumericFailure("dilog: series did not converge");
}

} // namespace

double modkoebe_convex_eta_max() {
    return 2.0 - std::sqrt(3.0);
}

cplx dilog(cplx z) {
    if (!is_finite(z))
        throw InvalidArgument("dilog: non-finite argument");
    const double az = std::abs(z);
    if (az > 1.0 + 1e-12)
        throw InvalidArgument("dilog: |z| must be <= 1");
    if (z == cplx(1.0, 0.0))
        throw InvalidArgument("dilog: singular at z = 1");
    if (z == cplx(-1.0, 0.0))
        return cplx(-kPi * kPi / 12.0, 0.0);
    if (az <= 0.6)
        return dilog_series(z);
    if (std::abs(1.0 - z) <= 0.6) {
        const cplx l1 = std::log(z);
        const cplx l2 = std::log(1.0 - z);
        return cplx(kPi * kPi / 6.0, 0.0) - l1 * l2 - dilog_series(1.0 - z);
    }
    if (z.real() < 0.5) {
        // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2 for Re z < 1/2.
        const cplx w = z / (z - 1.0);
        const cplx l = std::log(1.0 - z);
        return -dilog(w) - 0.5 * l * l;
    }
    return dilog_series(z);
}

const char* family_name(Family f) {
    switch (f) {
    case Family::Booth: return "booth";
    case Family::Cissoid: return "cissoid";
    case Family::ModKoebe: return "modkoebe";
    case Family::Mobius: return "mobius";
    case Family::Linear: return "linear";
    case Family::DiLog: return "dilog";
    case Family::Parabola: return "parabola";
    case Family::Secant: return "secant";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "booth") return Family::Booth;
    if (name == "cissoid") return Family::Cissoid;
    if (name == "modkoebe") return Family::ModKoebe;
    if (name == "mobius") return Family::Mobius;
    if (name == "linear") return Family::Linear;
    if (name == "dilog") return Family::DiLog;
    if (name == "parabola") return Family::Parabola;
    if (name == "secant") return Family::Secant;
    return std::nullopt;
}

Generator::Generator(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {
    if (!std::isfinite(p1) || !std::isfinite(p2))
        throw InvalidArgument("Generator: non-finite parameter");
    if (std::abs(eval_closure(cplx(0.0, 0.0))) != 0.0)
        throw NumericFailure("Generator: psi(0) != 0");
}

Generator Generator::booth(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw InvalidArgument("booth: alpha must lie in [0,1)");
    return Generator(Family::Booth, alpha, 0.0);
}

Generator Generator::cissoid(double beta) {
    if (!(beta >= 0.0 && beta < 1.0))
        throw InvalidArgument("cissoid: beta must lie in [0,1)");
    return Generator(Family::Cissoid, beta, 0.0);
}

Generator Generator::modkoebe(double gamma, double eta) {
    if (!(gamma > 0.0))
        throw InvalidArgument("modkoebe: gamma must be positive");
    if (!(eta >= 0.0 && eta < 1.0))
        throw InvalidArgument("modkoebe: eta must lie in [0,1)");
    return Generator(Family::ModKoebe, gamma, eta);
}

Generator Generator::mobius(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidArgument("mobius: alpha must lie in (0,1)");
    if (!(beta > 0.0))
        throw InvalidArgument("mobius: beta must be positive");
    return Generator(Family::Mobius, alpha, beta);
}

Generator Generator::linear(double eta) {
    if (!(eta > 0.0))
        throw InvalidArgument("linear: eta must be positive");
    return Generator(Family::Linear, eta, 0.0);
}

Generator Generator::dilog_generator() {
    return Generator(Family::DiLog, 0.0, 0.0);
}

Generator Generator::parabola_generator() {
    return Generator(Family::Parabola, 0.0, 0.0);
}

Generator Generator::secant(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw InvalidArgument("secant: beta must lie in [0,1]");
    return Generator(Family::Secant, beta, 0.0);
}

Generator Generator::from_family(Family f, const double* params, int n_params) {
    auto need = [&](int n) {
        if (n_params != n || (n > 0 && params == nullptr))
            throw InvalidArgument(std::string(family_name(f)) + ": expected " +
                                  std::to_string(n) + " parameter(s)");
    };
    switch (f) {
    case Family::Booth: need(1); return booth(params[0]);
    case Family::Cissoid: need(1); return cissoid(params[0]);
    case Family::ModKoebe: need(2); return modkoebe(params[0], params[1]);
    case Family::Mobius: need(2); return mobius(params[0], params[1]);
    case Family::Linear: need(1); return linear(params[0]);
    case Family::DiLog: need(0); return dilog_generator();
    case Family::Parabola: need(0); return parabola_generator();
    case Family::Secant: need(1); return secant(params[0]);
    }
    throw InvalidArgument("unknown family");
}

int Generator::param_count() const {
    switch (family_) {
    case Family::ModKoebe:
    case Family::Mobius: return 2;
    case Family::DiLog:
    case Family::Parabola: return 0;
    default: return 1;
    }
}

std::string Generator::describe() const {
    switch (family_) {
    case Family::Booth: return "booth(alpha=" + std::to_string(p1_) + ")";
    case Family::Cissoid: return "cissoid(beta=" + std::to_string(p1_) + ")";
    case Family::ModKoebe:
        return "modkoebe(gamma=" + std::to_string(p1_) + ", eta=" + std::to_string(p2_) + ")";
    case Family::Mobius:
        return "mobius(alpha=" + std::to_string(p1_) + ", beta=" + std::to_string(p2_) + ")";
    case Family::Linear: return "linear(eta=" + std::to_string(p1_) + ")";
    case Family::DiLog: return "dilog";
    case Family::Parabola: return "parabola";
    case Family::Secant: return "secant(beta=" + std::to_string(p1_) + ")";
    }
    return "?";
}

cplx Generator::eval(cplx z) const {
    if (!is_finite(z))
        throw InvalidArgument("Generator::eval: non-finite point");
    if (std::abs(z) >= 1.0)
        throw InvalidArgument("Generator::eval: |z| must be < 1");
    return eval_closure(z);
}

cplx Generator::eval_closure(cplx z) const {
    if (!is_finite(z))
        throw InvalidArgument("Generator::eval_closure: non-finite point");
    switch (family_) {
    case Family::Booth:
        return z / (1.0 - p1_ * z * z);
    case Family::Cissoid:
        return z / ((1.0 - z) * (1.0 + p1_ * z));
    case Family::ModKoebe: {
        const cplx d = 1.0 + p2_ * z;
        return p1_ * z / (d * d);
    }
    case Family::Mobius:
        return p2_ * z / (1.0 + p1_ * z);
    case Family::Linear:
        return p1_ * z;
    case Family::DiLog:
        return std::log(1.0 - z);
    case Family::Parabola: {
        if (z == cplx(0.0, 0.0))
            return z;
        const cplx s = std::sqrt(z);
        const cplx l = std::log((1.0 + s) / (1.0 - s));
        return -l * l;
    }
    case Family::Secant:
        return z / std::cos(p1_ * z);
    }
    throw InvalidArgument("unknown family");
}

cplx Generator::derivative(cplx z) const {
    switch (family_) {
    case Family::Booth: {
        const cplx d = 1.0 - p1_ * z * z;
        return (1.0 + p1_ * z * z) / (d * d);
    }
    case Family::Cissoid: {
        const cplx d = (1.0 - z) * (1.0 + p1_ * z);
        return (1.0 + p1_ * z * z) / (d * d);
    }
    case Family::ModKoebe: {
        const cplx d = 1.0 + p2_ * z;
        return p1_ * (1.0 - p2_ * z) / (d * d * d);
    }
    case Family::Mobius: {
        const cplx d = 1.0 + p1_ * z;
        return p2_ / (d * d);
    }
    case Family::Linear:
        return cplx(p1_, 0.0);
    case Family::DiLog:
        return -1.0 / (1.0 - z);
    case Family::Parabola:
        return -4.0 * atanh_over_sqrt(z) / (1.0 - z);
    case Family::Secant: {
        const cplx c = std::cos(p1_ * z);
        return (1.0 + p1_ * z * std::tan(p1_ * z)) / c;
    }
    }
    throw InvalidArgument("unknown family");
}

cplx Generator::second_derivative(cplx z) const {
    switch (family_) {
    case Family::Booth: {
        const cplx d = 1.0 - p1_ * z * z;
        return 2.0 * p1_ * z * (3.0 + p1_ * z * z) / (d * d * d);
    }
    case Family::Cissoid: {
        const cplx d = (1.0 - z) * (1.0 + p1_ * z);
        const cplx dp = (p1_ - 1.0) - 2.0 * p1_ * z;
        return (2.0 * p1_ * z * d - 2.0 * (1.0 + p1_ * z * z) * dp) / (d * d * d);
    }
    case Family::ModKoebe: {
        const cplx d = 1.0 + p2_ * z;
        return -2.0 * p1_ * p2_ * (2.0 - p2_ * z) / (d * d * d * d);
    }
    case Family::Mobius: {
        const cplx d = 1.0 + p1_ * z;
        return -2.0 * p1_ * p2_ / (d * d * d);
    }
    case Family::Linear:
        return cplx(0.0, 0.0);
    case Family::DiLog: {
        const cplx d = 1.0 - z;
        return -1.0 / (d * d);
    }
    case Family::Parabola: {
        const cplx om = 1.0 - z;
        if (std::abs(z) < 1e-3) {
            // (-16/3 - (8/5) z - (32/35) z^2) / (1-z)^2, error O(z^3)
            const cplx num = cplx(-16.0 / 3.0, 0.0) + z * (cplx(-8.0 / 5.0, 0.0) + z * cplx(-32.0 / 35.0, 0.0));
            return num / (om * om);
        }
        const cplx q = atanh_over_sqrt(z);
        return (-2.0 + 2.0 * q * (1.0 - 3.0 * z)) / (z * om * om);
    }
    case Family::Secant: {
        const cplx c = std::cos(p1_ * z);
        const cplx t = std::tan(p1_ * z);
        const cplx bz = p1_ * z;
        return p1_ * (2.0 * t + bz * t * t + bz / (c * c)) / c;
    }
    }
    throw InvalidArgument("unknown family");
}

double Generator::derivative_at_zero() const {
    switch (family_) {
    case Family::Booth:
    case Family::Cissoid:
    case Family::Secant: return 1.0;
    case Family::ModKoebe: return p1_;
    case Family::Mobius: return p2_;
    case Family::Linear: return p1_;
    case Family::DiLog: return -1.0;
    case Family::Parabola: return -4.0;
    }
    throw InvalidArgument("unknown family");
}

double Generator::psi_over_t(double t) const {
    if (!(t > -1.0 && t < 1.0))
        throw InvalidArgument("psi_over_t: t must lie in (-1,1)");
    switch (family_) {
    case Family::Booth:
        return 1.0 / (1.0 - p1_ * t * t);
    case Family::Cissoid:
        return 1.0 / ((1.0 - t) * (1.0 + p1_ * t));
    case Family::ModKoebe: {
        const double d = 1.0 + p2_ * t;
        return p1_ / (d * d);
    }
    case Family::Mobius:
        return p2_ / (1.0 + p1_ * t);
    case Family::Linear:
        return p1_;
    case Family::DiLog:
        if (std::abs(t) < 1e-8)
            return -1.0 - 0.5 * t;
        return std::log1p(-t) / t;
    case Family::Parabola: {
        double q;
        if (std::abs(t) < 1e-6) {
            q = 1.0 + t / 3.0 + t * t / 5.0;
        } else if (t > 0.0) {
            const double s = std::sqrt(t);
            q = std::atanh(s) / s;
        } else {
            const double s = std::sqrt(-t);
            q = std::atan(s) / s;
        }
        return -4.0 * q * q;
    }
    case Family::Secant:
        return 1.0 / std::cos(p1_ * t);
    }
    throw InvalidArgument("unknown family");
}

PowerSeries Generator::series(int order) const {
    if (order < 2)
        throw InvalidArgument("Generator::series: order must be at least 2");
    PowerSeries out(order);
    switch (family_) {
    case Family::Booth: {
        double ak = 1.0;
        for (int n = 1; n < order; n += 2) {
            out.set_coeff(n, cplx(ak, 0.0));
            ak *= p1_;
        }
        return out;
    }
    case Family::Cissoid: {
        double mbn = -p1_; // (-beta)^n
        for (int n = 1; n < order; ++n) {
            out.set_coeff(n, cplx((1.0 - mbn) / (1.0 + p1_), 0.0));
            mbn *= -p1_;
        }
        return out;
    }
    case Family::ModKoebe: {
        double me = 1.0; // (-eta)^{n-1}
        for (int n = 1; n < order; ++n) {
            out.set_coeff(n, cplx(p1_ * n * me, 0.0));
            me *= -p2_;
        }
        return out;
    }
    case Family::Mobius: {
        double ma = 1.0; // (-alpha)^{n-1}
        for (int n = 1; n < order; ++n) {
            out.set_coeff(n, cplx(p2_ * ma, 0.0));
            ma *= -p1_;
        }
        return out;
    }
    case Family::Linear:
        out.set_coeff(1, cplx(p1_, 0.0));
        return out;
    case Family::DiLog:
        for (int n = 1; n < order; ++n)
            out.set_coeff(n, cplx(-1.0 / n, 0.0));
        return out;
    case Family::Parabola: {
        // psi = -4 z (sum_k z^k/(2k+1))^2
        PowerSeries t(order);
        for (int k = 0; k < order; ++k)
            t.set_coeff(k, cplx(1.0 / (2.0 * k + 1.0), 0.0));
        const PowerSeries sq = series_mul(t, t);
        for (int n = 1; n < order; ++n)
            out.set_coeff(n, -4.0 * sq.coeff(n - 1));
        return out;
    }
    case Family::Secant: {
        PowerSeries cosine(order);
        double fact = 1.0;
        double b2k = 1.0;
        int sign = 1;
        for (int k = 0; 2 * k < order; ++k) {
            cosine.set_coeff(2 * k, cplx(sign * b2k / fact, 0.0));
            sign = -sign;
            b2k *= p1_ * p1_;
            fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        }
        const PowerSeries sec = series_reciprocal(cosine);
        for (int n = 1; n < order; ++n)
            out.set_coeff(n, sec.coeff(n - 1));
        return out;
    }
    }
    throw InvalidArgument("unknown family");
}

bool Generator::has_closed_extremes() const {
    switch (family_) {
    case Family::Booth:
    case Family::Cissoid:
    case Family::Mobius:
    case Family::Linear:
        return true;
    case Family::ModKoebe:
        return p2_ <= modkoebe_convex_eta_max() + 1e-12;
    default:
        return false;
    }
}

bool Generator::has_closed_extremal() const {
    return family_ != Family::Parabola;
}

cplx Generator::extremal_ratio(cplx z) const {
    if (!is_finite(z))
        throw InvalidArgument("extremal_ratio: non-finite point");
    switch (family_) {
    case Family::Booth: {
        if (p1_ < kDegenerateParam)
            return std::exp(z);
        const double s = std::sqrt(p1_);
        return pow_principal((1.0 + s * z) / (1.0 - s * z), 1.0 / (2.0 * s));
    }
    case Family::Cissoid:
        return pow_principal((1.0 + p1_ * z) / (1.0 - z), 1.0 / (1.0 + p1_));
    case Family::ModKoebe:
        return std::exp(p1_ * z / (1.0 + p2_ * z));
    case Family::Mobius:
        return pow_principal(1.0 + p1_ * z, p2_ / p1_);
    case Family::Linear:
        return std::exp(p1_ * z);
    case Family::DiLog:
        return std::exp(-dilog(z));
    case Family::Secant: {
        if (p1_ < kDegenerateParam)
            return std::exp(z);
        const cplx bz = p1_ * z;
        return pow_principal((1.0 + std::sin(bz)) / std::cos(bz), 1.0 / p1_);
    }
    case Family::Parabola:
        throw InvalidArgument("extremal_ratio: no closed form for the parabola generator");
    }
    throw InvalidArgument("unknown family");
}

double Generator::margin_circle_radius() const {
    switch (family_) {
    case Family::Cissoid:
    case Family::DiLog:
    case Family::Parabola:
        return 0.999;
    default:
        return 1.0;
    }
}

bool Generator::boundary_requires_rho_below_one() const {
    switch (family_) {
    case Family::Cissoid:
    case Family::DiLog:
    case Family::Parabola:
        return true;
    default:
        return false;
    }
}

namespace {

// Grid scan of g over [0, 2 pi) with golden refinement around the best cell.
double grid_min(const std::function<double(double)>& g, int grid) {
    if (grid < 8)
        throw InvalidArgument("grid scan: need at least 8 samples");
    double best = g(0.0);
    int best_k = 0;
    const double h = 2.0 * kPi / grid;
    for (int k = 1; k < grid; ++k) {
        const double v = g(k * h);
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    double refined = best;
    golden_min(g, (best_k - 1) * h, (best_k + 1) * h, 1e-10, &refined);
    return std::min(best, refined);
}

double grid_max(const std::function<double(double)>& g, int grid) {
    return -grid_min([&](double t) { return -g(t); }, grid);
}

} // namespace

RealExtremes real_part_extremes(const Generator& gen, double r, int grid) {
    if (!(r > 0.0 && r < 1.0))
        throw InvalidArgument("real_part_extremes: r must lie in (0,1)");
    RealExtremes out;
    if (gen.has_closed_extremes()) {
        out.min_re = gen.eval(cplx(-r, 0.0)).real();
        out.max_re = gen.eval(cplx(r, 0.0)).real();
        out.closed_form = true;
        return out;
    }
    auto g = [&](double th) { return gen.eval_closure(std::polar(r, th)).real(); };
    out.min_re = grid_min(g, grid);
    out.max_re = grid_max(g, grid);
    out.closed_form = false;
    return out;
}

ExtremalFunction extremal_function(const Generator& gen, int order) {
    if (order < 2)
        throw InvalidArgument("extremal_function: order must be at least 2");
    const PowerSeries psi = gen.series(order);
    const PowerSeries integral = series_integrate_quotient(psi);
    const PowerSeries ratio = series_exp(integral);
    ExtremalFunction out{gen, ratio.mul_by_z(), gen.has_closed_extremal()};
    if (out.has_closed_form && order >= 48) {
        // Series and closed form must agree well inside the disk; truncation
        // at this order is far below the check tolerance for |z| <= 0.7.
        for (int k = 0; k < 8; ++k) {
            const cplx z = std::polar(0.7, 2.0 * kPi * k / 8.0 + 0.1);
            const cplx a = out.f.eval(z);
            const cplx b = out.closed_eval(z);
            if (std::abs(a - b) > 1e-8 * (1.0 + std::abs(b)))
                throw NumericFailure("extremal_function: series and closed form disagree for " +
                                     gen.describe());
        }
    }
    return out;
}

cplx ExtremalFunction::closed_ratio(cplx z) const {
    if (!has_closed_form)
        throw InvalidArgument("ExtremalFunction: no closed form attached");
    return generator.extremal_ratio(z);
}

cplx ExtremalFunction::closed_eval(cplx z) const {
    return z * closed_ratio(z);
}

double convexity_margin(const Generator& gen, int grid) {
    const double rho = gen.margin_circle_radius();
    auto g = [&](double th) {
        const cplx z = std::polar(rho, th);
        const cplx d1 = gen.derivative(z);
        if (std::abs(d1) < 1e-13)
            throw NumericFailure("convexity_margin: psi' vanishes on the grid circle");
        return (1.0 + z * gen.second_derivative(z) / d1).real();
    };
    return grid_min(g, grid);
}

double exp_convexity_margin(const Generator& gen, int grid) {
    const double rho = gen.margin_circle_radius();
    auto g = [&](double th) {
        const cplx z = std::polar(rho, th);
        const cplx d1 = gen.derivative(z);
        if (std::abs(d1) < 1e-13)
            throw NumericFailure("exp_convexity_margin: psi' vanishes on the grid circle");
        return (1.0 + z * gen.second_derivative(z) / d1 + z * d1).real();
    };
    return grid_min(g, grid);
}

double extremal_ratio_convexity_margin(const Generator& gen, double rho, int grid) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw InvalidArgument("extremal_ratio_convexity_margin: rho must lie in (0,1]");
    auto g = [&](double th) {
        const cplx z = std::polar(rho, th);
        const cplx p = gen.eval_closure(z);
        if (std::abs(p) < 1e-13)
            throw NumericFailure("extremal_ratio_convexity_margin: psi vanishes on the circle");
        return (z * gen.derivative(z) / p + p).real();
    };
    return grid_min(g, grid);
}

bool region_contains(const RegionSpec& region, cplx w, int grid) {
    const Generator& gen = region.generator;
    switch (gen.family()) {
    case Family::Mobius: {
        const double alpha = gen.param1();
        const double beta = gen.param2();
        return std::abs(w - 1.0) < std::abs(beta - alpha * (w - 1.0));
    }
    case Family::Linear:
        return std::abs(w - 1.0) < gen.param1();
    default:
        return boundary_winding_contains(gen, w, grid);
    }
}

bool boundary_winding_contains(const Generator& gen, cplx w, int grid) {
    return shifted_range_region(gen, grid).contains(w);
}

std::vector<cplx> boundary_curve(const Generator& gen, double rho, int samples) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw InvalidArgument("boundary_curve: rho must lie in (0,1]");
    if (samples < 8)
        throw InvalidArgument("boundary_curve: need at least 8 samples");
    if (gen.boundary_requires_rho_below_one() && rho > 1.0 - 1e-12)
        throw InvalidArgument("boundary_curve: " + gen.describe() +
                              " is singular at z = 1; rho must be < 1");
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k)
        pts.push_back(gen.eval_closure(std::polar(rho, 2.0 * kPi * k / samples)));
    return pts;
}

WindingRegion::WindingRegion(std::vector<cplx> closed_curve) : pts_(std::move(closed_curve)) {
    if (pts_.size() < 8)
        throw InvalidArgument("WindingRegion: need at least 8 curve points");
    double lo_re = pts_[0].real(), hi_re = lo_re;
    double lo_im = pts_[0].imag(), hi_im = lo_im;
    for (const cplx& p : pts_) {
        if (!is_finite(p))
            throw InvalidArgument("WindingRegion: non-finite curve point");
        lo_re = std::min(lo_re, p.real());
        hi_re = std::max(hi_re, p.real());
        lo_im = std::min(lo_im, p.imag());
        hi_im = std::max(hi_im, p.imag());
    }
    scale_ = std::hypot(hi_re - lo_re, hi_im - lo_im);
    if (!(scale_ > 0.0))
        throw InvalidArgument("WindingRegion: degenerate curve");
}

double WindingRegion::boundary_distance(cplx w) const {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = pts_.size();
    for (size_t i = 0; i < n; ++i) {
        const cplx a = pts_[i];
        const cplx b = pts_[(i + 1) % n];
        const cplx ab = b - a;
        const double len2 = std::norm(ab);
        double t = 0.0;
        if (len2 > 0.0)
            t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
        best = std::min(best, std::abs(w - (a + t * ab)));
    }
    return best;
}

int WindingRegion::winding_number(cplx w) const {
    if (!is_finite(w))
        throw InvalidArgument("winding_number: non-finite point");
    if (boundary_distance(w) < 1e-9 * (scale_ + std::abs(w)))
        throw NumericFailure("winding_number: point too close to the sampled boundary "
                             "to classify at this grid resolution");
    int wn = 0;
    const size_t n = pts_.size();
    for (size_t i = 0; i < n; ++i) {
        const cplx a = pts_[i];
        const cplx b = pts_[(i + 1) % n];
        const double cross = (b.real() - a.real()) * (w.imag() - a.imag()) -
                             (w.real() - a.real()) * (b.imag() - a.imag());
        if (a.imag() <= w.imag()) {
            if (b.imag() > w.imag() && cross > 0.0)
                ++wn;
        } else {
            if (b.imag() <= w.imag() && cross < 0.0)
                --wn;
        }
    }
    return wn;
}

WindingRegion shifted_range_region(const Generator& gen, int grid, double rho) {
    std::vector<cplx> curve = boundary_curve(gen, rho, grid);
    for (cplx& p : curve)
        p += 1.0;
    return WindingRegion(std::move(curve));
}

WindingRegion extremal_ratio_region(const Generator& gen, int grid, double rho) {
    if (!gen.has_closed_extremal())
        throw InvalidArgument("extremal_ratio_region: no closed extremal for " + gen.describe());
    if (grid < 8)
        throw InvalidArgument("extremal_ratio_region: need at least 8 samples");
    std::vector<cplx> curve;
    curve.reserve(static_cast<size_t>(grid));
    for (int k = 0; k < grid; ++k)
        curve.push_back(gen.extremal_ratio(std::polar(rho, 2.0 * kPi * k / grid)));
    return WindingRegion(std::move(curve));
}

} // namespace starlike

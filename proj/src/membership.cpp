#include "membership.hpp"

#include "errors.hpp"
#include "growth.hpp"
#include "radii.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCertGrid = 4096;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

SchwarzWitness SchwarzWitness::monomial(int k) {
    if (k < 1)
        throw InvalidArgument("SchwarzWitness::monomial: power must be >= 1");
    SchwarzWitness w(Kind::Monomial);
    w.power_ = k;
    w.certify();
    return w;
}

SchwarzWitness SchwarzWitness::moebius_twist(cplx a) {
    if (!is_finite(a) || !(std::abs(a) < 1.0))
        throw InvalidArgument("SchwarzWitness::moebius_twist: need |a| < 1");
    SchwarzWitness w(Kind::MoebiusTwist);
    w.a_ = a;
    w.certify();
    return w;
}

SchwarzWitness SchwarzWitness::scaled_poly(std::vector<cplx> coeffs) {
    if (coeffs.size() < 2)
        throw InvalidArgument("SchwarzWitness::scaled_poly: need at least a z coefficient");
    if (std::abs(coeffs[0]) != 0.0)
        throw InvalidArgument("SchwarzWitness::scaled_poly: omega(0) must vanish");
    SchwarzWitness w(Kind::ScaledPoly);
    w.coeffs_ = std::move(coeffs);
    // Rescale so the boundary sup norm is strictly below 1; the margin
    // exceeds the grid's underestimate of the true sup for small degrees.
    double sup = 0.0;
    for (int k = 0; k < kCertGrid; ++k)
        sup = std::max(sup, std::abs(w.eval(std::polar(1.0, 2.0 * kPi * k / kCertGrid))));
    if (!(sup > 0.0))
        throw InvalidArgument("SchwarzWitness::scaled_poly: zero polynomial");
    const double scale = 1.0 / (sup * (1.0 + 1e-4));
    for (cplx& c : w.coeffs_)
        c *= scale;
    w.certify();
    return w;
}

void SchwarzWitness::certify() const {
    double sup = 0.0;
    for (int k = 0; k < kCertGrid; ++k)
        sup = std::max(sup, std::abs(eval(std::polar(1.0, 2.0 * kPi * k / kCertGrid))));
    if (!(sup <= 1.0 + 1e-12))
        throw InvalidArgument("SchwarzWitness: boundary grid sup norm " + fmt(sup) +
                              " exceeds 1; not a Schwarz function");
    if (std::abs(eval(cplx(0.0, 0.0))) != 0.0)
        throw InvalidArgument("SchwarzWitness: omega(0) != 0");
}

cplx SchwarzWitness::eval(cplx z) const {
    switch (kind_) {
    case Kind::Monomial: {
        cplx p(1.0, 0.0);
        for (int i = 0; i < power_; ++i)
            p *= z;
        return p;
    }
    case Kind::MoebiusTwist:
        return z * (z + a_) / (1.0 + std::conj(a_) * z);
    case Kind::ScaledPoly: {
        cplx acc = coeffs_.back();
        for (int n = static_cast<int>(coeffs_.size()) - 2; n >= 0; --n)
            acc = acc * z + coeffs_[static_cast<size_t>(n)];
        return acc;
    }
    }
    throw InvalidArgument("unknown witness kind");
}

PowerSeries SchwarzWitness::series(int order) const {
    PowerSeries out(order);
    switch (kind_) {
    case Kind::Monomial:
        if (power_ >= order)
            throw InvalidArgument("SchwarzWitness::series: order too small for monomial power");
        out.set_coeff(power_, cplx(1.0, 0.0));
        return out;
    case Kind::MoebiusTwist: {
        // z(z+a) sum_j (-conj(a) z)^j
        out.set_coeff(1, a_);
        const cplx m = -std::conj(a_);
        cplx mj(1.0, 0.0); // m^{n-2}
        for (int n = 2; n < order; ++n) {
            out.set_coeff(n, a_ * mj * m + mj);
            mj *= m;
        }
        return out;
    }
    case Kind::ScaledPoly:
        for (int n = 1; n < std::min<int>(order, static_cast<int>(coeffs_.size())); ++n)
            out.set_coeff(n, coeffs_[static_cast<size_t>(n)]);
        return out;
    }
    throw InvalidArgument("unknown witness kind");
}

bool SchwarzWitness::is_identity() const {
    return kind_ == Kind::Monomial && power_ == 1;
}

std::string SchwarzWitness::describe() const {
    switch (kind_) {
    case Kind::Monomial:
        return "monomial(" + std::to_string(power_) + ")";
    case Kind::MoebiusTwist: {
        std::ostringstream os;
        os << "moebius_twist(" << fmt(a_.real()) << (a_.imag() < 0 ? "-" : "+")
           << fmt(std::abs(a_.imag())) << "i)";
        return os.str();
    }
    case Kind::ScaledPoly:
        return "scaled_poly(deg " + std::to_string(coeffs_.size() - 1) + ")";
    }
    return "?";
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

SchwarzWitness random_witness(std::mt19937_64& rng) {
    switch (rng() % 3) {
    case 0:
        return SchwarzWitness::monomial(1 + static_cast<int>(rng() % 6));
    case 1: {
        const double rad = uniform_real(rng, 0.05, 0.85);
        const double ang = uniform_real(rng, 0.0, 2.0 * kPi);
        return SchwarzWitness::moebius_twist(std::polar(rad, ang));
    }
    default: {
        const int deg = 2 + static_cast<int>(rng() % 5);
        std::vector<cplx> c(static_cast<size_t>(deg) + 1, cplx(0.0, 0.0));
        for (int n = 1; n <= deg; ++n)
            c[static_cast<size_t>(n)] = std::polar(uniform_real(rng, 0.1, 1.0),
                                                   uniform_real(rng, 0.0, 2.0 * kPi));
        return SchwarzWitness::scaled_poly(std::move(c));
    }
    }
}

bool Report::passed() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& it) { return it.passed; });
}

int Report::failures() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(),
                                          [](const CheckItem& it) { return !it.passed; }));
}

void Report::add(std::string name, bool ok, std::string detail) {
    items.push_back({std::move(name), ok, std::move(detail)});
}

cplx MembershipSample::log_deriv_ratio(cplx z) const {
    const int n = f.order();
    // z f'(z) has coefficient n a_n.
    cplx zfp = static_cast<double>(n - 1) * f.coeff(n - 1);
    cplx fv = f.coeff(n - 1);
    for (int k = n - 2; k >= 0; --k) {
        zfp = zfp * z + static_cast<double>(k) * f.coeff(k);
        fv = fv * z + f.coeff(k);
    }
    if (std::abs(fv) < 1e-290)
        throw NumericFailure("log_deriv_ratio: f vanishes at the sample point");
    return zfp / fv - 1.0;
}

cplx MembershipSample::closed_eval(cplx z) const {
    switch (closed_kind) {
    case ClosedKind::ExtremalRatio:
        return z * generator.extremal_ratio(z);
    case ClosedKind::LinearMonomial: {
        const double eta = generator.param1();
        cplx zk(1.0, 0.0);
        for (int i = 0; i < closed_power; ++i)
            zk *= z;
        return z * std::exp(eta * zk / static_cast<double>(closed_power));
    }
    case ClosedKind::None:
        break;
    }
    throw InvalidArgument("MembershipSample: no closed form attached");
}

MembershipSample sample_member(const Generator& gen, const SchwarzWitness& witness, int order,
                               const WindingRegion* cached_region, bool check_region) {
    if (order < 16)
        throw InvalidArgument("sample_member: order must be at least 16");
    const PowerSeries psi = gen.series(order);
    const PowerSeries omega = witness.series(order);
    const PowerSeries composed = series_compose(psi, omega);
    const PowerSeries ratio = series_exp(series_integrate_quotient(composed));

    MembershipSample s{gen, witness, ratio.mul_by_z()};
    if (std::abs(s.f.coeff(0)) != 0.0 || std::abs(s.f.coeff(1) - 1.0) > 1e-12)
        throw NumericFailure("sample_member: normalization lost (a0 != 0 or a1 != 1)");

    if (check_region) {
        std::optional<WindingRegion> local;
        const WindingRegion* region = cached_region;
        if (!region) {
            local.emplace(shifted_range_region(gen, kCertGrid));
            region = &*local;
        }
        for (int k = 0; k < 256; ++k) {
            const cplx z = std::polar(0.8, 2.0 * kPi * k / 256.0);
            const cplx w = 1.0 + s.log_deriv_ratio(z);
            if (!region->contains(w))
                throw NumericFailure("sample_member: z f'/f - 1 escaped 1 + psi(disk) at theta index " +
                                     std::to_string(k) + " for witness " + witness.describe());
        }
    }

    if (witness.is_identity() && gen.has_closed_extremal()) {
        s.has_closed_form = true;
        s.closed_kind = MembershipSample::ClosedKind::ExtremalRatio;
    } else if (gen.family() == Family::Linear) {
        // f = z exp(eta z^k / k) for a pure monomial witness.
        const PowerSeries ws = witness.series(order);
        int power = 0;
        bool pure = true;
        for (int n = 1; n < order && pure; ++n) {
            const double c = std::abs(ws.coeff(n));
            if (c > 0.0) {
                if (power == 0 && std::abs(ws.coeff(n) - 1.0) < 1e-15)
                    power = n;
                else
                    pure = false;
            }
        }
        if (pure && power >= 1) {
            s.has_closed_form = true;
            s.closed_kind = MembershipSample::ClosedKind::LinearMonomial;
            s.closed_power = power;
        }
    }
    return s;
}

namespace {

// Crude but honest tail estimate beyond the series order: a geometric
// continuation of the largest of the last eight coefficient terms.
double tail_estimate(const PowerSeries& f, double r) {
    const int n = f.order();
    double m = 0.0;
    for (int k = std::max(1, n - 8); k < n; ++k)
        m = std::max(m, std::abs(f.coeff(k)) * std::pow(r, k));
    return m * r / (1.0 - r);
}

// |f_lo(z) - f_hi(z)| is bounded by the dropped-term majorant.
double order_gap_bound(const PowerSeries& hi, int lo_order, double r) {
    double s = 0.0;
    for (int k = lo_order; k < hi.order(); ++k)
        s += std::abs(hi.coeff(k)) * std::pow(r, k);
    return s + tail_estimate(hi, r);
}

} // namespace

Report verify_growth(const MembershipSample& sample, std::span<const double> radii, int grid) {
    if (grid < 8)
        throw InvalidArgument("verify_growth: grid too small");
    for (double r : radii)
        if (!(r > 0.0 && r <= 0.95))
            throw InvalidArgument("verify_growth: radii must lie in (0, 0.95] "
                                  "(series validity margin)");
    Report rep;
    const int lo_order = sample.f.order();
    const MembershipSample hi =
        sample_member(sample.generator, sample.witness, 2 * lo_order, nullptr, false);

    for (double r : radii) {
        const GrowthInterval gi = growth_interval(sample.generator, r);
        const double tail_hi = tail_estimate(hi.f, r);
        const double gap_allow = order_gap_bound(hi.f, lo_order, r) + 1e-12;
        const double eps = 1e-8 + tail_hi;

        int violations = 0;
        int order_disagreements = 0;
        double worst_slack = 1e300;
        double worst_theta = 0.0;
        for (int k = 0; k < grid; ++k) {
            const cplx z = std::polar(r, 2.0 * kPi * k / grid);
            const double v_lo = std::abs(sample.eval(z));
            const double v_hi = std::abs(hi.eval(z));
            if (std::abs(v_lo - v_hi) > gap_allow + 1e-12 * (1.0 + v_hi))
                ++order_disagreements;
            const double slack = std::min(v_hi - gi.lower, gi.upper - v_hi);
            if (slack < worst_slack) {
                worst_slack = slack;
                worst_theta = 2.0 * kPi * k / grid;
            }
            if (v_hi < gi.lower - eps || v_hi > gi.upper + eps)
                ++violations;
        }
        std::ostringstream os;
        os << "witness " << sample.witness.describe() << ", worst slack " << fmt(worst_slack)
           << " at theta " << fmt(worst_theta) << ", eps " << fmt(eps);
        if (violations > 0)
            os << ", " << violations << " violation(s)";
        if (order_disagreements > 0)
            os << ", " << order_disagreements << " order-agreement failure(s)";
        rep.add("growth sandwich r=" + fmt(r) + (gi.sharp ? "" : " [heuristic bounds]"),
                violations == 0 && order_disagreements == 0, os.str());
    }
    return rep;
}

Report verify_bohr_pair(const MembershipSample& f, const SchwarzWitness& sub, double r) {
    if (f.generator.family() != Family::Booth)
        throw InvalidArgument("verify_bohr_pair: sample must come from the booth family");
    if (!(r > 0.0 && r <= 1.0 / 3.0 + 1e-15))
        throw HypothesisViolation("verify_bohr_pair: the majorant lemma needs r <= 1/3");

    Report rep;
    const PowerSeries g = series_compose(f.f, sub.series(f.f.order()));
    const double m_g = majorant_sum(g, r);
    const double m_f = majorant_sum(f.f, r);
    const double fhat_r = r * f.generator.extremal_ratio(cplx(r, 0.0)).real();
    const double koebe = f.generator.extremal_ratio(cplx(-1.0, 0.0)).real();

    rep.add("majorant(g) <= majorant(f) at r=" + fmt(r), m_f - m_g >= -1e-10,
            "slack " + fmt(m_f - m_g) + " [" + sub.describe() + "]");
    rep.add("majorant(f) <= fhat(r)", fhat_r - m_f >= -1e-10, "slack " + fmt(fhat_r - m_f));

    const double bohr = bohr_radius_booth(f.generator.param1()).value;
    if (r <= bohr + 1e-12) {
        rep.add("fhat(r) <= -fhat(-1) (r within Bohr radius)", koebe - fhat_r >= -1e-10,
                "slack " + fmt(koebe - fhat_r));
    } else {
        rep.add("r beyond Bohr radius: fhat(r) > -fhat(-1) expected", fhat_r > koebe,
                "fhat(r) " + fmt(fhat_r) + " vs " + fmt(koebe));
    }
    return rep;
}

Report verify_fz_subordination(const MembershipSample& sample, int grid) {
    if (sample.generator.family() != Family::ModKoebe)
        throw InvalidArgument("verify_fz_subordination: sample must come from the modkoebe family");
    const double eta = sample.generator.param2();
    if (!(eta <= modkoebe_convex_eta_max() + 1e-12))
        throw HypothesisViolation(
            "verify_fz_subordination: subordination proven only for eta <= 2-sqrt(3)");
    if (grid < 8)
        throw InvalidArgument("verify_fz_subordination: grid too small");

    Report rep;
    rep.add("center matches: f(z)/z -> 1", std::abs(sample.f.coeff(1) - 1.0) <= 1e-12,
            "a1 = " + fmt(sample.f.coeff(1).real()));

    const WindingRegion region = extremal_ratio_region(sample.generator, 4096, 0.999);
    for (double rho : {0.25, 0.5, 0.75, 0.9}) {
        int exterior = 0;
        for (int k = 0; k < grid; ++k) {
            const cplx z = std::polar(rho, 2.0 * kPi * k / grid);
            const cplx v = sample.eval(z) / z;
            if (!region.contains(v))
                ++exterior;
        }
        rep.add("f/z inside extremal-ratio region at rho=" + fmt(rho), exterior == 0,
                exterior == 0 ? "all " + std::to_string(grid) + " grid values interior"
                              : std::to_string(exterior) + " exterior point(s) [" +
                                    sample.witness.describe() + "]");
    }
    return rep;
}

Report verify_growth_suite(const Generator& gen, const VerifySuiteConfig& cfg) {
    if (cfg.witnesses < 1)
        throw InvalidArgument("verify_growth_suite: need at least one witness");
    if (cfg.order < 16)
        throw InvalidArgument("verify_growth_suite: order must be at least 16");
    if (cfg.grid < 64)
        throw InvalidArgument("verify_growth_suite: grid must be at least 64");

    Report rep;
    rep.seed = cfg.seed;
    std::mt19937_64 rng(cfg.seed);
    const WindingRegion region = shifted_range_region(gen, kCertGrid);
    int failed_samples = 0;
    for (int i = 0; i < cfg.witnesses; ++i) {
        const SchwarzWitness w = random_witness(rng);
        const MembershipSample s = sample_member(gen, w, cfg.order, &region);
        Report one = verify_growth(s, cfg.radii, cfg.grid);
        if (!one.passed())
            ++failed_samples;
        for (CheckItem& it : one.items)
            rep.items.push_back({"sample " + std::to_string(i) + ": " + it.name, it.passed,
                                 std::move(it.detail)});
    }
    rep.items.insert(rep.items.begin(),
                     {"growth suite " + gen.describe() + " (" + std::to_string(cfg.witnesses) +
                          " witnesses, seed " + std::to_string(cfg.seed) + ")",
                      failed_samples == 0,
                      failed_samples == 0 ? "all samples inside the envelope"
                                          : std::to_string(failed_samples) + " failing sample(s)"});
    return rep;
}

Report verify_bohr_suite(double alpha, int witnesses, std::uint64_t seed) {
    if (witnesses < 1)
        throw InvalidArgument("verify_bohr_suite: need at least one witness");
    Report rep;
    rep.seed = seed;
    const Generator gen = Generator::booth(alpha);
    const double r = bohr_radius_booth(alpha).value;
    rep.add("bohr radius r(alpha) for " + gen.describe(), r > 0.0 && r < 1.0 / 3.0,
            "r = " + fmt(r));

    std::mt19937_64 rng(seed);
    const MembershipSample fhat = sample_member(gen, SchwarzWitness::monomial(1), 64);
    for (int i = 0; i < witnesses; ++i) {
        const SchwarzWitness sub = random_witness(rng);
        Report one = verify_bohr_pair(fhat, sub, r);
        for (CheckItem& it : one.items)
            rep.items.push_back({"witness " + std::to_string(i) + ": " + it.name, it.passed,
                                 std::move(it.detail)});
    }
    return rep;
}

Report verify_subordination_suite(double gamma, double eta, int witnesses, int grid,
                                  std::uint64_t seed) {
    if (witnesses < 1)
        throw InvalidArgument("verify_subordination_suite: need at least one witness");
    Report rep;
    rep.seed = seed;
    const Generator gen = Generator::modkoebe(gamma, eta);
    std::mt19937_64 rng(seed);
    const WindingRegion member_region = shifted_range_region(gen, kCertGrid);
    int failed = 0;
    for (int i = 0; i < witnesses; ++i) {
        const SchwarzWitness w = random_witness(rng);
        // Order 128: at rho = 0.9 the truncation tail must stay far below
        // the sample-to-boundary distance of the subordination region.
        const MembershipSample s = sample_member(gen, w, 128, &member_region);
        Report one = verify_fz_subordination(s, grid);
        if (!one.passed())
            ++failed;
        for (CheckItem& it : one.items)
            rep.items.push_back({"sample " + std::to_string(i) + ": " + it.name, it.passed,
                                 std::move(it.detail)});
    }
    rep.items.insert(rep.items.begin(),
                     {"subordination suite " + gen.describe() + " (" + std::to_string(witnesses) +
                          " witnesses, seed " + std::to_string(seed) + ")",
                      failed == 0,
                      failed == 0 ? "all sampled f/z values interior"
                                  : std::to_string(failed) + " failing sample(s)"});
    return rep;
}

} // namespace starlike

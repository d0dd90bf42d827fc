#include "starlike/starlike.h"

#include "catalog.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "membership.hpp"
#include "radii.hpp"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

using namespace starlike;

struct slk_generator {
    Generator gen;
};

struct slk_report {
    Report rep;
};

namespace {

thread_local std::string g_last_error;

slk_status fail(slk_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs fn, translating the library's exception taxonomy to status codes.
template <typename Fn>
slk_status guarded(Fn&& fn) {
    try {
        fn();
        return SLK_OK;
    } catch (const HypothesisViolation& e) {
        return fail(SLK_ERR_HYPOTHESIS, e.what());
    } catch (const InvalidArgument& e) {
        return fail(SLK_ERR_INVALID_ARGUMENT, e.what());
    } catch (const NumericFailure& e) {
        return fail(SLK_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(SLK_ERR_NUMERIC, e.what());
    }
}

slk_status require(bool ok, const char* what) {
    return ok ? SLK_OK : fail(SLK_ERR_INVALID_ARGUMENT, what);
}

cplx to_cplx(slk_complex z) {
    return {z.re, z.im};
}

slk_complex from_cplx(cplx z) {
    return {z.real(), z.imag()};
}

slk_radius_result from_radius(const RadiusResult& r) {
    return {r.value, r.bracket_lo, r.bracket_hi, r.residual, r.iterations};
}

Family to_family(slk_family f) {
    switch (f) {
    case SLK_FAMILY_BOOTH: return Family::Booth;
    case SLK_FAMILY_CISSOID: return Family::Cissoid;
    case SLK_FAMILY_MODKOEBE: return Family::ModKoebe;
    case SLK_FAMILY_MOBIUS: return Family::Mobius;
    case SLK_FAMILY_LINEAR: return Family::Linear;
    case SLK_FAMILY_DILOG: return Family::DiLog;
    case SLK_FAMILY_PARABOLA: return Family::Parabola;
    case SLK_FAMILY_SECANT: return Family::Secant;
    }
    throw InvalidArgument("unknown family id");
}

} // namespace

extern "C" {

const char* slk_last_error(void) {
    return g_last_error.c_str();
}

const char* slk_status_name(slk_status status) {
    switch (status) {
    case SLK_OK: return "ok";
    case SLK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SLK_ERR_HYPOTHESIS: return "hypothesis_violation";
    case SLK_ERR_NUMERIC: return "numeric_failure";
    }
    return "?";
}

const char* slk_family_name(slk_family family) {
    switch (family) {
    case SLK_FAMILY_BOOTH: return "booth";
    case SLK_FAMILY_CISSOID: return "cissoid";
    case SLK_FAMILY_MODKOEBE: return "modkoebe";
    case SLK_FAMILY_MOBIUS: return "mobius";
    case SLK_FAMILY_LINEAR: return "linear";
    case SLK_FAMILY_DILOG: return "dilog";
    case SLK_FAMILY_PARABOLA: return "parabola";
    case SLK_FAMILY_SECANT: return "secant";
    }
    return "?";
}

slk_status slk_family_from_name(const char* name, slk_family* out) {
    if (slk_status s = require(name && out, "slk_family_from_name: null argument"); s != SLK_OK)
        return s;
    const auto f = family_from_name(name);
    if (!f)
        return fail(SLK_ERR_INVALID_ARGUMENT,
                    "unknown family name (expected booth, cissoid, modkoebe, mobius, linear, "
                    "dilog, parabola or secant)");
    switch (*f) {
    case Family::Booth: *out = SLK_FAMILY_BOOTH; break;
    case Family::Cissoid: *out = SLK_FAMILY_CISSOID; break;
    case Family::ModKoebe: *out = SLK_FAMILY_MODKOEBE; break;
    case Family::Mobius: *out = SLK_FAMILY_MOBIUS; break;
    case Family::Linear: *out = SLK_FAMILY_LINEAR; break;
    case Family::DiLog: *out = SLK_FAMILY_DILOG; break;
    case Family::Parabola: *out = SLK_FAMILY_PARABOLA; break;
    case Family::Secant: *out = SLK_FAMILY_SECANT; break;
    }
    return SLK_OK;
}

int slk_family_param_count(slk_family family) {
    switch (family) {
    case SLK_FAMILY_MODKOEBE:
    case SLK_FAMILY_MOBIUS: return 2;
    case SLK_FAMILY_DILOG:
    case SLK_FAMILY_PARABOLA: return 0;
    default: return 1;
    }
}

slk_status slk_generator_create(slk_family family, const double* params, int n_params,
                                slk_generator** out) {
    if (slk_status s = require(out != nullptr, "slk_generator_create: null out"); s != SLK_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new slk_generator{Generator::from_family(to_family(family), params, n_params)};
    });
}

void slk_generator_destroy(slk_generator* gen) {
    delete gen;
}

slk_status slk_generator_describe(const slk_generator* gen, char* buf, int buf_len) {
    if (slk_status s = require(gen && buf && buf_len > 0, "slk_generator_describe: null argument");
        s != SLK_OK)
        return s;
    const std::string d = gen->gen.describe();
    std::snprintf(buf, static_cast<size_t>(buf_len), "%s", d.c_str());
    return SLK_OK;
}

slk_status slk_generator_eval(const slk_generator* gen, slk_complex z, slk_complex* out) {
    if (slk_status s = require(gen && out, "slk_generator_eval: null argument"); s != SLK_OK)
        return s;
    return guarded([&] { *out = from_cplx(gen->gen.eval(to_cplx(z))); });
}

slk_status slk_generator_real_extremes(const slk_generator* gen, double r, int grid,
                                       double* min_re, double* max_re, int* closed_form) {
    if (slk_status s = require(gen && min_re && max_re, "slk_generator_real_extremes: null argument");
        s != SLK_OK)
        return s;
    return guarded([&] {
        const RealExtremes ex = real_part_extremes(gen->gen, r, grid > 0 ? grid : 4096);
        *min_re = ex.min_re;
        *max_re = ex.max_re;
        if (closed_form)
            *closed_form = ex.closed_form ? 1 : 0;
    });
}

int slk_generator_has_proven_extremes(const slk_generator* gen) {
    return gen && gen->gen.has_closed_extremes() ? 1 : 0;
}

slk_status slk_generator_convexity_margin(const slk_generator* gen, int grid, double* margin) {
    if (slk_status s = require(gen && margin, "slk_generator_convexity_margin: null argument");
        s != SLK_OK)
        return s;
    return guarded([&] { *margin = convexity_margin(gen->gen, grid > 0 ? grid : 4096); });
}

slk_status slk_region_contains(const slk_generator* gen, slk_complex w, int grid, int* inside) {
    if (slk_status s = require(gen && inside, "slk_region_contains: null argument"); s != SLK_OK)
        return s;
    return guarded([&] {
        *inside = region_contains(RegionSpec{gen->gen}, to_cplx(w), grid > 0 ? grid : 4096) ? 1 : 0;
    });
}

slk_status slk_boundary_curve(const slk_generator* gen, double rho, int samples,
                              slk_complex* out) {
    if (slk_status s = require(gen && out && samples > 0, "slk_boundary_curve: null argument");
        s != SLK_OK)
        return s;
    return guarded([&] {
        const std::vector<cplx> curve = boundary_curve(gen->gen, rho, samples);
        for (int i = 0; i < samples; ++i)
            out[i] = from_cplx(curve[static_cast<size_t>(i)]);
    });
}

slk_status slk_growth_interval(const slk_generator* gen, double r, double* lower, double* upper,
                               int* sharp) {
    if (slk_status s = require(gen && lower && upper, "slk_growth_interval: null argument");
        s != SLK_OK)
        return s;
    return guarded([&] {
        const GrowthInterval gi = growth_interval(gen->gen, r);
        *lower = gi.lower;
        *upper = gi.upper;
        if (sharp)
            *sharp = gi.sharp ? 1 : 0;
    });
}

slk_status slk_auxiliary_bounds(const slk_generator* gen, double r, slk_growth_bounds* out) {
    if (slk_status s = require(gen && out, "slk_growth_bounds: null argument"); s != SLK_OK)
        return s;
    return guarded([&] {
        const GrowthBounds b = auxiliary_bounds(gen->gen, r);
        *out = {b.r, b.lower, b.upper, b.re_bound, b.deriv_bound, b.length_bound,
                b.sharp ? 1 : 0};
    });
}

slk_status slk_koebe_radius(const slk_generator* gen, slk_radius_result* out) {
    if (slk_status s = require(gen && out, "slk_koebe_radius: null argument"); s != SLK_OK)
        return s;
    return guarded([&] { *out = from_radius(koebe_radius(gen->gen)); });
}

slk_status slk_arg_bound(const slk_generator* gen, double r, double* bound) {
    if (slk_status s = require(gen && bound, "slk_arg_bound: null argument"); s != SLK_OK)
        return s;
    return guarded([&] { *bound = arg_bound(gen->gen, r); });
}

slk_status slk_bohr_radius_booth(double alpha, slk_radius_result* out) {
    if (slk_status s = require(out != nullptr, "slk_bohr_radius_booth: null out"); s != SLK_OK)
        return s;
    return guarded([&] { *out = from_radius(bohr_radius_booth(alpha)); });
}

slk_status slk_bohr_defining_function(double alpha, double r, double* value) {
    if (slk_status s = require(value != nullptr, "slk_bohr_defining_function: null out");
        s != SLK_OK)
        return s;
    return guarded([&] { *value = bohr_defining_function(alpha, r); });
}

slk_status slk_eta0(double gamma, slk_radius_result* out) {
    if (slk_status s = require(out != nullptr, "slk_eta0: null out"); s != SLK_OK)
        return s;
    return guarded([&] { *out = from_radius(eta0(gamma)); });
}

slk_status slk_eta0_polynomial(double gamma, double eta, double* value) {
    if (slk_status s = require(value != nullptr, "slk_eta0_polynomial: null out"); s != SLK_OK)
        return s;
    return guarded([&] { *value = eta0_polynomial(gamma, eta); });
}

slk_status slk_starlikeness_radius(double gamma, double eta, double order,
                                   slk_radius_result* out, int* whole_disk) {
    if (slk_status s = require(out != nullptr, "slk_starlikeness_radius: null out"); s != SLK_OK)
        return s;
    return guarded([&] {
        const StarlikenessRadius r = starlikeness_radius(gamma, eta, order);
        *out = from_radius(r.root);
        if (whole_disk)
            *whole_disk = r.whole_disk ? 1 : 0;
    });
}

slk_status slk_convexity_threshold(double tol, slk_radius_result* out) {
    if (slk_status s = require(out != nullptr, "slk_convexity_threshold: null out"); s != SLK_OK)
        return s;
    return guarded([&] { *out = from_radius(convexity_threshold_modkoebe(tol)); });
}

slk_status slk_verify_growth(const slk_generator* gen, int witnesses, const double* radii,
                             int n_radii, int grid, int order, unsigned long long seed,
                             slk_report** out) {
    if (slk_status s = require(gen && out, "slk_verify_growth: null argument"); s != SLK_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        VerifySuiteConfig cfg;
        cfg.witnesses = witnesses;
        if (radii && n_radii > 0)
            cfg.radii.assign(radii, radii + n_radii);
        if (grid > 0)
            cfg.grid = grid;
        if (order > 0)
            cfg.order = order;
        cfg.seed = seed;
        *out = new slk_report{verify_growth_suite(gen->gen, cfg)};
    });
}

slk_status slk_verify_bohr(double alpha, int witnesses, unsigned long long seed,
                           slk_report** out) {
    if (slk_status s = require(out != nullptr, "slk_verify_bohr: null out"); s != SLK_OK)
        return s;
    *out = nullptr;
    return guarded([&] { *out = new slk_report{verify_bohr_suite(alpha, witnesses, seed)}; });
}

slk_status slk_verify_subordination(double gamma, double eta, int witnesses, int grid,
                                    unsigned long long seed, slk_report** out) {
    if (slk_status s = require(out != nullptr, "slk_verify_subordination: null out"); s != SLK_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new slk_report{
            verify_subordination_suite(gamma, eta, witnesses, grid > 0 ? grid : 256, seed)};
    });
}

int slk_report_passed(const slk_report* report) {
    return report && report->rep.passed() ? 1 : 0;
}

int slk_report_size(const slk_report* report) {
    return report ? static_cast<int>(report->rep.items.size()) : 0;
}

unsigned long long slk_report_seed(const slk_report* report) {
    return report ? report->rep.seed : 0;
}

const char* slk_report_item_name(const slk_report* report, int index) {
    if (!report || index < 0 || index >= slk_report_size(report))
        return "";
    return report->rep.items[static_cast<size_t>(index)].name.c_str();
}

int slk_report_item_passed(const slk_report* report, int index) {
    if (!report || index < 0 || index >= slk_report_size(report))
        return 0;
    return report->rep.items[static_cast<size_t>(index)].passed ? 1 : 0;
}

const char* slk_report_item_detail(const slk_report* report, int index) {
    if (!report || index < 0 || index >= slk_report_size(report))
        return "";
    return report->rep.items[static_cast<size_t>(index)].detail.c_str();
}

void slk_report_destroy(slk_report* report) {
    delete report;
}

} // extern "C"

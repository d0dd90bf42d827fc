/* starlike: numerical bounds and verification suites for analytic function
 * classes defined by the subordination z f'(z)/f(z) - 1 < psi(z).
 *
 * C API of the shared library. All entry points return slk_status; results
 * come back through out-parameters. Handles are opaque and must be released
 * with their destroy function. On any non-OK status, slk_last_error() holds
 * a thread-local description of what went wrong.
 */
#ifndef STARLIKE_STARLIKE_H
#define STARLIKE_STARLIKE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slk_status {
    SLK_OK = 0,
    SLK_ERR_INVALID_ARGUMENT = 1, /* bad parameter or contract violation */
    SLK_ERR_HYPOTHESIS = 2,       /* outside a theorem's proven range */
    SLK_ERR_NUMERIC = 3           /* non-convergence or failed cross-check */
} slk_status;

typedef enum slk_family {
    SLK_FAMILY_BOOTH = 0,    /* z/(1 - alpha z^2),           params: alpha        */
    SLK_FAMILY_CISSOID = 1,  /* z/((1 - z)(1 + beta z)),     params: beta         */
    SLK_FAMILY_MODKOEBE = 2, /* gamma z/(1 + eta z)^2,       params: gamma, eta   */
    SLK_FAMILY_MOBIUS = 3,   /* beta z/(1 + alpha z),        params: alpha, beta  */
    SLK_FAMILY_LINEAR = 4,   /* eta z,                       params: eta          */
    SLK_FAMILY_DILOG = 5,    /* log(1 - z),                  no params            */
    SLK_FAMILY_PARABOLA = 6, /* -(log((1+sqrt z)/(1-sqrt z)))^2, no params        */
    SLK_FAMILY_SECANT = 7    /* z/cos(beta z),               params: beta         */
} slk_family;

typedef struct slk_generator slk_generator;
typedef struct slk_report slk_report;

typedef struct slk_complex {
    double re;
    double im;
} slk_complex;

/* Circle bounds at |z| = r; sharp is 0 when any hypothesis had to be
 * replaced by a grid scan (the bounds still hold, they are just not
 * attained by a class member). */
typedef struct slk_growth_bounds {
    double r;
    double lower;        /* min |f| */
    double upper;        /* max |f| */
    double re_bound;     /* max Re f/z */
    double deriv_bound;  /* max |f'| */
    double length_bound; /* image arc length of |z| = r */
    int sharp;
} slk_growth_bounds;

/* A solved radius: value, final sign-change bracket, residual of the
 * defining function at the value, and iteration count. */
typedef struct slk_radius_result {
    double value;
    double bracket_lo;
    double bracket_hi;
    double residual;
    int iterations;
} slk_radius_result;

/* Thread-local message for the most recent failing call on this thread. */
const char* slk_last_error(void);

const char* slk_status_name(slk_status status);
const char* slk_family_name(slk_family family);
slk_status slk_family_from_name(const char* name, slk_family* out);
/* Number of real parameters the family takes (0, 1 or 2). */
int slk_family_param_count(slk_family family);

/* ---- generators ---- */

slk_status slk_generator_create(slk_family family, const double* params, int n_params,
                                slk_generator** out);
void slk_generator_destroy(slk_generator* gen);
slk_status slk_generator_describe(const slk_generator* gen, char* buf, int buf_len);

/* psi(z) for |z| < 1. */
slk_status slk_generator_eval(const slk_generator* gen, slk_complex z, slk_complex* out);

/* min/max of Re psi over |z| = r. closed_form reports whether the values
 * come from a proven formula (1) or a grid scan (0). */
slk_status slk_generator_real_extremes(const slk_generator* gen, double r, int grid,
                                       double* min_re, double* max_re, int* closed_form);

/* 1 when the Re-extremes placement at -r/+r is proven for this generator,
 * so growth bounds and the Koebe radius are sharp rather than heuristic. */
int slk_generator_has_proven_extremes(const slk_generator* gen);

/* min over the circle of Re(1 + z psi''/psi'); >= 0 certifies convexity of
 * psi at grid resolution. */
slk_status slk_generator_convexity_margin(const slk_generator* gen, int grid, double* margin);

/* Membership of w in 1 + psi(unit disk) by winding test (exact inequality
 * for the mobius and linear families). inside receives 0 or 1. */
slk_status slk_region_contains(const slk_generator* gen, slk_complex w, int grid, int* inside);

/* out must hold `samples` entries: psi(rho e^{2 pi i k/samples}). */
slk_status slk_boundary_curve(const slk_generator* gen, double rho, int samples,
                              slk_complex* out);

/* ---- growth and radii ---- */

slk_status slk_growth_interval(const slk_generator* gen, double r, double* lower, double* upper,
                               int* sharp);
slk_status slk_auxiliary_bounds(const slk_generator* gen, double r, slk_growth_bounds* out);

/* Koebe radius -f0(-1): value is the closed form (quadrature where no
 * closed form exists), residual the numeric r -> 1 limit mismatch. */
slk_status slk_koebe_radius(const slk_generator* gen, slk_radius_result* out);

/* max |arg f0(z)/z| over |z| = r for the proven parameter ranges. */
slk_status slk_arg_bound(const slk_generator* gen, double r, double* bound);

/* Bohr radius for the booth family, alpha in (0, 3-2 sqrt 2]. */
slk_status slk_bohr_radius_booth(double alpha, slk_radius_result* out);
/* T(r) = fhat(r) + fhat(-1), the Bohr defining function (for scans). */
slk_status slk_bohr_defining_function(double alpha, double r, double* value);

/* Smallest positive root of the degree-8 convexity-threshold polynomial
 * for exp(gamma z/(1+eta z)^2); gamma in (0,1). */
slk_status slk_eta0(double gamma, slk_radius_result* out);
slk_status slk_eta0_polynomial(double gamma, double eta, double* value);

/* Radius of starlikeness of the given order for the modkoebe class.
 * whole_disk receives 1 when the root is >= 1. */
slk_status slk_starlikeness_radius(double gamma, double eta, double order,
                                   slk_radius_result* out, int* whole_disk);

/* eta where min Re(1 + zK''/K') on |z|=1 crosses zero, K = z/(1+eta z)^2. */
slk_status slk_convexity_threshold(double tol, slk_radius_result* out);

/* ---- verification suites ---- */

/* Growth sandwich on random Schwarz witnesses. radii may be NULL to use
 * the default {0.2, 0.5, 0.8}. */
slk_status slk_verify_growth(const slk_generator* gen, int witnesses, const double* radii,
                             int n_radii, int grid, int order, unsigned long long seed,
                             slk_report** out);

/* Bohr majorant chain at r = r(alpha) on random subordination witnesses. */
slk_status slk_verify_bohr(double alpha, int witnesses, unsigned long long seed,
                           slk_report** out);

/* f/z subordination to the extremal ratio for modkoebe samples. */
slk_status slk_verify_subordination(double gamma, double eta, int witnesses, int grid,
                                    unsigned long long seed, slk_report** out);

int slk_report_passed(const slk_report* report);
int slk_report_size(const slk_report* report);
unsigned long long slk_report_seed(const slk_report* report);
const char* slk_report_item_name(const slk_report* report, int index);
int slk_report_item_passed(const slk_report* report, int index);
const char* slk_report_item_detail(const slk_report* report, int index);
void slk_report_destroy(slk_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STARLIKE_STARLIKE_H */

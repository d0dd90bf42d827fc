#pragma once

#include <complex>
#include <span>
#include <vector>

namespace starlike {

using cplx = std::complex<double>;

bool is_finite(cplx v);

/// Truncated Taylor series about 0: coeff(n) is the coefficient of z^n and
/// the truncation order is the number of stored coefficients. All operations
/// stay at the operands' common order; mixing orders is an error.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    explicit PowerSeries(std::vector<cplx> coeffs);

    int order() const { return static_cast<int>(c_.size()); }
    cplx coeff(int n) const;
    void set_coeff(int n, cplx v);
    std::span<const cplx> coeffs() const { return c_; }

    /// Horner evaluation. The evaluation radius is capped at 0.99 so the
    /// truncation error stays bounded inside the disk of validity.
    cplx eval(cplx z) const;

    PowerSeries truncated(int order) const;

    /// Multiply by z at fixed order (top coefficient falls off the truncation).
    PowerSeries mul_by_z() const;

private:
    std::vector<cplx> c_;
};

/// Cauchy product truncated to the common order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// exp(a) by the standard convolution recurrence; requires a.coeff(0) == 0.
PowerSeries series_exp(const PowerSeries& a);

/// Termwise integral of a(t)/t from 0 to z: coefficient n of the result is
/// a.coeff(n)/n. Requires a.coeff(0) == 0, otherwise the integrand is
/// singular at the origin.
PowerSeries series_integrate_quotient(const PowerSeries& a);

/// Truncated composition outer(inner(z)); requires inner.coeff(0) == 0.
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner);

/// 1/a truncated; requires a.coeff(0) != 0.
PowerSeries series_reciprocal(const PowerSeries& a);

/// Sum of |coeff(n)| r^n over n >= 1, the quantity bounded in Bohr-type
/// inequalities. Monotone nondecreasing in r. Requires r in [0,1).
double majorant_sum(const PowerSeries& a, double r);

} // namespace starlike

#include "series.hpp"

#include "errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace starlike {

bool is_finite(cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

namespace {

void require_finite(const std::vector<cplx>& c, const char* who) {
    for (const cplx& v : c) {
        if (!is_finite(v))
            throw InvalidArgument(std::string(who) + ": non-finite coefficient");
    }
}

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* who) {
    if (a.order() != b.order())
        throw InvalidArgument(std::string(who) + ": mismatched truncation orders " +
                              std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

} // namespace

PowerSeries::PowerSeries(int order) {
    if (order <= 0)
        throw InvalidArgument("PowerSeries: order must be positive");
    c_.assign(static_cast<size_t>(order), cplx(0.0, 0.0));
}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw InvalidArgument("PowerSeries: order must be positive");
    require_finite(c_, "PowerSeries");
}

cplx PowerSeries::coeff(int n) const {
    if (n < 0 || n >= order())
        throw InvalidArgument("PowerSeries::coeff: index out of range");
    return c_[static_cast<size_t>(n)];
}

void PowerSeries::set_coeff(int n, cplx v) {
    if (n < 0 || n >= order())
        throw InvalidArgument("PowerSeries::set_coeff: index out of range");
    if (!is_finite(v))
        throw InvalidArgument("PowerSeries::set_coeff: non-finite value");
    c_[static_cast<size_t>(n)] = v;
}

cplx PowerSeries::eval(cplx z) const {
    if (!is_finite(z))
        throw InvalidArgument("PowerSeries::eval: non-finite point");
    if (std::abs(z) > 0.99)
        throw InvalidArgument("PowerSeries::eval: |z| exceeds the 0.99 evaluation cap");
    cplx acc = c_.back();
    for (int n = order() - 2; n >= 0; --n)
        acc = acc * z + c_[static_cast<size_t>(n)];
    return acc;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order <= 0 || order > this->order())
        throw InvalidArgument("PowerSeries::truncated: bad order");
    return PowerSeries(std::vector<cplx>(c_.begin(), c_.begin() + order));
}

PowerSeries PowerSeries::mul_by_z() const {
    PowerSeries out(order());
    for (int n = order() - 1; n >= 1; --n)
        out.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n - 1)];
    return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "series_mul");
    const int n = a.order();
    PowerSeries out(n);
    for (int i = 0; i < n; ++i) {
        const cplx ai = a.coeff(i);
        if (ai == cplx(0.0, 0.0))
            continue;
        for (int j = 0; i + j < n; ++j)
            out.set_coeff(i + j, out.coeff(i + j) + ai * b.coeff(j));
    }
    return out;
}

PowerSeries series_exp(const PowerSeries& a) {
    if (std::abs(a.coeff(0)) != 0.0)
        throw InvalidArgument("series_exp: nonzero constant term");
    const int n = a.order();
    PowerSeries out(n);
    out.set_coeff(0, cplx(1.0, 0.0));
    // b_n = (1/n) sum_{k=1..n} k a_k b_{n-k}
    for (int m = 1; m < n; ++m) {
        cplx s(0.0, 0.0);
        for (int k = 1; k <= m; ++k)
            s += static_cast<double>(k) * a.coeff(k) * out.coeff(m - k);
        out.set_coeff(m, s / static_cast<double>(m));
    }
    return out;
}

PowerSeries series_integrate_quotient(const PowerSeries& a) {
    if (std::abs(a.coeff(0)) != 0.0)
        throw InvalidArgument("series_integrate_quotient: nonzero constant term, integrand singular at 0");
    const int n = a.order();
    PowerSeries out(n);
    for (int m = 1; m < n; ++m)
        out.set_coeff(m, a.coeff(m) / static_cast<double>(m));
    return out;
}

PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner) {
    require_same_order(outer, inner, "series_compose");
    if (std::abs(inner.coeff(0)) != 0.0)
        throw InvalidArgument("series_compose: inner constant term must vanish");
    const int n = outer.order();
    // Horner on series: acc <- acc*inner + outer_k, from the top coefficient down.
    PowerSeries acc(n);
    acc.set_coeff(0, outer.coeff(n - 1));
    for (int k = n - 2; k >= 0; --k) {
        acc = series_mul(acc, inner);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc;
}

PowerSeries series_reciprocal(const PowerSeries& a) {
    const cplx a0 = a.coeff(0);
    if (std::abs(a0) == 0.0)
        throw InvalidArgument("series_reciprocal: zero constant term");
    const int n = a.order();
    PowerSeries out(n);
    out.set_coeff(0, 1.0 / a0);
    for (int m = 1; m < n; ++m) {
        cplx s(0.0, 0.0);
        for (int k = 1; k <= m; ++k)
            s += a.coeff(k) * out.coeff(m - k);
        out.set_coeff(m, -s / a0);
    }
    return out;
}

double majorant_sum(const PowerSeries& a, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw InvalidArgument("majorant_sum: r must lie in [0,1)");
    double sum = 0.0;
    double rn = r;
    for (int n = 1; n < a.order(); ++n) {
        sum += std::abs(a.coeff(n)) * rn;
        rn *= r;
    }
    return sum;
}

} // namespace starlike

// Small numeric helpers shared across the library. Everything here is
// header-only and allocation-free.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kLn2 = 0.6931471805599453094172321214581766;

namespace detail {

// log(1 + e^x) without overflow for large positive x.
inline double softplus(double x) {
    if (x > 36.0) return x;
    if (x < -745.0) return 0.0;
    return std::log1p(std::exp(x));
}

// -ln(e^-a + e^-b) with max-subtraction; a, b may be +inf.
inline double neg_log_sum_exp_neg(double a, double b) {
    const double lo = std::min(a, b);
    if (std::isinf(lo)) return lo > 0 ? kInf : -kInf;
    const double hi = std::max(a, b);
    if (std::isinf(hi)) return lo;  // e^-inf contributes nothing
    return lo - softplus(lo - hi);
}

// Binary entropy in bits.
inline double h2(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

// Inverse of h2 restricted to [0, 1/2]; bisection, monotone increasing there.
inline double h2_inv(double y) {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// ln C(n, k) via lgamma.
inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -kInf;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Maximize a unimodal (concave) function on [a, b] by golden-section search.
// `tol` bounds the final bracket width in x. Returns the argmax.
template <typename F>
double golden_section_max(F&& f, double a, double b, double tol) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// Root of a monotone decreasing function on [a, b] by plain bisection.
// Assumes f(a) >= 0 >= f(b); returns the midpoint of the final bracket.
template <typename F>
double bisect_decreasing(F&& f, double a, double b, double tol) {
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double mid = 0.5 * (a + b);
        const double v = f(mid);
        if (v > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

// Bracketing root finder for a monotone decreasing function (secant step with
// bisection fallback). Cheaper than bisect_decreasing when f is expensive.
template <typename F>
double brent_decreasing(F&& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b);
    if (fa <= 0.0) return a;
    if (fb >= 0.0) return b;
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        double mid;
        const double denom = fa - fb;
        if (denom > 0.0) {
            mid = a + fa * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (!(mid > a + margin && mid < b - margin)) mid = 0.5 * (a + b);
        } else {
            mid = 0.5 * (a + b);
        }
        const double fm = f(mid);
        if (fm > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: need >= 2 points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

}  // namespace detail
}  // namespace polar

#ifndef POWSPEC_MINIMIZE_HPP
#define POWSPEC_MINIMIZE_HPP

#include <cmath>
#include <functional>

#include "powspec/types.hpp"

namespace powspec {

struct MinResult {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section contraction of [a, b] down to a relative width rel_tol.
/// Assumes f is unimodal on [a, b].
template <class Fn>
MinResult golden_section(Fn&& f, double a, double b, double rel_tol = 1e-12, int max_iter = 200)
{
    if (!(a < b)) {
        throw domain_error("golden_section: empty interval");
    }
    const double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > rel_tol * (std::fabs(a) + std::fabs(b)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

/// Bracket the minimum of a unimodal f on [r_lo, r_hi] by a geometric scan
/// (points_per_decade samples per decade), then polish by golden section.
template <class Fn>
MinResult minimize_log_scan(Fn&& f, double r_lo, double r_hi, int points_per_decade = 60,
                            double rel_tol = 1e-12)
{
    if (!(r_lo > 0.0) || !(r_hi > r_lo)) {
        throw domain_error("minimize_log_scan: need 0 < r_lo < r_hi");
    }
    const double decades = std::log10(r_hi / r_lo);
    const int n = std::max(8, static_cast<int>(decades * points_per_decade));
    const double step = std::log(r_hi / r_lo) / n;

    int best = 0;
    double best_val = f(r_lo);
    for (int i = 1; i <= n; ++i) {
        const double r = r_lo * std::exp(step * i);
        const double val = f(r);
        if (val < best_val) {
            best_val = val;
            best = i;
        }
    }
    const double a = r_lo * std::exp(step * std::max(0, best - 1));
    const double b = r_lo * std::exp(step * std::min(n, best + 1));
    return golden_section(f, a, b, rel_tol);
}

} // namespace powspec

#endif

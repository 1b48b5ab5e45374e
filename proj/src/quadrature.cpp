#include "powspec/quadrature.hpp"

#include <cstddef>

#include "powspec/types.hpp"

namespace powspec {

namespace {

// Integral over [x1, x2] of the parabola through (x0,y0), (x1,y1), (x2,y2).
double parabola_piece(double x0, double y0, double x1, double y1, double x2, double y2,
                      double a, double b)
{
    // Lagrange basis integrated exactly
    const double d0 = (x0 - x1) * (x0 - x2);
    const double d1 = (x1 - x0) * (x1 - x2);
    const double d2 = (x2 - x0) * (x2 - x1);
    auto basis = [a, b](double p, double q) {
        // int_a^b (x - p)(x - q) dx
        const double b3 = (b * b * b - a * a * a) / 3.0;
        const double b2 = (b * b - a * a) / 2.0;
        const double b1 = b - a;
        return b3 - (p + q) * b2 + p * q * b1;
    };
    return y0 / d0 * basis(x1, x2) + y1 / d1 * basis(x0, x2) + y2 / d2 * basis(x0, x1);
}

} // namespace

double integrate_samples(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw domain_error("integrate_samples: need matching grids of size >= 2");
    }
    const std::size_t n = x.size();
    if (n == 2) {
        return 0.5 * (y[0] + y[1]) * (x[1] - x[0]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // parabola through the triple surrounding interval [i, i+1]
        const std::size_t k = (i == 0) ? 0 : i - 1;
        total += parabola_piece(x[k], y[k], x[k + 1], y[k + 1], x[k + 2], y[k + 2], x[i], x[i + 1]);
    }
    return total;
}

std::vector<double> cumulative_integral(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw domain_error("cumulative_integral: need matching grids of size >= 2");
    }
    const std::size_t n = x.size();
    std::vector<double> out(n, 0.0);
    if (n == 2) {
        out[1] = 0.5 * (y[0] + y[1]) * (x[1] - x[0]);
        return out;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t k = (i == 0) ? 0 : i - 1;
        out[i + 1] =
            out[i] + parabola_piece(x[k], y[k], x[k + 1], y[k + 1], x[k + 2], y[k + 2], x[i], x[i + 1]);
    }
    return out;
}

} // namespace powspec

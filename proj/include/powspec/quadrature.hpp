#ifndef POWSPEC_QUADRATURE_HPP
#define POWSPEC_QUADRATURE_HPP

#include <span>
#include <vector>

namespace powspec {

/// Integral of sampled data on a strictly increasing, possibly non-uniform
/// grid, using local quadratic fits (Simpson generalized to uneven spacing).
double integrate_samples(std::span<const double> x, std::span<const double> y);

/// Running integral F(x_i) = int_{x_0}^{x_i} y dx with per-interval
/// quadratic interpolation through neighbouring triples.
std::vector<double> cumulative_integral(std::span<const double> x, std::span<const double> y);

} // namespace powspec

#endif

#ifndef POWSPEC_SWEEP_HPP
#define POWSPEC_SWEEP_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "powspec/bounds.hpp"
#include "powspec/comparison.hpp"
#include "powspec/types.hpp"

namespace powspec::sweep {

/// Map fn over [0, count), writing results by index.  With parallel = true
/// the cells run under OpenMP; output is index-ordered either way, so serial
/// and parallel runs produce identical results.  fn must not throw: cells
/// record their own failures.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t count, bool parallel, Fn&& fn)
{
    std::vector<T> out(count);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        }
        return out;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = fn(i);
    }
    return out;
}

struct SweepOptions {
    double tol = 1e-9;
    bool parallel = true;
};

/// Linear-potential P-values P^N_{n0}(1) for N = 2..12, n = 1..4, with the
/// published reference figures for regression.
struct Table1Row {
    int N = 0;
    int n = 0;
    double energy = 0.0;
    double P = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    bool within_tol = false; ///< |P - reference| <= 5e-4
    bool ok = false;
    std::string error;
};

std::vector<Table1Row> table1(const SweepOptions& opts = {});

/// Reference values, rows N = 2..12, columns n = 1..4.
const std::array<std::array<double, 4>, 11>& table1_reference();

/// One (q, E, P, Z, Q) row of a P-function sweep; q = 0 is the log case.
struct PfunRow {
    double q = 0.0;
    double energy = 0.0;
    double P = 0.0;
    double Z = 0.0;
    double Q = 0.0;
    bool ok = false;
    std::string error;
};

std::vector<PfunRow> pfun(const std::vector<double>& qs, int N, int n, int ell,
                          const SweepOptions& opts = {});

/// Default exponent grid for pfun sweeps (includes the q = 0 log point).
std::vector<double> default_q_grid();

/// Bounds-vs-exact dataset (delegates to bounds::figure5_dataset).
std::vector<bounds::Fig5Row> figure5(const std::vector<int>& dimensions,
                                     const std::vector<double>& couplings,
                                     const SweepOptions& opts = {});

/// One adjacent-pair cell of the Q-monotonicity verification grid.
struct QMonotoneCell {
    double q_lo = 0.0, q_hi = 0.0;
    int N = 0;
    double P_lo = 0.0, P_hi = 0.0;
    double Q_lo = 0.0, Q_hi = 0.0;
    double q_margin = 0.0; ///< Q(q_hi) - Q(q_lo), must be > 0
    double p_margin = 0.0; ///< P(q_hi) - P(q_lo), must be > 0
    double z_margin = 0.0; ///< Z(q_lo) - Z(q_hi), must be > 0
    double f_margin = 0.0; ///< crossing-construction bound minus E(q_lo)
    bool pass = false;
    std::string error;
};

struct QMonotoneSuite {
    std::vector<QMonotoneCell> cells;
    bool all_pass = false;
};

/// Default grid: q in {-1.5, -1, -0.5, -1e-3, 1e-3, 0.5, 1, 1.5, 2, 3},
/// restricted to q > -1 for N = 1; ground state only.
QMonotoneSuite qmonotone_verify(const std::vector<double>& qs, const std::vector<int>& Ns,
                                const SweepOptions& opts = {});
QMonotoneSuite qmonotone_verify(const SweepOptions& opts = {});

/// One pair cell of the crossing-construction verification: F_hat vs the
/// solver eigenvalue E(q), plus the two-crossing/area diagnostics.
struct ComparisonCell {
    double p = 0.0, q = 0.0;
    int N = 0;
    double F_hat = 0.0;
    double E_q = 0.0;
    double margin = 0.0; ///< F_hat - E_q, must be > 0
    int crossings = 0;
    double area_residual = 0.0;
    bool pass = false;
    std::string error;
};

struct ComparisonSuite {
    std::vector<ComparisonCell> cells;
    bool all_pass = false;
};

/// Default grid: all pairs p > q from {0.5, 1, 1.5, 2, 3} at N = 3.
ComparisonSuite comparison_verify(const std::vector<double>& exponents, int N,
                                  const SweepOptions& opts = {});
ComparisonSuite comparison_verify(const SweepOptions& opts = {});

/// Round-trip and identity checks of the P-representation arithmetic
/// (pure functions, no solver).
struct RoundtripReport {
    double max_roundtrip_rel = 0.0;  ///< |p_from_energy(g(P,q),q) - P| / P
    double max_minimize_abs = 0.0;   ///< |g - brute-force minimization|
    double max_derivative_rel = 0.0; ///< |dg/dP - finite difference| / dg/dP
    bool all_pass = false;
};

RoundtripReport roundtrip_verify();

} // namespace powspec::sweep

#endif

#ifndef POWSPEC_COMPARISON_HPP
#define POWSPEC_COMPARISON_HPP

#include <functional>
#include <vector>

#include "powspec/radial.hpp"
#include "powspec/types.hpp"

namespace powspec::comparison {

using Potential = std::function<double(double)>;

/// Sign-change analysis of V1 - V2 on (0, r_max].
struct CrossingReport {
    std::vector<double> crossings; ///< radii where V1 - V2 changes sign, increasing
    int initial_sign = 0;          ///< sign of V1 - V2 just above r = 0 (0 when degenerate)
    double area_residual = 0.0;    ///< int_0^{r2} (V1 - V2) t^{N-1} dt, set when >= 2 crossings
    double area_scale = 0.0;       ///< int_0^{r2} |V1 - V2| t^{N-1} dt, the residual's scale
    bool has_area_residual = false;
    bool tangency_warning = false; ///< sign touch without change detected
    bool degenerate = false;       ///< V1 == V2 within sampling accuracy
};

/// Locate crossings by a 2000-point geometric scan plus bisection to 1e-10
/// relative; tangencies are flagged, not counted.
CrossingReport find_crossings(const Potential& V1, const Potential& V2, int N, double r_max);

/// Weighted comparison integral
///   k(r) = int_0^r [V1(t) - V2(t)] psi(t) t^{N-1} dt
/// with psi the full radial factor u(t)/t^{(N-1)/2} of a node-free ground
/// state.  One-signed k orders the two spectra.
double k_function(const Potential& V1, const Potential& V2, const radial::EigenResult& ground,
                  int N, double r);

/// k evaluated at every grid point of the ground-state sample.
std::vector<double> k_curve(const Potential& V1, const Potential& V2,
                            const radial::EigenResult& ground, int N);

enum class Verdict { E1_below_E2, E2_below_E1, inconclusive };

/// Two-crossing sufficient condition: exactly two crossings, a definite
/// initial sign, and vanishing weighted area up to the second crossing.
/// Anything else is inconclusive (no claim).
Verdict two_crossing_verdict(const Potential& V1, const Potential& V2, int N, double r_max = 200.0);

/// Which power family carries the shifted comparison potential A + B sgn() r^().
enum class ComparisonFamily { upper_power, lower_power };

/// Two-crossing construction for the pair of powers p > q: the shifted
/// comparison potential crosses the target exactly twice with zero weighted
/// area up to the second crossing, and the minimized value F_hat of the
/// two-power objective F(t) = a1 t^{n_exp} + b1 t^{-m_exp} is a rigorous
/// upper bound for E(q) given E(p).
///
/// For p > q > 0 the comparison lives in the p family (closed-form
/// constants).  For p > 0 > q the same elimination applies with signed
/// constants.  For q < p < 0 a two-crossing pair only exists with the
/// comparison built in the q family below the target, which bounds E(q)
/// through E(p) after rearrangement; the reduced objective is again a
/// two-power function, here parametrized directly by the second crossing.
struct ConstructionResult {
    double p = 0.0;
    double q = 0.0;
    int N = 0;
    ComparisonFamily family = ComparisonFamily::upper_power;
    double t_hat = 0.0; ///< stationary point of the reduced objective
    double A_hat = 0.0; ///< shift of the comparison potential at the optimum
    double B_hat = 0.0; ///< scale of the comparison potential at the optimum
    double F_hat = 0.0; ///< minimized bound value, > E(q)
    double n_exp = 0.0, m_exp = 0.0, a1 = 0.0, b1 = 0.0; ///< reduced constants
    double second_crossing = 0.0; ///< R_hat, the outer intersection radius

    /// Evaluate the reduced objective at t.
    double objective(double t) const;
    /// Comparison potential A_hat + B_hat sgn() r^() at the optimum.
    double comparison_potential(double r) const;
    /// Target potential of the pair.
    double target_potential(double r) const;
};

ConstructionResult crossing_construction(double p, double q, int N, double E_p);

/// Q-monotonicity check for a pair p > q: the crossing-construction bound
/// F_hat must exceed E(q) = g(P_q, q), and independently
/// Q(p) = Z(p) P_p must exceed Q(q) = Z(q) P_q.
struct QMonotoneReport {
    bool pass = false;
    double q_margin = 0.0; ///< Q(p) - Q(q)
    double f_margin = 0.0; ///< F_hat - E(q)
    ConstructionResult construction;
};

QMonotoneReport verify_q_monotone(double p, double q, int N, double P_p, double P_q);

} // namespace powspec::comparison

#endif

#ifndef POWSPEC_RADIAL_HPP
#define POWSPEC_RADIAL_HPP

#include <functional>
#include <vector>

#include "powspec/types.hpp"

namespace powspec::radial {

/// Effective angular index after reducing -Delta + V(r) in N dimensions to
/// the radial form -u'' + [L(L+1)/r^2 + V(r)] u = E u via
/// psi = u(r) / r^{(N-1)/2}: L = ell + (N-3)/2.  Invariant under
/// (N, ell) -> (N + 2 ell, 0).
double effective_lambda(int N, int ell);

struct SolverOptions {
    double tol = 1e-9;            ///< relative eigenvalue tolerance
    int base_mesh_points = 8000;  ///< starting mesh size, doubled on refinement
    int max_mesh_points = 512000; ///< refinement cap
    double r_min_hint = 1e-6;     ///< inner mesh edge (shrunk automatically near q = -2)
    double tail_phase = 14.0;     ///< WKB phase accumulated beyond the outer turning point
    int max_window_expansions = 64;
    int max_bisections = 260;
    bool keep_wavefunction = true;
};

/// Converged eigenvalue with solver diagnostics and the sampled reduced
/// radial function u (normalized so that int u^2 dr = 1).  The full radial
/// factor is u(r) / r^{(N-1)/2}.
struct EigenResult {
    double energy = 0.0;
    StateLabel label;
    int node_count = 0; ///< radial nodes found; equals label.n - 1
    std::vector<double> r_grid;
    std::vector<double> u_values;
    bool converged = false;
    double residual = 0.0; ///< final energy bracket width
    int mesh_points = 0;
    double r_max = 0.0;
};

/// Eigenvalue of -Delta + pot in N dimensions for the state labelled s,
/// found by two-sided shooting: outward from a power-series start at the
/// origin, inward from a WKB-decaying start at r_max, node-count bracketing
/// and bisection on the matching mismatch.  The mesh is log-spaced near the
/// origin and linear in the tail, and is doubled until the eigenvalue moves
/// by less than tol/4.
///
/// For N = 1 the full-line spectrum is enumerated by interleaved parity:
/// odd n are even states (u'(0) = 0), even n are odd states (u(0) = 0).
EigenResult solve_eigenvalue(const PotentialSpec& pot, const StateLabel& s, double tol);
EigenResult solve_eigenvalue(const PotentialSpec& pot, const StateLabel& s,
                             const SolverOptions& opts = {});

/// Node-free normalized ground state (n = 1) in the given ell sector.
EigenResult ground_wavefunction(const PotentialSpec& pot, int N, int ell,
                                const SolverOptions& opts = {});

/// Eigenproblem for an arbitrary central potential evaluator (used for
/// power mixtures and shifted comparison potentials).  The potential must
/// be bounded below and confining enough to hold n bound states.
struct CustomProblem {
    std::function<double(double)> potential;
    int N = 3;
    int n = 1;
    int ell = 0;
    double r_max_hint = 0.0; ///< 0 = choose automatically
};

EigenResult solve_custom(const CustomProblem& problem, const SolverOptions& opts = {});

} // namespace powspec::radial

#endif

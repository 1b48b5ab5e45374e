#ifndef POWSPEC_BOUNDS_HPP
#define POWSPEC_BOUNDS_HPP

#include <map>
#include <optional>
#include <vector>

#include "powspec/radial.hpp"
#include "powspec/types.hpp"

namespace powspec::bounds {

/// Envelope bounds for the pair of powers q1 < q2 with P-values P1, P2:
///   upper_v1          = g(P2, q1)            (E[V1] < upper_v1)
///   lower_v2          = g(P1, q2)            (E[V2] > lower_v2)
///   improved_upper_v1 = g(Q(q2)/Z(q1), q1)   (< upper_v1)
///   improved_lower_v2 = g(Q(q1)/Z(q2), q2)   (> lower_v2)
/// where Q(q) = Z(q) P(q).
struct PairBounds {
    double upper_v1 = 0.0;
    double lower_v2 = 0.0;
    double improved_upper_v1 = 0.0;
    double improved_lower_v2 = 0.0;
};

PairBounds pair_bounds(double q1, double q2, double P1, double P2, int N);

/// The four bounds around one target exponent, plus an optional reference
/// eigenvalue.  Ordering: ELP <= ELQ <= EUQ <= EUP, and ELQ < EX < EUQ when
/// the reference is present.
struct BoundSet {
    double q_target = 0.0;
    int N = 0;
    double ELP = 0.0, EUP = 0.0; ///< envelope lower/upper bounds
    double ELQ = 0.0, EUQ = 0.0; ///< Q-improved lower/upper bounds
    std::optional<double> reference;
};

/// Build a BoundSet for q_target from a lower pair (q_lo < q_target) and an
/// upper pair (q_target < q_hi), with P-values at the outer exponents.
BoundSet bound_set(double q_target, double q_lo, double P_lo, double q_hi, double P_hi, int N,
                   std::optional<double> reference = std::nullopt);

/// Lower bound for E(q), q > 0, from the log-potential Q-value Q0 = Q(0):
///   E(q) > min_{r>0} { (Q0/(Z(q) r))^2 + sgn(q) r^q } = g(Q0/Z(q), q).
double log_lower_bound(double q, double Q0, int N);

/// Sum of powers a(q) sgn(q) r^q plus an optional log weight a(0) ln r.
struct PowerMixture {
    std::vector<std::pair<double, double>> terms; ///< (q, weight >= 0), q != 0
    double log_weight = 0.0;                      ///< a(0) >= 0

    void validate() const;
    /// Potential value at r (unit P-numbers).
    double operator()(double r) const;
};

/// Ground-sector lower bound for the mixture potential:
///   E >= min_{r>0} { 1/r^2 + sum_q a(q) sgn(q) (P(q) r)^q + a(0) ln(P(0) r) }
/// computed by a geometric scan plus golden-section polish.  Exact whenever
/// the weight is concentrated on a single term.
double sum_of_powers_lower_bound(const PowerMixture& mix,
                                 const std::map<double, double>& p_values, double p_log, int N);

/// One row of the bounds-vs-exact dataset for V(r) = v r^{3/2}.
struct Fig5Row {
    int N = 0;
    double v = 0.0;
    double ELP = 0.0, ELQ = 0.0, EX = 0.0, EUQ = 0.0, EUP = 0.0;
    bool ok = false;
    std::string error;
};

struct Fig5Options {
    double tol = 1e-9;
    bool parallel = true;
};

/// Bounds and reference eigenvalues for V = v r^{3/2}: per dimension the
/// linear-potential P(1) comes from the solver, the oscillator P(2) from its
/// closed form; couplings enter through the scaling law.  Cells run
/// concurrently; row order is deterministic.
std::vector<Fig5Row> figure5_dataset(const std::vector<int>& dimensions,
                                     const std::vector<double>& couplings,
                                     const Fig5Options& opts = {});

/// Strict sandwich check ELP < ELQ < EX < EUQ < EUP with margin.
bool sandwich_ok(const Fig5Row& row, double margin = 1e-6);

} // namespace powspec::bounds

#endif

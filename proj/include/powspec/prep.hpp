#ifndef POWSPEC_PREP_HPP
#define POWSPEC_PREP_HPP

#include "powspec/types.hpp"

namespace powspec::prep {

/// Kinetic-potential energy formula
///   g(P, q) = min_{r>0} { P^2/r^2 + sgn(q) r^q }
///           = sgn(q) (1 + q/2) (2 P^2 / |q|)^{q/(2+q)},  q != 0,
///   g(P, 0) = min_{r>0} { P^2/r^2 + ln r } = (1 + ln 2)/2 + ln P.
/// q = 0 encodes the log potential throughout this module.
double g(double P, double q);

/// dg/dP, strictly positive on the domain (1/P in the log case).
double g_derivative(double P, double q);

/// Inverse of g in P: the unique P > 0 with g(P, q) = E.
/// For q != 0 the sign of E must match the sign of q.
double p_from_energy(double E, double q);

/// Z(q) = (1 + q/N)^{1/q}, with the continuous limit Z(0) = e^{1/N}.
/// Requires q > -N.
double z_factor(double q, int N);

/// Energy of the scaled family A + B sgn(q) r^q (A + B ln r for q = 0)
/// expressed through the same P-number:
///   min_{r>0} { P^2/r^2 + A + B sgn(q) r^q } = A + B^{2/(q+2)} g(P, q),
/// and for q = 0:  A + B ((1 + ln 2)/2 + ln(P/sqrt(B))).
double scaled_energy(double P, double A, double B, double q);

/// Energy for the shifted family V(r, q) = (r^q - 1)/q, which tends to
/// ln r as q -> 0; continuous in q at 0 for fixed P.
double shifted_family_energy(double P, double q);

/// A (q, P, E) triple for one state at unit coupling; q = 0 is the log case.
struct PSample {
    double q = 0.0;
    double P = 0.0;
    double E = 0.0;
    StateLabel label;

    /// Build from an eigenvalue, inverting g; validates the round trip.
    static PSample from_energy(double E, double q, const StateLabel& label);
};

/// Z(q) and Q(q) = Z(q) P(q) attached to a PSample.
struct QSample {
    double q = 0.0;
    double Z = 0.0;
    double Q = 0.0;
    int N = 0;

    static QSample from_psample(const PSample& ps);
};

} // namespace powspec::prep

#endif

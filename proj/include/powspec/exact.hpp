#ifndef POWSPEC_EXACT_HPP
#define POWSPEC_EXACT_HPP

#include <cstdint>

#include "powspec/types.hpp"

namespace powspec::exact {

/// Airy function Ai(x): Maclaurin series for |x| <= 8, asymptotic
/// expansions beyond.  Absolute accuracy ~1e-12 on the oscillatory side.
double airy_ai(double x);

/// First derivative Ai'(x), same evaluation scheme as airy_ai.
double airy_ai_prime(double x);

enum class AiryZeroKind { zero_of_ai, zero_of_ai_prime };

/// Index of the k-th zero (by increasing magnitude) of Ai or Ai'.
struct AiryZeroIndex {
    AiryZeroKind kind = AiryZeroKind::zero_of_ai;
    int k = 1;
};

/// k-th positive root r of Ai(-r) = 0 (or Ai'(-r) = 0), k = 1, 2, ...
/// Brackets are seeded from the asymptotic zero spacing, then bisected and
/// polished with Newton steps; absolute accuracy <= 1e-10.
double airy_zero(AiryZeroKind kind, int k, int max_index = 50);
double airy_zero(const AiryZeroIndex& idx, int max_index = 50);

/// Coulomb eigenvalue -[2(n + ell + N/2 - 3/2)]^{-2} at unit coupling.
/// Requires N >= 2; the one-dimensional case is excluded.
double hydrogen_energy(const StateLabel& s);

/// Oscillator eigenvalue: 4n + 2 ell + N - 4 for N >= 2, 2n - 1 for N = 1.
double oscillator_energy(const StateLabel& s);

/// Linear-potential eigenvalue at coupling v: v^{2/3} times the n-th Airy
/// zero.  Only (N = 3, ell = 0) and N = 1 admit this closed form; N = 1
/// levels are indexed by the zeros of Ai' (even-parity convention).
double linear_energy_exact(const StateLabel& s, double v);

/// Degeneracy of the (N, ell) angular-momentum sector, N >= 2.
/// Integer arithmetic throughout; throws on uint64 overflow.
std::uint64_t degeneracy(int N, int ell);

/// Coupling scaling law: E(v) = v^{2/(q+2)} E(1).
double scale_energy(double E_unit, double v, double q);

} // namespace powspec::exact

#endif

#include "powspec/exact.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace powspec::exact {

namespace {

constexpr long double kAi0 = 0.35502805388781723926006318600418L;   // Ai(0)
constexpr long double kAip0 = -0.25881940379280679840518356018920L; // Ai'(0)
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSeriesCut = 8.0; // series/asymptotics switchover

// Maclaurin sums for Ai and Ai'.  Long-double accumulation keeps the
// alternating-series cancellation below ~1e-13 out to |x| = 8.
void airy_series(double x, double& ai, double& aip)
{
    const long double lx = x;
    const long double x3 = lx * lx * lx;

    // Ai strands: a_{3m} x^{3m} and a_{3m+1} x^{3m+1}
    long double tA0 = kAi0;
    long double tA1 = kAip0 * lx;
    // Ai' strands: coefficients b_j = (j+1) a_{j+1}, j = 0 and 2 mod 3
    long double tD0 = kAip0;
    long double tD2 = 0.5L * kAi0 * lx * lx;

    long double sum = tA0 + tA1;
    long double dsum = tD0 + tD2;

    for (int m = 1; m <= 400; ++m) {
        tA0 *= x3 / ((3.0L * m) * (3.0L * m - 1.0L));
        tA1 *= x3 / ((3.0L * m + 1.0L) * (3.0L * m));
        tD0 *= x3 / ((3.0L * m) * (3.0L * m - 2.0L));
        tD2 *= x3 / ((3.0L * m + 2.0L) * (3.0L * m));
        sum += tA0 + tA1;
        dsum += tD0 + tD2;
        const long double mag =
            std::fabs(tA0) + std::fabs(tA1) + std::fabs(tD0) + std::fabs(tD2);
        if (mag < 1e-22L * (std::fabs(sum) + std::fabs(dsum) + 1e-30L)) {
            break;
        }
    }
    ai = static_cast<double>(sum);
    aip = static_cast<double>(dsum);
}

// Coefficients u_k of the asymptotic expansions and their Ai' companions
// v_k = -(6k+1)/(6k-1) u_k, generated on the fly; the sums are truncated at
// their smallest term.
struct AsymptoticSums {
    double even_u = 0.0, odd_u = 0.0;   // sum (-1)^j u_{2j} z^{-2j}, sum (-1)^j u_{2j+1} z^{-2j-1}
    double even_v = 0.0, odd_v = 0.0;
    double full_u = 0.0, full_v = 0.0;  // sum (-1)^k u_k z^{-k} and v companion
};

AsymptoticSums asymptotic_sums(double zeta)
{
    AsymptoticSums s;
    double u = 1.0;
    double pow_z = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    for (int k = 0; k <= 60; ++k) {
        if (k > 0) {
            u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
            pow_z /= zeta;
        }
        const double v = (k == 0) ? 1.0 : -u * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        const double term_u = u * pow_z;
        if (std::fabs(term_u) > prev_mag) {
            break; // divergent tail reached
        }
        prev_mag = std::fabs(term_u);
        const double term_v = v * pow_z;
        const double sign_full = (k % 2 == 0) ? 1.0 : -1.0;
        s.full_u += sign_full * term_u;
        s.full_v += sign_full * term_v;
        if (k % 2 == 0) {
            const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
            s.even_u += sign * term_u;
            s.even_v += sign * term_v;
        } else {
            const double sign = (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
            s.odd_u += sign * term_u;
            s.odd_v += sign * term_v;
        }
        if (std::fabs(term_u) < 1e-18) {
            break;
        }
    }
    return s;
}

void airy_asymptotic_pos(double x, double& ai, double& aip)
{
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    const AsymptoticSums s = asymptotic_sums(zeta);
    const double root4 = std::pow(x, 0.25);
    const double damp = std::exp(-zeta);
    ai = 0.5 * damp / (kSqrtPi * root4) * s.full_u;
    aip = -0.5 * root4 * damp / kSqrtPi * s.full_v;
}

void airy_asymptotic_neg(double x, double& ai, double& aip)
{
    const double y = -x;
    const double zeta = (2.0 / 3.0) * y * std::sqrt(y);
    const AsymptoticSums s = asymptotic_sums(zeta);
    const double root4 = std::pow(y, 0.25);
    const double phase = zeta + 0.25 * M_PI;
    const double sp = std::sin(phase);
    const double cp = std::cos(phase);
    ai = (sp * s.even_u - cp * s.odd_u) / (kSqrtPi * root4);
    aip = -(root4 / kSqrtPi) * (cp * s.even_v + sp * s.odd_v);
}

void airy_both(double x, double& ai, double& aip)
{
    if (x > kSeriesCut) {
        airy_asymptotic_pos(x, ai, aip);
    } else if (x < -kSeriesCut) {
        airy_asymptotic_neg(x, ai, aip);
    } else {
        airy_series(x, ai, aip);
    }
}

// Asymptotic estimates of the zero locations, used only to seed brackets.
double ai_zero_estimate(int k)
{
    const double t = 3.0 * M_PI * (4.0 * k - 1.0) / 8.0;
    return std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t));
}

double aip_zero_estimate(int k)
{
    const double t = 3.0 * M_PI * (4.0 * k - 3.0) / 8.0;
    return std::pow(t, 2.0 / 3.0) * (1.0 - 7.0 / (48.0 * t * t));
}

} // namespace

double airy_ai(double x)
{
    double ai = 0.0, aip = 0.0;
    airy_both(x, ai, aip);
    return ai;
}

double airy_ai_prime(double x)
{
    double ai = 0.0, aip = 0.0;
    airy_both(x, ai, aip);
    return aip;
}

double airy_zero(AiryZeroKind kind, int k, int max_index)
{
    if (max_index < 1) {
        throw domain_error("airy_zero: max_index must be >= 1");
    }
    if (k < 1 || k > max_index) {
        throw domain_error("airy_zero: index " + std::to_string(k) + " outside [1, " +
                           std::to_string(max_index) + "]");
    }
    const bool prime = (kind == AiryZeroKind::zero_of_ai_prime);
    const auto f = [prime](double r) {
        return prime ? airy_ai_prime(-r) : airy_ai(-r);
    };

    const double x0 = prime ? aip_zero_estimate(k) : ai_zero_estimate(k);
    double h = std::max(0.05, 0.3 * M_PI / std::sqrt(x0));
    double lo = std::max(0.2 * x0, x0 - h);
    double hi = x0 + h;
    double flo = f(lo);
    double fhi = f(hi);
    for (int expand = 0; expand < 12 && flo * fhi > 0.0; ++expand) {
        h *= 1.8;
        lo = std::max(1e-3, x0 - h);
        hi = x0 + h;
        flo = f(lo);
        fhi = f(hi);
    }
    if (flo * fhi > 0.0) {
        throw solve_error("airy_zero: failed to bracket zero " + std::to_string(k));
    }

    for (int it = 0; it < 80 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }

    // Newton polish.  For a zero of Ai(-r): d/dr Ai(-r) = -Ai'(-r).
    // For a zero of Ai'(-r): d/dr Ai'(-r) = -Ai''(-r) = r Ai(-r).
    double root = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        double ai = 0.0, aip = 0.0;
        airy_both(-root, ai, aip);
        const double val = prime ? aip : ai;
        const double deriv = prime ? root * ai : -aip;
        if (deriv == 0.0) {
            break;
        }
        const double step = val / deriv;
        if (!std::isfinite(step) || std::fabs(step) > hi - lo + 1e-9) {
            break;
        }
        root -= step;
    }
    return root;
}

double airy_zero(const AiryZeroIndex& idx, int max_index)
{
    return airy_zero(idx.kind, idx.k, max_index);
}

double hydrogen_energy(const StateLabel& s)
{
    s.validate();
    if (s.N < 2) {
        throw domain_error("hydrogen_energy: N = 1 is excluded");
    }
    const double d = 2.0 * (s.n + s.ell + 0.5 * s.N - 1.5);
    return -1.0 / (d * d);
}

double oscillator_energy(const StateLabel& s)
{
    s.validate();
    if (s.N == 1) {
        return 2.0 * s.n - 1.0;
    }
    return 4.0 * s.n + 2.0 * s.ell + s.N - 4.0;
}

double linear_energy_exact(const StateLabel& s, double v)
{
    s.validate();
    if (!(v > 0.0)) {
        throw domain_error("linear_energy_exact: coupling v must be > 0");
    }
    if (s.N == 3 && s.ell == 0) {
        return std::pow(v, 2.0 / 3.0) * airy_zero(AiryZeroKind::zero_of_ai, s.n);
    }
    if (s.N == 1) {
        return std::pow(v, 2.0 / 3.0) * airy_zero(AiryZeroKind::zero_of_ai_prime, s.n);
    }
    throw domain_error("linear_energy_exact: closed form only for (N=3, ell=0) and N=1");
}

std::uint64_t degeneracy(int N, int ell)
{
    if (N < 2) {
        throw domain_error("degeneracy: need N >= 2");
    }
    if (ell < 0) {
        throw domain_error("degeneracy: need ell >= 0");
    }
    if (ell == 0) {
        return 1;
    }
    if (N == 2) {
        return 2; // 2l (l-1)! / l! = 2
    }
    // (2l + N - 2) (l + N - 3)! / (l! (N - 2)!)
    //   = (2l + N - 2) C(l + N - 3, l) / (N - 2), computed exactly.
    std::uint64_t binom = 1;
    for (int i = 1; i <= ell; ++i) {
        // binom = binom * (N - 3 + i) / i, exact at every step
        const std::uint64_t num = static_cast<std::uint64_t>(N - 3 + i);
        std::uint64_t next;
        if (__builtin_mul_overflow(binom, num, &next)) {
            throw domain_error("degeneracy: overflow in 64-bit arithmetic");
        }
        binom = next / static_cast<std::uint64_t>(i);
    }
    std::uint64_t result;
    if (__builtin_mul_overflow(binom, static_cast<std::uint64_t>(2 * ell + N - 2), &result)) {
        throw domain_error("degeneracy: overflow in 64-bit arithmetic");
    }
    if (result % static_cast<std::uint64_t>(N - 2) != 0) {
        throw solve_error("degeneracy: internal divisibility failure");
    }
    return result / static_cast<std::uint64_t>(N - 2);
}

double scale_energy(double E_unit, double v, double q)
{
    if (!(v > 0.0)) {
        throw domain_error("scale_energy: coupling v must be > 0");
    }
    if (!(q > -2.0)) {
        throw domain_error("scale_energy: need q > -2");
    }
    return std::pow(v, 2.0 / (q + 2.0)) * E_unit;
}

} // namespace powspec::exact

#include "doctest.h"

#include <cmath>

#include "powspec/exact.hpp"

using namespace powspec;
using namespace powspec::exact;

namespace {

// Independent zero finder: plain sign-change scan from the origin plus
// bisection, using only the Ai/Ai' evaluators.  No asymptotic seeding, so it
// cross-checks the bracket logic inside airy_zero.
double scan_zero(bool prime, int k)
{
    auto f = [prime](double r) { return prime ? airy_ai_prime(-r) : airy_ai(-r); };
    double r = 0.05;
    double fr = f(r);
    int found = 0;
    while (r < 60.0) {
        const double step = 0.02;
        const double r2 = r + step;
        const double f2 = f(r2);
        if (fr * f2 < 0.0) {
            ++found;
            if (found == k) {
                double lo = r, hi = r2, flo = fr;
                for (int it = 0; it < 100 && hi - lo > 1e-14 * hi; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid);
                    if (flo * fm <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                return 0.5 * (lo + hi);
            }
        }
        r = r2;
        fr = f2;
    }
    return -1.0;
}

} // namespace

TEST_CASE("airy evaluation: series and asymptotics agree at the switchover")
{
    // The representations swap at |x| = 8.  Stepping across the cut and
    // subtracting the slope term isolates the representation mismatch:
    //   f(c+h) - f(c-h) - 2h f'(c) = O(mismatch) + O(h^2).
    const double h = 1e-9;
    for (double c : {8.0, -8.0}) {
        const double jump_ai = airy_ai(c + h) - airy_ai(c - h) - 2.0 * h * airy_ai_prime(c);
        CHECK(std::fabs(jump_ai) < 1e-12);
        // Ai'' = x Ai
        const double jump_aip =
            airy_ai_prime(c + h) - airy_ai_prime(c - h) - 2.0 * h * c * airy_ai(c);
        CHECK(std::fabs(jump_aip) < 1e-12);
    }
}

TEST_CASE("airy evaluation: known reference points")
{
    CHECK(airy_ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-9));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194038).epsilon(1e-9));
    // Ai(1) and Ai(-1), standard tabulated values
    CHECK(airy_ai(1.0) == doctest::Approx(0.1352924163).epsilon(1e-9));
    CHECK(airy_ai(-1.0) == doctest::Approx(0.5355608832).epsilon(1e-9));
    CHECK(airy_ai_prime(-1.0) == doctest::Approx(-0.0101605671).epsilon(1e-6));
}

TEST_CASE("airy_zero: first zeros against the scan oracle")
{
    CHECK(airy_zero(AiryZeroKind::zero_of_ai, 1) == doctest::Approx(2.33810741).epsilon(1e-8));
    CHECK(airy_zero(AiryZeroKind::zero_of_ai, 2) == doctest::Approx(4.08794944).epsilon(1e-8));
    CHECK(airy_zero(AiryZeroKind::zero_of_ai_prime, 1) ==
          doctest::Approx(1.01879297).epsilon(1e-8));

    for (int k = 1; k <= 12; ++k) {
        const double a = airy_zero(AiryZeroKind::zero_of_ai, k);
        CHECK(std::fabs(a - scan_zero(false, k)) < 1e-10);
        const double ap = airy_zero(AiryZeroKind::zero_of_ai_prime, k);
        CHECK(std::fabs(ap - scan_zero(true, k)) < 1e-10);
    }
}

TEST_CASE("airy_zero: ordering, residuals, index range")
{
    double prev = 0.0;
    for (int k = 1; k <= 50; ++k) {
        const double a = airy_zero(AiryZeroKind::zero_of_ai, k);
        CHECK(a > prev);
        CHECK(std::fabs(airy_ai(-a)) <= 1e-9);
        prev = a;
    }
    CHECK_THROWS_AS(airy_zero(AiryZeroKind::zero_of_ai, 0), domain_error);
    CHECK_THROWS_AS(airy_zero(AiryZeroKind::zero_of_ai, 51), domain_error);
    CHECK_NOTHROW(airy_zero(AiryZeroKind::zero_of_ai, 60, 80));
}

TEST_CASE("hydrogen_energy closed form")
{
    CHECK(hydrogen_energy({3, 1, 0}) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(hydrogen_energy({3, 2, 0}) == doctest::Approx(-0.0625).epsilon(1e-14));
    CHECK(hydrogen_energy({2, 1, 0}) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(hydrogen_energy({3, 1, 0}) < 0.0);
    CHECK_THROWS_AS(hydrogen_energy({1, 1, 0}), domain_error);
}

TEST_CASE("oscillator_energy closed form")
{
    CHECK(oscillator_energy({3, 1, 0}) == doctest::Approx(3.0));
    CHECK(oscillator_energy({3, 2, 1}) == doctest::Approx(9.0));
    CHECK(oscillator_energy({1, 1, 0}) == doctest::Approx(1.0));
}

TEST_CASE("hydrogen and oscillator energies increase in n, ell, N")
{
    for (int N = 2; N <= 12; ++N) {
        for (int n = 1; n <= 6; ++n) {
            for (int ell = 0; ell <= 6; ++ell) {
                const StateLabel s{N, n, ell};
                CHECK(hydrogen_energy({N, n + 1, ell}) > hydrogen_energy(s));
                CHECK(hydrogen_energy({N, n, ell + 1}) > hydrogen_energy(s));
                CHECK(hydrogen_energy({N + 1, n, ell}) > hydrogen_energy(s));
                CHECK(oscillator_energy({N, n + 1, ell}) > oscillator_energy(s));
                CHECK(oscillator_energy({N, n, ell + 1}) > oscillator_energy(s));
                CHECK(oscillator_energy({N + 1, n, ell}) > oscillator_energy(s));
            }
        }
    }
}

TEST_CASE("dimension shift identity E(N, n, ell) = E(N + 2 ell, n, 0)")
{
    for (int N = 2; N <= 8; ++N) {
        for (int n = 1; n <= 4; ++n) {
            for (int ell = 0; ell <= 4; ++ell) {
                CHECK(hydrogen_energy({N, n, ell}) ==
                      doctest::Approx(hydrogen_energy({N + 2 * ell, n, 0})).epsilon(1e-15));
                CHECK(oscillator_energy({N, n, ell}) ==
                      doctest::Approx(oscillator_energy({N + 2 * ell, n, 0})).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("linear_energy_exact")
{
    CHECK(linear_energy_exact({3, 1, 0}, 1.0) == doctest::Approx(2.33810741).epsilon(1e-8));
    CHECK(linear_energy_exact({3, 1, 0}, 8.0) == doctest::Approx(9.35242964).epsilon(1e-8));
    CHECK(linear_energy_exact({1, 1, 0}, 1.0) == doctest::Approx(1.01879297).epsilon(1e-8));
    CHECK_THROWS_AS(linear_energy_exact({3, 1, 1}, 1.0), domain_error);
    CHECK_THROWS_AS(linear_energy_exact({4, 1, 0}, 1.0), domain_error);
    CHECK_THROWS_AS(linear_energy_exact({3, 1, 0}, 0.0), domain_error);
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(3, 1) == 3);
    CHECK(degeneracy(4, 1) == 4);
    CHECK(degeneracy(3, 0) == 1);
    CHECK(degeneracy(2, 5) == 2);
    CHECK(degeneracy(3, 2) == 5);
    CHECK(degeneracy(4, 2) == 9);
    CHECK_THROWS_AS(degeneracy(1, 0), domain_error);
    CHECK_THROWS_AS(degeneracy(40, 60), domain_error); // overflows 64 bits
}

TEST_CASE("scale_energy")
{
    CHECK(scale_energy(3.0, 1.0, 2.0) == doctest::Approx(3.0));
    CHECK(scale_energy(2.33810741, 8.0, 1.0) == doctest::Approx(9.35242964).epsilon(1e-8));
    CHECK(scale_energy(-0.25, 4.0, -1.0) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK_THROWS_AS(scale_energy(1.0, -1.0, 1.0), domain_error);
    // E(v)/E(1) = v^{2/(q+2)} for any nonzero E
    for (double q : {-1.5, -0.5, 0.5, 2.0, 3.0}) {
        for (double v : {0.5, 2.0, 10.0}) {
            const double ratio = scale_energy(1.7, v, q) / 1.7;
            CHECK(ratio == doctest::Approx(std::pow(v, 2.0 / (q + 2.0))).epsilon(1e-14));
        }
    }
}

#include "doctest.h"

#include <cmath>

#include "powspec/prep.hpp"

using namespace powspec;
using namespace powspec::prep;

namespace {

// Test-side brute minimizer: three passes of plain grid refinement, no
// golden section, independent of the library's minimizer.
double brute_min(double P, double q)
{
    auto f = [P, q](double r) {
        const double pot = (q == 0.0) ? std::log(r) : sgn(q) * std::pow(r, q);
        return P * P / (r * r) + pot;
    };
    // wide range: near q = -2 the minimizer drifts to extreme radii
    double lo = 1e-15, hi = 1e15;
    double best_r = 1.0;
    for (int pass = 0; pass < 14; ++pass) {
        const int n = 400;
        const double step = std::log(hi / lo) / n;
        double best = f(lo);
        best_r = lo;
        for (int i = 1; i <= n; ++i) {
            const double r = lo * std::exp(step * i);
            const double val = f(r);
            if (val < best) {
                best = val;
                best_r = r;
            }
        }
        const double w = std::exp(step);
        lo = best_r / w;
        hi = best_r * w;
    }
    return f(best_r);
}

} // namespace

TEST_CASE("g: pinned values")
{
    CHECK(g(1.0, -1.0) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(g(1.5, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(g(1.0, 0.0) == doctest::Approx(0.846573590).epsilon(1e-9));
    // Table input P(1) = 1.3761 lands on the first Airy zero
    CHECK(g(1.3761, 1.0) == doctest::Approx(2.33811).epsilon(3e-4));
    CHECK_THROWS_AS(g(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(g(1.0, -2.0), domain_error);
}

TEST_CASE("g agrees with brute-force minimization")
{
    for (double q : {-1.9, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double P : {0.3, 1.0, 1.5, 5.0}) {
            const double val = g(P, q);
            // near q = -2 the value itself is astronomically large; the
            // tolerance is absolute wherever |g| is of order one
            CHECK(std::fabs(val - brute_min(P, q)) <= 1e-8 * std::max(1.0, std::fabs(val)));
        }
    }
}

TEST_CASE("g_derivative: values and finite differences")
{
    CHECK(g_derivative(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g_derivative(1.5, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (double q : {-1.9, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double P : {0.3, 1.0, 1.5, 5.0}) {
            const double an = g_derivative(P, q);
            CHECK(an > 0.0);
            const double h = 1e-6 * P;
            const double fd = (g(P + h, q) - g(P - h, q)) / (2.0 * h);
            CHECK(std::fabs(fd - an) <= 1e-6 * an);
        }
    }
}

TEST_CASE("p_from_energy: pinned values and round trip")
{
    CHECK(p_from_energy(-0.25, -1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p_from_energy(3.0, 2.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(p_from_energy(2.33810741, 1.0) == doctest::Approx(1.37608).epsilon(1e-5));
    CHECK_THROWS_AS(p_from_energy(-1.0, 2.0), domain_error);
    CHECK_THROWS_AS(p_from_energy(1.0, -1.0), domain_error);

    for (double q : {-1.9, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double P : {0.3, 1.0, 1.5, 5.0}) {
            const double back = p_from_energy(g(P, q), q);
            CHECK(std::fabs(back - P) <= 1e-12 * P);
        }
    }
}

TEST_CASE("z_factor")
{
    CHECK(z_factor(2.0, 3) == doctest::Approx(1.290994449).epsilon(1e-9));
    CHECK(z_factor(0.0, 3) == doctest::Approx(1.395612425).epsilon(1e-9));
    CHECK(z_factor(-1.0, 3) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK_THROWS_AS(z_factor(-3.0, 3), domain_error);
    CHECK_THROWS_AS(z_factor(-1.5, 1), domain_error);
    // continuity at q = 0 and monotone decrease
    for (int N : {1, 2, 3, 5, 10}) {
        CHECK(z_factor(1e-9, N) == doctest::Approx(z_factor(0.0, N)).epsilon(1e-8));
        CHECK(z_factor(-1e-9 + 0.0, N) == doctest::Approx(z_factor(0.0, N)).epsilon(1e-8));
        double prev = z_factor(N == 1 ? -0.9 : -1.5, N);
        for (double q : {-0.5, -1e-3, 1e-3, 0.5, 1.0, 2.0, 3.0}) {
            const double z = z_factor(q, N);
            CHECK(z < prev);
            prev = z;
        }
    }
}

TEST_CASE("scaled_energy: shifts, scales, and direct minimization")
{
    CHECK(scaled_energy(1.5, 0.0, 1.0, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(scaled_energy(1.5, -0.5, 1.0, 2.0) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(scaled_energy(1.5, 0.0, 4.0, 2.0) == doctest::Approx(6.0).epsilon(1e-14));

    // direct minimization oracle, including the log case
    for (double q : {-1.0, -0.5, 0.0, 1.0, 2.0}) {
        for (double A : {0.0, -0.7, 2.0}) {
            for (double B : {0.5, 1.0, 4.0}) {
                const double P = 1.3;
                auto f = [&](double r) {
                    const double pot = (q == 0.0) ? B * std::log(r) : B * sgn(q) * std::pow(r, q);
                    return P * P / (r * r) + A + pot;
                };
                double lo = 1e-6, hi = 1e6, best_r = 1.0;
                for (int pass = 0; pass < 12; ++pass) {
                    const int n = 300;
                    const double step = std::log(hi / lo) / n;
                    double best = f(lo);
                    best_r = lo;
                    for (int i = 1; i <= n; ++i) {
                        const double r = lo * std::exp(step * i);
                        if (f(r) < best) {
                            best = f(r);
                            best_r = r;
                        }
                    }
                    lo = best_r / std::exp(step);
                    hi = best_r * std::exp(step);
                }
                CHECK(scaled_energy(P, A, B, q) == doctest::Approx(f(best_r)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("shifted_family_energy: values and continuity at q = 0")
{
    CHECK(shifted_family_energy(1.5, 2.0) ==
          doctest::Approx(-0.5 + std::sqrt(0.5) * 3.0).epsilon(1e-12));
    CHECK(shifted_family_energy(1.0, 0.0) == doctest::Approx(0.846573590).epsilon(1e-9));
    for (double P : {0.3, 1.0, 1.5, 5.0}) {
        const double at0 = shifted_family_energy(P, 0.0);
        CHECK(std::fabs(shifted_family_energy(P, 1e-6) - at0) <= 1e-5);
        CHECK(std::fabs(shifted_family_energy(P, -1e-6) - at0) <= 1e-5);
    }
}

TEST_CASE("PSample and QSample factories")
{
    const PSample ps = PSample::from_energy(3.0, 2.0, StateLabel{3, 1, 0});
    CHECK(ps.P == doctest::Approx(1.5));
    const QSample qs = QSample::from_psample(ps);
    CHECK(qs.Q == doctest::Approx(1.5 * 1.290994449).epsilon(1e-9));
    CHECK_THROWS_AS(PSample::from_energy(-3.0, 2.0, StateLabel{3, 1, 0}), domain_error);
}

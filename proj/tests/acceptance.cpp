// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are pinned in code, not configurable.
//
// Criterion 1 compares against published reference figures that contain
// eight demonstrably erroneous cells (see the table1 tool output); it is
// implemented exactly as stated and reports honestly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "powspec/bounds.hpp"
#include "powspec/comparison.hpp"
#include "powspec/exact.hpp"
#include "powspec/minimize.hpp"
#include "powspec/prep.hpp"
#include "powspec/radial.hpp"
#include "powspec/sweep.hpp"

using namespace powspec;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail,
            double wall_ms)
{
    std::printf("[%s] criterion %d: %s — %s (%.1f s)\n", pass ? "PASS" : "FAIL", criterion,
                title, detail.c_str(), wall_ms / 1000.0);
    if (!pass) {
        ++g_failures;
    }
}

template <class Fn>
void timed(int criterion, const char* title, Fn&& fn)
{
    const auto t0 = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(criterion, title, pass, detail, ms);
}

radial::SolverOptions solver_opts(double tol)
{
    radial::SolverOptions o;
    o.tol = tol;
    o.keep_wavefunction = false;
    return o;
}

// ---------------------------------------------------------------- criterion 1
bool criterion1(std::string& detail)
{
    sweep::SweepOptions o;
    o.tol = 1e-7;
    const auto rows = sweep::table1(o);
    int mismatches = 0;
    double worst = 0.0;
    std::string cells;
    for (const auto& r : rows) {
        if (!r.ok || !r.within_tol) {
            ++mismatches;
            worst = std::max(worst, r.abs_err);
            char buf[96];
            std::snprintf(buf, sizeof(buf), " (N=%d,n=%d: %.4f vs %.4f)", r.N, r.n, r.P,
                          r.reference);
            cells += buf;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%d of 44 cells within 5e-4 of the reference figures; %d mismatch(es)%s",
                  44 - mismatches, mismatches, mismatches ? ":" : "");
    detail = buf + cells;
    return mismatches == 0;
}

// ---------------------------------------------------------------- criterion 2
bool criterion2(std::string& detail)
{
    struct Cell {
        double rel = 0.0;
        bool ok = false;
    };
    struct Spec {
        PotentialSpec pot;
        StateLabel s;
        double exact;
    };
    std::vector<Spec> cells;
    for (int N = 2; N <= 6; ++N) {
        for (int n = 1; n <= 4; ++n) {
            for (int ell = 0; ell <= 3; ++ell) {
                cells.push_back({PotentialSpec::power(-1.0), {N, n, ell},
                                 exact::hydrogen_energy({N, n, ell})});
                cells.push_back({PotentialSpec::power(2.0), {N, n, ell},
                                 exact::oscillator_energy({N, n, ell})});
            }
        }
    }
    for (int n = 1; n <= 4; ++n) { // linear potential, Airy closed forms
        cells.push_back({PotentialSpec::power(1.0), {3, n, 0},
                         exact::linear_energy_exact({3, n, 0}, 1.0)});
        // one dimension: level k of the closed form indexes the k-th even
        // state, i.e. full-line level 2k - 1
        cells.push_back({PotentialSpec::power(1.0), {1, 2 * n - 1, 0},
                         exact::linear_energy_exact({1, n, 0}, 1.0)});
    }

    const auto results = sweep::indexed_map<Cell>(cells.size(), true, [&](std::size_t i) {
        Cell c;
        try {
            const auto res = radial::solve_eigenvalue(cells[i].pot, cells[i].s, solver_opts(1e-8));
            c.rel = std::fabs(res.energy - cells[i].exact) / std::fabs(cells[i].exact);
            c.ok = res.converged && c.rel <= 1e-6;
        } catch (const std::exception&) {
            c.ok = false;
            c.rel = 1.0;
        }
        return c;
    });
    double worst = 0.0;
    int bad = 0;
    for (const auto& c : results) {
        worst = std::max(worst, c.rel);
        bad += c.ok ? 0 : 1;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%zu closed-form states, worst relative error %.2e (tolerance 1e-6)",
                  results.size(), worst);
    detail = buf;
    return bad == 0;
}

// ---------------------------------------------------------------- criterion 3
bool criterion3(std::string& detail)
{
    std::vector<int> Ns;
    for (int N = 3; N <= 10; ++N) {
        Ns.push_back(N);
    }
    const auto rows = sweep::figure5(Ns, {0.5, 1.0, 2.0, 5.0, 10.0}, {1e-9, true});
    int violations = 0;
    double anchor_elp = 0.0, anchor_eup = 0.0;
    for (const auto& r : rows) {
        if (!bounds::sandwich_ok(r, 1e-6)) {
            ++violations;
        }
        if (r.N == 3 && r.v == 1.0) {
            anchor_elp = r.ELP;
            anchor_eup = r.EUP;
        }
    }
    const bool anchors_ok =
        std::fabs(anchor_elp - 2.6023) <= 1e-3 && std::fabs(anchor_eup - 2.8020) <= 1e-3;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "%zu (N, v) cells, %d ordering violation(s); N=3, v=1 anchors ELP=%.4f "
                  "(2.6023±1e-3), EUP=%.4f (2.8020±1e-3)",
                  rows.size(), violations, anchor_elp, anchor_eup);
    detail = buf;
    return violations == 0 && anchors_ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion4(std::string& detail)
{
    const std::vector<double> grid = {-1.5, -1.0, -0.5, -1e-3, 0.0, 1e-3, 0.5, 1.0, 1.5, 2.0, 3.0};
    const auto suite = sweep::qmonotone_verify(grid, {1, 2, 3, 5, 10}, {1e-9, true});
    int bad = 0;
    double min_q = 1e300, min_p = 1e300, min_z = 1e300;
    for (const auto& c : suite.cells) {
        if (!c.pass) {
            ++bad;
        }
        min_q = std::min(min_q, c.q_margin);
        min_p = std::min(min_p, c.p_margin);
        min_z = std::min(min_z, c.z_margin);
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "%zu adjacent pairs (N in {1,2,3,5,10}); min margins: Q %+0.2e, P %+0.2e, "
                  "Z %+0.2e (all must be > 0)",
                  suite.cells.size(), min_q, min_p, min_z);
    detail = buf;
    return bad == 0 && min_q > 0.0 && min_p > 0.0 && min_z > 0.0;
}

// ---------------------------------------------------------------- criterion 5
bool criterion5(std::string& detail)
{
    const auto suite = sweep::comparison_verify({0.5, 1.0, 1.5, 2.0, 3.0}, 3, {1e-8, true});
    int bad = 0;
    double min_margin = 1e300;
    for (const auto& c : suite.cells) {
        bad += c.pass ? 0 : 1;
        min_margin = std::min(min_margin, c.margin);
    }
    // spot value from the closed construction
    const auto spot = comparison::crossing_construction(2.0, 1.0, 3, 3.0);
    const bool spot_ok = std::fabs(spot.F_hat - 2.4237) <= 1e-3 &&
                         spot.F_hat > 2.3381 - 1e-9;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "%zu pairs p > q, min bound margin %+0.3e; spot (p=2,q=1,N=3): "
                  "bound %.4f (2.4237±1e-3) vs E(1)=2.3381",
                  suite.cells.size(), min_margin, spot.F_hat);
    detail = buf;
    return bad == 0 && min_margin > 0.0 && spot_ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion6(std::string& detail)
{
    std::mt19937 rng(20260808u); // fixed seed: the case list is reproducible
    std::uniform_real_distribution<double> expo(-1.5, 3.0);
    std::uniform_int_distribution<int> dim(2, 10);

    int done = 0, bad = 0;
    double worst_area = 0.0;
    std::string failures;
    while (done < 20) {
        double p = expo(rng), q = expo(rng);
        if (p < q) {
            std::swap(p, q);
        }
        if (std::fabs(p) < 0.2 || std::fabs(q) < 0.2 || p - q < 0.2) {
            continue;
        }
        const int N = dim(rng);
        ++done;
        try {
            const auto opts = solver_opts(1e-8);
            const double E_p =
                radial::solve_eigenvalue(PotentialSpec::power(p), {N, 1, 0}, opts).energy;
            const auto c = comparison::crossing_construction(p, q, N, E_p);
            const auto rep = comparison::find_crossings(
                [&](double r) { return c.comparison_potential(r); },
                [&](double r) { return c.target_potential(r); }, N, 4.0 * c.second_crossing);
            // scale-free area acceptance: 1e-8 relative to the absolute-value
            // integral (equivalently absolute at order-one scales)
            const double area_rel =
                std::fabs(rep.area_residual) / std::max(1.0, rep.area_scale);
            worst_area = std::max(worst_area, area_rel);

            // ground state of the pure-power target for the weighted integral
            const double target_exponent =
                (c.family == comparison::ComparisonFamily::upper_power) ? q : p;
            radial::SolverOptions wf_opts = solver_opts(1e-8);
            wf_opts.keep_wavefunction = true;
            const auto ground = radial::ground_wavefunction(
                PotentialSpec::power(target_exponent), N, 0, wf_opts);
            const bool comparison_above =
                (c.family == comparison::ComparisonFamily::upper_power);
            const auto below = [&](double r) {
                return comparison_above ? c.target_potential(r) : c.comparison_potential(r);
            };
            const auto above = [&](double r) {
                return comparison_above ? c.comparison_potential(r) : c.target_potential(r);
            };
            const auto curve = comparison::k_curve(below, above, ground, N);
            bool k_negative = true;
            for (std::size_t i = 1; i < curve.size(); ++i) {
                k_negative = k_negative && curve[i] < 0.0;
            }

            const bool ok = rep.crossings.size() == 2 && area_rel <= 1e-8 && k_negative;
            if (!ok) {
                ++bad;
                char buf[120];
                std::snprintf(buf, sizeof(buf),
                              " (p=%.3f,q=%.3f,N=%d: crossings=%zu area=%.1e k<0:%d)", p, q, N,
                              rep.crossings.size(), area_rel, (int)k_negative);
                failures += buf;
            }
        } catch (const std::exception& e) {
            ++bad;
            failures += std::string(" (p=") + std::to_string(p) + ",q=" + std::to_string(q) +
                        ": " + e.what() + ")";
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "20 randomized pairs: %d failure(s), worst scaled |area residual| %.2e (<= 1e-8)",
                  bad, worst_area);
    detail = buf + failures;
    return bad == 0;
}

// ---------------------------------------------------------------- criterion 7
bool criterion7(std::string& detail)
{
    const auto rt = sweep::roundtrip_verify();

    // coupling scaling law on solver output
    double worst_scaling = 0.0;
    {
        struct Case {
            double q, v;
        };
        std::vector<Case> cases;
        for (double q : {-1.0, 0.5, 2.0}) {
            for (double v : {0.5, 2.0, 10.0}) {
                cases.push_back({q, v});
            }
        }
        for (const auto& cs : cases) {
            const double E1 =
                radial::solve_eigenvalue(PotentialSpec::power(cs.q), {3, 1, 0}, solver_opts(1e-8))
                    .energy;
            const double Ev =
                radial::solve_eigenvalue(PotentialSpec::power(cs.q, cs.v), {3, 1, 0},
                                         solver_opts(1e-8))
                    .energy;
            worst_scaling = std::max(
                worst_scaling, std::fabs(Ev - exact::scale_energy(E1, cs.v, cs.q)) / std::fabs(Ev));
        }
    }

    // dimension-shift invariance on solver output
    struct Pair {
        double q;
        int N, ell, n;
    };
    std::vector<Pair> pairs;
    for (double q : {-1.0, -0.5, 0.5, 1.0, 1.5, 2.0}) {
        for (int N : {2, 3, 4}) {
            for (int ell : {0, 1, 2}) {
                for (int n : {1, 2}) {
                    pairs.push_back({q, N, ell, n});
                }
            }
        }
    }
    const auto devs = sweep::indexed_map<double>(pairs.size(), true, [&](std::size_t i) {
        const auto& c = pairs[i];
        try {
            const double a =
                radial::solve_eigenvalue(PotentialSpec::power(c.q), {c.N, c.n, c.ell},
                                         solver_opts(1e-8))
                    .energy;
            const double b =
                radial::solve_eigenvalue(PotentialSpec::power(c.q), {c.N + 2 * c.ell, c.n, 0},
                                         solver_opts(1e-8))
                    .energy;
            return std::fabs(a - b) / std::max(1.0, std::fabs(a));
        } catch (const std::exception&) {
            return 1.0;
        }
    });
    double worst_shift = 0.0;
    for (double d : devs) {
        worst_shift = std::max(worst_shift, d);
    }

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "round trip %.1e (<=1e-12); direct minimization %.1e (<=1e-8); derivative "
                  "%.1e (<=1e-6); scaling law %.1e (<=1e-5); dimension shift %.1e (<=1e-6)",
                  rt.max_roundtrip_rel, rt.max_minimize_abs, rt.max_derivative_rel, worst_scaling,
                  worst_shift);
    detail = buf;
    return rt.all_pass && worst_scaling <= 1e-5 && worst_shift <= 1e-6;
}

// ---------------------------------------------------------------- criterion 8
bool criterion8(std::string& detail)
{
    double worst_cont = 0.0;
    for (double P : {0.3, 1.0, 1.5, 5.0}) {
        const double at0 = prep::shifted_family_energy(P, 0.0);
        worst_cont = std::max(worst_cont, std::fabs(prep::shifted_family_energy(P, 1e-6) - at0));
        worst_cont = std::max(worst_cont, std::fabs(prep::shifted_family_energy(P, -1e-6) - at0));
    }

    double worst_exact = 0.0;
    {
        bounds::PowerMixture osc;
        osc.terms = {{2.0, 1.0}};
        worst_exact = std::max(
            worst_exact, std::fabs(bounds::sum_of_powers_lower_bound(osc, {{2.0, 1.5}}, 0.0, 3) -
                                   3.0));
        bounds::PowerMixture coul;
        coul.terms = {{-1.0, 1.0}};
        worst_exact = std::max(
            worst_exact, std::fabs(bounds::sum_of_powers_lower_bound(coul, {{-1.0, 1.0}}, 0.0, 3) +
                                   0.25));
        bounds::PowerMixture lin;
        lin.terms = {{1.0, 1.0}};
        const double P1 = 1.37608354; // solver-derived P(1), N = 3
        worst_exact = std::max(
            worst_exact,
            std::fabs(bounds::sum_of_powers_lower_bound(lin, {{1.0, P1}}, 0.0, 3) -
                      prep::g(P1, 1.0)));
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "log-limit continuity %.1e (<=1e-5); single-term exactness %.1e (<=1e-10)",
                  worst_cont, worst_exact);
    detail = buf;
    return worst_cont <= 1e-5 && worst_exact <= 1e-10;
}

} // namespace

int main()
{
    std::printf("powspec acceptance suite\n");
    timed(1, "linear-potential P table regression (44 cells, ±5e-4)", criterion1);
    timed(2, "solver vs closed-form oracles (<=1e-6 relative)", criterion2);
    timed(3, "bounds sandwich ELP < ELQ < EX < EUQ < EUP on the (N, v) grid", criterion3);
    timed(4, "Q(q) increasing, P(q) increasing, Z(q) decreasing on the q grid", criterion4);
    timed(5, "crossing-construction bound above the solver eigenvalue", criterion5);
    timed(6, "two crossings, zero area, one-signed k(r) on randomized pairs", criterion6);
    timed(7, "identities: round trip, minimization, derivative, scaling, dimension shift",
          criterion7);
    timed(8, "log-limit continuity and single-term exactness", criterion8);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

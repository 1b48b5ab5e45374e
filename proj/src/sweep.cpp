#include "powspec/sweep.hpp"

#include <cmath>

#include "powspec/exact.hpp"
#include "powspec/minimize.hpp"
#include "powspec/prep.hpp"
#include "powspec/radial.hpp"

namespace powspec::sweep {

const std::array<std::array<double, 4>, 11>& table1_reference()
{
    // P^N_{n0}(1), rows N = 2..12, columns n = 1..4
    static const std::array<std::array<double, 4>, 11> ref = {{
        {0.9348, 2.8063, 4.6249, 6.4416},
        {1.3761, 3.1813, 4.9926, 6.8051},
        {1.8735, 3.6657, 5.4700, 7.2783},
        {2.3719, 4.1550, 5.9530, 7.7570},
        {2.8709, 4.6472, 6.4398, 8.2396},
        {3.3702, 5.1413, 6.9291, 8.7251},
        {3.8696, 5.6367, 7.4204, 9.2129},
        {4.3692, 6.1330, 7.9130, 9.7024},
        {4.8689, 6.6299, 8.4068, 10.1932},
        {5.3686, 7.1274, 8.9053, 10.7453},
        {5.8684, 7.6253, 9.4045, 11.2744},
    }};
    return ref;
}

std::vector<Table1Row> table1(const SweepOptions& opts)
{
    const auto& ref = table1_reference();
    const std::size_t cells = ref.size() * 4;
    return indexed_map<Table1Row>(cells, opts.parallel, [&](std::size_t idx) {
        Table1Row row;
        row.N = static_cast<int>(idx / 4) + 2;
        row.n = static_cast<int>(idx % 4) + 1;
        row.reference = ref[row.N - 2][row.n - 1];
        try {
            radial::SolverOptions sopts;
            sopts.tol = opts.tol;
            sopts.keep_wavefunction = false;
            const auto res =
                radial::solve_eigenvalue(PotentialSpec::power(1.0), StateLabel{row.N, row.n, 0},
                                         sopts);
            row.energy = res.energy;
            row.P = prep::p_from_energy(res.energy, 1.0);
            row.abs_err = std::fabs(row.P - row.reference);
            row.within_tol = row.abs_err <= 5e-4;
            row.ok = res.converged;
            if (!res.converged) {
                row.error = "solver did not converge";
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    });
}

std::vector<double> default_q_grid()
{
    return {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
}

std::vector<PfunRow> pfun(const std::vector<double>& qs, int N, int n, int ell,
                          const SweepOptions& opts)
{
    return indexed_map<PfunRow>(qs.size(), opts.parallel, [&](std::size_t idx) {
        PfunRow row;
        row.q = qs[idx];
        try {
            const PotentialSpec pot = (row.q == 0.0) ? PotentialSpec::logarithmic()
                                                     : PotentialSpec::power(row.q);
            radial::SolverOptions sopts;
            sopts.tol = opts.tol;
            sopts.keep_wavefunction = false;
            const auto res = radial::solve_eigenvalue(pot, StateLabel{N, n, ell}, sopts);
            row.energy = res.energy;
            row.P = prep::p_from_energy(res.energy, row.q);
            row.Z = prep::z_factor(row.q, N);
            row.Q = row.Z * row.P;
            row.ok = res.converged;
            if (!res.converged) {
                row.error = "solver did not converge";
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    });
}

std::vector<bounds::Fig5Row> figure5(const std::vector<int>& dimensions,
                                     const std::vector<double>& couplings,
                                     const SweepOptions& opts)
{
    bounds::Fig5Options fopts;
    fopts.tol = opts.tol;
    fopts.parallel = opts.parallel;
    return bounds::figure5_dataset(dimensions, couplings, fopts);
}

QMonotoneSuite qmonotone_verify(const std::vector<double>& qs, const std::vector<int>& Ns,
                                const SweepOptions& opts)
{
    struct Point {
        double q;
        int N;
    };
    // flatten: per dimension, P at every admissible grid exponent
    std::vector<Point> points;
    for (int N : Ns) {
        for (double q : qs) {
            if (N == 1 && !(q > -1.0)) {
                continue;
            }
            points.push_back({q, N});
        }
    }

    struct PCell {
        double P = 0.0;
        bool ok = false;
        std::string error;
    };
    auto pcells = indexed_map<PCell>(points.size(), opts.parallel, [&](std::size_t idx) {
        PCell cell;
        try {
            const auto [q, N] = points[idx];
            const PotentialSpec pot =
                (q == 0.0) ? PotentialSpec::logarithmic() : PotentialSpec::power(q);
            radial::SolverOptions sopts;
            sopts.tol = opts.tol;
            sopts.keep_wavefunction = false;
            const auto res = radial::solve_eigenvalue(pot, StateLabel{N, 1, 0}, sopts);
            cell.P = prep::p_from_energy(res.energy, q);
            cell.ok = res.converged;
            if (!res.converged) {
                cell.error = "solver did not converge";
            }
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        return cell;
    });

    QMonotoneSuite suite;
    suite.all_pass = true;
    std::size_t base = 0;
    for (int N : Ns) {
        std::vector<double> grid;
        for (double q : qs) {
            if (N == 1 && !(q > -1.0)) {
                continue;
            }
            grid.push_back(q);
        }
        for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
            const PCell& lo = pcells[base + j];
            const PCell& hi = pcells[base + j + 1];
            QMonotoneCell cell;
            cell.q_lo = grid[j];
            cell.q_hi = grid[j + 1];
            cell.N = N;
            if (!lo.ok || !hi.ok) {
                cell.error = !lo.ok ? lo.error : hi.error;
                suite.all_pass = false;
                suite.cells.push_back(cell);
                continue;
            }
            cell.P_lo = lo.P;
            cell.P_hi = hi.P;
            const double Z_lo = prep::z_factor(cell.q_lo, N);
            const double Z_hi = prep::z_factor(cell.q_hi, N);
            cell.Q_lo = Z_lo * lo.P;
            cell.Q_hi = Z_hi * hi.P;
            cell.q_margin = cell.Q_hi - cell.Q_lo;
            cell.p_margin = cell.P_hi - cell.P_lo;
            cell.z_margin = Z_lo - Z_hi;
            try {
                if (cell.q_lo != 0.0 && cell.q_hi != 0.0) {
                    const auto rep =
                        comparison::verify_q_monotone(cell.q_hi, cell.q_lo, N, hi.P, lo.P);
                    cell.f_margin = rep.f_margin;
                    cell.pass = rep.pass && cell.p_margin > 0.0 && cell.z_margin > 0.0;
                } else {
                    // pairs touching the log point: Z and Q margins only
                    cell.f_margin = 0.0;
                    cell.pass = cell.q_margin > 0.0 && cell.p_margin > 0.0 && cell.z_margin > 0.0;
                }
            } catch (const std::exception& e) {
                cell.error = e.what();
                cell.pass = false;
            }
            suite.all_pass = suite.all_pass && cell.pass;
            suite.cells.push_back(cell);
        }
        base += grid.size();
    }
    return suite;
}

QMonotoneSuite qmonotone_verify(const SweepOptions& opts)
{
    return qmonotone_verify({-1.5, -1.0, -0.5, -1e-3, 1e-3, 0.5, 1.0, 1.5, 2.0, 3.0},
                            {1, 2, 3, 5, 10}, opts);
}

ComparisonSuite comparison_verify(const std::vector<double>& exponents, int N,
                                  const SweepOptions& opts)
{
    struct Pair {
        double p, q;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        for (std::size_t j = i + 1; j < exponents.size(); ++j) {
            const double a = exponents[i], b = exponents[j];
            pairs.push_back({std::max(a, b), std::min(a, b)});
        }
    }

    ComparisonSuite suite;
    suite.cells = indexed_map<ComparisonCell>(pairs.size(), opts.parallel, [&](std::size_t idx) {
        ComparisonCell cell;
        cell.p = pairs[idx].p;
        cell.q = pairs[idx].q;
        cell.N = N;
        try {
            radial::SolverOptions sopts;
            sopts.tol = opts.tol;
            sopts.keep_wavefunction = false;
            const auto res_p =
                radial::solve_eigenvalue(PotentialSpec::power(cell.p), StateLabel{N, 1, 0}, sopts);
            const auto res_q =
                radial::solve_eigenvalue(PotentialSpec::power(cell.q), StateLabel{N, 1, 0}, sopts);
            cell.E_q = res_q.energy;
            const auto cons = comparison::crossing_construction(cell.p, cell.q, N, res_p.energy);
            cell.F_hat = cons.F_hat;
            cell.margin = cons.F_hat - cell.E_q;

            const auto rep = comparison::find_crossings(
                [&cons](double r) { return cons.comparison_potential(r); },
                [&cons](double r) { return cons.target_potential(r); }, N,
                cons.second_crossing * 4.0);
            cell.crossings = static_cast<int>(rep.crossings.size());
            cell.area_residual = rep.has_area_residual ? rep.area_residual : 0.0;
            cell.pass = cell.margin > 0.0 && cell.crossings == 2;
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        return cell;
    });
    suite.all_pass = true;
    for (const auto& c : suite.cells) {
        suite.all_pass = suite.all_pass && c.pass;
    }
    return suite;
}

ComparisonSuite comparison_verify(const SweepOptions& opts)
{
    return comparison_verify({0.5, 1.0, 1.5, 2.0, 3.0}, 3, opts);
}

RoundtripReport roundtrip_verify()
{
    RoundtripReport rep;
    const std::vector<double> qs = {-1.9, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
    const std::vector<double> ps = {0.3, 1.0, 1.5, 5.0};
    for (double q : qs) {
        for (double P : ps) {
            const double E = prep::g(P, q);
            const double back = prep::p_from_energy(E, q);
            rep.max_roundtrip_rel = std::max(rep.max_roundtrip_rel, std::fabs(back - P) / P);

            // independent 1-D minimization of P^2/r^2 + sgn(q) r^q (or ln r);
            // the range is wide because the minimizer runs off to extreme
            // radii as q approaches -2, where |g| also blows up (hence the
            // scale in the residual)
            auto direct = [P, q](double r) {
                const double pot = (q == 0.0) ? std::log(r) : powspec::sgn(q) * std::pow(r, q);
                return P * P / (r * r) + pot;
            };
            const double brute = minimize_log_scan(direct, 1e-15, 1e15, 80, 1e-13).value;
            rep.max_minimize_abs = std::max(rep.max_minimize_abs,
                                            std::fabs(brute - E) / std::max(1.0, std::fabs(E)));

            const double h = 1e-6 * P;
            const double fd = (prep::g(P + h, q) - prep::g(P - h, q)) / (2.0 * h);
            const double an = prep::g_derivative(P, q);
            rep.max_derivative_rel = std::max(rep.max_derivative_rel, std::fabs(fd - an) / an);
        }
    }
    rep.all_pass = rep.max_roundtrip_rel <= 1e-12 && rep.max_minimize_abs <= 1e-8 &&
                   rep.max_derivative_rel <= 1e-6;
    return rep;
}

} // namespace powspec::sweep

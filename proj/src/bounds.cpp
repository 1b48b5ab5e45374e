#include "powspec/bounds.hpp"

#include <cmath>

#include "powspec/minimize.hpp"
#include "powspec/prep.hpp"
#include "powspec/sweep.hpp"

namespace powspec::bounds {

PairBounds pair_bounds(double q1, double q2, double P1, double P2, int N)
{
    if (!(q1 < q2)) {
        throw domain_error("pair_bounds: need q1 < q2");
    }
    if (!(P1 > 0.0) || !(P2 > 0.0)) {
        throw domain_error("pair_bounds: P values must be > 0");
    }
    const double Z1 = prep::z_factor(q1, N);
    const double Z2 = prep::z_factor(q2, N);
    PairBounds b;
    b.upper_v1 = prep::g(P2, q1);
    b.lower_v2 = prep::g(P1, q2);
    b.improved_upper_v1 = prep::g(Z2 * P2 / Z1, q1);
    b.improved_lower_v2 = prep::g(Z1 * P1 / Z2, q2);
    return b;
}

BoundSet bound_set(double q_target, double q_lo, double P_lo, double q_hi, double P_hi, int N,
                   std::optional<double> reference)
{
    if (!(q_lo < q_target) || !(q_target < q_hi)) {
        throw domain_error("bound_set: need q_lo < q_target < q_hi");
    }
    if (!(P_lo > 0.0) || !(P_hi > 0.0)) {
        throw domain_error("bound_set: P values must be > 0");
    }
    const double Zt = prep::z_factor(q_target, N);
    BoundSet bs;
    bs.q_target = q_target;
    bs.N = N;
    // lower pair (q_lo, q_target): E[r^{q_target}] > g(P_lo, q_target)
    bs.ELP = prep::g(P_lo, q_target);
    bs.ELQ = prep::g(prep::z_factor(q_lo, N) * P_lo / Zt, q_target);
    // upper pair (q_target, q_hi): E[r^{q_target}] < g(P_hi, q_target)
    bs.EUP = prep::g(P_hi, q_target);
    bs.EUQ = prep::g(prep::z_factor(q_hi, N) * P_hi / Zt, q_target);
    bs.reference = reference;
    return bs;
}

double log_lower_bound(double q, double Q0, int N)
{
    if (!(q > 0.0)) {
        throw domain_error("log_lower_bound: need q > 0");
    }
    if (!(Q0 > 0.0)) {
        throw domain_error("log_lower_bound: need Q0 > 0");
    }
    return prep::g(Q0 / prep::z_factor(q, N), q);
}

void PowerMixture::validate() const
{
    bool any_positive = log_weight > 0.0;
    if (log_weight < 0.0) {
        throw domain_error("PowerMixture: weights must be non-negative");
    }
    for (const auto& [q, a] : terms) {
        if (a < 0.0) {
            throw domain_error("PowerMixture: weights must be non-negative");
        }
        if (q == 0.0) {
            throw domain_error("PowerMixture: the log term belongs in log_weight");
        }
        if (!(q > -2.0)) {
            throw domain_error("PowerMixture: need q > -2");
        }
        any_positive = any_positive || a > 0.0;
    }
    if (!any_positive) {
        throw domain_error("PowerMixture: all weights are zero");
    }
}

double PowerMixture::operator()(double r) const
{
    double val = 0.0;
    for (const auto& [q, a] : terms) {
        val += a * powspec::sgn(q) * std::pow(r, q);
    }
    if (log_weight > 0.0) {
        val += log_weight * std::log(r);
    }
    return val;
}

double sum_of_powers_lower_bound(const PowerMixture& mix,
                                 const std::map<double, double>& p_values, double p_log, int N)
{
    mix.validate();
    if (N < 2) {
        throw domain_error("sum_of_powers_lower_bound: need N >= 2");
    }
    for (const auto& [q, a] : mix.terms) {
        if (a > 0.0 && p_values.find(q) == p_values.end()) {
            throw domain_error("sum_of_powers_lower_bound: missing P value for an exponent");
        }
    }
    if (mix.log_weight > 0.0 && !(p_log > 0.0)) {
        throw domain_error("sum_of_powers_lower_bound: missing P value for the log term");
    }

    auto objective = [&](double r) {
        double val = 1.0 / (r * r);
        for (const auto& [q, a] : mix.terms) {
            if (a > 0.0) {
                val += a * powspec::sgn(q) * std::pow(p_values.at(q) * r, q);
            }
        }
        if (mix.log_weight > 0.0) {
            val += mix.log_weight * std::log(p_log * r);
        }
        return val;
    };
    return minimize_log_scan(objective, 1e-8, 1e8, 60, 1e-12).value;
}

std::vector<Fig5Row> figure5_dataset(const std::vector<int>& dimensions,
                                     const std::vector<double>& couplings,
                                     const Fig5Options& opts)
{
    struct Cell {
        BoundSet bs;
        bool ok = false;
        std::string error;
    };

    // one expensive cell per dimension; couplings are pure rescalings
    auto per_dim = sweep::indexed_map<Cell>(
        dimensions.size(), opts.parallel, [&](std::size_t idx) {
            Cell cell;
            const int N = dimensions[idx];
            try {
                radial::SolverOptions sopts;
                sopts.tol = opts.tol;
                sopts.keep_wavefunction = false;
                const StateLabel ground{N, 1, 0};
                const double E1 =
                    radial::solve_eigenvalue(PotentialSpec::power(1.0), ground, sopts).energy;
                const double EX =
                    radial::solve_eigenvalue(PotentialSpec::power(1.5), ground, sopts).energy;
                const double P1 = prep::p_from_energy(E1, 1.0);
                const double P2 = 2.0 + 0.5 * N - 2.0; // oscillator closed form, n=1, ell=0
                cell.bs = bound_set(1.5, 1.0, P1, 2.0, P2, N, EX);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            return cell;
        });

    std::vector<Fig5Row> rows;
    rows.reserve(dimensions.size() * couplings.size());
    for (std::size_t i = 0; i < dimensions.size(); ++i) {
        for (double v : couplings) {
            Fig5Row row;
            row.N = dimensions[i];
            row.v = v;
            if (!(v > 0.0)) {
                row.error = "coupling must be > 0";
            } else if (!per_dim[i].ok) {
                row.error = per_dim[i].error;
            } else {
                const double f = std::pow(v, 2.0 / (1.5 + 2.0));
                const BoundSet& bs = per_dim[i].bs;
                row.ELP = f * bs.ELP;
                row.ELQ = f * bs.ELQ;
                row.EX = f * bs.reference.value();
                row.EUQ = f * bs.EUQ;
                row.EUP = f * bs.EUP;
                row.ok = true;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

bool sandwich_ok(const Fig5Row& row, double margin)
{
    if (!row.ok) {
        return false;
    }
    return (row.ELQ - row.ELP) > margin && (row.EX - row.ELQ) > margin &&
           (row.EUQ - row.EX) > margin && (row.EUP - row.EUQ) > margin;
}

} // namespace powspec::bounds

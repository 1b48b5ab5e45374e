#include "powspec/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "powspec/prep.hpp"
#include "powspec/quadrature.hpp"

namespace powspec::radial {

namespace {

// Near-origin start of the reduced radial function.
enum class StartKind { series_power, series_log, one_dim_even, one_dim_odd, generic };

struct Problem {
    std::function<double(double)> V; // full physical potential, coupling included
    double lam2 = 0.0;               // L(L+1) centrifugal strength
    double L = 0.0;
    int N = 3;
    int n = 1;
    int ell = 0;
    int target_nodes = 0; // interior nodes on (0, r_max)
    StartKind start = StartKind::generic;
    double q = 0.0; // power exponent (series starts only)
    double C = 0.0; // B*v*sgn(q) for powers, B*v for log
    double A = 0.0; // potential shift
    double r_min = 1e-6;

    double v_eff(double r) const { return lam2 / (r * r) + V(r); }
};

struct Mesh {
    std::vector<double> r;  // nodes
    std::vector<double> wn; // V_eff at nodes
    std::vector<double> wm; // V_eff at interval midpoints
};

// u(r0) and u'(r0) from a short series consistent with the potential.
void start_values(const Problem& pb, double r0, double E, double& u, double& w)
{
    switch (pb.start) {
    case StartKind::one_dim_even: {
        const double cE = 0.5 * (pb.A - E);
        u = 1.0 + cE * r0 * r0;
        w = 2.0 * cE * r0;
        if (pb.q != 0.0) { // power tail of the 1-D potential
            const double cq = pb.C / ((pb.q + 1.0) * (pb.q + 2.0));
            u += cq * std::pow(r0, pb.q + 2.0);
            w += cq * (pb.q + 2.0) * std::pow(r0, pb.q + 1.0);
        } else if (pb.C != 0.0) { // log potential
            u += pb.C * r0 * r0 * (0.5 * std::log(r0) - 0.75);
            w += pb.C * r0 * (std::log(r0) - 1.0);
        }
        return;
    }
    case StartKind::one_dim_odd: {
        const double cE = (pb.A - E) / 6.0;
        u = r0 + cE * r0 * r0 * r0;
        w = 1.0 + 3.0 * cE * r0 * r0;
        if (pb.q != 0.0) {
            const double cq = pb.C / ((pb.q + 2.0) * (pb.q + 3.0));
            u += cq * std::pow(r0, pb.q + 3.0);
            w += cq * (pb.q + 3.0) * std::pow(r0, pb.q + 2.0);
        } else if (pb.C != 0.0) {
            u += pb.C * r0 * r0 * r0 * (std::log(r0) / 6.0 - 5.0 / 36.0);
            w += pb.C * r0 * r0 * (0.5 * std::log(r0) - 0.25);
        }
        return;
    }
    case StartKind::series_power: {
        const double cE = (pb.A - E) / (4.0 * pb.L + 6.0);
        const double cq = pb.C / ((pb.q + 2.0) * (2.0 * pb.L + 3.0 + pb.q));
        const double lead = std::pow(r0, pb.L + 1.0);
        const double corr = 1.0 + cE * r0 * r0 + cq * std::pow(r0, pb.q + 2.0);
        const double dcorr = 2.0 * cE * r0 + cq * (pb.q + 2.0) * std::pow(r0, pb.q + 1.0);
        u = lead * corr;
        w = (pb.L + 1.0) * std::pow(r0, pb.L) * corr + lead * dcorr;
        return;
    }
    case StartKind::series_log: {
        const double gam = pb.C / (4.0 * pb.L + 6.0);
        const double alp = (pb.A - E - gam * (2.0 * pb.L + 5.0)) / (4.0 * pb.L + 6.0);
        const double lead = std::pow(r0, pb.L + 1.0);
        const double corr = 1.0 + r0 * r0 * (gam * std::log(r0) + alp);
        const double dcorr = r0 * (2.0 * (gam * std::log(r0) + alp) + gam);
        u = lead * corr;
        w = (pb.L + 1.0) * std::pow(r0, pb.L) * corr + lead * dcorr;
        return;
    }
    case StartKind::generic:
    default:
        u = std::pow(r0, pb.L + 1.0);
        w = (pb.L + 1.0) * std::pow(r0, pb.L);
        return;
    }
}

struct Shot {
    int nodes = 0;
    double u = 0.0;
    double w = 0.0;
};

// RK4 sweep of u'' = (V_eff - E) u over mesh intervals [i0, i1) (outward)
// or (i1, i0] stepping down (inward).  Counts strict sign changes of u and
// renormalizes when |u| grows past 1e200.  When store != nullptr the
// samples are recorded (and retro-scaled on renormalization).
Shot integrate(const Mesh& mesh, double E, int i0, int i1, double u0, double w0,
               std::vector<double>* store)
{
    Shot s;
    double u = u0, w = w0;
    const bool outward = i1 > i0;
    const int step = outward ? 1 : -1;
    if (store) {
        (*store)[i0] = u;
    }
    double last_sign = (u > 0.0) ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
    for (int i = i0; i != i1; i += step) {
        const int j = outward ? i : i - 1; // interval index
        const double h = outward ? mesh.r[j + 1] - mesh.r[j] : mesh.r[j] - mesh.r[j + 1];
        const double wa = outward ? mesh.wn[j] : mesh.wn[j + 1];
        const double wmid = mesh.wm[j];
        const double wb = outward ? mesh.wn[j + 1] : mesh.wn[j];

        const double k1u = w, k1w = (wa - E) * u;
        const double u2 = u + 0.5 * h * k1u, w2 = w + 0.5 * h * k1w;
        const double k2u = w2, k2w = (wmid - E) * u2;
        const double u3 = u + 0.5 * h * k2u, w3 = w + 0.5 * h * k2w;
        const double k3u = w3, k3w = (wmid - E) * u3;
        const double u4 = u + h * k3u, w4 = w + h * k3w;
        const double k4u = w4, k4w = (wb - E) * u4;

        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);

        const double sign = (u > 0.0) ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
        if (sign != 0.0 && last_sign != 0.0 && sign != last_sign) {
            ++s.nodes;
        }
        if (sign != 0.0) {
            last_sign = sign;
        }

        const double mag = std::max(std::fabs(u), std::fabs(w));
        if (mag > 1e200) {
            const double f = 1.0 / mag;
            u *= f;
            w *= f;
            if (store) {
                for (int k = i0;; k += step) {
                    (*store)[k] *= f;
                    if (k == i) {
                        break;
                    }
                }
            }
        }
        if (store) {
            (*store)[i + step] = u;
        }
    }
    s.u = u;
    s.w = w;
    return s;
}

struct Probe {
    int nodes = 0;
    double mismatch_sign = 0.0; // sign of the first-order energy correction
};

// Two-sided shot at energy E.  The matched function u (outward glued to
// scaled inward) has a derivative kink at the matching radius; first-order
// perturbation theory gives E_n - E ~ [u'_out - u'_in] u(r_m) / int u^2, so
// the sign of G = (u'_out u_in - u_out u'_in) sgn(u_out u_in) points from E
// toward the eigenvalue inside a node-count plateau.
// overlap > 0 extends both sweeps a few intervals past the matching index
// (sample-assembly only; the node/mismatch fields then refer to the extended
// ranges and are not meaningful for bisection).
Probe probe_energy(const Problem& pb, const Mesh& mesh, double E, int i_match,
                   std::vector<double>* out_store = nullptr, std::vector<double>* in_store = nullptr,
                   int overlap = 0)
{
    const int M = static_cast<int>(mesh.r.size()) - 1;
    double u0 = 0.0, w0 = 0.0;
    start_values(pb, mesh.r[0], E, u0, w0);
    const Shot out = integrate(mesh, E, 0, std::min(M, i_match + overlap), u0, w0, out_store);

    const double kappa = std::sqrt(std::max(mesh.wn[M] - E, 1e-12));
    const Shot in = integrate(mesh, E, M, std::max(0, i_match - overlap), 1.0, -kappa, in_store);

    Probe p;
    p.nodes = out.nodes + in.nodes;
    const double wronskian = out.w * in.u - out.u * in.w;
    p.mismatch_sign = sgn(wronskian) * sgn(out.u) * sgn(in.u);
    return p;
}

// E sits above the eigenvalue targeted by pb.target_nodes.
bool is_above(const Problem& pb, const Probe& p)
{
    if (p.nodes != pb.target_nodes) {
        return p.nodes > pb.target_nodes;
    }
    return p.mismatch_sign <= 0.0;
}

// Outer classical turning point and a WKB-decay margin beyond it.
double choose_r_max(const Problem& pb, double E_ref, double phase_target)
{
    const double r_lo = std::max(pb.r_min * 4.0, 1e-5);
    const double r_cap = 1e7;
    double r_turn = r_lo;
    bool allowed = false;
    for (double r = r_lo; r < r_cap; r *= 1.04) {
        if (pb.v_eff(r) <= E_ref) {
            r_turn = r;
            allowed = true;
        }
    }
    if (!allowed) {
        r_turn = r_lo; // energy below the potential everywhere sampled
    }

    double phase = 0.0;
    double r = r_turn;
    double dr = std::max(1e-4, 0.005 * r_turn);
    while (phase < phase_target && r < r_cap) {
        const double mid = r + 0.5 * dr;
        phase += std::sqrt(std::max(pb.v_eff(mid) - E_ref, 0.0)) * dr;
        r += dr;
        dr *= 1.02;
    }
    return std::min(std::max(r, 2.0 * r_turn), r_cap);
}

Mesh build_mesh(const Problem& pb, double r_max, int n_points)
{
    const double r_min = pb.r_min;
    double r_knee = std::clamp(0.05 * r_max, 8.0 * r_min, 1.0);
    r_knee = std::min(r_knee, 0.5 * r_max);
    if (!(r_knee > r_min)) {
        r_knee = std::sqrt(r_min * r_max);
    }

    const int n_log = n_points / 3;
    const int n_lin = n_points - n_log;

    Mesh mesh;
    mesh.r.reserve(n_points + 1);
    const double lstep = std::log(r_knee / r_min) / n_log;
    for (int i = 0; i < n_log; ++i) {
        mesh.r.push_back(r_min * std::exp(lstep * i));
    }
    const double hstep = (r_max - r_knee) / n_lin;
    for (int i = 0; i <= n_lin; ++i) {
        mesh.r.push_back(r_knee + hstep * i);
    }

    const int M = static_cast<int>(mesh.r.size()) - 1;
    mesh.wn.resize(M + 1);
    mesh.wm.resize(M);
    for (int i = 0; i <= M; ++i) {
        mesh.wn[i] = pb.v_eff(mesh.r[i]);
    }
    for (int i = 0; i < M; ++i) {
        mesh.wm[i] = pb.v_eff(0.5 * (mesh.r[i] + mesh.r[i + 1]));
    }
    return mesh;
}

int pick_match_index(const Mesh& mesh, double E)
{
    const int M = static_cast<int>(mesh.r.size()) - 1;
    int i_match = -1;
    for (int i = 0; i <= M; ++i) {
        if (mesh.wn[i] <= E) {
            i_match = i;
        }
    }
    if (i_match < 0) {
        i_match = M / 2;
    }
    return std::clamp(i_match, M / 20 + 1, M - M / 20 - 1);
}

struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

// Geometric widening until the eigenvalue is straddled.
Window bracket_window(const Problem& pb, const Mesh& mesh, int i_match, double E_center,
                      double width0, double e_ceiling, int max_expansions)
{
    Window win{E_center - width0, std::min(E_center + width0, e_ceiling)};
    if (win.lo >= win.hi) {
        win.lo = win.hi - 2.0 * width0;
    }
    double w = width0;
    for (int it = 0; it < max_expansions; ++it) {
        if (is_above(pb, probe_energy(pb, mesh, win.lo, i_match))) {
            win.lo -= w;
            w *= 1.7;
            continue;
        }
        if (!is_above(pb, probe_energy(pb, mesh, win.hi, i_match))) {
            if (win.hi >= e_ceiling - 1e-300) {
                throw solve_error("radial solver: not bracketed below the energy ceiling "
                                  "(no bound state in search window)");
            }
            win.hi = std::min(win.hi + w, e_ceiling);
            w *= 1.7;
            continue;
        }
        return win;
    }
    throw solve_error("radial solver: failed to bracket the requested node count");
}

struct BisectOutcome {
    double energy = 0.0;
    double width = 0.0;
    bool plateau_straddle = false;
};

BisectOutcome bisect(const Problem& pb, const Mesh& mesh, int i_match, Window win,
                     double tol_width, int max_iter)
{
    int it = 0;
    while (win.hi - win.lo > tol_width && it++ < max_iter) {
        const double mid = 0.5 * (win.lo + win.hi);
        if (is_above(pb, probe_energy(pb, mesh, mid, i_match))) {
            win.hi = mid;
        } else {
            win.lo = mid;
        }
    }
    BisectOutcome out;
    out.energy = 0.5 * (win.lo + win.hi);
    out.width = win.hi - win.lo;
    // both ends must sit inside the node-count plateau with the mismatch
    // changing sign across the bracket
    const Probe p_lo = probe_energy(pb, mesh, win.lo, i_match);
    const Probe p_hi = probe_energy(pb, mesh, win.hi, i_match);
    out.plateau_straddle = p_lo.nodes == pb.target_nodes && p_hi.nodes == pb.target_nodes &&
                           p_lo.mismatch_sign > 0.0 && p_hi.mismatch_sign <= 0.0;
    return out;
}

struct CoreOptions {
    SolverOptions opts;
    double e_guess = 0.0;
    double width0 = 0.5;
    double e_ceiling = std::numeric_limits<double>::infinity();
    double scale = 1.0; // energy scale for relative tolerances
    double e_ref = 0.0; // box-sizing energy, slightly above the expected eigenvalue
};

EigenResult solve_core(const Problem& pb, const CoreOptions& co)
{
    const SolverOptions& opts = co.opts;
    if (!(opts.tol >= 1e-12 && opts.tol <= 1e-3)) {
        throw domain_error("radial solver: tol must lie in [1e-12, 1e-3]");
    }

    EigenResult res;
    res.label = StateLabel{pb.N, pb.n, pb.ell};

    const double e_ref = std::min(co.e_ref, co.e_ceiling);
    double r_max = choose_r_max(pb, e_ref, opts.tail_phase);

    for (int attempt = 0; attempt < 4; ++attempt) {
        int n_points = opts.base_mesh_points;
        Mesh mesh = build_mesh(pb, r_max, n_points);
        int i_match = pick_match_index(mesh, co.e_guess);
        Window win =
            bracket_window(pb, mesh, i_match, co.e_guess, co.width0, co.e_ceiling,
                           opts.max_window_expansions);

        double prev_energy = std::numeric_limits<double>::quiet_NaN();
        BisectOutcome out;
        bool refined = false;
        while (true) {
            double scale = std::max(co.scale, std::fabs(0.5 * (win.lo + win.hi)));
            const double tol_width = opts.tol * scale * 0.125;
            out = bisect(pb, mesh, i_match, win, tol_width, opts.max_bisections);

            if (std::isfinite(prev_energy) &&
                std::fabs(out.energy - prev_energy) <= 0.25 * opts.tol * scale) {
                refined = true;
                break;
            }
            if (2 * n_points > opts.max_mesh_points) {
                break;
            }
            prev_energy = out.energy;
            n_points *= 2;
            mesh = build_mesh(pb, r_max, n_points);
            i_match = pick_match_index(mesh, out.energy);
            // reseed a narrow window around the previous estimate and re-verify
            const double d = std::max({50.0 * opts.tol * scale, 1e-12 * scale, out.width * 4.0});
            Window seeded{out.energy - d, std::min(out.energy + d, co.e_ceiling)};
            const bool lo_ok = !is_above(pb, probe_energy(pb, mesh, seeded.lo, i_match));
            const bool hi_ok = is_above(pb, probe_energy(pb, mesh, seeded.hi, i_match));
            if (lo_ok && hi_ok) {
                win = seeded;
            } else {
                win = bracket_window(pb, mesh, i_match, out.energy, std::max(d, co.width0 * 0.1),
                                     co.e_ceiling, opts.max_window_expansions);
            }
        }

        // Final stored pass; re-bias into the count-correct side if the glued
        // sample straddles the jump.
        const int M = static_cast<int>(mesh.r.size()) - 1;
        std::vector<double> u_out(M + 1, 0.0), u_in(M + 1, 0.0);
        double energy = out.energy;
        int glued_nodes = -1;
        std::vector<double> u;
        const int overlap = std::min({4, i_match, M - i_match});
        for (int bias = 0; bias < 3; ++bias) {
            Probe p = probe_energy(pb, mesh, energy, i_match, &u_out, &u_in, overlap);
            // least-squares scale over the doubly-covered seam window
            double num = 0.0, den = 0.0;
            for (int k = i_match - overlap; k <= i_match + overlap; ++k) {
                num += u_out[k] * u_in[k];
                den += u_in[k] * u_in[k];
            }
            double alpha = (den > 0.0 && num != 0.0) ? num / den
                                                     : (u_in[i_match] != 0.0
                                                            ? u_out[i_match] / u_in[i_match]
                                                            : 1.0);
            u.assign(M + 1, 0.0);
            for (int k = 0; k <= i_match; ++k) {
                u[k] = u_out[k];
            }
            for (int k = i_match + 1; k <= M; ++k) {
                u[k] = alpha * u_in[k];
            }
            glued_nodes = 0;
            double last = 0.0;
            for (int k = 0; k <= M; ++k) {
                const double s = (u[k] > 0.0) ? 1.0 : (u[k] < 0.0 ? -1.0 : 0.0);
                if (s != 0.0 && last != 0.0 && s != last) {
                    ++glued_nodes;
                }
                if (s != 0.0) {
                    last = s;
                }
            }
            (void)p;
            if (glued_nodes == pb.target_nodes) {
                break;
            }
            // step toward the correct side of the final bracket
            energy += (glued_nodes > pb.target_nodes ? -1.0 : 1.0) * out.width;
        }

        // tail-decay safeguard: the box edge must be spectrally invisible
        double u_max = 0.0, tail_max = 0.0;
        for (int k = 0; k <= M; ++k) {
            u_max = std::max(u_max, std::fabs(u[k]));
        }
        for (int k = M - M / 32; k <= M; ++k) {
            tail_max = std::max(tail_max, std::fabs(u[k]));
        }
        if (glued_nodes == pb.target_nodes && tail_max <= 1e-4 * u_max) {
            // normalize int u^2 dr = 1
            std::vector<double> u2(M + 1);
            for (int k = 0; k <= M; ++k) {
                u2[k] = u[k] * u[k];
            }
            const double norm = integrate_samples(mesh.r, u2);
            const double f = 1.0 / std::sqrt(norm);
            for (auto& val : u) {
                val *= f;
            }

            res.energy = energy;
            // one-dimensional states report the full-line node count: twice
            // the half-line count, plus the origin node for odd parity
            res.node_count = (pb.start == StartKind::one_dim_even) ? 2 * glued_nodes
                             : (pb.start == StartKind::one_dim_odd) ? 2 * glued_nodes + 1
                                                                    : glued_nodes;
            res.residual = out.width;
            res.mesh_points = M + 1;
            res.r_max = r_max;
            res.converged = refined && out.plateau_straddle;
            if (opts.keep_wavefunction) {
                res.r_grid = std::move(mesh.r);
                res.u_values = std::move(u);
            }
            return res;
        }
        // grow the box and retry
        r_max *= 1.8;
    }
    throw solve_error("radial solver: wavefunction failed node/tail validation after retries");
}

Problem make_problem(const PotentialSpec& pot, const StateLabel& s, double r_min_hint)
{
    Problem pb;
    pb.N = s.N;
    pb.n = s.n;
    pb.ell = s.ell;
    pb.V = [pot](double r) { return pot(r); };
    pb.A = pot.A;
    if (s.N == 1) {
        pb.L = -1.0;
        pb.lam2 = 0.0;
        const bool even = (s.n % 2 == 1);
        pb.start = even ? StartKind::one_dim_even : StartKind::one_dim_odd;
        pb.target_nodes = (s.n - 1) / 2;
        pb.q = (pot.kind == PotentialSpec::Kind::power) ? pot.q : 0.0;
        pb.C = (pot.kind == PotentialSpec::Kind::power) ? pot.B * pot.v * sgn(pot.q)
                                                        : pot.B * pot.v;
    } else {
        pb.L = effective_lambda(s.N, s.ell);
        pb.lam2 = pb.L * (pb.L + 1.0);
        pb.target_nodes = s.n - 1;
        if (pot.kind == PotentialSpec::Kind::power) {
            pb.start = StartKind::series_power;
            pb.q = pot.q;
            pb.C = pot.B * pot.v * sgn(pot.q);
        } else {
            pb.start = StartKind::series_log;
            pb.q = 0.0;
            pb.C = pot.B * pot.v;
        }
    }

    pb.r_min = r_min_hint;
    if (pot.kind == PotentialSpec::Kind::power && pot.q < 0.0) {
        // keep the first series correction small at the inner mesh edge
        const double denom = (pb.N == 1) ? (pot.q + 1.0) * (pot.q + 2.0)
                                         : (pot.q + 2.0) * (2.0 * pb.L + 3.0 + pot.q);
        const double cq = std::fabs(pot.B * pot.v / denom);
        const double safe = std::pow(0.01 / std::max(1.0, cq), 1.0 / (pot.q + 2.0));
        pb.r_min = std::clamp(std::min(r_min_hint, safe), 1e-30, r_min_hint);
    }
    return pb;
}

} // namespace

double effective_lambda(int N, int ell)
{
    if (N < 1 || ell < 0 || (N == 1 && ell != 0)) {
        throw domain_error("effective_lambda: invalid (N, ell)");
    }
    return ell + 0.5 * (N - 3);
}

EigenResult solve_eigenvalue(const PotentialSpec& pot, const StateLabel& s, double tol)
{
    SolverOptions opts;
    opts.tol = tol;
    return solve_eigenvalue(pot, s, opts);
}

EigenResult solve_eigenvalue(const PotentialSpec& pot, const StateLabel& s,
                             const SolverOptions& opts)
{
    s.validate();
    pot.validate(s.N);

    Problem pb = make_problem(pot, s, opts.r_min_hint);

    // Seed from the P-representation: interpolate the Coulomb and oscillator
    // closed forms in q, then push through the scaled energy formula.
    const double q_eff = (pot.kind == PotentialSpec::Kind::power) ? pot.q : 0.0;
    double p_m1, p_2;
    if (s.N >= 2) {
        p_m1 = s.n + s.ell + 0.5 * s.N - 1.5;
        p_2 = 2.0 * s.n + s.ell + 0.5 * s.N - 2.0;
    } else {
        p_m1 = std::max(0.25, s.n - 1.0);
        p_2 = s.n - 0.5;
    }
    const double p_guess = std::max(0.05, p_m1 + (q_eff + 1.0) / 3.0 * (p_2 - p_m1));

    const double couple = pot.B * pot.v;
    double e_guess, e_ref, couple_scale;
    if (pot.kind == PotentialSpec::Kind::power) {
        couple_scale = std::pow(couple, 2.0 / (q_eff + 2.0));
        e_guess = pot.A + couple_scale * prep::g(p_guess, q_eff);
        // the box margin lives in P space: a fixed factor in P moves the
        // turning radius by a bounded factor for every exponent, where an
        // energy-space margin would blow up as q -> 0
        e_ref = pot.A + couple_scale * prep::g(1.4 * p_guess, q_eff);
    } else {
        couple_scale = couple;
        const double log_shift = -std::log(std::sqrt(couple));
        e_guess = pot.A + couple * (prep::g(p_guess, 0.0) + log_shift);
        e_ref = pot.A + couple * (prep::g(1.4 * p_guess, 0.0) + log_shift);
    }

    CoreOptions co;
    co.opts = opts;
    co.e_guess = e_guess;
    co.width0 = std::max({0.25 * std::fabs(e_guess - pot.A), 0.25 * couple_scale, 0.05});
    co.scale = std::max(1e-6, std::fabs(e_guess));
    co.e_ref = e_ref;
    if (pot.kind == PotentialSpec::Kind::power && pot.q < 0.0) {
        co.e_ceiling = pot.A - 1e-12 * couple_scale; // bound states live below the shift
    }

    return solve_core(pb, co);
}

EigenResult ground_wavefunction(const PotentialSpec& pot, int N, int ell,
                                const SolverOptions& opts)
{
    return solve_eigenvalue(pot, StateLabel{N, 1, ell}, opts);
}

EigenResult solve_custom(const CustomProblem& problem, const SolverOptions& opts)
{
    StateLabel s{problem.N, problem.n, problem.ell};
    s.validate();
    if (!problem.potential) {
        throw domain_error("solve_custom: missing potential evaluator");
    }

    Problem pb;
    pb.N = s.N;
    pb.n = s.n;
    pb.ell = s.ell;
    pb.V = problem.potential;
    if (s.N == 1) {
        pb.L = -1.0;
        pb.lam2 = 0.0;
        pb.start = (s.n % 2 == 1) ? StartKind::one_dim_even : StartKind::one_dim_odd;
        pb.target_nodes = (s.n - 1) / 2;
        pb.q = 0.0;
        pb.C = 0.0;
        pb.A = 0.0;
    } else {
        pb.L = effective_lambda(s.N, s.ell);
        pb.lam2 = pb.L * (pb.L + 1.0);
        pb.target_nodes = s.n - 1;
        pb.start = StartKind::generic;
    }
    pb.r_min = std::min(opts.r_min_hint, 1e-7);

    // Window seed through the semiclassical form min_r { P^2/r^2 + V(r) },
    // which stays finite for potentials with an integrable singularity at
    // the origin.  A crude ground-sector P estimate is enough; widening does
    // the rest.
    const double p_ref = std::max(0.5, problem.n + std::max(pb.L, 0.0) + 0.25);
    double e_guess = std::numeric_limits<double>::max();
    for (double r = 1e-4; r < 1e5; r *= 1.03) {
        e_guess = std::min(e_guess, p_ref * p_ref / (r * r) + problem.potential(r));
    }

    CoreOptions co;
    co.opts = opts;
    co.e_guess = e_guess;
    co.width0 = std::max(0.5, 0.3 * std::fabs(e_guess));
    co.scale = std::max(1e-6, std::fabs(e_guess));
    co.e_ref = e_guess + std::max(0.5, 0.25 * std::fabs(e_guess));

    return solve_core(pb, co);
}

} // namespace powspec::radial

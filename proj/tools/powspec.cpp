// powspec: eigenvalues of -Delta + v sgn(q) r^q (and v ln r) in N dimensions,
// the P/Q representation of their spectra, and rigorous upper/lower bounds.
//
// Subcommands: eigen, pfun, table1, fig5, verify.  Datasets are CSV with a
// header row and 9-significant-digit floats; each dataset is accompanied by
// a JSON manifest side file (or embedded, with --format json).  Outputs are
// deterministic: re-running a command reproduces byte-identical CSV bodies.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "powspec/bounds.hpp"
#include "powspec/exact.hpp"
#include "powspec/prep.hpp"
#include "powspec/radial.hpp"
#include "powspec/sweep.hpp"
#include "powspec/types.hpp"

using json = nlohmann::ordered_json;
using namespace powspec;

namespace {

std::string fmt9(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

struct OutputTarget {
    std::optional<std::string> path; // file path; stdout when absent
    std::string format = "csv";     // csv | json
};

// default output directory from the environment when --out is not given
std::optional<std::string> resolve_out(const std::optional<std::string>& out_flag,
                                       const std::string& command)
{
    if (out_flag) {
        return out_flag;
    }
    if (const char* dir = std::getenv("POWSPEC_OUT_DIR")) {
        return std::string(dir) + "/" + command + ".csv";
    }
    return std::nullopt;
}

json make_manifest(const std::string& command, const json& params, double tol, double wall_ms)
{
    json m;
    m["command"] = command;
    m["parameters"] = params;
    m["tolerance"] = tol;
    m["mesh"] = {{"base_points", radial::SolverOptions{}.base_mesh_points},
                 {"refinement", "doubled until the eigenvalue moves by less than tol/4"}};
    m["tool_version"] = powspec::version;
    m["wall_time_ms"] = wall_ms;
    return m;
}

// CSV rows plus manifest: to a file with a .manifest.json side file, or to
// stdout with the manifest on stderr
int emit_dataset(const OutputTarget& target, const std::string& command, const json& manifest,
                 const std::string& header, const std::vector<std::string>& rows,
                 const json& json_rows)
{
    if (target.format == "json") {
        json doc;
        doc["manifest"] = manifest;
        doc["rows"] = json_rows;
        if (target.path) {
            std::ofstream f(*target.path);
            if (!f) {
                std::cerr << "powspec " << command << ": cannot open " << *target.path << "\n";
                return 2;
            }
            f << doc.dump(2) << "\n";
        } else {
            std::cout << doc.dump(2) << "\n";
        }
        return 0;
    }
    std::ostringstream body;
    body << header << "\n";
    for (const auto& row : rows) {
        body << row << "\n";
    }
    if (target.path) {
        std::ofstream f(*target.path);
        if (!f) {
            std::cerr << "powspec " << command << ": cannot open " << *target.path << "\n";
            return 2;
        }
        f << body.str();
        std::ofstream mf(*target.path + ".manifest.json");
        mf << manifest.dump(2) << "\n";
    } else {
        std::cout << body.str();
        std::cerr << manifest.dump(2) << "\n";
    }
    return 0;
}

std::vector<double> parse_list(const std::string& csv)
{
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            vals.push_back(std::stod(item));
        }
    }
    return vals;
}

struct EigenArgs {
    double q = 1.0;
    bool log_potential = false;
    double v = 1.0;
    int N = 3, n = 1, ell = 0;
    double tol = 1e-9;
};

int cmd_eigen(const EigenArgs& a, const OutputTarget& target)
{
    const auto t0 = std::chrono::steady_clock::now();
    const PotentialSpec pot =
        a.log_potential ? PotentialSpec::logarithmic(a.v) : PotentialSpec::power(a.q, a.v);
    radial::SolverOptions opts;
    opts.tol = a.tol;
    opts.keep_wavefunction = false;

    radial::EigenResult res;
    try {
        res = radial::solve_eigenvalue(pot, StateLabel{a.N, a.n, a.ell}, opts);
    } catch (const std::exception& e) {
        std::cerr << "powspec eigen: " << e.what() << "\n";
        return 1;
    }
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json params = {{"q", a.log_potential ? json(nullptr) : json(a.q)},
                   {"log", a.log_potential},
                   {"v", a.v},
                   {"N", a.N},
                   {"n", a.n},
                   {"l", a.ell},
                   {"tol", a.tol}};
    json manifest = make_manifest("eigen", params, a.tol, wall);

    json row = {{"energy", res.energy},     {"node_count", res.node_count},
                {"converged", res.converged}, {"residual", res.residual},
                {"mesh_points", res.mesh_points}, {"r_max", res.r_max}};
    if (target.format == "json") {
        emit_dataset(target, "eigen", manifest, "", {}, json::array({row}));
    } else {
        std::ostringstream line;
        line << "energy = " << fmt9(res.energy) << "\n"
             << "node_count = " << res.node_count << "\n"
             << "converged = " << (res.converged ? "yes" : "no") << "\n"
             << "residual = " << fmt9(res.residual) << "\n"
             << "mesh_points = " << res.mesh_points << "\n"
             << "r_max = " << fmt9(res.r_max) << "\n";
        if (target.path) {
            std::ofstream f(*target.path);
            f << line.str();
            std::ofstream mf(*target.path + ".manifest.json");
            mf << manifest.dump(2) << "\n";
        } else {
            std::cout << line.str();
            std::cerr << manifest.dump(2) << "\n";
        }
    }
    return res.converged ? 0 : 1;
}

int cmd_pfun(const std::string& qlist, int N, int n, int ell, double tol,
             const OutputTarget& target)
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> qs = qlist.empty() ? sweep::default_q_grid() : parse_list(qlist);
    sweep::SweepOptions opts;
    opts.tol = tol;
    const auto rows = sweep::pfun(qs, N, n, ell, opts);
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json params = {{"qs", qs}, {"N", N}, {"n", n}, {"l", ell}, {"tol", tol}};
    json manifest = make_manifest("pfun", params, tol, wall);

    std::vector<std::string> lines;
    json jrows = json::array();
    int failures = 0;
    for (const auto& r : rows) {
        std::ostringstream line;
        line << fmt9(r.q) << "," << (r.ok ? fmt9(r.energy) : "") << ","
             << (r.ok ? fmt9(r.P) : "") << "," << (r.ok ? fmt9(r.Z) : "") << ","
             << (r.ok ? fmt9(r.Q) : "") << "," << (r.ok ? "" : r.error);
        lines.push_back(line.str());
        jrows.push_back({{"q", r.q},
                         {"E", r.ok ? json(r.energy) : json(nullptr)},
                         {"P", r.ok ? json(r.P) : json(nullptr)},
                         {"Z", r.ok ? json(r.Z) : json(nullptr)},
                         {"Q", r.ok ? json(r.Q) : json(nullptr)},
                         {"error", r.error}});
        failures += r.ok ? 0 : 1;
    }
    const int rc =
        emit_dataset(target, "pfun", manifest, "q,E,P,Z,Q,error", lines, jrows);
    return rc != 0 ? rc : 0; // per-point failures recorded in-row, command continues
}

int cmd_table1(double tol, const OutputTarget& target)
{
    const auto t0 = std::chrono::steady_clock::now();
    sweep::SweepOptions opts;
    opts.tol = tol;
    const auto rows = sweep::table1(opts);
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json manifest = make_manifest("table1", {{"tol", tol}}, tol, wall);

    std::vector<std::string> lines;
    json jrows = json::array();
    int mismatches = 0;
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.N << "," << r.n << "," << (r.ok ? fmt9(r.energy) : "") << ","
             << (r.ok ? fmt9(r.P) : "") << "," << fmt9(r.reference) << ","
             << (r.ok ? fmt9(r.abs_err) : "") << "," << (r.within_tol ? "yes" : "no");
        lines.push_back(line.str());
        jrows.push_back({{"N", r.N},
                         {"n", r.n},
                         {"E", r.energy},
                         {"P", r.P},
                         {"reference", r.reference},
                         {"abs_err", r.abs_err},
                         {"within_tol", r.within_tol}});
        if (!r.within_tol || !r.ok) {
            ++mismatches;
            std::cerr << "table1 mismatch: N=" << r.N << " n=" << r.n << " P=" << fmt9(r.P)
                      << " reference=" << fmt9(r.reference) << " |diff|=" << fmt9(r.abs_err)
                      << (r.error.empty() ? "" : (" error=" + r.error)) << "\n";
        }
    }
    const int rc = emit_dataset(target, "table1", manifest,
                                "N,n,E,P,reference,abs_err,within_tol", lines, jrows);
    if (rc != 0) {
        return rc;
    }
    if (mismatches > 0) {
        std::cerr << "table1: " << mismatches << " of " << rows.size()
                  << " values differ from the reference by more than 5e-4\n";
        return 1;
    }
    return 0;
}

int cmd_fig5(int Nmin, int Nmax, const std::string& vlist, double tol, const OutputTarget& target)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<int> Ns;
    for (int N = Nmin; N <= Nmax; ++N) {
        Ns.push_back(N);
    }
    const std::vector<double> vs =
        vlist.empty() ? std::vector<double>{0.5, 1.0, 2.0, 5.0, 10.0} : parse_list(vlist);
    sweep::SweepOptions opts;
    opts.tol = tol;
    const auto rows = sweep::figure5(Ns, vs, opts);
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json params = {{"N_min", Nmin}, {"N_max", Nmax}, {"couplings", vs}, {"tol", tol}};
    json manifest = make_manifest("fig5", params, tol, wall);

    std::vector<std::string> lines;
    json jrows = json::array();
    int violations = 0;
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.N << "," << fmt9(r.v) << "," << fmt9(r.ELP) << "," << fmt9(r.ELQ) << ","
             << fmt9(r.EX) << "," << fmt9(r.EUQ) << "," << fmt9(r.EUP);
        lines.push_back(line.str());
        jrows.push_back({{"N", r.N},
                         {"v", r.v},
                         {"ELP", r.ELP},
                         {"ELQ", r.ELQ},
                         {"EX", r.EX},
                         {"EUQ", r.EUQ},
                         {"EUP", r.EUP}});
        if (!bounds::sandwich_ok(r)) {
            ++violations;
            std::cerr << "fig5 ordering violation at N=" << r.N << " v=" << r.v
                      << (r.error.empty() ? "" : (" error=" + r.error)) << "\n";
        }
    }
    const int rc = emit_dataset(target, "fig5", manifest, "N,v,ELP,ELQ,EX,EUQ,EUP", lines, jrows);
    if (rc != 0) {
        return rc;
    }
    return violations == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, double tol)
{
    int failures = 0;
    const bool all = suite == "all";

    if (all || suite == "roundtrip") {
        const auto rep = sweep::roundtrip_verify();
        std::printf("roundtrip: max round-trip %.3e (<= 1e-12), max vs direct minimization "
                    "%.3e (<= 1e-8), max derivative vs finite difference %.3e (<= 1e-6): %s\n",
                    rep.max_roundtrip_rel, rep.max_minimize_abs, rep.max_derivative_rel,
                    rep.all_pass ? "pass" : "FAIL");
        failures += rep.all_pass ? 0 : 1;
    }
    if (all || suite == "q_monotone") {
        sweep::SweepOptions opts;
        opts.tol = std::min(tol, 1e-9);
        const auto rep = sweep::qmonotone_verify(opts);
        for (const auto& c : rep.cells) {
            std::printf("q_monotone N=%-2d (%+.4g, %+.4g): Q margin %+.6e, P margin %+.6e, "
                        "Z margin %+.6e%s: %s\n",
                        c.N, c.q_lo, c.q_hi, c.q_margin, c.p_margin, c.z_margin,
                        c.error.empty() ? "" : (" [" + c.error + "]").c_str(),
                        c.pass ? "pass" : "FAIL");
            failures += c.pass ? 0 : 1;
        }
    }
    if (all || suite == "comparison") {
        sweep::SweepOptions opts;
        opts.tol = tol;
        const auto rep = sweep::comparison_verify(opts);
        for (const auto& c : rep.cells) {
            std::printf("comparison (p=%.3g, q=%.3g, N=%d): bound %.8g vs E(q) %.8g, margin "
                        "%+.6e, crossings %d, |area| %.2e%s: %s\n",
                        c.p, c.q, c.N, c.F_hat, c.E_q, c.margin, c.crossings,
                        std::fabs(c.area_residual),
                        c.error.empty() ? "" : (" [" + c.error + "]").c_str(),
                        c.pass ? "pass" : "FAIL");
            failures += c.pass ? 0 : 1;
        }
    }
    if (failures > 0) {
        std::printf("verify %s: %d failure(s)\n", suite.c_str(), failures);
        return 1;
    }
    std::printf("verify %s: all checks passed\n", suite.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"powspec: spectra of power-law and log central potentials in N dimensions,\n"
                 "their P/Q representation, and rigorous spectral bounds"};
    app.require_subcommand(1);
    app.fallthrough(); // --out/--format may follow the subcommand name

    std::optional<std::string> out_flag;
    std::string format = "csv";
    app.add_option("--out", out_flag, "output file (default: stdout, or $POWSPEC_OUT_DIR)");
    app.add_option("--format", format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    EigenArgs ea;
    auto* eigen = app.add_subcommand("eigen", "single eigenvalue of -Delta + v sgn(q) r^q");
    auto* qopt = eigen->add_option("--q", ea.q, "power exponent (q > -2; q > -1 for N = 1)");
    auto* lopt = eigen->add_flag("--log", ea.log_potential, "use the log potential v ln r");
    qopt->excludes(lopt);
    eigen->add_option("--v", ea.v, "coupling, > 0");
    eigen->add_option("--N", ea.N, "spatial dimension, >= 1");
    eigen->add_option("--n", ea.n, "radial quantum number, >= 1");
    eigen->add_option("--l", ea.ell, "angular momentum, >= 0");
    eigen->add_option("--tol", ea.tol, "relative eigenvalue tolerance");

    std::string qlist;
    int pf_N = 3, pf_n = 1, pf_l = 0;
    double pf_tol = 1e-9;
    auto* pfun = app.add_subcommand(
        "pfun", "sweep q and emit (q, E, P, Z, Q) rows; q = 0 is the log potential");
    pfun->add_option("--qs", qlist, "comma-separated exponent grid (default includes q = 0)");
    pfun->add_option("--N", pf_N, "spatial dimension");
    pfun->add_option("--n", pf_n, "radial quantum number");
    pfun->add_option("--l", pf_l, "angular momentum");
    pfun->add_option("--tol", pf_tol, "solver tolerance");

    double t1_tol = 1e-7;
    auto* table1 = app.add_subcommand(
        "table1", "linear-potential P values for N = 2..12, n = 1..4 vs the reference figures");
    table1->add_option("--tol", t1_tol, "solver tolerance");

    int f5_Nmin = 3, f5_Nmax = 10;
    std::string vlist;
    double f5_tol = 1e-9;
    auto* fig5 = app.add_subcommand(
        "fig5", "bounds vs exact eigenvalues for V = v r^{3/2}; nonzero exit on ordering violation");
    fig5->add_option("--Nmin", f5_Nmin, "smallest dimension");
    fig5->add_option("--Nmax", f5_Nmax, "largest dimension");
    fig5->add_option("--vs", vlist, "comma-separated couplings (default 0.5,1,2,5,10)");
    fig5->add_option("--tol", f5_tol, "solver tolerance");

    std::string suite = "all";
    double vf_tol = 1e-8;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("suite", suite, "q_monotone | comparison | roundtrip | all")
        ->check(CLI::IsMember({"q_monotone", "comparison", "roundtrip", "all"}));
    verify->add_option("--tol", vf_tol, "solver tolerance");

    CLI11_PARSE(app, argc, argv);

    OutputTarget target;
    target.format = format;

    try {
        if (eigen->parsed()) {
            target.path = resolve_out(out_flag, "eigen");
            return cmd_eigen(ea, target);
        }
        if (pfun->parsed()) {
            target.path = resolve_out(out_flag, "pfun");
            return cmd_pfun(qlist, pf_N, pf_n, pf_l, pf_tol, target);
        }
        if (table1->parsed()) {
            target.path = resolve_out(out_flag, "table1");
            return cmd_table1(t1_tol, target);
        }
        if (fig5->parsed()) {
            target.path = resolve_out(out_flag, "fig5");
            return cmd_fig5(f5_Nmin, f5_Nmax, vlist, f5_tol, target);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, vf_tol);
        }
    } catch (const std::exception& e) {
        std::cerr << "powspec: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

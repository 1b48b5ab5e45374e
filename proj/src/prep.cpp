#include "powspec/prep.hpp"

#include <cmath>

namespace powspec::prep {

namespace {
constexpr double kLogConst = 0.84657359027997265471; // (1 + ln 2)/2

void check_gp_domain(double P, double q)
{
    if (!(P > 0.0)) {
        throw domain_error("kinetic potential: P must be > 0");
    }
    if (!(q > -2.0)) {
        throw domain_error("kinetic potential: need q > -2");
    }
}
} // namespace

double g(double P, double q)
{
    check_gp_domain(P, q);
    if (q == 0.0) {
        return kLogConst + std::log(P);
    }
    const double aq = std::fabs(q);
    return sgn(q) * (1.0 + 0.5 * q) * std::pow(2.0 * P * P / aq, q / (2.0 + q));
}

double g_derivative(double P, double q)
{
    check_gp_domain(P, q);
    if (q == 0.0) {
        return 1.0 / P;
    }
    const double aq = std::fabs(q);
    return 2.0 * P * std::pow(aq / (2.0 * P * P), 2.0 / (2.0 + q));
}

double p_from_energy(double E, double q)
{
    if (!(q > -2.0)) {
        throw domain_error("p_from_energy: need q > -2");
    }
    if (q == 0.0) {
        return std::exp(E - kLogConst);
    }
    if (!(E * sgn(q) > 0.0)) {
        throw domain_error("p_from_energy: sign of E must match sign of q");
    }
    const double aq = std::fabs(q);
    const double base = std::fabs(E) / (1.0 + 0.5 * q);
    return std::sqrt(0.5 * aq * std::pow(base, (2.0 + q) / q));
}

double z_factor(double q, int N)
{
    if (N < 1) {
        throw domain_error("z_factor: need N >= 1");
    }
    if (q == 0.0) {
        return std::exp(1.0 / N);
    }
    if (!(q > -static_cast<double>(N))) {
        throw domain_error("z_factor: need q > -N so the base stays positive");
    }
    return std::exp(std::log1p(q / N) / q);
}

double scaled_energy(double P, double A, double B, double q)
{
    check_gp_domain(P, q);
    if (!(B > 0.0)) {
        throw domain_error("scaled_energy: scale B must be > 0");
    }
    if (q == 0.0) {
        return A + B * (kLogConst + std::log(P / std::sqrt(B)));
    }
    return A + std::pow(B, 2.0 / (q + 2.0)) * g(P, q);
}

double shifted_family_energy(double P, double q)
{
    if (q == 0.0) {
        return g(P, 0.0);
    }
    return scaled_energy(P, -1.0 / q, 1.0 / std::fabs(q), q);
}

PSample PSample::from_energy(double E, double q, const StateLabel& label)
{
    label.validate();
    PSample ps;
    ps.q = q;
    ps.E = E;
    ps.P = p_from_energy(E, q);
    ps.label = label;
    const double back = g(ps.P, q);
    if (std::fabs(back - E) > 1e-10 * std::max(1.0, std::fabs(E))) {
        throw solve_error("PSample: g(P, q) failed to round-trip the energy");
    }
    return ps;
}

QSample QSample::from_psample(const PSample& ps)
{
    QSample qs;
    qs.q = ps.q;
    qs.N = ps.label.N;
    qs.Z = z_factor(ps.q, ps.label.N);
    qs.Q = qs.Z * ps.P;
    return qs;
}

} // namespace powspec::prep

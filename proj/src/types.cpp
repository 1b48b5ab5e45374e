#include "powspec/types.hpp"

namespace powspec {

void StateLabel::validate() const
{
    if (N < 1) {
        throw domain_error("StateLabel: dimension N must be >= 1");
    }
    if (n < 1) {
        throw domain_error("StateLabel: radial quantum number n must be >= 1");
    }
    if (ell < 0) {
        throw domain_error("StateLabel: angular momentum ell must be >= 0");
    }
    if (N == 1 && ell != 0) {
        throw domain_error("StateLabel: ell must be 0 when N = 1");
    }
}

PotentialSpec PotentialSpec::power(double q, double v, double A, double B)
{
    PotentialSpec p;
    p.kind = Kind::power;
    p.q = q;
    p.v = v;
    p.A = A;
    p.B = B;
    return p;
}

PotentialSpec PotentialSpec::logarithmic(double v, double A, double B)
{
    PotentialSpec p;
    p.kind = Kind::log;
    p.q = 0.0;
    p.v = v;
    p.A = A;
    p.B = B;
    return p;
}

double PotentialSpec::operator()(double r) const
{
    if (kind == Kind::log) {
        return A + B * v * std::log(r);
    }
    return A + B * v * sgn(q) * std::pow(r, q);
}

void PotentialSpec::validate(int N) const
{
    if (!(v > 0.0)) {
        throw domain_error("PotentialSpec: coupling v must be > 0");
    }
    if (!(B > 0.0)) {
        throw domain_error("PotentialSpec: scale B must be > 0");
    }
    if (kind == Kind::power) {
        if (q == 0.0) {
            throw domain_error("PotentialSpec: q = 0 is the log kind, not a power");
        }
        if (N >= 2 && !(q > -2.0)) {
            throw domain_error("PotentialSpec: need q > -2 for N >= 2");
        }
        if (N == 1 && !(q > -1.0)) {
            throw domain_error("PotentialSpec: need q > -1 for N = 1");
        }
    }
}

} // namespace powspec

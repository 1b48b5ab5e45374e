#ifndef POWSPEC_TYPES_HPP
#define POWSPEC_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace powspec {

inline constexpr const char* version = "0.1.0";

/// Thrown when an operation is invoked outside its mathematical domain.
class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative solve fails to bracket or converge.
class solve_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline double sgn(double x)
{
    return (x > 0.0) ? 1.0 : ((x < 0.0) ? -1.0 : 0.0);
}

/// Quantum numbers of one eigenstate: spatial dimension N, radial index n
/// (1 plus the number of radial nodes), and angular momentum ell.
struct StateLabel {
    int N = 3;
    int n = 1;
    int ell = 0;

    /// N >= 1, n >= 1, ell >= 0, and ell = 0 when N = 1.
    void validate() const;
};

/// Central potential A + B v sgn(q) r^q, or A + B v ln(r) for the log kind.
///
/// The log case is a first-class kind, never an epsilon-limit of the power
/// form. v is the coupling, A an additive shift, B a radial scale.
struct PotentialSpec {
    enum class Kind { power, log };

    Kind kind = Kind::power;
    double q = 1.0; ///< exponent; ignored when kind == log
    double v = 1.0; ///< coupling, > 0
    double A = 0.0; ///< shift
    double B = 1.0; ///< scale, > 0

    static PotentialSpec power(double q, double v = 1.0, double A = 0.0, double B = 1.0);
    static PotentialSpec logarithmic(double v = 1.0, double A = 0.0, double B = 1.0);

    /// Evaluate the potential at radius r > 0.
    double operator()(double r) const;

    /// Domain check; the admissible exponent range depends on the dimension
    /// (q > -2 for N >= 2, q > -1 for N = 1).
    void validate(int N = 3) const;
};

} // namespace powspec

#endif

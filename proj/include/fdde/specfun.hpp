#ifndef FDDE_SPECFUN_HPP
#define FDDE_SPECFUN_HPP

#include <cstddef>

// Special functions shared by the solver modules: log-gamma, the one-parameter
// Mittag-Leffler function on the real axis, and the conformable exponential
// exp(lambda * t^alpha / alpha).

namespace fdde {

/// ln Gamma(x) for x > 0 via a Lanczos rational approximation.
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Gamma(x) for real x (poles at non-positive integers return +/-inf).
double gamma_fn(double x);

struct MLParams {
    double alpha;                 // order, in (0, 1]
    double z;                     // real argument
    double tol = 1e-12;           // series truncation tolerance
    std::size_t max_terms = 10000;
};

/// E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).
///
/// Extended-precision Taylor series for -5 <= z <= 30; exponential asymptotics
/// with algebraic corrections for z > 30; and the complete-monotonicity
/// integral representation (exp-sinh quadrature) for z < -5, where direct
/// summation loses all accuracy to cancellation.
/// Throws std::invalid_argument on bad parameters, std::runtime_error if the
/// series fails to meet tol within max_terms.
double mittag_leffler(const MLParams& p);

/// exp(lambda * t^alpha / alpha); equals exp(lambda t) at alpha = 1.
/// Overflow saturates to +inf.
double conformable_exp(double lambda, double alpha, double t);

} // namespace fdde

#endif

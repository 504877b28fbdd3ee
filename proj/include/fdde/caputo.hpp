#ifndef FDDE_CAPUTO_HPP
#define FDDE_CAPUTO_HPP

#include <cstddef>
#include <vector>

#include "fdde/problem.hpp"
#include "fdde/series.hpp"

namespace fdde {

/// Truncated epoch-series solution (cfg.family must be caputo).
double series_solution_caputo(const ProblemConfig& cfg, double t);

/// Closed form y0 E_alpha(-a t^alpha) + (b0/a)(1 - E_alpha(-a t^alpha)) of the
/// constant-forcing Caputo IVP without delay. Throws std::invalid_argument at a=0.
double caputo_constant_forcing(double a, double b0, double y0, double alpha, double t);

/// L1 discrete Caputo derivative
///   delta^alpha y_n = h^{-alpha}/Gamma(2-alpha)
///                     sum_{i=0}^{n-1} [(n-i)^{1-alpha}-(n-i-1)^{1-alpha}] (y_{i+1}-y_i)
/// for n = 1 .. N. Requires alpha in (0,1) and at least two values.
std::vector<double> discrete_caputo_l1(const Trajectory& traj, double alpha);

/// L1 time stepper: nodes n <= m come from the first-interval series; beyond
/// that each step solves delta^alpha y_n = b(t_n) - a y_{n-m} for y_n with the
/// full memory sum. (The delayed value is always a known node on the aligned
/// mesh, so the step stays explicit.)
Trajectory solve_l1_euler_caputo(const ProblemConfig& cfg);

// Shift parameter and overrides for the quadratic-kernel scheme. sigma < 0
// selects the standard choice 1 - alpha/2. zero_correction forces the
// correction to zero, which collapses the stepper onto the L1 trajectory
// bit for bit.
struct L2SigmaParams {
    double sigma = -1.0;
    bool zero_correction = false;

    double resolve_sigma(double alpha) const
    {
        return sigma < 0.0 ? 1.0 - 0.5 * alpha : sigma;
    }
};

/// Kernel weights c_0 .. c_{n-1} of the quadratic-interpolation (L2-1sigma)
/// discretization of the Caputo derivative at the shifted point t_{n-1+sigma}.
std::vector<double> l2sigma_weights(double alpha, double sigma, std::size_t n);

/// L2-1sigma stepper: same initialization as the L1 stepper, then each step
/// applies the L1 update plus a correction built from the quadratic kernel
/// weights evaluated at the shifted point. Throws std::invalid_argument if the
/// leading weight is not positive.
Trajectory solve_l2_1sigma_caputo(const ProblemConfig& cfg, const L2SigmaParams& p = {});

/// Series-anchored predictor-corrector: predictor = truncated analytic series
/// at t_n, corrector = fractional trapezoidal update
/// y_{n-1} + (h^alpha/Gamma(alpha+1))(f_{n-1} + f_n)/2, blended as
/// blend*corrector + (1-blend)*predictor. Nodes n <= m come from the series.
Trajectory solve_predictor_corrector_caputo(const ProblemConfig& cfg, double blend = 0.5);

} // namespace fdde

#endif

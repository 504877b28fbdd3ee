#ifndef FDDE_CONFORMABLE_HPP
#define FDDE_CONFORMABLE_HPP

#include <functional>
#include <vector>

#include "fdde/problem.hpp"
#include "fdde/series.hpp"

namespace fdde {

/// Closed form b/a + (y0 - b/a) exp(-a t^alpha / alpha) of the scalar linear
/// conformable IVP with constant forcing. Throws std::invalid_argument at a=0.
double conformable_linear_ivp(double a, double b, double y0, double alpha, double t);

/// Truncated epoch-series solution (cfg.family must be conformable).
double series_solution_conformable(const ProblemConfig& cfg, double t);

/// Discrete conformable derivative t_n^{1-alpha} (y_n - y_{n-1})/h for
/// n = 1 .. N (the t=0 node is excluded). Throws std::invalid_argument if the
/// trajectory has fewer than two values.
std::vector<double> conformable_derivative_mesh(const Trajectory& traj, double alpha);

/// Forward Euler with right-endpoint slope f_n = (-a y_T + b(t_n))/t_n^{1-alpha};
/// the delayed value is a raw floor lookup of the discrete history.
Trajectory solve_euler_conformable(const ProblemConfig& cfg);

/// RK4-style update with a single delayed value frozen across the four stages
/// and slopes evaluated at t_n, t_n + h/2, t_n + h. With interp the delayed
/// value is linearly interpolated between the surrounding nodes (and zero at
/// t_n = T exactly); without it a raw floor lookup is used.
Trajectory solve_rk4_conformable(const ProblemConfig& cfg, bool interp);

/// Composite-trapezoid estimate of the weighted integral
/// int_a^t tau^{alpha-1} f(tau) dtau (the conformable integral of order alpha).
double conformable_integral_numeric(const std::function<double(double)>& f,
                                    double alpha, double a, double t,
                                    std::size_t n_panels);

} // namespace fdde

#endif

#include "fdde/conformable.hpp"

#include <cmath>
#include <stdexcept>

#include "fdde/specfun.hpp"

namespace fdde {

namespace {

// Raw floor index of the delayed node, exactly as the discrete schemes define
// it. The division (n h - T)/h is deliberately left unguarded: its floating
// jitter at delay-aligned nodes is part of the benchmark schemes' observable
// behaviour (it is what separates the plain and interpolated RK4 variants).
double delayed_floor_raw(const std::vector<double>& y, double tn, double T, double h)
{
    const double tau = tn - T;
    if (tau < 0.0)
        return 0.0;
    const auto d = static_cast<std::size_t>(std::floor(tau / h));
    return y[d];
}

double delayed_interp_raw(const std::vector<double>& y, double tn, double T, double h)
{
    const double tau = tn - T;
    if (tau <= 0.0)
        return 0.0;
    const double q = tau / h;
    const auto i = static_cast<std::size_t>(std::floor(q));
    const double theta = q - static_cast<double>(i);
    return (1.0 - theta) * y[i] + theta * y[i + 1];
}

template <typename Step>
Trajectory integrate(const ProblemConfig& cfg, const std::string& tag, Step step)
{
    Trajectory traj;
    traj.mesh = problem_mesh(cfg);
    traj.scheme_tag = tag;
    traj.values.assign(traj.mesh.N + 1, 0.0);
    traj.values[0] = cfg.y0;
    for (std::size_t n = 1; n <= traj.mesh.N; ++n) {
        traj.values[n] = step(traj.values, n);
        if (!std::isfinite(traj.values[n]) && !traj.diverged_at) {
            traj.diverged_at = n;
            break;
        }
    }
    return traj;
}

} // namespace

double conformable_linear_ivp(double a, double b, double y0, double alpha, double t)
{
    if (a == 0.0)
        throw std::invalid_argument("conformable_linear_ivp: a must be nonzero");
    const double eq = b / a;
    return eq + (y0 - eq) * conformable_exp(-a, alpha, t);
}

double series_solution_conformable(const ProblemConfig& cfg, double t)
{
    if (cfg.family != Family::conformable)
        throw std::invalid_argument("series_solution_conformable: cfg.family must be conformable");
    return SeriesEvaluator(cfg)(t);
}

std::vector<double> conformable_derivative_mesh(const Trajectory& traj, double alpha)
{
    if (traj.values.size() < 2)
        throw std::invalid_argument("conformable_derivative_mesh: need at least two values");
    const double h = traj.mesh.h;
    std::vector<double> d(traj.values.size() - 1);
    for (std::size_t n = 1; n < traj.values.size(); ++n) {
        const double tn = traj.mesh.node(n);
        d[n - 1] = std::pow(tn, 1.0 - alpha) * (traj.values[n] - traj.values[n - 1]) / h;
    }
    return d;
}

Trajectory solve_euler_conformable(const ProblemConfig& cfg)
{
    if (cfg.family != Family::conformable)
        throw std::invalid_argument("solve_euler_conformable: cfg.family must be conformable");
    const double a = cfg.a, alpha = cfg.alpha, T = cfg.T;
    const Mesh mesh = problem_mesh(cfg);
    const double h = mesh.h;
    return integrate(cfg, "euler", [&](const std::vector<double>& y, std::size_t n) {
        const double tn = static_cast<double>(n) * h;
        const double yT = delayed_floor_raw(y, tn, T, h);
        const double fn = (-a * yT + eval_forcing(cfg.forcing, alpha, tn)) /
                          std::pow(tn, 1.0 - alpha);
        return y[n - 1] + h * fn;
    });
}

Trajectory solve_rk4_conformable(const ProblemConfig& cfg, bool interp)
{
    if (cfg.family != Family::conformable)
        throw std::invalid_argument("solve_rk4_conformable: cfg.family must be conformable");
    const double a = cfg.a, alpha = cfg.alpha, T = cfg.T;
    const Mesh mesh = problem_mesh(cfg);
    const double h = mesh.h;
    const std::string tag = interp ? "rk4-interp" : "rk4";
    return integrate(cfg, tag, [&, interp](const std::vector<double>& y, std::size_t n) {
        const double tn = static_cast<double>(n) * h;
        const double yT = interp ? delayed_interp_raw(y, tn, T, h)
                                 : delayed_floor_raw(y, tn, T, h);
        auto slope = [&](double t) {
            return (-a * yT + eval_forcing(cfg.forcing, alpha, t)) /
                   std::pow(t, 1.0 - alpha);
        };
        const double k1 = h * slope(tn);
        const double k2 = h * slope(tn + 0.5 * h);
        const double k3 = k2; // stages 2 and 3 coincide: slope has no y dependence
        const double k4 = h * slope(tn + h);
        return y[n - 1] + (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    });
}

double conformable_integral_numeric(const std::function<double(double)>& f,
                                    double alpha, double a, double t,
                                    std::size_t n_panels)
{
    if (n_panels < 1)
        throw std::invalid_argument("conformable_integral_numeric: n_panels must be >= 1");
    if (!(t > a) || a < 0.0)
        throw std::invalid_argument("conformable_integral_numeric: need 0 <= a < t");
    const double w = (t - a) / static_cast<double>(n_panels);
    auto g = [&](double tau) {
        // tau^{alpha-1} is integrably singular at 0; drop the endpoint weight
        // there (the panel contribution vanishes in the refinement limit).
        if (tau == 0.0)
            return 0.0;
        return std::pow(tau, alpha - 1.0) * f(tau);
    };
    double sum = 0.5 * (g(a) + g(t));
    for (std::size_t i = 1; i < n_panels; ++i)
        sum += g(a + static_cast<double>(i) * w);
    return sum * w;
}

} // namespace fdde

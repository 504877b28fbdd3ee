#include "fdde/caputo.hpp"

#include <cmath>
#include <stdexcept>

#include "fdde/forcing.hpp"
#include "fdde/specfun.hpp"

namespace fdde {

namespace {

// w_r = r^{1-alpha} - (r-1)^{1-alpha}, r = 1 .. N (L1 kernel increments)
std::vector<double> l1_weights(double alpha, std::size_t N)
{
    std::vector<double> w(N + 1, 0.0);
    for (std::size_t r = 1; r <= N; ++r)
        w[r] = std::pow(static_cast<double>(r), 1.0 - alpha) -
               std::pow(static_cast<double>(r - 1), 1.0 - alpha);
    return w;
}

double l1_memory_sum(const std::vector<double>& y, const std::vector<double>& w,
                     std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += w[n - i] * (y[i + 1] - y[i]);
    return s;
}

template <typename Step>
Trajectory caputo_integrate(const ProblemConfig& cfg, const std::string& tag, Step step)
{
    Trajectory traj;
    traj.mesh = problem_mesh(cfg);
    traj.scheme_tag = tag;
    traj.values.assign(traj.mesh.N + 1, 0.0);

    SeriesEvaluator series(cfg);
    const std::size_t warm = std::min(traj.mesh.m, traj.mesh.N);
    for (std::size_t n = 0; n <= warm; ++n)
        traj.values[n] = series(traj.mesh.node(n));

    for (std::size_t n = warm + 1; n <= traj.mesh.N; ++n) {
        traj.values[n] = step(traj.values, n);
        if (!std::isfinite(traj.values[n]) && !traj.diverged_at) {
            traj.diverged_at = n;
            break;
        }
    }
    return traj;
}

} // namespace

double series_solution_caputo(const ProblemConfig& cfg, double t)
{
    if (cfg.family != Family::caputo)
        throw std::invalid_argument("series_solution_caputo: cfg.family must be caputo");
    return SeriesEvaluator(cfg)(t);
}

double caputo_constant_forcing(double a, double b0, double y0, double alpha, double t)
{
    if (a == 0.0)
        throw std::invalid_argument("caputo_constant_forcing: a must be nonzero");
    const double ml = mittag_leffler({alpha, -a * std::pow(t, alpha)});
    return y0 * ml + (b0 / a) * (1.0 - ml);
}

std::vector<double> discrete_caputo_l1(const Trajectory& traj, double alpha)
{
    if (traj.values.size() < 2)
        throw std::invalid_argument("discrete_caputo_l1: need at least two values");
    const std::size_t N = traj.values.size() - 1;
    const auto w = l1_weights(alpha, N);
    const double scale = std::pow(traj.mesh.h, -alpha) / gamma_fn(2.0 - alpha);
    std::vector<double> d(N);
    for (std::size_t n = 1; n <= N; ++n) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += w[n - i] * (traj.values[i + 1] - traj.values[i]);
        d[n - 1] = scale * s;
    }
    return d;
}

Trajectory solve_l1_euler_caputo(const ProblemConfig& cfg)
{
    if (cfg.family != Family::caputo)
        throw std::invalid_argument("solve_l1_euler_caputo: cfg.family must be caputo");
    const Mesh mesh = problem_mesh(cfg);
    const auto w = l1_weights(cfg.alpha, mesh.N);
    const double gh = gamma_fn(2.0 - cfg.alpha) * std::pow(mesh.h, cfg.alpha);
    return caputo_integrate(cfg, "caputo-l1", [&](const std::vector<double>& y, std::size_t n) {
        const double tn = mesh.node(n);
        const double fn = eval_forcing(cfg.forcing, cfg.alpha, tn) - cfg.a * y[n - mesh.m];
        return y[n - 1] - l1_memory_sum(y, w, n) + gh * fn;
    });
}

std::vector<double> l2sigma_weights(double alpha, double sigma, std::size_t n)
{
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("l2sigma_weights: sigma must lie in (0,1]");
    if (n == 0)
        throw std::invalid_argument("l2sigma_weights: n must be >= 1");
    auto A = [&](std::size_t l) {
        const double s = static_cast<double>(l) + sigma;
        if (l == 0)
            return std::pow(sigma, 1.0 - alpha);
        return std::pow(s, 1.0 - alpha) - std::pow(s - 1.0, 1.0 - alpha);
    };
    auto B = [&](std::size_t l) {
        const double s = static_cast<double>(l) + sigma;
        return (std::pow(s, 2.0 - alpha) - std::pow(s - 1.0, 2.0 - alpha)) / (2.0 - alpha) -
               0.5 * (std::pow(s, 1.0 - alpha) + std::pow(s - 1.0, 1.0 - alpha));
    };
    std::vector<double> c(n);
    if (n == 1) {
        c[0] = A(0);
        return c;
    }
    c[0] = A(0) + B(1);
    for (std::size_t j = 1; j + 1 < n; ++j)
        c[j] = A(j) + B(j + 1) - B(j);
    c[n - 1] = A(n - 1) - B(n - 1);
    return c;
}

Trajectory solve_l2_1sigma_caputo(const ProblemConfig& cfg, const L2SigmaParams& p)
{
    if (cfg.family != Family::caputo)
        throw std::invalid_argument("solve_l2_1sigma_caputo: cfg.family must be caputo");
    const double sigma = p.resolve_sigma(cfg.alpha);
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("solve_l2_1sigma_caputo: sigma must lie in (0,1]");
    const Mesh mesh = problem_mesh(cfg);
    const auto w = l1_weights(cfg.alpha, mesh.N);
    const double gh = gamma_fn(2.0 - cfg.alpha) * std::pow(mesh.h, cfg.alpha);

    // Kernel building blocks of the quadratic discretization at the shifted
    // point t_{n-1+sigma}; the per-step weights c_j are assembled from these.
    std::vector<double> A(mesh.N + 1, 0.0), B(mesh.N + 1, 0.0);
    A[0] = std::pow(sigma, 1.0 - cfg.alpha);
    for (std::size_t l = 1; l <= mesh.N; ++l) {
        const double s = static_cast<double>(l) + sigma;
        A[l] = std::pow(s, 1.0 - cfg.alpha) - std::pow(s - 1.0, 1.0 - cfg.alpha);
        B[l] = (std::pow(s, 2.0 - cfg.alpha) - std::pow(s - 1.0, 2.0 - cfg.alpha)) /
                   (2.0 - cfg.alpha) -
               0.5 * (std::pow(s, 1.0 - cfg.alpha) + std::pow(s - 1.0, 1.0 - cfg.alpha));
    }

    return caputo_integrate(cfg, "caputo-l21sigma", [&](const std::vector<double>& y, std::size_t n) {
        const double tn = mesh.node(n);
        const double f_right = eval_forcing(cfg.forcing, cfg.alpha, tn) - cfg.a * y[n - mesh.m];
        const double y_l1 = y[n - 1] - l1_memory_sum(y, w, n) + gh * f_right;
        if (p.zero_correction)
            return y_l1;

        const double c0 = (n == 1) ? A[0] : A[0] + B[1];
        if (!(c0 > 0.0))
            throw std::invalid_argument("solve_l2_1sigma_caputo: non-positive leading weight");
        double S = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            const double cj = (j + 1 < n) ? A[j] + B[j + 1] - B[j] : A[j] - B[j];
            S += cj * (y[n - j] - y[n - j - 1]);
        }
        const double t_shift = mesh.node(n - 1) + sigma * mesh.h;
        const double y_delay =
            (1.0 - sigma) * y[n - 1 - mesh.m] + sigma * y[n - mesh.m];
        const double f_shift = eval_forcing(cfg.forcing, cfg.alpha, t_shift) - cfg.a * y_delay;
        const double y_alik = y[n - 1] + (gh * f_shift - S) / c0;

        const double correction = y_alik - y_l1;
        return y_l1 + correction;
    });
}

Trajectory solve_predictor_corrector_caputo(const ProblemConfig& cfg, double blend)
{
    if (cfg.family != Family::caputo)
        throw std::invalid_argument("solve_predictor_corrector_caputo: cfg.family must be caputo");
    if (!(blend >= 0.0 && blend <= 1.0))
        throw std::invalid_argument("solve_predictor_corrector_caputo: blend must lie in [0,1]");
    const Mesh mesh = problem_mesh(cfg);
    SeriesEvaluator series(cfg);
    const double c = std::pow(mesh.h, cfg.alpha) / gamma_fn(cfg.alpha + 1.0);
    auto f_at = [&](const std::vector<double>& y, std::size_t i) {
        const double delayed = (i >= mesh.m) ? y[i - mesh.m] : 0.0;
        return eval_forcing(cfg.forcing, cfg.alpha, mesh.node(i)) - cfg.a * delayed;
    };
    return caputo_integrate(cfg, "caputo-pc", [&](const std::vector<double>& y, std::size_t n) {
        const double pred = series(mesh.node(n));
        const double corr = y[n - 1] + c * 0.5 * (f_at(y, n - 1) + f_at(y, n));
        return blend * corr + (1.0 - blend) * pred;
    });
}

} // namespace fdde

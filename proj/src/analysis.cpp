#include "fdde/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "fdde/caputo.hpp"
#include "fdde/conformable.hpp"
#include "fdde/runner.hpp"
#include "fdde/specfun.hpp"

namespace fdde {

ErrorReport compare(const Trajectory& traj, const Trajectory& reference)
{
    if (traj.mesh.h != reference.mesh.h || traj.values.size() != reference.values.size())
        throw std::invalid_argument("compare: trajectories live on different meshes");

    ErrorReport rep;
    std::size_t limit = traj.values.size();
    if (traj.diverged_at)
        limit = std::min(limit, *traj.diverged_at);
    if (reference.diverged_at)
        limit = std::min(limit, *reference.diverged_at);
    rep.diverged_at = traj.diverged_at ? traj.diverged_at : reference.diverged_at;

    rep.pointwise_abs.resize(limit);
    rep.pointwise_rel.resize(limit);
    double sumsq = 0.0;
    for (std::size_t n = 0; n < limit; ++n) {
        const double abs_err = std::abs(traj.values[n] - reference.values[n]);
        const double rel_err = abs_err / (std::abs(reference.values[n]) + 1e-14);
        rep.pointwise_abs[n] = abs_err;
        rep.pointwise_rel[n] = rel_err;
        rep.max_abs = std::max(rep.max_abs, abs_err);
        rep.max_rel = std::max(rep.max_rel, rel_err);
        sumsq += rel_err * rel_err;
    }
    rep.n_points = limit;
    rep.rms_rel = limit ? std::sqrt(sumsq / static_cast<double>(limit)) : 0.0;
    return rep;
}

double stability_margin(const ProblemConfig& cfg)
{
    return cfg.a * std::pow(cfg.h, cfg.alpha) / gamma_fn(cfg.alpha + 1.0);
}

std::vector<ConvergenceLevel> convergence_study(const ProblemConfig& cfg,
                                                const std::string& scheme,
                                                std::size_t levels)
{
    if (levels < 3)
        throw std::invalid_argument("convergence_study: need at least 3 levels");

    std::vector<ConvergenceLevel> out;
    out.reserve(levels);
    std::size_t stride = 1;
    ProblemConfig level_cfg = cfg;
    std::vector<double> reference; // series on the coarsest mesh's nodes

    for (std::size_t l = 0; l < levels; ++l, stride *= 2) {
        level_cfg.h = cfg.h / static_cast<double>(stride);
        const Trajectory traj = run_scheme(level_cfg, scheme);

        if (l == 0) {
            SeriesEvaluator series(level_cfg);
            reference.resize(traj.mesh.N + 1);
            for (std::size_t n = 0; n < reference.size(); ++n)
                reference[n] = series(traj.mesh.node(n));
        }

        ConvergenceLevel lev;
        lev.h = level_cfg.h;
        lev.diverged_at = traj.diverged_at;
        double sumsq = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            const std::size_t n = i * stride;
            if (traj.diverged_at && n >= *traj.diverged_at)
                break;
            const double rel = std::abs(traj.values[n] - reference[i]) /
                               (std::abs(reference[i]) + 1e-14);
            sumsq += rel * rel;
            ++count;
        }
        lev.error = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;

        // Richardson slope against the latest usable (non-diverged) level
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            if (it->diverged_at)
                continue;
            if (!lev.diverged_at && lev.error > 0.0 && it->error > 0.0)
                lev.slope = std::log(it->error / lev.error) / std::log(it->h / lev.h);
            break;
        }
        out.push_back(lev);
    }
    return out;
}

} // namespace fdde

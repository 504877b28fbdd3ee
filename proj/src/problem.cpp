#include "fdde/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace fdde {

Mesh problem_mesh(const ProblemConfig& cfg)
{
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
        throw std::invalid_argument("problem: alpha must lie in (0,1]");
    if (!(cfg.T > 0.0))
        throw std::invalid_argument("problem: delay T must be positive");
    if (!(cfg.h > 0.0))
        throw std::invalid_argument("problem: step h must be positive");
    if (!(cfg.t_max >= 0.0))
        throw std::invalid_argument("problem: t_max must be non-negative");
    if (cfg.forcing.coeffs.empty())
        throw std::invalid_argument("problem: forcing needs at least one coefficient");

    const double ratio = cfg.T / cfg.h;
    const double r = std::round(ratio);
    if (!(r >= 1.0) || std::abs(ratio - r) > 1e-12 * ratio)
        throw std::invalid_argument("problem: T/h must be an integer (delay-aligned mesh)");
    return build_mesh(cfg.T, static_cast<std::size_t>(r), std::max(cfg.t_max, cfg.T));
}

} // namespace fdde

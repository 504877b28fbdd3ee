#ifndef FDDE_ANALYSIS_HPP
#define FDDE_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdde/problem.hpp"

namespace fdde {

// Pointwise and aggregate errors of a trajectory against a reference, with the
// relative error regularized as E_abs/(|ref| + 1e-14).
struct ErrorReport {
    double max_rel = 0.0;
    double rms_rel = 0.0;
    double max_abs = 0.0;
    std::vector<double> pointwise_abs;
    std::vector<double> pointwise_rel;
    std::size_t n_points = 0;
    std::optional<std::size_t> diverged_at;
};

/// Compares two trajectories on the same mesh (aggregates over all nodes, or
/// over the prefix before the first divergence of either trajectory).
/// Throws std::invalid_argument on mesh mismatch.
ErrorReport compare(const Trajectory& traj, const Trajectory& reference);

/// a h^alpha / Gamma(alpha+1); values below 1 satisfy the formal stability
/// condition of the explicit fractional steppers.
double stability_margin(const ProblemConfig& cfg);

struct ConvergenceLevel {
    double h = 0.0;
    double error = 0.0;              // RMS vs the analytic series on shared nodes
    std::optional<double> slope;     // log2(error_prev / error), from the 2nd level on
    std::optional<std::size_t> diverged_at;
};

/// Runs `scheme` (a runner label such as "euler" or "caputo-l1") at h, h/2,
/// h/4, ... and reports errors against the analytic series restricted to the
/// coarsest mesh's nodes. Throws std::invalid_argument for unknown schemes or
/// levels < 3.
std::vector<ConvergenceLevel> convergence_study(const ProblemConfig& cfg,
                                                const std::string& scheme,
                                                std::size_t levels);

} // namespace fdde

#endif

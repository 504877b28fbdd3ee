#ifndef FDDE_MESH_HPP
#define FDDE_MESH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fdde {

// Uniform delay-aligned temporal mesh: t_n = n h with h = T/m, so every
// integer multiple of the delay T lands exactly on a node.
struct Mesh {
    double h = 0.0;       // step
    std::size_t m = 0;    // steps per delay interval, h = T/m
    double T = 0.0;       // delay
    std::size_t N = 0;    // total steps; nodes are t_0 ... t_N
    double t_max = 0.0;

    double node(std::size_t n) const { return static_cast<double>(n) * h; }
};

// Discrete solution {y_n} on a mesh, tagged with the scheme that produced it.
struct Trajectory {
    Mesh mesh;
    std::vector<double> values;             // y_0 ... y_N
    std::string scheme_tag;
    std::optional<std::size_t> diverged_at; // first non-finite index, if any
    std::size_t interp_front_fallbacks = 0; // interp reads clamped at the front
};

/// h = T/m, N = floor(t_max/h). Throws std::invalid_argument if T <= 0,
/// m < 1, or t_max < T.
Mesh build_mesh(double T, std::size_t m, double t_max);

/// y(t_n - T) with floor indexing; 0 for t_n < T (causal zero history).
/// A node-hit guard keeps (t_n - T)/h from rounding down at aligned nodes.
double delayed_value_floor(const Trajectory& traj, std::size_t n, double T);

/// y(t_n - T) by linear interpolation between the two surrounding nodes;
/// 0 for t_n < T, and equal to delayed_value_floor at exact node hits.
/// Throws std::out_of_range if the interpolant would read past the last value.
double delayed_value_interp(const Trajectory& traj, std::size_t n, double T);

/// Write the trajectory as CSV (`t,y` header, 17 significant digits).
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

} // namespace fdde

#endif

#include "fdde/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace fdde {

namespace {

// Floor of q with a guard so that aligned ratios (q within rounding of an
// integer) do not drop to the previous node.
long long guarded_floor(double q)
{
    const double r = std::round(q);
    if (std::abs(q - r) <= 1e-9 * std::max(1.0, std::abs(q)))
        return static_cast<long long>(r);
    return static_cast<long long>(std::floor(q));
}

} // namespace

Mesh build_mesh(double T, std::size_t m, double t_max)
{
    if (!(T > 0.0))
        throw std::invalid_argument("build_mesh: delay T must be positive");
    if (m < 1)
        throw std::invalid_argument("build_mesh: m must be at least 1");
    if (!(t_max >= T))
        throw std::invalid_argument("build_mesh: t_max must be at least the delay T");

    Mesh mesh;
    mesh.T = T;
    mesh.m = m;
    mesh.h = T / static_cast<double>(m);
    mesh.t_max = t_max;
    mesh.N = static_cast<std::size_t>(guarded_floor(t_max / mesh.h));
    return mesh;
}

double delayed_value_floor(const Trajectory& traj, std::size_t n, double T)
{
    const double tau = traj.mesh.node(n) - T;
    if (tau < 0.0)
        return 0.0;
    const long long d = guarded_floor(tau / traj.mesh.h);
    return traj.values.at(static_cast<std::size_t>(d));
}

double delayed_value_interp(const Trajectory& traj, std::size_t n, double T)
{
    const double tau = traj.mesh.node(n) - T;
    if (tau < 0.0)
        return 0.0;
    const double q = tau / traj.mesh.h;
    const long long i = guarded_floor(q);
    const double theta = q - static_cast<double>(i);
    const double yi = traj.values.at(static_cast<std::size_t>(i));
    if (std::abs(theta) <= 1e-9 * std::max(1.0, std::abs(q)))
        return yi; // node hit, identical to floor retrieval
    if (static_cast<std::size_t>(i) + 1 >= traj.values.size())
        throw std::out_of_range("delayed_value_interp: interpolant reads past the last value");
    return (1.0 - theta) * yi + theta * traj.values[static_cast<std::size_t>(i) + 1];
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path)
{
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw std::system_error(errno, std::generic_category(),
                                "cannot open " + path + " for writing");
    std::fputs("t,y\n", f);
    for (std::size_t n = 0; n < traj.values.size(); ++n)
        std::fprintf(f, "%.17g,%.17g\n", traj.mesh.node(n), traj.values[n]);
    if (std::fclose(f) != 0)
        throw std::system_error(errno, std::generic_category(), "error closing " + path);
}

} // namespace fdde

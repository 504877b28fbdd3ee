#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "fdde/mesh.hpp"

using namespace fdde;

namespace {

Trajectory linear_history(double T, std::size_t m, double t_max)
{
    Trajectory traj;
    traj.mesh = build_mesh(T, m, t_max);
    traj.values.resize(traj.mesh.N + 1);
    for (std::size_t n = 0; n <= traj.mesh.N; ++n)
        traj.values[n] = 2.0 * traj.mesh.node(n) - 1.0;
    traj.scheme_tag = "linear";
    return traj;
}

} // namespace

TEST_CASE("build_mesh invariants")
{
    const Mesh mesh = build_mesh(0.7, 700, 120.0);
    CHECK(mesh.h == doctest::Approx(0.001).epsilon(1e-15));
    CHECK(mesh.m == 700);
    CHECK(mesh.N == 120000);
    CHECK(mesh.node(0) == 0.0);
    CHECK(mesh.node(mesh.N) == doctest::Approx(120.0).epsilon(1e-12));
    // a delay multiple lands exactly on a node index
    CHECK(mesh.node(700) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("build_mesh rejects bad parameters")
{
    CHECK_THROWS_AS(build_mesh(0.0, 10, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(-1.0, 10, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(1.0, 0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(2.0, 10, 1.0), std::invalid_argument);
}

TEST_CASE("delayed lookups return zero before the delay")
{
    const Trajectory traj = linear_history(1.0, 10, 3.0);
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(delayed_value_floor(traj, n, 1.0) == 0.0);
        CHECK(delayed_value_interp(traj, n, 1.0) == 0.0);
    }
}

TEST_CASE("floor and interp agree at node hits and interp is exact on linear data")
{
    const Trajectory traj = linear_history(1.0, 10, 3.0);
    for (std::size_t n = 10; n <= traj.mesh.N; ++n) {
        const double f = delayed_value_floor(traj, n, 1.0);
        const double i = delayed_value_interp(traj, n, 1.0);
        // aligned mesh: every t_n - T is itself a node
        CHECK(i == doctest::Approx(f).epsilon(1e-13));
        const double expect = 2.0 * (traj.mesh.node(n) - 1.0) - 1.0;
        CHECK(f == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("interp recovers off-node delayed values on linear data")
{
    const Trajectory traj = linear_history(1.0, 10, 3.0);
    // delay not a mesh multiple: the interpolant must hit the exact line
    const double T = 0.73;
    for (std::size_t n = 8; n + 1 <= traj.mesh.N; ++n) {
        const double tau = traj.mesh.node(n) - T;
        if (tau < 0.0)
            continue;
        CHECK(delayed_value_interp(traj, n, T) ==
              doctest::Approx(2.0 * tau - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("interp refuses to read past the final node")
{
    Trajectory traj = linear_history(1.0, 10, 2.0);
    traj.values.resize(15); // truncated history
    CHECK_THROWS_AS(delayed_value_interp(traj, 20, 0.55), std::out_of_range);
}

TEST_CASE("trajectory CSV round-trip")
{
    const Trajectory traj = linear_history(0.5, 5, 2.0);
    const std::string path = "mesh_roundtrip_test.csv";
    write_trajectory_csv(traj, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,y");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string ts, ys;
        REQUIRE(std::getline(ss, ts, ','));
        REQUIRE(std::getline(ss, ys, ','));
        CHECK(std::stod(ts) == doctest::Approx(traj.mesh.node(rows)).epsilon(1e-16));
        CHECK(std::stod(ys) == traj.values[rows]); // 17 digits round-trips exactly
        ++rows;
    }
    CHECK(rows == traj.values.size());
    std::remove(path.c_str());
}

TEST_CASE("trajectory CSV reports unwritable paths")
{
    const Trajectory traj = linear_history(0.5, 5, 2.0);
    CHECK_THROWS_AS(write_trajectory_csv(traj, "/nonexistent-dir/x/y.csv"),
                    std::system_error);
}

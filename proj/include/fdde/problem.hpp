#ifndef FDDE_PROBLEM_HPP
#define FDDE_PROBLEM_HPP

#include <cstddef>

#include "fdde/forcing.hpp"
#include "fdde/mesh.hpp"

namespace fdde {

enum class Family { conformable, caputo };

// Scalar fractional delay problem
//   D^alpha y(t) + a y(t - T) = b(t),  y(0) = y0,  y(t) = 0 for t < 0,
// where D^alpha is either the conformable or the Caputo derivative and b(t)
// is the truncated analytic forcing.
struct ProblemConfig {
    double alpha = 0.7;
    double a = 0.0;          // delay coefficient
    double T = 1.0;          // delay
    double y0 = 0.0;
    ForcingSeries forcing{{0.0}};
    double h = 0.001;
    double t_max = 1.0;
    Family family = Family::conformable;

    std::size_t truncation() const { return forcing.truncation(); } // K
};

/// Validates the invariants (alpha range, positivity, mesh alignment of T/h)
/// and returns the delay-aligned mesh. Throws std::invalid_argument.
Mesh problem_mesh(const ProblemConfig& cfg);

} // namespace fdde

#endif

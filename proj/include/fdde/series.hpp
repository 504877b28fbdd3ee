#ifndef FDDE_SERIES_HPP
#define FDDE_SERIES_HPP

#include <cstddef>
#include <vector>

#include "fdde/problem.hpp"

namespace fdde {

// Truncated analytic series solution of the delay problem, evaluated as a
// finite sum over delay epochs j = 0 .. floor(t/T). Term magnitudes are
// assembled in log space with the sign of (-a)^j b_k tracked separately, since
// the Gamma factors overflow double range once the epoch count grows large.
class SeriesEvaluator {
public:
    explicit SeriesEvaluator(const ProblemConfig& cfg);

    /// y(t) for t in [0, t_max]. Throws std::overflow_error (with the epoch
    /// index) if a term magnitude leaves the floating range.
    double operator()(double t) const;

    /// Evaluates the series on every node of the problem mesh.
    Trajectory trajectory(const std::string& tag) const;

private:
    struct Term {
        double log_coeff; // log of the Delta-independent magnitude
        double power;     // exponent of Delta
        double sign;      // +-1
    };

    double T_;
    std::vector<std::vector<Term>> epoch_terms_; // per epoch j
    Mesh mesh_;
};

} // namespace fdde

#endif

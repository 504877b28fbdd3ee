#include "fdde/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fdde/specfun.hpp"

namespace fdde {

namespace {
constexpr double kLogMax = 709.0; // just under log(DBL_MAX)
}

SeriesEvaluator::SeriesEvaluator(const ProblemConfig& cfg)
    : T_(cfg.T), mesh_(problem_mesh(cfg))
{
    const double alpha = cfg.alpha;
    const double log_abs_a =
        (cfg.a == 0.0) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(cfg.a));
    const double sign_neg_a = (cfg.a > 0.0) ? -1.0 : 1.0;
    const double log_alpha = std::log(alpha);
    const std::size_t K = cfg.truncation();

    const auto max_epoch =
        static_cast<std::size_t>(std::floor(mesh_.t_max / T_ + 1e-9)) + 1;

    epoch_terms_.resize(max_epoch + 1);
    for (std::size_t j = 0; j <= max_epoch; ++j) {
        auto& terms = epoch_terms_[j];
        if (cfg.a == 0.0 && j > 0)
            continue; // (-a)^j kills every epoch past the first
        const double dj = static_cast<double>(j);
        const double j_log_a = (j == 0) ? 0.0 : dj * log_abs_a;
        const double sign_j = (j % 2 == 0) ? 1.0 : sign_neg_a;

        // initial-condition block
        if (cfg.y0 != 0.0) {
            Term t;
            t.sign = sign_j * ((cfg.y0 > 0.0) ? 1.0 : -1.0);
            if (cfg.family == Family::conformable) {
                t.log_coeff = j_log_a + std::log(std::abs(cfg.y0)) - dj * log_alpha -
                              log_gamma(dj + 1.0);
                t.power = alpha * dj;
            } else {
                t.log_coeff =
                    j_log_a + std::log(std::abs(cfg.y0)) - log_gamma(alpha * dj + 1.0);
                t.power = alpha * dj;
            }
            terms.push_back(t);
        }

        // forcing block
        for (std::size_t k = 0; k <= K; ++k) {
            const double bk = cfg.forcing.coeffs[k];
            if (bk == 0.0)
                continue;
            const double dk = static_cast<double>(k);
            Term t;
            t.sign = sign_j * ((bk > 0.0) ? 1.0 : -1.0);
            if (cfg.family == Family::conformable) {
                t.log_coeff = j_log_a + std::log(std::abs(bk)) + log_gamma(dk + 1.0) -
                              (dj + dk + 1.0) * log_alpha - log_gamma(dj + dk + 2.0);
                t.power = alpha * (dj + dk + 1.0);
            } else {
                t.log_coeff = j_log_a + std::log(std::abs(bk)) +
                              log_gamma(alpha * dk + 1.0) - dk * log_alpha -
                              log_gamma((dj + dk + 1.0) * alpha + 1.0);
                t.power = (dj + dk + 1.0) * alpha;
            }
            terms.push_back(t);
        }
    }
}

double SeriesEvaluator::operator()(double t) const
{
    if (t < 0.0)
        return 0.0;

    auto max_j = static_cast<long long>(std::floor(t / T_ + 1e-9));
    if (max_j >= static_cast<long long>(epoch_terms_.size()))
        max_j = static_cast<long long>(epoch_terms_.size()) - 1;

    double sum = 0.0, comp = 0.0;
    for (long long j = 0; j <= max_j; ++j) {
        double delta = t - static_cast<double>(j) * T_;
        if (delta < 0.0)
            delta = 0.0; // rounding at an epoch boundary; theta(0) = 1
        const double log_delta =
            (delta > 0.0) ? std::log(delta) : -std::numeric_limits<double>::infinity();
        for (const Term& term : epoch_terms_[static_cast<std::size_t>(j)]) {
            double v;
            if (delta == 0.0) {
                // Delta^0 := 1, every positive power vanishes.
                v = (term.power == 0.0) ? term.sign * std::exp(term.log_coeff) : 0.0;
            } else {
                const double lg = term.log_coeff + term.power * log_delta;
                if (lg > kLogMax)
                    throw std::overflow_error(
                        "series term overflow at epoch j=" + std::to_string(j));
                v = term.sign * std::exp(lg);
            }
            const double y = v - comp;
            const double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
    }
    return sum;
}

Trajectory SeriesEvaluator::trajectory(const std::string& tag) const
{
    Trajectory traj;
    traj.mesh = mesh_;
    traj.scheme_tag = tag;
    traj.values.resize(mesh_.N + 1);
    for (std::size_t n = 0; n <= mesh_.N; ++n)
        traj.values[n] = (*this)(mesh_.node(n));
    return traj;
}

} // namespace fdde

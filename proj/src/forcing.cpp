#include "fdde/forcing.hpp"

#include <cmath>
#include <stdexcept>

namespace fdde {

double eval_forcing_u(const ForcingSeries& f, double u)
{
    if (f.coeffs.empty())
        throw std::invalid_argument("eval_forcing: forcing needs at least one coefficient");
    double acc = 0.0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        acc = acc * u + f.coeffs[i];
    return acc;
}

double eval_forcing(const ForcingSeries& f, double alpha, double t)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("eval_forcing: alpha must lie in (0,1]");
    if (t < 0.0)
        throw std::invalid_argument("eval_forcing: t must be non-negative");
    const double u = (t == 0.0) ? 0.0 : std::pow(t, alpha) / alpha;
    return eval_forcing_u(f, u);
}

ForcingSeries named_forcing(ForcingKind kind, double lambda, std::size_t K)
{
    ForcingSeries f;
    f.coeffs.resize(K + 1, 0.0);
    switch (kind) {
    case ForcingKind::exp: {
        double c = 1.0;
        for (std::size_t k = 0; k <= K; ++k) {
            f.coeffs[k] = c;
            c *= lambda / static_cast<double>(k + 1);
        }
        break;
    }
    case ForcingKind::sin: {
        double c = 1.0; // 1/(2k+1)! with sign
        for (std::size_t k = 0; 2 * k + 1 <= K; ++k) {
            f.coeffs[2 * k + 1] = c;
            c *= -1.0 / static_cast<double>((2 * k + 2) * (2 * k + 3));
        }
        break;
    }
    case ForcingKind::cos: {
        double c = 1.0; // 1/(2k)! with sign
        for (std::size_t k = 0; 2 * k <= K; ++k) {
            f.coeffs[2 * k] = c;
            c *= -1.0 / static_cast<double>((2 * k + 1) * (2 * k + 2));
        }
        break;
    }
    }
    return f;
}

} // namespace fdde

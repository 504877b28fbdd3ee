#ifndef FDDE_FORCING_HPP
#define FDDE_FORCING_HPP

#include <cstddef>
#include <vector>

namespace fdde {

// Truncated representation of an analytic forcing
//   b(t) = sum_{k=0}^{K} b_k (t^alpha / alpha)^k.
struct ForcingSeries {
    std::vector<double> coeffs; // b_0 ... b_K

    std::size_t truncation() const { return coeffs.size() - 1; } // K
};

enum class ForcingKind { exp, sin, cos };

/// b(t) evaluated by Horner's rule in u = t^alpha/alpha (0^0 := 1, so b(0) = b_0).
double eval_forcing(const ForcingSeries& f, double alpha, double t);

/// Same polynomial evaluated directly at u = t^alpha/alpha.
double eval_forcing_u(const ForcingSeries& f, double u);

/// First K+1 Taylor coefficients of e^{lambda z}, sin z, or cos z.
/// lambda is ignored for the trigonometric kinds.
ForcingSeries named_forcing(ForcingKind kind, double lambda, std::size_t K);

} // namespace fdde

#endif

#pragma once

// The kernel (κ+1)λ - t^κ shared by the identity and every kernel-moment
// constant. It changes sign at t* = ((κ+1)λ)^(1/κ) when 0 < (κ+1)λ < 1.

#include "quad.hpp"

#include <cmath>
#include <optional>

namespace fracbound::kernel {

inline double level(double kappa, double lambda) { return (kappa + 1.0) * lambda; }

/// Interior sign change of the kernel on (0, 1), if any.
inline std::optional<double> kink(double kappa, double lambda) {
    const double c = level(kappa, lambda);
    if (!(c > 0.0) || !(c < 1.0)) return std::nullopt;
    return std::pow(c, 1.0 / kappa);
}

/// ∫[0,1] g, split at the kernel kink so each piece is smooth.
template <quad::ScalarFunction G>
quad::QuadResult integrate_unit(const G& g, double kappa, double lambda,
                                const quad::Tolerance& tol = {}) {
    const auto split = kink(kappa, lambda);
    if (!split || *split <= 0.0 || *split >= 1.0) return quad::integrate(g, 0.0, 1.0, tol);
    quad::Tolerance half = tol;
    half.abs_tol *= 0.5;
    auto r = quad::integrate(g, 0.0, *split, half);
    r += quad::integrate(g, *split, 1.0, half);
    return r;
}

}  // namespace fracbound::kernel

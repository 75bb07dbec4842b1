#pragma once

// Riemann-Liouville fractional integrals of order kappa > 0:
//
//   J^κ_{a+} f(x) = 1/Γ(κ) ∫[a,x] (x-t)^(κ-1) f(t) dt,   x > a
//   J^κ_{b-} f(x) = 1/Γ(κ) ∫[x,b] (t-x)^(κ-1) f(t) dt,   x < b
//
// with J^0 f = f.

#include "error.hpp"
#include "quad.hpp"
#include "specfun.hpp"

#include <cmath>

namespace fracbound::fracint {

enum class Side {
    left_from_anchor,   ///< J^κ_{anchor+}, evaluated above the anchor
    right_from_anchor,  ///< J^κ_{anchor-}, evaluated below the anchor
};

struct RLSpec {
    double kappa = 1.0;
    double anchor = 0.0;
    Side side = Side::left_from_anchor;

    void validate() const {
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw DomainError("fracint::RLSpec: kappa must be finite and non-negative");
        if (!std::isfinite(anchor)) throw DomainError("fracint::RLSpec: anchor must be finite");
    }
};

template <quad::ScalarFunction F>
quad::QuadResult rl_left(const F& f, double a, double kappa, double x,
                         const quad::Tolerance& tol = {}) {
    RLSpec{kappa, a, Side::left_from_anchor}.validate();
    if (!(x > a)) throw DomainError("fracint::rl_left: requires x > a");
    if (kappa == 0.0) return {static_cast<double>(f(x)), 0.0, 0};
    auto r = quad::integrate_singular(f, a, x, 0.0, kappa - 1.0, tol);
    r *= 1.0 / specfun::gamma(kappa);
    return r;
}

template <quad::ScalarFunction F>
quad::QuadResult rl_right(const F& f, double b, double kappa, double x,
                          const quad::Tolerance& tol = {}) {
    RLSpec{kappa, b, Side::right_from_anchor}.validate();
    if (!(x < b)) throw DomainError("fracint::rl_right: requires x < b");
    if (kappa == 0.0) return {static_cast<double>(f(x)), 0.0, 0};
    auto r = quad::integrate_singular(f, x, b, kappa - 1.0, 0.0, tol);
    r *= 1.0 / specfun::gamma(kappa);
    return r;
}

/// Applies the operator described by spec at the point x.
template <quad::ScalarFunction F>
quad::QuadResult apply(const RLSpec& spec, const F& f, double x, const quad::Tolerance& tol = {}) {
    return spec.side == Side::left_from_anchor ? rl_left(f, spec.anchor, spec.kappa, x, tol)
                                               : rl_right(f, spec.anchor, spec.kappa, x, tol);
}

}  // namespace fracbound::fracint

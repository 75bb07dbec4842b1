#pragma once

/**
 * @file identity.hpp
 * @brief Both sides of the fractional integral identity for I_f(x, λ, κ; a, mb).
 *
 * The combined quantity (left side) is
 *
 *   (1-λ) [((x-a)^κ + (mb-x)^κ)/(mb-a)] f(x)
 *   + λ [((x-a)^κ f(a) + (mb-x)^κ f(mb))/(mb-a)]
 *   + (1/(κ+1) - λ) [((mb-x)^(κ+1) - (x-a)^(κ+1))/(mb-a)] f'(x)
 *   - Γ(κ+1)/(mb-a) [J^κ_{x-} f(a) + J^κ_{x+} f(mb)],
 *
 * where J^κ_{x-} f(a) = 1/Γ(κ) ∫[a,x] (t-a)^(κ-1) f(t) dt and
 * J^κ_{x+} f(mb) = 1/Γ(κ) ∫[x,mb] (mb-t)^(κ-1) f(t) dt.
 *
 * The right side is the sum of the two kernel integrals
 *
 *   (x-a)^(κ+2)/((κ+1)(mb-a))  ∫[0,1] t((κ+1)λ - t^κ) f''(t x + (1-t) a) dt
 *   (mb-x)^(κ+2)/((κ+1)(mb-a)) ∫[0,1] t((κ+1)λ - t^κ) f''(t x + m(1-t) b) dt.
 *
 * Their residual, compared against the accumulated quadrature error
 * estimates, is the primary correctness check of the whole toolkit.
 */

#include "amconvex.hpp"
#include "error.hpp"
#include "fracint.hpp"
#include "kernel.hpp"
#include "quad.hpp"
#include "specfun.hpp"

#include <cmath>

namespace fracbound::identity {

using amconvex::FnTriple;

struct Params {
    double a = 0.0;
    double b = 1.0;
    double m = 1.0;
    double x = 0.5;
    double lambda = 0.0;
    double kappa = 1.0;
    double alpha = 1.0;
    double q = 1.0;

    double mb() const { return m * b; }
    double width() const { return m * b - a; }
    double midpoint() const { return 0.5 * (a + m * b); }

    /// Throws DomainError naming the first violated constraint.
    void validate() const {
        auto finite = [](double v) { return std::isfinite(v); };
        if (!finite(a) || !finite(b) || !finite(m) || !finite(x) || !finite(lambda) ||
            !finite(kappa) || !finite(alpha) || !finite(q))
            throw DomainError("Params: all fields must be finite");
        if (!(a >= 0.0)) throw DomainError("Params: requires a >= 0");
        if (!(m > 0.0 && m <= 1.0)) throw DomainError("Params: requires m in (0,1]");
        if (!(a < mb())) throw DomainError("Params: requires a < m*b");
        if (!(x >= a && x <= mb())) throw DomainError("Params: requires a <= x <= m*b");
        if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("Params: requires lambda in [0,1]");
        if (!(kappa > 0.0)) throw DomainError("Params: requires kappa > 0");
        if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("Params: requires alpha in [0,1]");
        if (!(q >= 1.0)) throw DomainError("Params: requires q >= 1");
    }

    bool valid() const noexcept {
        try {
            validate();
            return true;
        } catch (const DomainError&) {
            return false;
        }
    }
};

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double quad_error_budget = 0.0;

    /// residual <= 10 * budget + 1e-9
    bool passes() const { return residual <= 10.0 * quad_error_budget + 1e-9; }
};

/// Left side with the error estimate of its fractional-integral part.
inline quad::QuadResult lhs_If_detailed(const Params& p, const FnTriple& fn,
                                        const quad::Tolerance& tol = {}) {
    p.validate();
    const double k = p.kappa, lam = p.lambda, a = p.a, x = p.x, mb = p.mb(), w = p.width();
    const double dxa = x - a, dbx = mb - x;
    const double pk_a = std::pow(dxa, k), pk_b = std::pow(dbx, k);

    const double fx = fn.f(x);
    double value = (1.0 - lam) * (pk_a + pk_b) / w * fx;
    value += lam * (pk_a * fn.f(a) + pk_b * fn.f(mb)) / w;
    value += (1.0 / (k + 1.0) - lam) * (std::pow(dbx, k + 1.0) - std::pow(dxa, k + 1.0)) / w * fn.df(x);

    // Zero-width fractional terms vanish.
    quad::QuadResult frac;
    if (dxa > 0.0) frac += fracint::rl_right(fn.f, x, k, a, tol);
    if (dbx > 0.0) frac += fracint::rl_left(fn.f, x, k, mb, tol);
    frac *= specfun::gamma(k + 1.0) / w;

    return {value - frac.value, frac.abs_error_estimate, frac.subdivisions};
}

inline double lhs_If(const Params& p, const FnTriple& fn, const quad::Tolerance& tol = {}) {
    return lhs_If_detailed(p, fn, tol).value;
}

/// Sum of the two kernel integrals with their combined error estimate.
inline quad::QuadResult rhs_lemma_detailed(const Params& p, const FnTriple& fn,
                                           const quad::Tolerance& tol = {}) {
    p.validate();
    const double k = p.kappa, a = p.a, b = p.b, m = p.m, x = p.x, w = p.width();
    const double c = kernel::level(k, p.lambda);
    const double dxa = x - a, dbx = p.mb() - x;

    quad::QuadResult total;
    if (dxa > 0.0) {
        auto r = kernel::integrate_unit(
            [&](double t) { return t * (c - std::pow(t, k)) * fn.ddf(t * x + (1.0 - t) * a); }, k,
            p.lambda, tol);
        r *= std::pow(dxa, k + 2.0) / ((k + 1.0) * w);
        total += r;
    }
    if (dbx > 0.0) {
        auto r = kernel::integrate_unit(
            [&](double t) { return t * (c - std::pow(t, k)) * fn.ddf(t * x + m * (1.0 - t) * b); },
            k, p.lambda, tol);
        r *= std::pow(dbx, k + 2.0) / ((k + 1.0) * w);
        total += r;
    }
    return total;
}

inline double rhs_lemma(const Params& p, const FnTriple& fn, const quad::Tolerance& tol = {}) {
    return rhs_lemma_detailed(p, fn, tol).value;
}

inline IdentityCheck identity_residual(const Params& p, const FnTriple& fn,
                                       const quad::Tolerance& tol = {}) {
    const auto l = lhs_If_detailed(p, fn, tol);
    const auto r = rhs_lemma_detailed(p, fn, tol);
    return {l.value, r.value, std::abs(l.value - r.value),
            l.abs_error_estimate + r.abs_error_estimate};
}

}  // namespace fracbound::identity

#pragma once

/**
 * @file quad.hpp
 * @brief Adaptive Gauss-Kronrod quadrature with endpoint power-law weights.
 *
 * integrate() is a global adaptive 7/15-point Gauss-Kronrod scheme: the
 * segment with the largest |K15 - G7| is bisected until the summed error
 * estimate meets max(abs_tol, rel_tol * |value|).
 *
 * integrate_singular() evaluates
 *
 *     ∫[lo,hi] (t-lo)^p_lo (hi-t)^p_hi f(t) dt,   p_lo, p_hi > -1,
 *
 * by splitting at the midpoint and removing each integrable singularity
 * with the substitution u = (t-lo)^(p_lo+1) (mirrored at hi). The
 * transformed integrand is bounded, so the same adaptive kernel applies.
 *
 * Interior kinks are not detected; callers split at known break points.
 */

#include "error.hpp"

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <queue>
#include <sstream>
#include <vector>

namespace fracbound::quad {

struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::size_t max_subdiv = 2000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdiv == 0)
            throw DomainError("quad::Tolerance: all fields must be strictly positive");
    }
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t subdivisions = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        abs_error_estimate += o.abs_error_estimate;
        subdivisions += o.subdivisions;
        return *this;
    }
    QuadResult& operator*=(double s) {
        value *= s;
        abs_error_estimate *= std::abs(s);
        return *this;
    }
};

template <class F>
concept ScalarFunction = std::regular_invocable<const F&, double> &&
                         std::convertible_to<std::invoke_result_t<const F&, double>, double>;

namespace detail {

// QUADPACK qk15 abscissae (descending, last is the centre) and weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss-7 weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
double sample(const F& f, double t) {
    const double v = static_cast<double>(f(t));
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "quad: non-finite integrand value at t = " << t;
        throw EvaluationError(msg.str(), t);
    }
    return v;
}

template <class F>
Segment gk15(const F& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = sample(f, centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = sample(f, centre - dx) + sample(f, centre + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Adaptive integral of f over [lo, hi].
template <ScalarFunction F>
QuadResult integrate(const F& f, double lo, double hi, const Tolerance& tol = {}) {
    tol.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("quad::integrate: requires finite lo < hi");

    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gk15(f, lo, hi));
    double value = heap.top().value;
    double error = heap.top().error;
    std::size_t segments = 1;
    std::vector<detail::Segment> frozen;  // too narrow to bisect further

    auto target = [&] { return std::max(tol.abs_tol, tol.rel_tol * std::abs(value)); };

    while (error > target()) {
        if (heap.empty() || segments >= tol.max_subdiv) {
            std::ostringstream msg;
            msg << "quad::integrate: subdivision limit " << tol.max_subdiv
                << " reached (error estimate " << error << ")";
            throw ConvergenceError(msg.str(), value, error);
        }
        const detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        const auto left = detail::gk15(f, worst.lo, mid);
        const auto right = detail::gk15(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }

    // Re-sum so the reported value does not carry the incremental drift.
    double sum = 0.0, err = 0.0;
    for (; !heap.empty(); heap.pop()) {
        sum += heap.top().value;
        err += heap.top().error;
    }
    for (const auto& s : frozen) {
        sum += s.value;
        err += s.error;
    }
    return {sum, err, segments};
}

/// ∫[lo,hi] (t-lo)^p_lo (hi-t)^p_hi f(t) dt with p_lo, p_hi > -1.
template <ScalarFunction F>
QuadResult integrate_singular(const F& f, double lo, double hi, double p_lo, double p_hi,
                              const Tolerance& tol = {}) {
    tol.validate();
    if (!(p_lo > -1.0) || !(p_hi > -1.0))
        throw DomainError("quad::integrate_singular: endpoint exponents must exceed -1");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("quad::integrate_singular: requires finite lo < hi");

    Tolerance half_tol = tol;
    half_tol.abs_tol = 0.5 * tol.abs_tol;
    const double mid = lo + 0.5 * (hi - lo);

    auto weight = [](double base, double p) { return p == 0.0 ? 1.0 : std::pow(base, p); };

    QuadResult left;
    if (p_lo < 0.0) {
        const double k = p_lo + 1.0;
        const double inv = 1.0 / k;
        left = integrate(
            [&](double u) {
                const double t = lo + std::pow(u, inv);
                return weight(hi - t, p_hi) * static_cast<double>(f(t)) * inv;
            },
            0.0, std::pow(mid - lo, k), half_tol);
    } else {
        left = integrate(
            [&](double t) { return weight(t - lo, p_lo) * weight(hi - t, p_hi) * f(t); }, lo, mid,
            half_tol);
    }

    QuadResult right;
    if (p_hi < 0.0) {
        const double k = p_hi + 1.0;
        const double inv = 1.0 / k;
        right = integrate(
            [&](double v) {
                const double t = hi - std::pow(v, inv);
                return weight(t - lo, p_lo) * static_cast<double>(f(t)) * inv;
            },
            0.0, std::pow(hi - mid, k), half_tol);
    } else {
        right = integrate(
            [&](double t) { return weight(t - lo, p_lo) * weight(hi - t, p_hi) * f(t); }, mid, hi,
            half_tol);
    }

    left += right;
    return left;
}

}  // namespace fracbound::quad

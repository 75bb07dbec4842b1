#pragma once

// (α,m)-convexity on [0, B]:
//
//   g(t x + m (1-t) y) <= t^α g(x) + m (1 - t^α) g(y),   x, y in [0, B], t in [0, 1],
//
// checked by exhaustive grid sampling, plus the test-function corpus whose
// |f''|^q admissions feed the bound sweeps.

#include "error.hpp"

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace fracbound::amconvex {

using Scalar = std::function<double(double)>;

/// A function with hand-supplied first and second derivatives.
struct FnTriple {
    Scalar f;
    Scalar df;
    Scalar ddf;
    std::string name;
    double domain_hi = 1.0;  ///< derivatives are valid on [0, domain_hi]
};

struct GridCounts {
    std::size_t nx = 41;
    std::size_t ny = 41;
    std::size_t nt = 33;
};

inline constexpr double kViolationTol = 1e-12;

struct ConvexityReport {
    double alpha = 1.0;
    double m = 1.0;
    double domain_hi = 0.0;
    double max_violation = 0.0;
    double worst_x = 0.0, worst_y = 0.0, worst_t = 0.0;
    std::size_t samples = 0;
    bool holds = false;

    std::string describe() const {
        std::ostringstream s;
        s.precision(6);
        s << "(alpha=" << alpha << ", m=" << m << ") on [0," << domain_hi
          << "]: max_violation=" << max_violation << " at (x=" << worst_x << ", y=" << worst_y
          << ", t=" << worst_t << ") over " << samples << " samples";
        return s.str();
    }
};

namespace detail {

inline double eval(const Scalar& g, double x) {
    const double v = g(x);
    if (!std::isfinite(v)) {
        std::ostringstream s;
        s.precision(17);
        s << "amconvex: non-finite function value at x = " << x;
        throw EvaluationError(s.str(), x);
    }
    return v;
}

inline double node(double hi, std::size_t i, std::size_t n) {
    return n <= 1 ? 0.0 : hi * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace detail

/// Grid search for the largest violation of the (α,m)-convexity inequality on [0, domain_hi].
inline ConvexityReport check_am_convex(const Scalar& g, double alpha, double m, double domain_hi,
                                       GridCounts grid = {}) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("check_am_convex: alpha must lie in [0,1]");
    if (!(m > 0.0 && m <= 1.0)) throw DomainError("check_am_convex: m must lie in (0,1]");
    if (!(domain_hi > 0.0) || !std::isfinite(domain_hi))
        throw DomainError("check_am_convex: domain upper bound must be positive");
    if (grid.nx < 2 || grid.ny < 2 || grid.nt < 2)
        throw DomainError("check_am_convex: each grid needs at least two points");

    std::vector<double> gx(grid.nx), gy(grid.ny);
    for (std::size_t i = 0; i < grid.nx; ++i) gx[i] = detail::eval(g, detail::node(domain_hi, i, grid.nx));
    for (std::size_t j = 0; j < grid.ny; ++j) gy[j] = detail::eval(g, detail::node(domain_hi, j, grid.ny));

    ConvexityReport rep{alpha, m, domain_hi};
    rep.max_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.nt; ++k) {
        const double t = detail::node(1.0, k, grid.nt);
        const double ta = std::pow(t, alpha);  // 0^0 == 1
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double x = detail::node(domain_hi, i, grid.nx);
            for (std::size_t j = 0; j < grid.ny; ++j) {
                const double y = detail::node(domain_hi, j, grid.ny);
                const double lhs = detail::eval(g, t * x + m * (1.0 - t) * y);
                const double v = lhs - ta * gx[i] - m * (1.0 - ta) * gy[j];
                if (v > rep.max_violation) {
                    rep.max_violation = v;
                    rep.worst_x = x;
                    rep.worst_y = y;
                    rep.worst_t = t;
                }
                ++rep.samples;
            }
        }
    }
    rep.holds = rep.max_violation <= kViolationTol;
    return rep;
}

/// Largest g((x+y)/2) - (g(x)+g(y))/2 over the x/y grid; <= 0 for convex g.
inline double midpoint_violation(const Scalar& g, double domain_hi, GridCounts grid = {}) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.nx; ++i) {
        const double x = detail::node(domain_hi, i, grid.nx);
        for (std::size_t j = 0; j < grid.ny; ++j) {
            const double y = detail::node(domain_hi, j, grid.ny);
            const double v =
                detail::eval(g, 0.5 * (x + y)) - 0.5 * (detail::eval(g, x) + detail::eval(g, y));
            worst = std::max(worst, v);
        }
    }
    return worst;
}

/// |f''|^q as a scalar function.
inline Scalar abs_pow(const Scalar& ddf, double q) {
    return [ddf, q](double x) { return q == 1.0 ? std::abs(ddf(x)) : std::pow(std::abs(ddf(x)), q); };
}

struct Claim {
    double alpha;
    double m;
    double q;
};

struct CorpusEntry {
    FnTriple fn;
    std::vector<Claim> claims;  ///< (α, m, q) for which |f''|^q is claimed (α,m)-convex
};

namespace detail {

inline std::vector<Claim> convex_claims(std::vector<double> qs) {
    std::vector<Claim> out;
    for (double m : {1.0, 0.6})
        for (double q : qs) out.push_back({1.0, m, q});
    return out;
}

inline CorpusEntry power_member(double s, std::vector<double> qs) {
    // f = x^(s+2) / ((s+1)(s+2)), f'' = x^s
    std::ostringstream name;
    name << "pow-" << s + 2.0;
    FnTriple fn{[s](double x) { return std::pow(x, s + 2.0) / ((s + 1.0) * (s + 2.0)); },
                [s](double x) { return std::pow(x, s + 1.0) / (s + 1.0); },
                [s](double x) { return std::pow(x, s); }, name.str(), 2.0};
    return {fn, convex_claims(std::move(qs))};
}

inline std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> c;
    c.push_back({{[](double x) { return x * x * x / 6.0; }, [](double x) { return x * x / 2.0; },
                  [](double x) { return x; }, "cubic/6", 2.0},
                 convex_claims({1.0, 2.0, 4.0})});
    c.push_back({{[](double x) { return x * x * x * x / 12.0; },
                  [](double x) { return x * x * x / 3.0; }, [](double x) { return x * x; },
                  "quartic/12", 2.0},
                 [] {
                     auto v = convex_claims({1.0, 2.0, 4.0});
                     // x^2 and x^4 vanish at 0, so m < 1 leaves room for sub-unit alpha.
                     v.push_back({0.5, 0.6, 1.0});
                     v.push_back({0.5, 0.6, 2.0});
                     return v;
                 }()});
    c.push_back({{[](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
                  [](double x) { return std::exp(x); }, "exp", 2.0},
                 // e^(4x) is convex, but near x = 2 rounding alone exceeds the absolute tolerance.
                 {{1.0, 1.0, 1.0}, {1.0, 1.0, 2.0}}});
    c.push_back(power_member(0.25, {4.0}));
    c.push_back(power_member(0.5, {2.0, 4.0}));
    c.push_back(power_member(0.75, {2.0, 4.0}));
    // |f''| = sin is concave on [0, 2]: no admissions, identity checks only.
    c.push_back({{[](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
                  [](double x) { return -std::sin(x); }, "sin", 2.0},
                 {}});
    return c;
}

}  // namespace detail

/// The immutable test-function corpus.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = detail::build_corpus();
    return entries;
}

inline const CorpusEntry& find(std::string_view name) {
    for (const auto& e : corpus())
        if (e.fn.name == name) return e;
    throw DomainError("amconvex: unknown corpus function '" + std::string(name) + "'");
}

/// A convexity report for |f''|^q, tagged with the function and exponent it certifies.
struct Admission {
    std::string fn_name;
    double q = 1.0;
    ConvexityReport report;

    bool covers(const FnTriple& fn, double alpha, double m, double q_needed, double hi) const {
        return fn_name == fn.name && q == q_needed && report.alpha == alpha && report.m == m &&
               report.domain_hi >= hi;
    }
};

inline Admission admit(const FnTriple& fn, double alpha, double m, double q, double domain_hi,
                       GridCounts grid = {}) {
    return {fn.name, q, check_am_convex(abs_pow(fn.ddf, q), alpha, m, domain_hi, grid)};
}

}  // namespace fracbound::amconvex

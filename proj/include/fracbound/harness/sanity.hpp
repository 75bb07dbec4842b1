#pragma once

// Classical checks: the Hermite-Hadamard chain for convex functions and the
// fourth-derivative Simpson bound, plus the Remark-vs-baseline comparison table.

#include "../amconvex.hpp"
#include "../bounds.hpp"
#include "../quad.hpp"
#include "sweep.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

namespace fracbound::harness {

struct SanityLine {
    std::string name;
    std::string detail;
    bool ok = false;
};

struct SanityReport {
    std::vector<SanityLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};

struct HermiteHadamard {
    double midpoint, mean, trapezoid;

    bool holds(double slack = 1e-12) const {
        return midpoint <= mean + slack && mean <= trapezoid + slack;
    }
};

inline HermiteHadamard hermite_hadamard(const amconvex::Scalar& f, double a, double b) {
    const double mean = quad::integrate(f, a, b).value / (b - a);
    return {f(0.5 * (a + b)), mean, 0.5 * (f(a) + f(b))};
}

struct SimpsonCheck {
    double residual;  ///< |(1/3)[(f(a)+f(b))/2 + 2 f((a+b)/2)] - mean|
    double bound;     ///< sup|f''''| (b-a)^4 / 2880

    bool holds() const { return residual <= bound; }
};

inline SimpsonCheck simpson(const amconvex::Scalar& f, double a, double b, double sup_f4) {
    const double mean = quad::integrate(f, a, b).value / (b - a);
    const double rule = ((f(a) + f(b)) / 2.0 + 2.0 * f(0.5 * (a + b))) / 3.0;
    return {std::abs(rule - mean), sup_f4 * std::pow(b - a, 4) / 2880.0};
}

inline SanityReport sanity_classical() {
    SanityReport rep;
    auto hh_line = [&rep](const std::string& name, const amconvex::Scalar& f, double a, double b, bool equality) {
        const auto hh = hermite_hadamard(f, a, b);
        SanityLine l{"hermite-hadamard " + name,
                     format_real(hh.midpoint) + " <= " + format_real(hh.mean) + " <= " + format_real(hh.trapezoid),
                     hh.holds()};
        if (equality)
            l.ok = l.ok && std::abs(hh.midpoint - hh.mean) <= 1e-14 && std::abs(hh.mean - hh.trapezoid) <= 1e-14;
        rep.lines.push_back(std::move(l));
    };
    for (const auto& e : amconvex::corpus()) {
        const bool convex = amconvex::midpoint_violation(e.fn.f, 1.0) <= amconvex::kViolationTol;
        if (convex) hh_line(e.fn.name, e.fn.f, 0.0, 1.0, false);
    }
    hh_line("x^2", [](double x) { return x * x; }, 0.0, 1.0, false);
    hh_line("affine", [](double x) { return 3.0 * x - 1.0; }, 0.0, 1.0, true);

    const auto s = simpson([](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0));
    rep.lines.push_back({"simpson exp on [0,1]",
                         format_real(s.residual) + " <= " + format_real(s.bound), s.holds()});
    return rep;
}

inline void print(std::ostream& out, const SanityReport& rep) {
    for (const auto& l : rep.lines) out << (l.ok ? "ok   " : "FAIL ") << l.name << ": " << l.detail << '\n';
}

struct ComparisonRow {
    std::string fn;
    double lambda = 0.0;
    double q = 1.0;
    bounds::BoundReport remark;
    bounds::BoundReport sarikaya;

    bool both_hold() const { return remark.holds && sarikaya.holds; }
    bool remark_tighter() const { return remark.rhs <= sarikaya.rhs; }
};

/// κ = m = α = 1 on [0,1]: the specialized bound against the classical baseline.
inline std::vector<ComparisonRow> compare_remark_sarikaya(const std::vector<std::string>& functions = {"exp", "quartic/12"},
                                                          const std::vector<double>& qs = {1.0, 2.0, 4.0}) {
    std::vector<ComparisonRow> rows;
    for (const auto& name : functions) {
        const auto& fn = amconvex::find(name).fn;
        for (double q : qs) {
            const auto adm = amconvex::admit(fn, 1.0, 1.0, q, 1.0);
            for (int i = 0; i <= 10; ++i) {
                const double lam = i / 10.0;
                rows.push_back({name, lam, q, bounds::remark_bound(lam, q, 0.0, 1.0, fn, &adm),
                                bounds::bound_sarikaya(lam, q, 0.0, 1.0, fn, bounds::SarikayaVariant::corrected, &adm)});
            }
        }
    }
    return rows;
}

inline void write_comparison(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "fn,lambda,q,lhs,remark_rhs,sarikaya_rhs,remark_holds,sarikaya_holds,remark_tighter\n";
    for (const auto& r : rows)
        out << r.fn << ',' << format_real(r.lambda) << ',' << format_real(r.q) << ',' << format_real(r.remark.lhs)
            << ',' << format_real(r.remark.rhs) << ',' << format_real(r.sarikaya.rhs) << ','
            << (r.remark.holds ? "true" : "false") << ',' << (r.sarikaya.holds ? "true" : "false") << ','
            << (r.remark_tighter() ? "true" : "false") << '\n';
}

}  // namespace fracbound::harness

#pragma once

// Parameter sweeps over the corpus with deterministic CSV output.
//
// Columns: check,fn,a,b,m,x,lambda,kappa,alpha,q,lhs,rhs,holds,tightness,residual
// Fields that do not apply to a check are left empty. For corollary rows the
// residual column carries |printed - general|; for phi-oracle rows lhs is the
// closed form, rhs the oracle and residual their difference.

#include "../amconvex.hpp"
#include "../bounds.hpp"
#include "../error.hpp"
#include "../identity.hpp"
#include "config.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace fracbound::harness {

inline constexpr double kPhiOracleTol = 1e-10;

/// The CSV destination could not be opened or written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Row {
    std::string check;
    std::string fn;
    std::optional<double> a, b, m, x, lambda, kappa, alpha, q;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    std::optional<double> tightness;
    std::optional<double> residual;
    std::string error;  ///< set when evaluation threw
};

struct SweepSummary {
    std::size_t rows_total = 0;
    std::size_t rows_held = 0;
    double worst_tightness = 0.0;
    double max_identity_residual = 0.0;
    std::size_t skipped = 0;
    std::size_t errors = 0;

    bool ok() const { return rows_held == rows_total; }
    int exit_status() const { return ok() ? 0 : 1; }
};

inline constexpr const char* kCsvHeader =
    "check,fn,a,b,m,x,lambda,kappa,alpha,q,lhs,rhs,holds,tightness,residual";

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_row(std::ostream& out, const Row& r) {
    auto opt = [&out](const std::optional<double>& v) {
        out << ',';
        if (v) out << format_real(*v);
    };
    out << r.check << ',' << r.fn;
    opt(r.a);
    opt(r.b);
    opt(r.m);
    opt(r.x);
    opt(r.lambda);
    opt(r.kappa);
    opt(r.alpha);
    opt(r.q);
    out << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << (r.holds ? "true" : "false");
    opt(r.tightness);
    opt(r.residual);
    out << '\n';
}

namespace detail {

using Task = std::function<Row()>;

// Admissions keyed by (fn, alpha, m, q), each computed once on the member's domain.
class AdmissionCache {
public:
    const amconvex::Admission& get(const amconvex::FnTriple& fn, double alpha, double m, double q) {
        const auto key = std::make_tuple(fn.name, alpha, m, q);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, amconvex::admit(fn, alpha, m, q, fn.domain_hi)).first;
        return it->second;
    }

private:
    std::map<std::tuple<std::string, double, double, double>, amconvex::Admission> cache_;
};

inline Row base_row(std::string check, const amconvex::FnTriple* fn, const identity::Params& p) {
    Row r;
    r.check = std::move(check);
    if (fn) r.fn = fn->name;
    r.a = p.a;
    r.b = p.b;
    r.m = p.m;
    r.x = p.x;
    r.lambda = p.lambda;
    r.kappa = p.kappa;
    return r;
}

inline void fill(Row& r, const bounds::BoundReport& rep) {
    r.lhs = rep.lhs;
    r.rhs = rep.rhs;
    r.holds = rep.holds;
    r.tightness = rep.tightness;
}

inline std::vector<double> lambdas_for(const SweepConfig& cfg, double kappa) {
    std::vector<double> out;
    for (const auto& l : cfg.lambda) out.push_back(l.resolve(kappa));
    return out;
}

inline std::vector<double> unique_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

class Planner {
public:
    explicit Planner(const SweepConfig& cfg) : cfg_(cfg) {
        for (const auto& name : cfg.functions) fns_.push_back(&amconvex::find(name).fn);
    }

    std::vector<Task> plan() {
        for (Check c : cfg_.checks) {
            switch (c) {
                case Check::identity: plan_identity(); break;
                case Check::thm211: plan_theorem(false); break;
                case Check::thm22: plan_theorem(true); break;
                case Check::sarikaya: plan_classical(false); break;
                case Check::remark: plan_classical(true); break;
                case Check::corollaries: plan_corollaries(); break;
                case Check::phi_oracle: plan_phi(); break;
            }
        }
        return std::move(tasks_);
    }

    std::size_t skipped() const { return skipped_; }

private:
    // Visits (interval, m, kappa, lambda, x_frac) in grid order.
    template <class Visit>
    void for_each_point(Visit&& visit) {
        for (auto [a, b] : cfg_.intervals)
            for (double m : cfg_.m)
                for (double k : cfg_.kappa)
                    for (double lam : lambdas_for(cfg_, k))
                        for (double xf : cfg_.x_frac) {
                            identity::Params p;
                            p.a = a;
                            p.b = b;
                            p.m = m;
                            p.kappa = k;
                            p.lambda = lam;
                            p.x = a + (m * b - a) * xf;
                            visit(p);
                        }
    }

    bool in_domain(const amconvex::FnTriple& fn, const identity::Params& p) const {
        return std::max(p.b, p.a / p.m) <= fn.domain_hi;
    }

    void plan_identity() {
        const auto tol = cfg_.tolerance;
        for_each_point([&](identity::Params p) {
            for (const auto* fn : fns_) {
                if (!p.valid() || !in_domain(*fn, p)) {
                    skipped_++;
                    continue;
                }
                tasks_.push_back([p, fn, tol] {
                    Row r = base_row("identity", fn, p);
                    const auto chk = identity::identity_residual(p, *fn, tol);
                    r.lhs = chk.lhs;
                    r.rhs = chk.rhs;
                    r.residual = chk.residual;
                    r.holds = chk.passes();
                    return r;
                });
            }
        });
    }

    void plan_theorem(bool holder) {
        for_each_point([&](identity::Params p) {
            for (const auto* fn : fns_)
                for (double alpha : cfg_.alpha)
                    for (double q : cfg_.q) {
                        p.alpha = alpha;
                        p.q = q;
                        if (!p.valid() || !in_domain(*fn, p) || (holder && !(q > 1.0))) {
                            skipped_++;
                            continue;
                        }
                        const auto& adm = admissions_.get(*fn, alpha, p.m, q);
                        if (!adm.report.holds) {
                            skipped_++;
                            continue;
                        }
                        const auto* admp = &adm;
                        tasks_.push_back([p, fn, admp, holder] {
                            Row r = base_row(holder ? "thm22" : "thm211", fn, p);
                            r.alpha = p.alpha;
                            r.q = p.q;
                            fill(r, holder ? bounds::bound_thm22(p, *fn, admp) : bounds::bound_thm211(p, *fn, admp));
                            return r;
                        });
                    }
        });
    }

    void plan_classical(bool remark) {
        for (auto [a, b] : cfg_.intervals)
            for (double lam : unique_sorted(lambdas_for(cfg_, 1.0)))
                for (double q : cfg_.q)
                    for (const auto* fn : fns_) {
                        identity::Params p;
                        p.a = a;
                        p.b = b;
                        p.m = 1.0;
                        p.x = 0.5 * (a + b);
                        p.lambda = lam;
                        p.kappa = 1.0;
                        p.alpha = 1.0;
                        p.q = q;
                        if (!p.valid() || !in_domain(*fn, p)) {
                            skipped_++;
                            continue;
                        }
                        const auto& adm = admissions_.get(*fn, 1.0, 1.0, q);
                        if (!adm.report.holds) {
                            skipped_++;
                            continue;
                        }
                        const auto* admp = &adm;
                        tasks_.push_back([p, fn, admp, remark] {
                            Row r = base_row(remark ? "remark" : "sarikaya", fn, p);
                            r.alpha = 1.0;
                            r.q = p.q;
                            fill(r, remark ? bounds::remark_bound(p.lambda, p.q, p.a, p.b, *fn, admp)
                                           : bounds::bound_sarikaya(p.lambda, p.q, p.a, p.b, *fn,
                                                                    bounds::SarikayaVariant::corrected, admp));
                            return r;
                        });
                    }
    }

    void plan_corollaries() {
        for (const auto& info : bounds::corollaries()) {
            const std::vector<double> kappas = info.kappa ? std::vector<double>{*info.kappa} : cfg_.kappa;
            for (auto [a, b] : cfg_.intervals)
                for (double m : cfg_.m)
                    for (double k : kappas) {
                        const auto lams = info.lambda ? std::vector<double>{*info.lambda}
                                                      : unique_sorted(lambdas_for(cfg_, k));
                        for (double lam : lams)
                            for (const auto* fn : fns_)
                                for (double alpha : cfg_.alpha)
                                    for (double q : cfg_.q) {
                                        identity::Params p;
                                        p.a = a;
                                        p.b = b;
                                        p.m = m;
                                        p.x = p.midpoint();
                                        p.kappa = k;
                                        p.lambda = lam;
                                        p.alpha = alpha;
                                        p.q = q;
                                        const bool q_ok = info.holder ? q > 1.0 : (!info.q_one || q == 1.0);
                                        if (!q_ok || !p.valid() || !in_domain(*fn, p)) {
                                            skipped_++;
                                            continue;
                                        }
                                        const auto& adm = admissions_.get(*fn, alpha, m, q);
                                        if (!adm.report.holds) {
                                            skipped_++;
                                            continue;
                                        }
                                        const auto* admp = &adm;
                                        const std::string id(info.name);
                                        tasks_.push_back([p, fn, admp, id] {
                                            Row r = base_row("corollary:" + id, fn, p);
                                            r.alpha = p.alpha;
                                            r.q = p.q;
                                            const auto c = bounds::corollary_check(id, p, *fn, admp);
                                            fill(r, c.report);
                                            r.residual = c.discrepancy;
                                            return r;
                                        });
                                    }
                    }
        }
    }

    void plan_phi() {
        for (double k : cfg_.kappa)
            for (double lam : unique_sorted(lambdas_for(cfg_, k))) {
                if (!(lam >= 0.0 && lam <= 1.0) || !(k > 0.0)) {
                    skipped_++;
                    continue;
                }
                auto add = [&](int which, std::optional<double> alpha, std::optional<double> q) {
                    tasks_.push_back([k, lam, which, alpha, q] {
                        Row r;
                        r.check = "phi-oracle:phi" + std::to_string(which);
                        r.kappa = k;
                        r.lambda = lam;
                        r.alpha = alpha;
                        r.q = q;
                        double closed = 0.0, oracle = 0.0;
                        if (which == 4) {
                            const double p = *q / (*q - 1.0);
                            closed = bounds::phi4(k, lam, p);
                            oracle = bounds::phi_oracle(4, k, lam, p);
                        } else {
                            const double al = alpha.value_or(1.0);
                            closed = which == 1 ? bounds::phi1(k, lam)
                                     : which == 2 ? bounds::phi2(k, lam, al)
                                                  : bounds::phi3(k, lam, al);
                            oracle = bounds::phi_oracle(which, k, lam, al);
                        }
                        r.lhs = closed;
                        r.rhs = oracle;
                        r.residual = std::abs(closed - oracle);
                        r.holds = *r.residual <= kPhiOracleTol;
                        return r;
                    });
                };
                add(1, std::nullopt, std::nullopt);
                for (double al : cfg_.alpha) {
                    if (!(al >= 0.0 && al <= 1.0)) {
                        skipped_++;
                        continue;
                    }
                    add(2, al, std::nullopt);
                    add(3, al, std::nullopt);
                }
                for (double q : cfg_.q)
                    if (q > 1.0) add(4, std::nullopt, q);
            }
    }

    const SweepConfig& cfg_;
    std::vector<const amconvex::FnTriple*> fns_;
    AdmissionCache admissions_;
    std::vector<Task> tasks_;
    std::size_t skipped_ = 0;
};

inline std::vector<Row> evaluate(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<Row> rows(tasks.size());
    auto run = [&](std::size_t i) {
        try {
            rows[i] = tasks[i]();
        } catch (const std::exception& e) {
            rows[i].check = "error";
            rows[i].holds = false;
            rows[i].lhs = rows[i].rhs = std::numeric_limits<double>::quiet_NaN();
            rows[i].error = e.what();
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) run(i);
        });
    for (auto& th : pool) th.join();
    return rows;
}

}  // namespace detail

/// Runs the sweep and writes CSV to `csv` (header first, rows in grid order).
inline SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& csv, std::vector<Row>* rows_out = nullptr) {
    cfg.validate();
    detail::Planner planner(cfg);
    const auto tasks = planner.plan();
    auto rows = detail::evaluate(tasks, cfg.threads);

    SweepSummary s;
    s.skipped = planner.skipped();
    csv << kCsvHeader << '\n';
    for (const auto& r : rows) {
        write_row(csv, r);
        s.rows_total++;
        if (r.holds) s.rows_held++;
        if (!r.error.empty()) s.errors++;
        if (r.check == "identity" && r.residual) s.max_identity_residual = std::max(s.max_identity_residual, *r.residual);
        if (r.tightness && std::isfinite(*r.tightness)) s.worst_tightness = std::max(s.worst_tightness, *r.tightness);
    }
    if (rows_out) *rows_out = std::move(rows);
    return s;
}

inline SweepSummary run_sweep_to_file(const SweepConfig& cfg, const std::string& path,
                                      std::vector<Row>* rows_out = nullptr) {
    cfg.validate();
    std::ofstream out(path);
    if (!out) throw OutputError("sweep: cannot write '" + path + "'");
    auto s = run_sweep(cfg, out, rows_out);
    out.flush();
    if (!out) throw OutputError("sweep: write to '" + path + "' failed");
    return s;
}

inline void print_summary(std::ostream& out, const SweepSummary& s) {
    out << "rows_total=" << s.rows_total << " rows_held=" << s.rows_held << " skipped=" << s.skipped
        << " errors=" << s.errors << " worst_tightness=" << format_real(s.worst_tightness)
        << " max_identity_residual=" << format_real(s.max_identity_residual) << '\n';
}

}  // namespace fracbound::harness

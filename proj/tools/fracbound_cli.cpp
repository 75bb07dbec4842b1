// Command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error.

#include <fracbound/fracbound.hpp>

#include <CLI11/CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace fb = fracbound;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string real(double v) { return fb::harness::format_real(v); }

struct PointArgs {
    std::string fn = "exp";
    fb::identity::Params p;
    bool have_x = false;

    void add_to(CLI::App* cmd, bool with_alpha_q) {
        cmd->add_option("--fn", fn, "corpus function")->capture_default_str();
        cmd->add_option("--a", p.a)->capture_default_str();
        cmd->add_option("--b", p.b)->capture_default_str();
        cmd->add_option("--m", p.m)->capture_default_str();
        cmd->add_option_function<double>(
            "--x", [this](double v) { p.x = v; have_x = true; }, "defaults to (a + mb)/2");
        cmd->add_option("--lambda", p.lambda)->capture_default_str();
        cmd->add_option("--kappa", p.kappa)->capture_default_str();
        if (with_alpha_q) {
            cmd->add_option("--alpha", p.alpha)->capture_default_str();
            cmd->add_option("--q", p.q)->capture_default_str();
        }
    }

    fb::identity::Params resolved() const {
        auto out = p;
        if (!have_x) out.x = out.midpoint();
        return out;
    }
};

void print_report(const fb::bounds::BoundReport& r) {
    std::cout << r.which << ": lhs=" << real(r.lhs) << " rhs=" << real(r.rhs)
              << " tightness=" << real(r.tightness) << " holds=" << (r.holds ? "true" : "false") << '\n';
}

int run_phi(int which, double kappa, double lambda, std::optional<double> alpha, std::optional<double> p,
            bool oracle) {
    if (which < 1 || which > 4) throw fb::DomainError("phi: which must be 1, 2, 3 or 4");
    if (which == 4 && !p) throw fb::DomainError("phi4 needs --p");
    if (which != 4 && p) throw fb::DomainError("--p applies to phi4 only");
    if (which == 4 && alpha) throw fb::DomainError("--alpha does not apply to phi4");
    const double param = which == 4 ? *p : alpha.value_or(1.0);
    double v = 0.0;
    if (oracle) {
        v = fb::bounds::phi_oracle(which, kappa, lambda, param);
    } else {
        switch (which) {
            case 1: v = fb::bounds::phi1(kappa, lambda); break;
            case 2: v = fb::bounds::phi2(kappa, lambda, param); break;
            case 3: v = fb::bounds::phi3(kappa, lambda, param); break;
            default: v = fb::bounds::phi4(kappa, lambda, param); break;
        }
    }
    std::cout << real(v) << '\n';
    return kOk;
}

int run_identity(const PointArgs& args) {
    const auto& fn = fb::amconvex::find(args.fn).fn;
    const auto chk = fb::identity::identity_residual(args.resolved(), fn);
    std::cout << "lhs=" << real(chk.lhs) << " rhs=" << real(chk.rhs) << " residual=" << real(chk.residual)
              << " budget=" << real(chk.quad_error_budget) << " passes=" << (chk.passes() ? "true" : "false")
              << '\n';
    return chk.passes() ? kOk : kFailed;
}

int run_bound(const std::string& thm, const PointArgs& args, bool literal) {
    const auto& fn = fb::amconvex::find(args.fn).fn;
    const auto p = args.resolved();
    fb::bounds::BoundReport rep;
    if (thm == "211") {
        rep = fb::bounds::bound_thm211(p, fn);
    } else if (thm == "22") {
        rep = fb::bounds::bound_thm22(p, fn);
    } else if (thm == "sarikaya") {
        rep = fb::bounds::bound_sarikaya(p.lambda, p.q, p.a, p.b, fn,
                                         literal ? fb::bounds::SarikayaVariant::literal
                                                 : fb::bounds::SarikayaVariant::corrected);
    } else if (thm == "remark") {
        rep = fb::bounds::remark_bound(p.lambda, p.q, p.a, p.b, fn);
    } else if (thm.rfind("corollary:", 0) == 0) {
        const auto c = fb::bounds::corollary_check(thm.substr(10), p, fn);
        print_report(c.report);
        std::cout << "printed_rhs=" << real(c.printed_rhs) << " general_rhs=" << real(c.general_rhs)
                  << " discrepancy=" << real(c.discrepancy) << '\n'
                  << "printed_prefactor=" << real(c.printed_prefactor)
                  << " general_prefactor=" << real(c.general_prefactor) << '\n';
        if (!c.note.empty()) std::cout << "note: " << c.note << '\n';
        return c.report.holds ? kOk : kFailed;
    } else {
        throw fb::DomainError("bound-check: unknown --thm '" + thm + "'");
    }
    print_report(rep);
    return rep.holds ? kOk : kFailed;
}

int run_sweep(const std::string& config, const std::string& out_path) {
    auto cfg = fb::harness::load_config(config);
    if (!out_path.empty()) cfg.output_path = out_path;
    fb::harness::SweepSummary s;
    if (cfg.output_path.empty() || cfg.output_path == "-")
        s = fb::harness::run_sweep(cfg, std::cout);
    else
        s = fb::harness::run_sweep_to_file(cfg, cfg.output_path);
    fb::harness::print_summary(cfg.output_path.empty() || cfg.output_path == "-" ? std::cerr : std::cout, s);
    return s.exit_status();
}

int run_sanity() {
    const auto rep = fb::harness::sanity_classical();
    fb::harness::print(std::cout, rep);
    return rep.ok() ? kOk : kFailed;
}

int run_compare(const std::string& out_path) {
    const auto rows = fb::harness::compare_remark_sarikaya();
    if (out_path.empty()) {
        fb::harness::write_comparison(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw fb::harness::OutputError("compare: cannot write '" + out_path + "'");
        fb::harness::write_comparison(out, rows);
    }
    std::size_t tighter = 0;
    bool valid = true;
    for (const auto& r : rows) {
        tighter += r.remark_tighter();
        valid = valid && r.both_hold();
    }
    std::cerr << "rows=" << rows.size() << " remark_tighter=" << tighter << " all_valid=" << (valid ? "true" : "false")
              << '\n';
    return valid ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional Hermite-Hadamard/Simpson bound verification"};
    app.require_subcommand(1);

    auto* phi = app.add_subcommand("phi", "kernel-moment constant phi1..phi4");
    int which = 1;
    double kappa = 1.0, lambda = 0.0;
    std::optional<double> alpha, hp;
    bool oracle = false;
    phi->add_option("which", which, "1, 2, 3 or 4")->required();
    phi->add_option("--kappa", kappa)->required();
    phi->add_option("--lambda", lambda)->required();
    phi->add_option("--alpha", alpha, "phi2/phi3 weight exponent");
    phi->add_option("--p", hp, "phi4 Hölder exponent");
    phi->add_flag("--oracle", oracle, "evaluate the defining integral instead of the closed form");

    auto* ident = app.add_subcommand("identity-check", "both sides of the fractional identity");
    PointArgs ident_args;
    ident_args.add_to(ident, false);

    auto* bound = app.add_subcommand("bound-check", "evaluate one inequality");
    PointArgs bound_args;
    std::string thm;
    bool literal = false;
    bound->add_option("--thm", thm, "211 | 22 | sarikaya | remark | corollary:<id>")->required();
    bound->add_flag("--literal", literal, "baseline exactly as printed (sarikaya only)");
    bound_args.add_to(bound, true);

    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    std::string config, out;
    sweep->add_option("--config", config)->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "CSV path ('-' for stdout); overrides the config");

    auto* sanity = app.add_subcommand("sanity", "classical Hermite-Hadamard and Simpson checks");

    auto* compare = app.add_subcommand("compare", "kappa = m = alpha = 1 bound against the classical baseline");
    std::string compare_out;
    compare->add_option("--out", compare_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*phi) return run_phi(which, kappa, lambda, alpha, hp, oracle);
        if (*ident) return run_identity(ident_args);
        if (*bound) return run_bound(thm, bound_args, literal);
        if (*sweep) return run_sweep(config, out);
        if (*sanity) return run_sanity();
        if (*compare) return run_compare(compare_out);
    } catch (const fb::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const fb::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kUsage;
    } catch (const fb::harness::OutputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}

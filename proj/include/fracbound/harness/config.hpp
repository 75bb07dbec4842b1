#pragma once

// Sweep configuration: plain-text `key = value` lines. Repeated keys append,
// and a single line may also carry a comma-separated list. `#` starts a
// comment.
//
//   interval = 0 1          # a b pair; repeatable
//   a = 0                   # alternatively, a and b lists (cartesian product)
//   b = 1
//   m = 0.6, 1
//   x_frac = 0, 0.25, 0.5   # x = a + (mb - a) * x_frac
//   lambda = 0, kink, 1     # `kink` is 1/(kappa+1)
//   kappa = 0.5, 1, 2
//   alpha = 1
//   q = 1, 2
//   fn = all                # corpus names, or `all`
//   check = identity, thm211
//   abs_tol = 1e-12
//   rel_tol = 1e-12
//   max_subdiv = 2000
//   threads = 4
//   out = sweep.csv

#include "../amconvex.hpp"
#include "../error.hpp"
#include "../quad.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fracbound::harness {

class ConfigError : public DomainError {
public:
    ConfigError(const std::string& what, std::size_t line)
        : DomainError(line ? "config line " + std::to_string(line) + ": " + what : "config: " + what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class Check { identity, thm211, thm22, sarikaya, remark, corollaries, phi_oracle };

inline constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::identity, "identity"},   {Check::thm211, "thm211"},     {Check::thm22, "thm22"},
    {Check::sarikaya, "sarikaya"},   {Check::remark, "remark"},     {Check::corollaries, "corollaries"},
    {Check::phi_oracle, "phi-oracle"},
};

inline std::string_view to_string(Check c) {
    for (auto [k, n] : kCheckNames)
        if (k == c) return n;
    return "?";
}

inline std::optional<Check> parse_check(std::string_view s) {
    for (auto [k, n] : kCheckNames)
        if (n == s) return k;
    return std::nullopt;
}

/// A λ entry: a number, or the kink value 1/(κ+1) resolved per κ.
struct LambdaValue {
    bool kink = false;
    double value = 0.0;

    double resolve(double kappa) const { return kink ? 1.0 / (kappa + 1.0) : value; }
};

struct SweepConfig {
    std::vector<std::pair<double, double>> intervals{{0.0, 1.0}, {0.25, 1.5}};
    std::vector<double> m{0.6, 1.0};
    std::vector<double> x_frac{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<LambdaValue> lambda{{false, 0.0}, {true, 0.0}, {false, 1.0 / 3.0}, {false, 0.5}, {false, 1.0}};
    std::vector<double> kappa{0.5, 1.0, 2.0};
    std::vector<double> alpha{1.0};
    std::vector<double> q{1.0};
    std::vector<std::string> functions;  ///< empty after parsing only if the config says so
    std::vector<Check> checks{Check::identity};
    std::string output_path;
    quad::Tolerance tolerance{};
    unsigned threads = 0;  ///< 0 = hardware concurrency

    SweepConfig() {
        for (const auto& e : amconvex::corpus()) functions.push_back(e.fn.name);
    }

    /// Verifies referenced names and value ranges that are not per-point.
    void validate() const {
        for (const auto& name : functions) amconvex::find(name);
        tolerance.validate();
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        const auto item = trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (!item.empty()) out.push_back(item);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline double parse_number(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw ConfigError("not a number: '" + std::string(s) + "'", line);
    return v;
}

}  // namespace detail

inline SweepConfig parse_config(std::istream& in) {
    SweepConfig cfg;
    // Keys seen so far: the first occurrence replaces the default list.
    std::vector<std::string> seen;
    auto first_time = [&seen](const std::string& key) {
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) return false;
        seen.push_back(key);
        return true;
    };
    std::vector<double> a_list, b_list;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == line.npos) throw ConfigError("expected 'key = value'", lineno);
        const std::string key(detail::trim(line.substr(0, eq)));
        const auto values = detail::split(line.substr(eq + 1), ',');
        if (key.empty()) throw ConfigError("empty key", lineno);
        const bool fresh = first_time(key);

        auto numbers = [&](std::vector<double>& target) {
            if (fresh) target.clear();
            for (auto v : values) target.push_back(detail::parse_number(v, lineno));
        };
        auto single = [&]() -> std::string_view {
            if (values.size() != 1) throw ConfigError("'" + key + "' takes exactly one value", lineno);
            if (!fresh) throw ConfigError("'" + key + "' given twice", lineno);
            return values.front();
        };

        if (key == "interval") {
            if (fresh) cfg.intervals.clear();
            for (auto v : values) {
                std::istringstream pair{std::string(v)};
                std::string lo, hi, extra;
                if (!(pair >> lo >> hi) || (pair >> extra))
                    throw ConfigError("interval needs 'a b'", lineno);
                cfg.intervals.emplace_back(detail::parse_number(lo, lineno), detail::parse_number(hi, lineno));
            }
        } else if (key == "a") {
            numbers(a_list);
        } else if (key == "b") {
            numbers(b_list);
        } else if (key == "m") {
            numbers(cfg.m);
        } else if (key == "x_frac") {
            numbers(cfg.x_frac);
        } else if (key == "kappa") {
            numbers(cfg.kappa);
        } else if (key == "alpha") {
            numbers(cfg.alpha);
        } else if (key == "q") {
            numbers(cfg.q);
        } else if (key == "lambda") {
            if (fresh) cfg.lambda.clear();
            for (auto v : values)
                cfg.lambda.push_back(v == "kink" ? LambdaValue{true, 0.0}
                                                 : LambdaValue{false, detail::parse_number(v, lineno)});
        } else if (key == "fn") {
            if (fresh) cfg.functions.clear();
            for (auto v : values) {
                if (v == "all") {
                    for (const auto& e : amconvex::corpus()) cfg.functions.push_back(e.fn.name);
                } else if (v == "none") {
                    continue;
                } else {
                    cfg.functions.emplace_back(v);
                }
            }
        } else if (key == "check") {
            if (fresh) cfg.checks.clear();
            for (auto v : values) {
                const auto c = parse_check(v);
                if (!c) throw ConfigError("unknown check '" + std::string(v) + "'", lineno);
                cfg.checks.push_back(*c);
            }
        } else if (key == "abs_tol") {
            cfg.tolerance.abs_tol = detail::parse_number(single(), lineno);
        } else if (key == "rel_tol") {
            cfg.tolerance.rel_tol = detail::parse_number(single(), lineno);
        } else if (key == "max_subdiv") {
            cfg.tolerance.max_subdiv = static_cast<std::size_t>(detail::parse_number(single(), lineno));
        } else if (key == "threads") {
            cfg.threads = static_cast<unsigned>(detail::parse_number(single(), lineno));
        } else if (key == "out") {
            cfg.output_path = std::string(single());
        } else {
            throw ConfigError("unknown key '" + key + "'", lineno);
        }
    }

    if (!a_list.empty() || !b_list.empty()) {
        if (a_list.empty() || b_list.empty()) throw ConfigError("'a' and 'b' must be given together", 0);
        cfg.intervals.clear();
        for (double a : a_list)
            for (double b : b_list) cfg.intervals.emplace_back(a, b);
    }
    // Duplicate names would duplicate rows.
    std::vector<std::string> unique;
    for (auto& f : cfg.functions)
        if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
    cfg.functions = std::move(unique);
    return cfg;
}

inline SweepConfig parse_config_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_config(in);
}

inline SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'", 0);
    return parse_config(in);
}

}  // namespace fracbound::harness

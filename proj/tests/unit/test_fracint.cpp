#include <fracbound/amconvex.hpp>
#include <fracbound/fracint.hpp>
#include <fracbound/quad.hpp>
#include <fracbound/specfun.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>

namespace fi = fracbound::fracint;
namespace sf = fracbound::specfun;
using Catch::Matchers::WithinAbs;

TEST_CASE("rl_left: power rule", "[fracint]") {
    auto one = [](double) { return 1.0; };
    for (double k : {0.3, 0.5, 1.0, 2.0, 3.5})
        for (double x : {0.4, 1.0, 2.5}) {
            INFO("kappa = " << k << ", x = " << x);
            CHECK_THAT(fi::rl_left(one, 0.0, k, x).value, WithinAbs(std::pow(x, k) / sf::gamma(k + 1.0), 1e-12));
        }
    CHECK_THAT(fi::rl_left([](double t) { return t * t; }, 0.0, 1.0, 1.0).value, WithinAbs(1.0 / 3.0, 1e-14));
    CHECK_THAT(fi::rl_left([](double t) { return t; }, 0.0, 0.5, 1.0).value, WithinAbs(1.0 / sf::gamma(2.5), 1e-12));
    CHECK_THAT(1.0 / sf::gamma(2.5), WithinAbs(0.7522528, 1e-7));
}

TEST_CASE("rl_right: power rule", "[fracint]") {
    auto one = [](double) { return 1.0; };
    for (double k : {0.3, 0.5, 1.0, 2.0})
        CHECK_THAT(fi::rl_right(one, 1.0, k, 0.0).value, WithinAbs(1.0 / sf::gamma(k + 1.0), 1e-12));
    CHECK_THAT(fi::rl_right([](double t) { return t * t; }, 1.0, 1.0, 0.0).value, WithinAbs(1.0 / 3.0, 1e-14));
    CHECK_THAT(fi::rl_right([](double t) { return t; }, 1.0, 0.5, 0.0).value,
               WithinAbs(2.0 / (3.0 * sf::gamma(0.5)), 1e-12));
}

TEST_CASE("rl: unit order is the classical integral over the corpus", "[fracint][property]") {
    for (const auto& e : fracbound::amconvex::corpus()) {
        const auto& f = e.fn.f;
        for (auto [a, x] : {std::pair{0.0, 1.0}, std::pair{0.25, 1.5}, std::pair{0.6, 0.9}}) {
            INFO(e.fn.name << " on [" << a << ", " << x << "]");
            const double classical = fracbound::quad::integrate(f, a, x).value;
            CHECK_THAT(fi::rl_left(f, a, 1.0, x).value, WithinAbs(classical, 1e-11));
            CHECK_THAT(fi::rl_right(f, x, 1.0, a).value, WithinAbs(classical, 1e-11));
        }
    }
}

TEST_CASE("rl: semigroup J^0.5 J^0.5 = J^1", "[fracint][property]") {
    auto f = [](double t) { return t; };
    auto inner = [&](double s) { return s > 0.0 ? fi::rl_left(f, 0.0, 0.5, s).value : 0.0; };
    const double composed = fi::rl_left(inner, 0.0, 0.5, 1.0).value;
    CHECK_THAT(composed, WithinAbs(fi::rl_left(f, 0.0, 1.0, 1.0).value, 1e-8));
    CHECK_THAT(composed, WithinAbs(0.5, 1e-8));

    // Mixed orders, checked against the closed form Γ(2) x^(1+k) / Γ(2+k).
    auto inner2 = [&](double s) { return s > 0.0 ? fi::rl_left(f, 0.0, 0.7, s).value : 0.0; };
    CHECK_THAT(fi::rl_left(inner2, 0.0, 0.6, 0.8).value, WithinAbs(std::pow(0.8, 2.3) / sf::gamma(3.3), 1e-8));
}

TEST_CASE("rl: non-negative integrand gives non-negative result", "[fracint][property]") {
    auto g = [](double t) { return std::abs(std::sin(7.0 * t)); };
    for (double k : {0.2, 0.5, 1.0, 1.7, 3.0}) {
        CHECK(fi::rl_left(g, 0.1, k, 1.3).value >= 0.0);
        CHECK(fi::rl_right(g, 1.3, k, 0.1).value >= 0.0);
    }
}

TEST_CASE("rl: order zero is the identity", "[fracint]") {
    auto f = [](double t) { return std::exp(t); };
    CHECK(fi::rl_left(f, 0.0, 0.0, 0.7).value == std::exp(0.7));
    CHECK(fi::rl_right(f, 1.0, 0.0, 0.7).value == std::exp(0.7));
}

TEST_CASE("rl: apply dispatches on side", "[fracint]") {
    auto f = [](double t) { return t; };
    const fi::RLSpec left{0.5, 0.0, fi::Side::left_from_anchor};
    const fi::RLSpec right{0.5, 1.0, fi::Side::right_from_anchor};
    CHECK(fi::apply(left, f, 1.0).value == fi::rl_left(f, 0.0, 0.5, 1.0).value);
    CHECK(fi::apply(right, f, 0.0).value == fi::rl_right(f, 1.0, 0.5, 0.0).value);
}

TEST_CASE("rl: domain errors", "[fracint]") {
    auto f = [](double t) { return t; };
    CHECK_THROWS_AS(fi::rl_left(f, 1.0, 0.5, 1.0), fracbound::DomainError);
    CHECK_THROWS_AS(fi::rl_left(f, 1.0, 0.5, 0.5), fracbound::DomainError);
    CHECK_THROWS_AS(fi::rl_right(f, 1.0, 0.5, 1.0), fracbound::DomainError);
    CHECK_THROWS_AS(fi::rl_right(f, 1.0, 0.5, 1.5), fracbound::DomainError);
    CHECK_THROWS_AS(fi::rl_left(f, 0.0, -0.5, 1.0), fracbound::DomainError);
}

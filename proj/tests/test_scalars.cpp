#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "holotor/exact.hpp"
#include "holotor/jet.hpp"

using holotor::Exact;
using holotor::Jet2;
using holotor::Rational;

namespace {

Exact random_exact(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (;;) {
        Exact x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (allow_zero || !x.is_zero()) return x;
    }
}

}  // namespace

TEST_CASE("exact arithmetic matches the surd multiplication table") {
    Exact s2 = Exact::sqrt2(), s5 = Exact::sqrt5(), s10 = Exact::sqrt10();
    CHECK(s2 * s5 == s10);
    CHECK(s2 * s10 == Exact(2) * s5);
    CHECK(s5 * s10 == Exact(5) * s2);
    CHECK((s10 / Exact(4)) * (s10 / Exact(2)) == Exact::ratio(5, 4));
    // 1/(1+sqrt5) rationalizes to (-1+sqrt5)/4.
    CHECK(Exact(1) / (Exact(1) + s5) == (Exact(-1) + s5) / Exact(4));
}

TEST_CASE("exact division by zero is signaled") {
    CHECK_THROWS_AS(Exact(1) / Exact(0), std::domain_error);
}

TEST_CASE("exact field axioms on random pairs") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 10000; ++trial) {
        Exact a = random_exact(rng), b = random_exact(rng), c = random_exact(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == Exact(0));
        Exact d = random_exact(rng, /*allow_zero=*/false);
        REQUIRE((a / d) * d == a);
    }
}

TEST_CASE("exact literal grammar parses and round-trips") {
    CHECK(holotor::parse_exact("sqrt(10)/4") == Exact::sqrt10() / Exact(4));
    CHECK(holotor::parse_exact("-3/2*sqrt(5)") == Exact::ratio(-3, 2) * Exact::sqrt5());
    CHECK(holotor::parse_exact("1+sqrt(5)") == Exact(1) + Exact::sqrt5());
    CHECK(holotor::parse_exact("1/2-3/2*sqrt(5)") ==
          Exact::ratio(1, 2) - Exact::ratio(3, 2) * Exact::sqrt5());
    CHECK(holotor::parse_exact("2*sqrt(2)*sqrt(5)") == Exact(2) * Exact::sqrt10());
    CHECK(holotor::parse_exact("0") == Exact(0));
    CHECK_THROWS_AS(holotor::parse_exact("sqrt(3)"), std::invalid_argument);
    CHECK_THROWS_AS(holotor::parse_exact(""), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Exact x = random_exact(rng);
        CHECK(holotor::parse_exact(holotor::to_string(x)) == x);
    }
}

TEST_CASE("jet lifts of named functions") {
    Jet2 s = holotor::jet_lift("sin", M_PI / 2);
    CHECK(s.v == Catch::Approx(1.0));
    CHECK(s.d1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(s.d2 == Catch::Approx(-1.0));

    Jet2 id = holotor::jet_lift("identity", 3.0);
    CHECK(id.v == 3.0);
    CHECK(id.d1 == 1.0);
    CHECK(id.d2 == 0.0);

    Jet2 ch = holotor::jet_lift("cosh", 0.0);
    CHECK(ch.v == 1.0);
    CHECK(ch.d1 == 0.0);
    CHECK(ch.d2 == 1.0);

    CHECK_THROWS_AS(holotor::jet_lift("gamma", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(holotor::asin(Jet2(1.5)), std::domain_error);
}

namespace {

using JetFn = std::function<Jet2(const Jet2&)>;

/// Random domain-safe expression over the supported operations. Arguments of
/// the partial functions are squashed into safe ranges first, so every
/// expression is smooth on all of R.
JetFn random_expression(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 13);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    if (depth == 0) {
        double c = coeff(rng);
        if (pick(rng) < 7) return [](const Jet2& t) { return t; };
        return [c](const Jet2&) { return Jet2(c); };
    }
    JetFn a = random_expression(rng, depth - 1);
    JetFn b = random_expression(rng, depth - 1);
    switch (pick(rng)) {
        case 0: return [a, b](const Jet2& t) { return a(t) + b(t); };
        case 1: return [a, b](const Jet2& t) { return a(t) - b(t); };
        case 2: return [a, b](const Jet2& t) { return a(t) * b(t); };
        case 3: return [a, b](const Jet2& t) {
            Jet2 u = b(t);
            return a(t) / (u * u + Jet2(2.0));
        };
        case 4: return [a](const Jet2& t) { return holotor::sin(a(t)); };
        case 5: return [a](const Jet2& t) { return holotor::cos(a(t)); };
        case 6: return [a](const Jet2& t) { return holotor::tanh(a(t)); };
        case 7: return [a](const Jet2& t) { return holotor::atan(a(t)); };
        case 8: return [a](const Jet2& t) { return holotor::exp(holotor::tanh(a(t))); };
        case 9: return [a](const Jet2& t) { return holotor::asin(Jet2(0.9) * holotor::tanh(a(t))); };
        case 10: return [a](const Jet2& t) { return holotor::acos(Jet2(0.9) * holotor::tanh(a(t))); };
        case 11: return [a](const Jet2& t) { return holotor::tan(holotor::tanh(a(t))); };
        case 12: return [a](const Jet2& t) {
            Jet2 u = a(t);
            return holotor::pow(u * u + Jet2(1.0), 1.7);
        };
        default: return [a](const Jet2& t) {
            Jet2 u = a(t);
            return holotor::sinh(holotor::tanh(u)) + holotor::cosh(holotor::tanh(u));
        };
    }
}

}  // namespace

TEST_CASE("jet derivatives match finite differences on random composites") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> sample(-2.0, 2.0);
    std::uniform_int_distribution<int> depth(1, 4);
    for (int trial = 0; trial < 10000; ++trial) {
        JetFn fn = random_expression(rng, depth(rng));
        double t = sample(rng);
        Jet2 jet = fn(Jet2::var(t));
        auto value = [&fn](double x) { return fn(Jet2::var(x)).v; };
        // First derivative: central difference.
        const double h1 = 1e-5;
        double fd1 = (value(t + h1) - value(t - h1)) / (2 * h1);
        // Second derivative: fourth-order stencil (rounding-safe at rel 1e-6).
        const double h2 = 1e-3;
        double fd2 = (-value(t + 2 * h2) + 16 * value(t + h2) - 30 * value(t) +
                      16 * value(t - h2) - value(t - 2 * h2)) /
                     (12 * h2 * h2);
        // Rounding and truncation in the stencils scale with the magnitude of
        // the sampled expression; skip the regime where the finite-difference
        // reference itself is unreliable.
        double scale = std::max({1.0, std::abs(jet.v), std::abs(jet.d1), std::abs(jet.d2)});
        if (scale > 1e4) continue;
        REQUIRE(std::abs(jet.d1 - fd1) <= 1e-6 * scale);
        REQUIRE(std::abs(jet.d2 - fd2) <= 1e-6 * scale);
    }
}

TEST_CASE("constants lift with vanishing derivatives") {
    Jet2 c(4.25);
    CHECK(c.d1 == 0.0);
    CHECK(c.d2 == 0.0);
    Jet2 p = c * Jet2::var(2.0);
    CHECK(p.v == 8.5);
    CHECK(p.d1 == 4.25);
    CHECK(p.d2 == 0.0);
}

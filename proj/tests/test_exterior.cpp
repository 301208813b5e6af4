#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holotor/form.hpp"
#include "holotor/g2.hpp"
#include "holotor/spin7.hpp"
#include "holotor/su3.hpp"

using holotor::Exact;
using holotor::Form;
using holotor::Monomial;
using holotor::Rational;

namespace {

Exact random_exact(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

Form<Exact> random_form(std::mt19937& rng, int n, int p) {
    Form<Exact> out(n, p);
    for (Monomial m = 0; m < (Monomial(1) << n); ++m)
        if (holotor::detail::popcount(m) == p) out.add_term(m, random_exact(rng));
    return out;
}

Form<Exact> vol(int n) {
    Form<Exact> v(n, n);
    v.add_term((Monomial(1) << n) - 1, Exact(1));
    return v;
}

}  // namespace

TEST_CASE("hodge star on monomials follows the orientation convention") {
    using F = Form<Exact>;
    CHECK(hodge(F::monomial(6, {1})) == F::monomial(6, {2, 3, 4, 5, 6}));
    CHECK(hodge(F::monomial(6, {6})) == -F::monomial(6, {1, 2, 3, 4, 5}));
    CHECK(hodge(F::scalar(6, Exact(1))) == vol(6));
    CHECK(hodge(vol(7)) == F::scalar(7, Exact(1)));
}

TEST_CASE("dual of the canonical definite 3-form in dimension 7") {
    using F = Form<Exact>;
    auto g = holotor::canonical_g2<Exact>();
    F expected = F::monomial(7, {3, 4, 5, 6}) + F::monomial(7, {1, 2, 5, 6}) +
                 F::monomial(7, {1, 2, 3, 4}) - F::monomial(7, {2, 4, 6, 7}) +
                 F::monomial(7, {2, 3, 5, 7}) + F::monomial(7, {1, 4, 5, 7}) +
                 F::monomial(7, {1, 3, 6, 7});
    CHECK(g.star_phi == expected);
}

TEST_CASE("normalization constants of the canonical structures") {
    auto s = holotor::canonical_su3();
    Form<Exact> omega3 = wedge(s.omega, s.omega, s.omega);
    CHECK(omega3 == Exact(6) * vol(6));
    CHECK(wedge(s.psi_plus, s.psi_minus) == Exact(4) * vol(6));
    CHECK(wedge(s.omega, s.psi_plus).is_zero_form());
    CHECK(wedge(s.omega, s.psi_minus).is_zero_form());
    CHECK(norm2(s.psi_plus) == Exact(4));
    CHECK(norm2(s.psi_minus) == Exact(4));
    CHECK(norm2(s.omega) == Exact(3));

    auto g = holotor::canonical_g2<Exact>();
    CHECK(norm2(g.phi) == Exact(7));
    CHECK(norm2(g.star_phi) == Exact(7));
    CHECK(wedge(g.phi, g.star_phi) == Exact(7) * vol(7));

    auto p = holotor::canonical_spin7<Exact>();
    CHECK(hodge(p.phi4) == p.phi4);  // self-dual
    CHECK(norm2(p.phi4) == Exact(14));
}

TEST_CASE("hodge square and the inner-product pairing on random forms") {
    std::mt19937 rng(42);
    for (int n : {3, 6, 7, 8})
        for (int p = 0; p <= n; ++p) {
            Form<Exact> a = random_form(rng, n, p);
            Form<Exact> b = random_form(rng, n, p);
            Exact sign = ((p * (n - p)) % 2 == 0) ? Exact(1) : Exact(-1);
            REQUIRE(hodge(hodge(a)) == sign * a);
            REQUIRE(wedge(a, hodge(b)) == inner(a, b) * vol(n));
        }
}

TEST_CASE("wedge is graded-commutative and associative on random forms") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial)
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) {
                Form<Exact> a = random_form(rng, 7, p);
                Form<Exact> b = random_form(rng, 7, q);
                Form<Exact> c = random_form(rng, 7, 1);
                Exact sign = ((p * q) % 2 == 0) ? Exact(1) : Exact(-1);
                REQUIRE(wedge(a, b) == sign * wedge(b, a));
                REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
            }
}

TEST_CASE("substitution is an algebra morphism") {
    std::mt19937 rng(44);
    std::vector<Form<Exact>> images;
    for (int i = 0; i < 6; ++i) images.push_back(random_form(rng, 6, 1));
    for (int trial = 0; trial < 100; ++trial) {
        Form<Exact> a = random_form(rng, 6, 2);
        Form<Exact> b = random_form(rng, 6, 1);
        REQUIRE(substitute(wedge(a, b), images) ==
                wedge(substitute(a, images), substitute(b, images)));
    }
}

TEST_CASE("contraction identities of a 1-form against the structure forms") {
    std::mt19937 rng(20260823);
    auto s = holotor::canonical_su3();
    Form<Exact> omega2 = wedge(s.omega, s.omega);
    auto g = holotor::canonical_g2<Exact>();
    auto sp = holotor::canonical_spin7<Exact>();
    for (int trial = 0; trial < 1000; ++trial) {
        Form<Exact> tau = random_form(rng, 6, 1);
        Form<Exact> two_star_tau = Exact(2) * hodge(tau);
        REQUIRE(wedge(hodge(wedge(tau, s.omega)), s.omega) == two_star_tau);
        REQUIRE(wedge(hodge(wedge(tau, s.psi_plus)), s.psi_plus) == two_star_tau);
        REQUIRE(wedge(hodge(wedge(tau, s.psi_minus)), s.psi_minus) == two_star_tau);
        REQUIRE(wedge(hodge(wedge(tau, s.psi_plus)), s.psi_minus) == -wedge(tau, omega2));
        REQUIRE(wedge(hodge(wedge(tau, s.psi_minus)), s.psi_plus) == wedge(tau, omega2));

        Form<Exact> kappa7 = random_form(rng, 7, 1);
        REQUIRE(hodge(wedge(hodge(wedge(kappa7, g.phi)), g.phi)) == Exact(-4) * kappa7);
        REQUIRE(hodge(wedge(hodge(wedge(kappa7, g.star_phi)), g.star_phi)) == Exact(3) * kappa7);

        Form<Exact> kappa8 = random_form(rng, 8, 1);
        REQUIRE(hodge(wedge(hodge(wedge(kappa8, sp.phi4)), sp.phi4)) == Exact(-7) * kappa8);
    }
}

TEST_CASE("monomial names round-trip through the parser") {
    std::vector<std::string> coframe = {"e1", "e2", "e3", "e4", "e5", "e6"};
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial m = std::uniform_int_distribution<int>(1, (1 << 6) - 1)(rng);
        CHECK(holotor::parse_monomial(holotor::monomial_name(m), coframe) == m);
    }
    CHECK_THROWS_AS(holotor::parse_monomial("e1^e9", coframe), std::invalid_argument);
    CHECK_THROWS_AS(holotor::parse_monomial("e1^e1", coframe), std::invalid_argument);
}

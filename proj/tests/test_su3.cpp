#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holotor/catalog.hpp"
#include "holotor/su3.hpp"

using holotor::Exact;
using holotor::Form;
using holotor::Rational;

namespace {

Form<Exact> random_form(std::mt19937& rng, int n, int p) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    Form<Exact> out(n, p);
    for (holotor::Monomial m = 0; m < (holotor::Monomial(1) << n); ++m)
        if (holotor::detail::popcount(m) == p)
            out.add_term(m, Exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                  Rational(0), Rational(0)));
    return out;
}

}  // namespace

TEST_CASE("almost complex structure on the adapted coframe") {
    auto s = holotor::canonical_su3();
    CHECK(holotor::apply_j(s.omega) == s.omega);
    CHECK(holotor::apply_j(s.psi_plus) == -s.psi_minus);
    CHECK(holotor::apply_j(s.psi_minus) == s.psi_plus);
    std::mt19937 rng(11);
    for (int p = 1; p <= 3; ++p) {
        Form<Exact> a = random_form(rng, 6, p);
        Exact sign = (p % 2 == 0) ? Exact(1) : Exact(-1);
        CHECK(holotor::apply_j(holotor::apply_j(a)) == sign * a);
    }
}

TEST_CASE("product-of-spheres fiber: exact torsion record") {
    auto fiber = holotor::load_su3_fiber("s3xs3");
    const holotor::TorsionSU3& t = fiber.torsion;
    Exact s5 = Exact::sqrt5();
    CHECK(t.sigma0 == -s5);
    CHECK(t.pi0 == Exact(0));
    CHECK(t.pi1.is_zero_form());
    CHECK(t.nu1.is_zero_form());
    CHECK(t.pi2.is_zero_form());
    CHECK(t.sigma2.is_zero_form());
    using F = Form<Exact>;
    Exact h = s5 / Exact(2);
    F nu3 = -h * F::monomial(6, {1, 3, 5}) + h * F::monomial(6, {1, 4, 6}) -
            h * F::monomial(6, {2, 3, 6}) - h * F::monomial(6, {2, 4, 5}) +
            s5 * F::monomial(6, {2, 3, 5}) + s5 * F::monomial(6, {2, 4, 6});
    CHECK(t.nu3 == nu3);
    CHECK(norm2(t.nu3) == Exact(15));

    holotor::SU3Class c = holotor::su3_class(t);
    CHECK(c.name() == "W1-+W3");
    CHECK_FALSE(c.coupled_c.has_value());
    CHECK(holotor::su3_scalar(t, *fiber.frame) == Exact(30));
}

TEST_CASE("solvable fiber: exact torsion record") {
    auto fiber = holotor::load_su3_fiber("solv6");
    const holotor::TorsionSU3& t = fiber.torsion;
    CHECK(t.pi1 == -Exact::sqrt10() * Form<Exact>::monomial(6, {6}));
    CHECK(t.pi0 == Exact(0));
    CHECK(t.sigma0 == Exact(0));
    CHECK(t.nu1.is_zero_form());
    CHECK(t.pi2.is_zero_form());
    CHECK(t.sigma2.is_zero_form());
    CHECK(t.nu3.is_zero_form());
    CHECK(holotor::su3_class(t).name() == "W5");
    CHECK(fiber.frame->codifferential(t.pi1).coeff(0) == Exact(-15));
    CHECK(holotor::su3_scalar(t, *fiber.frame) == Exact(-30));
}

TEST_CASE("flat fiber is torsion-free") {
    auto fiber = holotor::load_su3_fiber("abelian");
    holotor::SU3Class c = holotor::su3_class(fiber.torsion);
    CHECK(c.name() == "torsion-free");
    auto names = c.special_names();
    REQUIRE_FALSE(names.empty());
    CHECK(names[0] == "Calabi-Yau");
    CHECK(holotor::su3_scalar(fiber.torsion, *fiber.frame) == Exact(0));
}

TEST_CASE("twistor fiber: coupled structure") {
    auto fiber = holotor::load_su3_fiber("twistor_sigma2");
    const holotor::TorsionSU3& t = fiber.torsion;
    CHECK(t.sigma0 * t.sigma0 == Exact::ratio(40, 9));
    CHECK(norm2(t.sigma2) == Exact::ratio(20, 3));
    CHECK(holotor::in_omega2_8(t.sigma2, fiber.structure));
    holotor::SU3Class c = holotor::su3_class(t);
    REQUIRE(c.coupled_c.has_value());
    CHECK(*c.coupled_c == -Exact::sqrt10());
    auto names = c.special_names();
    bool coupled = false;
    for (const auto& n : names) coupled = coupled || n == "coupled";
    CHECK(coupled);
    // Scal from the curvature formula with vanishing 1-form slots.
    CHECK(holotor::su3_scalar_from_parts(t, Exact(0), Exact(0)) == Exact(30));
}

TEST_CASE("differentials rebuild from the torsion record on frame-backed fibers") {
    for (const char* name : {"s3xs3", "solv6", "abelian"}) {
        auto fiber = holotor::load_su3_fiber(name);
        auto d = holotor::su3_differentials(fiber.structure, fiber.torsion);
        REQUIRE(d.domega == fiber.frame->d(fiber.structure.omega));
        REQUIRE(d.dpsi_plus == fiber.frame->d(fiber.structure.psi_plus));
        REQUIRE(d.dpsi_minus == fiber.frame->d(fiber.structure.psi_minus));
    }
}

TEST_CASE("extraction rejects structure data with inconsistent differentials") {
    // Doubling one 3-form breaks the scalar-slot compatibility between dω and
    // the 3-form differentials on any frame that excites those slots.
    using F = Form<Exact>;
    std::vector<F> d(6, F(6, 2));
    d[0] = F::monomial(6, {4, 5});
    holotor::FrameAlgebra f(6, std::move(d));
    REQUIRE(f.validate().ok);
    holotor::SU3Structure broken = holotor::canonical_su3();
    broken.psi_minus = Exact(2) * broken.psi_minus;
    CHECK_THROWS_AS(holotor::su3_torsion(broken, f), std::domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holotor/spin7.hpp"
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

Form<Exact> project(const Form<Exact>& a, const std::vector<Form<Exact>>& basis) {
    std::vector<Exact> x = holotor::detail::project_coeffs(a, basis);
    Form<Exact> out(a.dim, a.degree);
    for (size_t i = 0; i < basis.size(); ++i) out += x[i] * basis[i];
    return out;
}

}  // namespace

TEST_CASE("canonical self-dual 4-form induces the flat metric") {
    auto s = holotor::canonical_spin7<Exact>();
    auto metric = holotor::spin7_metric(s.phi4);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            REQUIRE(metric[i][j] == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-14));
}

TEST_CASE("torsion extraction inverts the rebuild on random admissible 8-dim records") {
    auto s = holotor::canonical_spin7<Exact>();
    // The 8-dim 5-form module is {κ∧ϕ}; its complement is the 48-dim module.
    std::vector<Form<Exact>> basis5;
    for (int i = 1; i <= 8; ++i) {
        Form<Exact> ei(8, 1);
        ei.add_term(holotor::Monomial(1) << (i - 1), Exact(1));
        basis5.push_back(wedge(ei, s.phi4));
    }
    std::mt19937 rng(987);
    for (int trial = 0; trial < 15; ++trial) {
        holotor::TorsionSpin7<Exact> t;
        t.lambda1 = random_form(rng, 8, 1);
        Form<Exact> gamma = random_form(rng, 8, 5);
        t.lambda5 = gamma - project(gamma, basis5);
        REQUIRE(wedge(s.phi4, hodge(t.lambda5)).is_zero_form());

        Form<Exact> dphi = wedge(t.lambda1, s.phi4) + t.lambda5;
        holotor::TorsionSpin7<Exact> back = holotor::spin7_torsion(s, dphi);
        REQUIRE(back.lambda1 == t.lambda1);
        REQUIRE(back.lambda5 == t.lambda5);
        REQUIRE(holotor::spin7_membership_residual(s, back) == 0.0);
    }
}

TEST_CASE("two-slot class names") {
    holotor::Spin7Class c;
    CHECK(c.name() == "P");
    CHECK(c.special_name() == "parallel");
    c.y1 = true;
    CHECK(c.name() == "Y1");
    CHECK(c.special_name() == "locally conformal parallel");
    c.y1 = false;
    c.y2 = true;
    CHECK(c.name() == "Y2");
    CHECK(c.special_name() == "balanced");
    c.y1 = true;
    CHECK(c.name() == "Y1+Y2");
}

TEST_CASE("scalar curvature of a pure 1-form record") {
    holotor::TorsionSpin7<Exact> t;
    t.lambda1 = Exact(4) * Form<Exact>::monomial(8, {8});
    // |λ₁|² = 16; with δλ₁ = −28 the curvature is (21/8)·16 − 98 = −56.
    CHECK(holotor::spin7_scalar(t, -28.0) == Catch::Approx(-56.0));
}

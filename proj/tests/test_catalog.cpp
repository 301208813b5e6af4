#include <catch2/catch_amalgamated.hpp>

#include "holotor/catalog.hpp"

using holotor::Exact;

TEST_CASE("every 6-dim fiber loads and is internally consistent") {
    for (const std::string& name : holotor::su3_fiber_names()) {
        INFO(name);
        auto fiber = holotor::load_su3_fiber(name);
        CHECK(fiber.name == name);
        if (fiber.frame_backed()) {
            CHECK(fiber.frame->validate().ok);
            // Scalar curvature of an Einstein 6-metric is 6μ.
            CHECK(holotor::su3_scalar(fiber.torsion, *fiber.frame) == Exact(6) * fiber.mu);
        } else {
            // Torsion-data fibers have vanishing 1-form slots by construction.
            CHECK(fiber.torsion.pi1.is_zero_form());
            CHECK(fiber.torsion.nu1.is_zero_form());
            CHECK(holotor::su3_scalar_from_parts(fiber.torsion, Exact(0), Exact(0)) ==
                  Exact(6) * fiber.mu);
        }
    }
    CHECK_THROWS_AS(holotor::load_su3_fiber("nope"), std::invalid_argument);
}

TEST_CASE("every 7-dim fiber loads with a consistent curvature record") {
    for (const std::string& name : holotor::g2_fiber_names()) {
        INFO(name);
        auto fiber = holotor::load_g2_fiber(name);
        CHECK(fiber.name == name);
        // Scalar curvature of an Einstein 7-metric is 7μ.
        double scal = holotor::g2_scalar(fiber.torsion, fiber.delta_tau1.to_double());
        CHECK(scal == Catch::Approx((Exact(7) * fiber.mu).to_double()).margin(1e-12));
    }
    CHECK_THROWS_AS(holotor::load_g2_fiber("nope"), std::invalid_argument);
}

TEST_CASE("abstract fiber records match their advertised classes") {
    auto nk = holotor::load_su3_fiber("nk_abstract");
    CHECK(nk.torsion.sigma0 == Exact(-2));
    auto names = holotor::su3_class(nk.torsion).special_names();
    bool found = false;
    for (const auto& n : names) found = found || n == "nearly Kahler";
    CHECK(found);

    auto np = holotor::load_g2_fiber("np_g2_abstract");
    CHECK(np.torsion.tau0 == Exact(-4));
    CHECK(np.torsion.tau1.is_zero_form());
    CHECK(np.torsion.tau2.is_zero_form());
    CHECK(np.torsion.tau3.is_zero_form());

    auto lcp = holotor::load_g2_fiber("lcp_g2_derived");
    CHECK(lcp.torsion.tau1 == holotor::Form<Exact>::monomial(7, {7}));
    CHECK(lcp.delta_tau1 == Exact(-6));
}

#include <catch2/catch_amalgamated.hpp>

#include "holotor/catalog.hpp"
#include "holotor/riemann.hpp"

using holotor::Exact;
using holotor::Form;
using holotor::FrameAlgebra;

namespace {

FrameAlgebra su2_frame() {
    using F = Form<Exact>;
    std::vector<F> d(3, F(3, 2));
    d[0] = F::monomial(3, {2, 3});
    d[1] = -F::monomial(3, {1, 3});
    d[2] = F::monomial(3, {1, 2});
    return FrameAlgebra(3, std::move(d));
}

}  // namespace

TEST_CASE("connection coefficients of the compact 3-dim frame") {
    auto gamma = holotor::levi_civita(su2_frame());
    // Totally antisymmetric with Γ^3_{12} = −1/2 for these structure constants.
    CHECK(gamma.at(0, 1, 2) == Catch::Approx(-0.5));
    CHECK(gamma.at(1, 0, 2) == Catch::Approx(0.5));
    CHECK(gamma.at(0, 2, 1) == Catch::Approx(0.5));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(gamma.at(i, j, j) == 0.0);  // metric connection on orthonormal frame
            CHECK(gamma.at(i, i, j) == Catch::Approx(0.0).margin(1e-15));
        }
}

TEST_CASE("round 3-sphere frame is Einstein with constant one half") {
    auto rep = holotor::einstein_verify(su2_frame(), 0.5, 1e-12);
    CHECK(rep.ok);
    CHECK(rep.scal == Catch::Approx(1.5));
}

TEST_CASE("built-in fibers are Einstein with the recorded constants") {
    for (const char* name : {"s3xs3", "solv6", "abelian"}) {
        auto fiber = holotor::load_su3_fiber(name);
        double mu = fiber.mu.to_double();
        auto rep = holotor::einstein_verify(*fiber.frame, mu, 1e-9);
        INFO(name);
        CHECK(rep.ok);
        CHECK(rep.fitted_mu == Catch::Approx(mu).margin(1e-9));
        // Scal from curvature matches the torsion-form expression.
        CHECK(rep.scal ==
              Catch::Approx(holotor::su3_scalar(fiber.torsion, *fiber.frame).to_double()).margin(1e-9));
    }
}

TEST_CASE("invalid frames are rejected") {
    using F = Form<Exact>;
    std::vector<F> d(3, F(3, 2));
    d[0] = F::monomial(3, {2, 3});
    d[1] = F::monomial(3, {1, 2});
    FrameAlgebra bad(3, std::move(d));
    CHECK_THROWS_AS(holotor::levi_civita(bad), std::invalid_argument);
}

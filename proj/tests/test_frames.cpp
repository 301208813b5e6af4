#include <catch2/catch_amalgamated.hpp>

#include "holotor/catalog.hpp"
#include "holotor/frame.hpp"

using holotor::Exact;
using holotor::Form;
using holotor::FrameAlgebra;
using holotor::Matrix;

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

TEST_CASE("compact simple 3-dim frame satisfies the Jacobi identity") {
    FrameAlgebra f = su2_frame();
    CHECK(f.validate().ok);
    CHECK(f.d(Form<Exact>::monomial(3, {1})) == Form<Exact>::monomial(3, {2, 3}));
    // Leibniz: d(e^{12}) = de¹∧e² − e¹∧de² = e²³∧e² + e¹∧e¹³ = 0.
    CHECK(f.d(Form<Exact>::monomial(3, {1, 2})).is_zero_form());
}

TEST_CASE("frames failing d² = 0 are rejected with the offending index") {
    using F = Form<Exact>;
    std::vector<F> d(3, F(3, 2));
    d[0] = F::monomial(3, {2, 3});
    d[1] = F::monomial(3, {1, 2});
    FrameAlgebra bad(3, std::move(d));
    auto rep = bad.validate();
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].first == 1);
    CHECK(rep.failures[0].second == F::monomial(3, {1, 2, 3}));
}

TEST_CASE("built-in frames satisfy d² = 0") {
    CHECK(holotor::catalog_detail::su2_su2_raw().validate().ok);
    CHECK(holotor::catalog_detail::solvable_frame().validate().ok);
    CHECK(FrameAlgebra::abelian(6).validate().ok);
    FrameAlgebra adapted = change_basis(holotor::catalog_detail::su2_su2_raw(),
                                        holotor::catalog_detail::su2_su2_adapting_matrix());
    CHECK(adapted.validate().ok);
}

TEST_CASE("solvable frame: differential of the 5-form e^{12345}") {
    FrameAlgebra f = holotor::catalog_detail::solvable_frame();
    Form<Exact> top = f.d(Form<Exact>::monomial(6, {1, 2, 3, 4, 5}));
    Form<Exact> expected =
        (Exact(3) * Exact::sqrt10() / Exact(2)) * Form<Exact>::monomial(6, {1, 2, 3, 4, 5, 6});
    CHECK(top == expected);
}

TEST_CASE("basis change round-trips through the inverse matrix") {
    FrameAlgebra raw = holotor::catalog_detail::su2_su2_raw();
    Matrix<Exact> b = holotor::catalog_detail::su2_su2_adapting_matrix();
    FrameAlgebra back = change_basis(change_basis(raw, b), holotor::invert(b));
    REQUIRE(back.dim == raw.dim);
    for (int i = 0; i < raw.dim; ++i) CHECK(back.d_coframe[i] == raw.d_coframe[i]);
}

TEST_CASE("adapted coframe of the bi-invariant product frame") {
    FrameAlgebra adapted = change_basis(holotor::catalog_detail::su2_su2_raw(),
                                        holotor::catalog_detail::su2_su2_adapting_matrix());
    Form<Exact> expected =
        Exact::sqrt5() * (Form<Exact>::monomial(6, {3, 5}) + Form<Exact>::monomial(6, {4, 6}));
    CHECK(adapted.d_coframe[0] == expected);
}

TEST_CASE("codifferential oracles") {
    FrameAlgebra solv = holotor::catalog_detail::solvable_frame();
    Form<Exact> pi1 = -Exact::sqrt10() * Form<Exact>::monomial(6, {6});
    CHECK(solv.codifferential(pi1).coeff(0) == Exact(-15));

    // Closed and coclosed forms on the flat frame have vanishing codifferential.
    FrameAlgebra flat = FrameAlgebra::abelian(6);
    CHECK(flat.codifferential(Form<Exact>::monomial(6, {1, 2})).is_zero_form());
    CHECK(flat.d(Form<Exact>::monomial(6, {1, 2})).is_zero_form());
}

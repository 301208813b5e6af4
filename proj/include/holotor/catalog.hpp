#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holotor/frame.hpp"
#include "holotor/g2.hpp"
#include "holotor/su3.hpp"

namespace holotor {

/// Built-in 6-dimensional fiber: either frame-backed (structure constants
/// given, torsion extracted) or torsion-data only (constant torsion record
/// over the canonical adapted coframe).
struct SU3FiberEntry {
    std::string name;
    std::optional<FrameAlgebra> frame;
    SU3Structure structure;
    TorsionSU3 torsion;
    Exact mu;  // Einstein constant of the fiber metric
    std::string note;

    bool frame_backed() const { return frame.has_value(); }
};

/// Built-in 7-dimensional fiber, given as a constant torsion record over the
/// canonical coframe, plus the codifferential of τ₁ (an input of the scalar
/// curvature formula that the record alone does not determine).
struct G2FiberEntry {
    std::string name;
    TorsionG2<Exact> torsion;
    Exact delta_tau1;
    Exact mu;
    std::string note;
};

namespace catalog_detail {

inline Form<Exact> e2(int i, int j) { return Form<Exact>::monomial(6, {i, j}); }

/// su(2)⊕su(2) structure equations: de¹ = e²³, de² = −e¹³, de³ = e¹² on each
/// factor (second factor on indices 4,5,6).
inline FrameAlgebra su2_su2_raw() {
    std::vector<Form<Exact>> d(6, Form<Exact>(6, 2));
    d[0] = e2(2, 3);
    d[1] = -e2(1, 3);
    d[2] = e2(1, 2);
    d[3] = e2(5, 6);
    d[4] = -e2(4, 6);
    d[5] = e2(4, 5);
    return FrameAlgebra(6, std::move(d));
}

/// Basis change to the orthonormal coframe adapted to the product structure:
/// h¹ = (√5/10)(e¹+e⁴), h² = (√5/10)(−e¹+e⁴), h³ = (√10/10)e²,
/// h⁴ = (√10/10)e⁵, h⁵ = (√10/10)e³, h⁶ = (√10/10)e⁶.
inline Matrix<Exact> su2_su2_adapting_matrix() {
    Exact s5_10 = Exact::sqrt5() / Exact(10);
    Exact s10_10 = Exact::sqrt10() / Exact(10);
    Matrix<Exact> b(6, std::vector<Exact>(6, Exact(0)));
    b[0][0] = s5_10;
    b[0][3] = s5_10;
    b[1][0] = -s5_10;
    b[1][3] = s5_10;
    b[2][1] = s10_10;
    b[3][4] = s10_10;
    b[4][2] = s10_10;
    b[5][5] = s10_10;
    return b;
}

/// Solvable frame: de^i = (√10/4)e^{i6} for i = 1..4,
/// de⁵ = (√10/2)(e¹²+e³⁴+e⁵⁶), de⁶ = 0.
inline FrameAlgebra solvable_frame() {
    Exact q = Exact::sqrt10() / Exact(4);
    Exact h = Exact::sqrt10() / Exact(2);
    std::vector<Form<Exact>> d(6, Form<Exact>(6, 2));
    for (int i = 1; i <= 4; ++i) d[i - 1] = q * e2(i, 6);
    d[4] = h * (e2(1, 2) + e2(3, 4) + e2(5, 6));
    return FrameAlgebra(6, std::move(d));
}

}  // namespace catalog_detail

/// Known fiber names:
///   s3xs3           product of two round 3-spheres (frame-backed, μ = 5)
///   solv6           Einstein solvmanifold (frame-backed, μ = −5)
///   abelian         flat torus (frame-backed, μ = 0)
///   twistor_sigma2  coupled twistor-space fiber, torsion data, μ = 5
///   nk_abstract     nearly Kähler fiber, σ₀ = −2, μ = 5
///   cy_abstract     torsion-free fiber, μ = 0
inline SU3FiberEntry load_su3_fiber(const std::string& name) {
    SU3FiberEntry e;
    e.name = name;
    e.structure = canonical_su3();
    if (name == "s3xs3") {
        e.frame = change_basis(catalog_detail::su2_su2_raw(), catalog_detail::su2_su2_adapting_matrix());
        e.torsion = su3_torsion(e.structure, *e.frame);
        e.mu = Exact(5);
        e.note = "product of two unit-coupling 3-spheres, rescaled to the Einstein adapted coframe";
        return e;
    }
    if (name == "solv6") {
        e.frame = catalog_detail::solvable_frame();
        e.torsion = su3_torsion(e.structure, *e.frame);
        e.mu = Exact(-5);
        e.note = "rank-one Einstein metric solvable Lie algebra";
        return e;
    }
    if (name == "abelian") {
        e.frame = FrameAlgebra::abelian(6);
        e.torsion = su3_torsion(e.structure, *e.frame);
        e.mu = Exact(0);
        e.note = "flat torus";
        return e;
    }
    if (name == "twistor_sigma2") {
        e.torsion.sigma0 = Exact(2) * Exact::sqrt10() / Exact(3);
        Exact s = -Exact::sqrt10() / Exact(3);
        e.torsion.sigma2 = s * (catalog_detail::e2(1, 2) + catalog_detail::e2(3, 4) -
                                Exact(2) * catalog_detail::e2(5, 6));
        e.mu = Exact(5);
        e.note = "twistor space over a self-dual Einstein 4-manifold, coupled structure in the "
                 "orthonormal adapted coframe";
        return e;
    }
    if (name == "nk_abstract") {
        e.torsion.sigma0 = Exact(-2);
        e.mu = Exact(5);
        e.note = "abstract nearly Kähler fiber";
        return e;
    }
    if (name == "cy_abstract") {
        e.mu = Exact(0);
        e.note = "abstract torsion-free fiber";
        return e;
    }
    throw std::invalid_argument("unknown fiber name '" + name + "'");
}

/// Known 7-dimensional fiber names:
///   np_g2_abstract      τ₀ = −4 (cone fiber of the parallel 8-dim structure), μ = 6
///   np_g2_abstract_pos  τ₀ = +4, μ = 6
///   parallel_g2_abstract  zero torsion, μ = 0
///   lcp_g2_derived      τ₁ = e⁷, δτ₁ = −6, μ = −6 (exponential cone over a
///                       torsion-free 6-dim fiber, re-exported as a fiber)
///   lcp_g2_pos          τ₁ = e⁷, δτ₁ = 1, μ = 6 (sine-cone construction)
///   lcp_g2_null         τ₁ = e⁷, δτ₁ = −5/2, μ = 0 (cone construction)
inline G2FiberEntry load_g2_fiber(const std::string& name) {
    G2FiberEntry e;
    e.name = name;
    e.torsion.tau0 = Exact(0);
    e.delta_tau1 = Exact(0);
    if (name == "np_g2_abstract") {
        e.torsion.tau0 = Exact(-4);
        e.mu = Exact(6);
        e.note = "abstract fiber whose only torsion is the scalar slot";
        return e;
    }
    if (name == "np_g2_abstract_pos") {
        e.torsion.tau0 = Exact(4);
        e.mu = Exact(6);
        e.note = "abstract fiber whose only torsion is the scalar slot, positive sign";
        return e;
    }
    if (name == "parallel_g2_abstract") {
        e.mu = Exact(0);
        e.note = "abstract torsion-free 7-dim fiber";
        return e;
    }
    auto lcp = [&e](Exact delta, Exact mu, const char* note) {
        e.torsion.tau1 = Form<Exact>::monomial(7, {7});
        e.delta_tau1 = delta;
        e.mu = mu;
        e.note = note;
        return e;
    };
    if (name == "lcp_g2_derived")
        return lcp(Exact(-6), Exact(-6), "1-form torsion fiber with negative Einstein constant");
    if (name == "lcp_g2_pos")
        return lcp(Exact(1), Exact(6), "1-form torsion fiber with positive Einstein constant");
    if (name == "lcp_g2_null")
        return lcp(Exact::ratio(-5, 2), Exact(0), "1-form torsion fiber with Ricci-flat metric");
    throw std::invalid_argument("unknown fiber name '" + name + "'");
}

inline std::vector<std::string> su3_fiber_names() {
    return {"s3xs3", "solv6", "abelian", "twistor_sigma2", "nk_abstract", "cy_abstract"};
}

inline std::vector<std::string> g2_fiber_names() {
    return {"np_g2_abstract", "np_g2_abstract_pos", "parallel_g2_abstract",
            "lcp_g2_derived", "lcp_g2_pos", "lcp_g2_null"};
}

}  // namespace holotor

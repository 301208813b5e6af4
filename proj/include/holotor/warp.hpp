#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holotor/catalog.hpp"
#include "holotor/form.hpp"
#include "holotor/frame.hpp"
#include "holotor/g2.hpp"
#include "holotor/jet.hpp"
#include "holotor/spin7.hpp"
#include "holotor/su3.hpp"

namespace holotor {

/// Family-precondition failure with a machine-readable code
/// (e.g. "fiber_class", "domain_parameter", "profile_name").
class HypothesisError : public std::invalid_argument {
public:
    std::string code;
    HypothesisError(std::string c, const std::string& msg)
        : std::invalid_argument(msg), code(std::move(c)) {}
};

using ScalarFn = std::function<Jet2(double)>;

/// Warping data (f, α, β) on an open interval, evaluable as second-order
/// jets; α² + β² = 1 pointwise.
struct WarpProfile {
    ScalarFn f, alpha, beta;
    double t_min = 0.0, t_max = 0.0;
    std::string f_name;  // for reports and the Einstein bookkeeping
};

inline ScalarFn named_fn(const std::string& name) {
    jet_lift(name, 1.0);  // validate the name eagerly
    return [name](double t) { return jet_lift(name, t); };
}

inline ScalarFn constant_fn(double c) {
    return [c](double) { return Jet2(c); };
}

/// Interior Chebyshev-distributed sample points (endpoints excluded).
inline std::vector<double> chebyshev_grid(double t_min, double t_max, int n = 17) {
    std::vector<double> out;
    double mid = 0.5 * (t_min + t_max), half = 0.5 * (t_max - t_min);
    for (int k = 0; k < n; ++k) out.push_back(mid + half * std::cos(M_PI * (2 * k + 1) / (2.0 * n)));
    return out;
}

/// α² + β² − 1 at t (profile sanity check).
inline double profile_unit_residual(const WarpProfile& w, double t) {
    Jet2 a = w.alpha(t), b = w.beta(t);
    return std::abs(a.v * a.v + b.v * b.v - 1.0);
}

namespace warp_detail {

/// Jet of the derivative of a jet-valued quantity; only the value and first
/// derivative of the result are meaningful (the second would need a third
/// derivative of the input).
inline Jet2 derivative_jet(const Jet2& a) { return Jet2(a.d1, a.d2, 0.0); }

/// Embeds a form over the fiber coframe into the product coframe
/// (fiber indices unchanged, the interval direction appended last).
template <class S>
Form<Jet2> lift_fiber(const Form<S>& a, int product_dim) {
    Form<Jet2> out(product_dim, a.degree);
    for (const auto& [m, c] : a.coeffs) out.coeffs.emplace(m, Jet2(to_double(c)));
    return out;
}

/// a ∧ dt in the product coframe whose last index is the interval direction.
inline Form<Jet2> wedge_dt(const Form<Jet2>& a) {
    Form<Jet2> dt = Form<Jet2>::monomial(a.dim, {a.dim});
    return wedge(a, dt);
}

inline Form<Jet2> one_form(int dim, int i, Jet2 c) {
    Form<Jet2> f(dim, 1);
    f.add_term(Monomial(1) << (i - 1), c);
    return f;
}

}  // namespace warp_detail

/// Mixed-coordinate differential on the product coframe (fiber coframe plus
/// dt as the last index): Leibniz with the fiber structure constants on the
/// fiber directions, plus the t-derivative of every coefficient wedged with
/// dt. Only the value and first derivative of output coefficients are
/// meaningful.
inline Form<Jet2> warped_d(const Form<Jet2>& a, const FrameAlgebra& fiber) {
    int n = a.dim;
    if (fiber.dim != n - 1) throw std::invalid_argument("warped_d: fiber dimension mismatch");
    std::vector<Form<Jet2>> d7;
    for (int i = 0; i < fiber.dim; ++i) d7.push_back(warp_detail::lift_fiber(fiber.d_coframe[i], n));
    d7.push_back(Form<Jet2>(n, 2));  // d(dt) = 0
    Form<Jet2> out = d_form(a, d7);
    Monomial dt_bit = Monomial(1) << (n - 1);
    for (const auto& [m, c] : a.coeffs) {
        if (m & dt_bit) continue;  // dc ∧ e^m ∧ dt contains dt twice
        // dc ∧ e^m = c' dt ∧ e^m = (−1)^{|m|} c' e^m ∧ dt
        Jet2 cp = warp_detail::derivative_jet(c);
        out.add_term(m | dt_bit, (detail::popcount(m) % 2) ? -cp : cp);
    }
    return out;
}

/// All coordinate data of a warped 7-dim structure at a sample t:
/// the defining forms in mixed coordinates (fiber coframe + dt) and in the
/// orthonormal coframe {f e¹..f e⁴, f(αe⁵−βe⁶), f(βe⁵+αe⁶), dt}, plus the
/// coframe translation maps.
struct WarpedG2Coords {
    Jet2 f, a, b;
    Form<Jet2> phi_mixed{7, 3};
    G2Structure<Jet2> structure_h;
    std::vector<Form<Jet2>> e_to_h, h_to_e;  // images of mixed resp. orthonormal coframe 1-forms
};

inline WarpedG2Coords warped_g2_coords(const SU3Structure& s, const WarpProfile& w, double t) {
    using warp_detail::lift_fiber;
    using warp_detail::one_form;
    if (!(t > w.t_min && t < w.t_max))
        throw HypothesisError("domain_parameter", "sample t outside the profile domain");
    WarpedG2Coords c;
    c.f = w.f(t);
    c.a = w.alpha(t);
    c.b = w.beta(t);
    if (c.f.v == 0.0) throw HypothesisError("domain_parameter", "warping function vanishes at sample t");
    Form<Jet2> om = lift_fiber(s.omega, 7), pp = lift_fiber(s.psi_plus, 7), pm = lift_fiber(s.psi_minus, 7);
    Jet2 f2 = c.f * c.f, f3 = f2 * c.f;
    c.phi_mixed = f2 * warp_detail::wedge_dt(om) + f3 * (c.a * pp - c.b * pm);

    Jet2 inv_f = Jet2(1.0) / c.f;
    for (int i = 1; i <= 4; ++i) c.e_to_h.push_back(one_form(7, i, inv_f));
    Form<Jet2> e5 = one_form(7, 5, c.a * inv_f) + one_form(7, 6, c.b * inv_f);
    Form<Jet2> e6 = one_form(7, 5, -c.b * inv_f) + one_form(7, 6, c.a * inv_f);
    c.e_to_h.push_back(e5);
    c.e_to_h.push_back(e6);
    c.e_to_h.push_back(one_form(7, 7, Jet2(1.0)));

    for (int i = 1; i <= 4; ++i) c.h_to_e.push_back(one_form(7, i, c.f));
    c.h_to_e.push_back(one_form(7, 5, c.f * c.a) + one_form(7, 6, -c.f * c.b));
    c.h_to_e.push_back(one_form(7, 5, c.f * c.b) + one_form(7, 6, c.f * c.a));
    c.h_to_e.push_back(one_form(7, 7, Jet2(1.0)));

    Form<Jet2> phi_h = substitute(c.phi_mixed, c.e_to_h);
    c.structure_h = G2Structure<Jet2>{phi_h, hodge(phi_h)};
    return c;
}

/// Torsion of the warped structure at t: the closed-form expressions over
/// the fiber torsion record, reported in both coordinate systems, together
/// with the codifferential of τ₁ and the scalar curvature.
struct WarpedG2Result {
    WarpedG2Coords coords;
    TorsionG2<Jet2> torsion_h;      // orthonormal coordinates (norms are metric norms)
    TorsionG2<Jet2> torsion_mixed;  // fiber-form/dt presentation
    double delta_tau1 = 0.0;
    double scal = 0.0;
    double dphi_norm = 0.0;  // reference scale for vanishing thresholds
};

inline WarpedG2Result warped_g2_torsion(const SU3FiberEntry& fiber, const WarpProfile& w, double t) {
    using warp_detail::lift_fiber;
    using warp_detail::wedge_dt;
    const TorsionSU3& ts = fiber.torsion;
    WarpedG2Result r;
    r.coords = warped_g2_coords(fiber.structure, w, t);
    const Jet2 &f = r.coords.f, &a = r.coords.a, &b = r.coords.b;
    Jet2 fp = warp_detail::derivative_jet(f);
    Jet2 ap = warp_detail::derivative_jet(a);
    Jet2 bp = warp_detail::derivative_jet(b);
    Jet2 pi0(ts.pi0.to_double()), sg0(ts.sigma0.to_double());

    const SU3Structure& s = fiber.structure;
    Form<Exact> omega2 = wedge(s.omega, s.omega);
    auto L = [](const Form<Exact>& x) { return lift_fiber(x, 7); };
    Form<Jet2> pi1 = L(ts.pi1), nu1 = L(ts.nu1), pi2 = L(ts.pi2), sg2 = L(ts.sigma2);
    Form<Jet2> om = L(s.omega), pp = L(s.psi_plus), pm = L(s.psi_minus);
    Form<Jet2> h_nu1_om2 = L(hodge(wedge(ts.nu1, omega2)));
    Form<Jet2> h_pi1_om2 = L(hodge(wedge(ts.pi1, omega2)));
    Form<Jet2> h_pi1_pp = L(hodge(wedge(ts.pi1, s.psi_plus)));
    Form<Jet2> h_pi1_pm = L(hodge(wedge(ts.pi1, s.psi_minus)));
    Form<Jet2> h_nu1_pp = L(hodge(wedge(ts.nu1, s.psi_plus)));
    Form<Jet2> h_nu1_pm = L(hodge(wedge(ts.nu1, s.psi_minus)));
    Form<Jet2> h_nu1_om = L(hodge(wedge(ts.nu1, s.omega)));
    Form<Jet2> h_pi1_om = L(hodge(wedge(ts.pi1, s.omega)));
    Form<Jet2> h_nu3 = L(hodge(ts.nu3));

    TorsionG2<Jet2>& tm = r.torsion_mixed;
    tm.tau0 = (Jet2(4.0) / (Jet2(7.0) * f)) *
              (Jet2(3.0) * pi0 * a - Jet2(3.0) * sg0 * b + f * a * bp - f * b * ap);

    Jet2 v = (pi0 * b + sg0 * a + Jet2(2.0) * fp) / (Jet2(2.0) * f);
    tm.tau1 = warp_detail::one_form(7, 7, v) + (Jet2(1.0) / Jet2(6.0)) * (nu1 + pi1);

    Jet2 third(1.0 / 3.0), two_thirds(2.0 / 3.0), half(0.5);
    tm.tau2 = -two_thirds * wedge_dt(h_nu1_om2) + third * wedge_dt(h_pi1_om2) -
              third * f * b * h_pi1_pp - third * f * a * h_pi1_pm + two_thirds * f * b * h_nu1_pp +
              two_thirds * f * a * h_nu1_pm - f * b * pi2 - f * a * sg2;

    Jet2 f2 = f * f;
    Jet2 c314(3.0 / 14.0), c27(2.0 / 7.0);
    tm.tau3 = -c314 * f2 * (pi0 * a * a - sg0 * a * b - Jet2(2.0) * f * bp) * pp +
              c314 * f2 * (pi0 * a * b - sg0 * b * b + Jet2(2.0) * f * ap) * pm +
              c27 * f * (pi0 * a - sg0 * b - Jet2(2.0) * f * (a * bp - b * ap)) * wedge_dt(om) -
              half * f2 * h_nu1_om + half * f2 * h_pi1_om + half * f * a * wedge_dt(h_pi1_pp) -
              half * f * b * wedge_dt(h_pi1_pm) - half * f * a * wedge_dt(h_nu1_pp) +
              half * f * b * wedge_dt(h_nu1_pm) + f * wedge_dt(a * pi2 - b * sg2) - f2 * h_nu3;

    r.torsion_h.tau0 = tm.tau0;
    r.torsion_h.tau1 = substitute(tm.tau1, r.coords.e_to_h);
    r.torsion_h.tau2 = substitute(tm.tau2, r.coords.e_to_h);
    r.torsion_h.tau3 = substitute(tm.tau3, r.coords.e_to_h);

    // δτ₁ of the warped metric for τ₁ = v dt + μ₁ with μ₁ constant on the
    // fiber: δτ₁ = −(v f⁶)'/f⁶ + δ₆μ₁ / f².
    double delta6_mu1 = 0.0;
    if (fiber.frame) {
        Form<Exact> mu1 = Exact::ratio(1, 6) * (ts.nu1 + ts.pi1);
        delta6_mu1 = fiber.frame->codifferential(mu1).coeff(0).to_double();
    } else if (!ts.nu1.is_zero_form() || !ts.pi1.is_zero_form()) {
        throw HypothesisError("fiber_class",
                              "1-form fiber torsion requires a frame to compute its codifferential");
    }
    r.delta_tau1 = -(v.d1 + 6.0 * v.v * f.d1 / f.v) + delta6_mu1 / (f.v * f.v);

    auto numeric = [](const Form<Jet2>& x) { return value_part(x); };
    TorsionG2<double> tn;
    tn.tau0 = r.torsion_h.tau0.v;
    tn.tau1 = numeric(r.torsion_h.tau1);
    tn.tau2 = numeric(r.torsion_h.tau2);
    tn.tau3 = numeric(r.torsion_h.tau3);
    r.scal = g2_scalar(tn, r.delta_tau1);

    G2Structure<double> gh{numeric(r.coords.structure_h.phi), numeric(r.coords.structure_h.star_phi)};
    auto [dphi, dstar] = g2_differentials(gh, tn);
    r.dphi_norm = std::sqrt(std::max(norm2(dphi), norm2(dstar)));
    return r;
}

/// Residuals of the nine vanishing conditions of the warped torsion:
/// i) 3π₀α − 3σ₀β + f(αβ'−βα');   (τ₀)
/// ii) σ₀α + π₀β + 2f', iii) ‖π₁+ν₁‖;   (τ₁)
/// iv) ‖π₁−2ν₁‖, v) ‖βπ₂+ασ₂‖;   (τ₂)
/// vi) π₀α − σ₀β − 2f(αβ'−βα'), vii) ‖π₁−ν₁‖, viii) ‖απ₂−βσ₂‖, ix) ‖ν₃‖. (τ₃)
inline std::vector<double> cor_g2_conditions(const SU3FiberEntry& fiber, const WarpProfile& w, double t) {
    const TorsionSU3& ts = fiber.torsion;
    Jet2 f = w.f(t), a = w.alpha(t), b = w.beta(t);
    double fv = f.v, fp = f.d1, av = a.v, ap = a.d1, bv = b.v, bp = b.d1;
    double pi0 = ts.pi0.to_double(), sg0 = ts.sigma0.to_double();
    auto fnorm = [](const Form<double>& x) { return std::sqrt(std::abs(norm2(x))); };
    Form<double> pi1 = to_numeric(ts.pi1), nu1 = to_numeric(ts.nu1);
    Form<double> pi2 = to_numeric(ts.pi2), sg2 = to_numeric(ts.sigma2);
    double theta_term = fv * (av * bp - bv * ap);
    return {std::abs(3.0 * pi0 * av - 3.0 * sg0 * bv + theta_term),
            std::abs(sg0 * av + pi0 * bv + 2.0 * fp),
            fnorm(pi1 + nu1),
            fnorm(pi1 - 2.0 * nu1),
            fnorm(bv * pi2 + av * sg2),
            std::abs(pi0 * av - sg0 * bv - 2.0 * theta_term),
            fnorm(pi1 - nu1),
            fnorm(av * pi2 - bv * sg2),
            fnorm(to_numeric(ts.nu3))};
}

/// Independent path to the same torsion: dφ and d*₇φ are computed by the
/// Leibniz rule in mixed coordinates (fiber structure constants plus jet
/// derivatives in t), converted to the orthonormal coframe, and decomposed by
/// the extraction operator. Requires a frame-backed fiber.
struct CrosscheckReport {
    double max_deviation = 0.0;     // closed form vs extracted, componentwise
    double star_residual = 0.0;     // hodge(φ) vs the mixed-coordinate dual expression
    double membership_residual = 0.0;
    double reference = 0.0;         // scale of the compared differentials
    bool ok = false;                // deviation within tol × reference
};

inline CrosscheckReport warped_g2_generic_crosscheck(const SU3FiberEntry& fiber, const WarpProfile& w,
                                                     double t, double tol = 1e-9) {
    using warp_detail::lift_fiber;
    if (!fiber.frame)
        throw HypothesisError("fiber_class", "generic cross-check requires a frame-backed fiber");
    WarpedG2Result closed = warped_g2_torsion(fiber, w, t);
    const WarpedG2Coords& c = closed.coords;

    Form<Jet2> star_mixed = substitute(c.structure_h.star_phi, c.h_to_e);
    Form<Jet2> dphi_mixed = warped_d(c.phi_mixed, *fiber.frame);
    Form<Jet2> dstar_mixed = warped_d(star_mixed, *fiber.frame);
    Form<Jet2> dphi_h = substitute(dphi_mixed, c.e_to_h);
    Form<Jet2> dstar_h = substitute(dstar_mixed, c.e_to_h);

    G2Structure<double> gh{value_part(c.structure_h.phi), value_part(c.structure_h.star_phi)};
    TorsionG2<double> extracted = g2_torsion(gh, value_part(dphi_h), value_part(dstar_h));

    CrosscheckReport rep;
    rep.reference = std::max(1.0, std::max(value_part(dphi_h).max_abs(), value_part(dstar_h).max_abs()));
    // Dual-expression consistency: *₇φ = ½f⁴ω∧ω + f³(βψ₊+αψ₋)∧dt.
    const SU3Structure& s = fiber.structure;
    Jet2 f4 = c.f * c.f * c.f * c.f, f3 = c.f * c.f * c.f;
    Form<Jet2> om = lift_fiber(s.omega, 7), pp = lift_fiber(s.psi_plus, 7), pm = lift_fiber(s.psi_minus, 7);
    Form<Jet2> star_claim =
        Jet2(0.5) * f4 * wedge(om, om) + f3 * warp_detail::wedge_dt(c.b * pp + c.a * pm);
    rep.star_residual = value_part(star_mixed - star_claim).max_abs();

    auto dev = [](const Form<double>& x, const Form<Jet2>& y) { return (x - value_part(y)).max_abs(); };
    rep.max_deviation = std::abs(extracted.tau0 - closed.torsion_h.tau0.v);
    rep.max_deviation = std::max(rep.max_deviation, dev(extracted.tau1, closed.torsion_h.tau1));
    rep.max_deviation = std::max(rep.max_deviation, dev(extracted.tau2, closed.torsion_h.tau2));
    rep.max_deviation = std::max(rep.max_deviation, dev(extracted.tau3, closed.torsion_h.tau3));
    rep.membership_residual = g2_membership_residual(gh, extracted);
    rep.ok = rep.max_deviation <= tol * rep.reference;
    return rep;
}

/// Residual of the warped-Einstein equation (f')² + (λ/d) f² − μ/(d−1).
inline double einstein_profile_residual(const ScalarFn& f, double lambda, double mu, int d, double t) {
    if (d < 2) throw std::invalid_argument("einstein_profile_residual: d must be at least 2");
    Jet2 j = f(t);
    return j.d1 * j.d1 + (lambda / d) * j.v * j.v - mu / (d - 1.0);
}

/// The five admissible (μ, λ, f) solution triples of the warped-Einstein
/// equation in fiber dimension d.
struct ProfileRow {
    std::string f_name;
    double mu;
    double lambda;
};

inline std::vector<ProfileRow> profile_catalog(int d) {
    return {{"cosh", -(d - 1.0), -double(d)},
            {"exp", 0.0, -double(d)},
            {"sinh", d - 1.0, -double(d)},
            {"t", d - 1.0, 0.0},
            {"sin", d - 1.0, double(d)}};
}

/// Looks up λ for (f, μ) in the catalog; throws if the pair is inadmissible.
inline double profile_lambda(const std::string& f_name, double mu, int d, double tol = 1e-9) {
    for (const ProfileRow& row : profile_catalog(d))
        if (row.f_name == f_name && std::abs(row.mu - mu) < tol) return row.lambda;
    throw HypothesisError("einstein_pairing",
                          "no Einstein pairing for f = " + f_name + " with fiber constant " +
                              std::to_string(mu));
}

// ---------------------------------------------------------------------------
// Warped 8-dimensional structures over 7-dimensional fibers.
// ---------------------------------------------------------------------------

struct WarpedSpin7Coords {
    Jet2 f;
    Form<Jet2> phi_mixed{8, 4};
    Spin7Structure<Jet2> structure_h;
    std::vector<Form<Jet2>> e_to_h, h_to_e;
};

inline WarpedSpin7Coords warped_spin7_coords(const ScalarFn& f_fn, double t) {
    using warp_detail::lift_fiber;
    using warp_detail::one_form;
    WarpedSpin7Coords c;
    c.f = f_fn(t);
    if (c.f.v == 0.0) throw HypothesisError("domain_parameter", "warping function vanishes at sample t");
    G2Structure<Exact> g = canonical_g2<Exact>();
    Jet2 f3 = c.f * c.f * c.f, f4 = f3 * c.f;
    c.phi_mixed = f3 * warp_detail::wedge_dt(lift_fiber(g.phi, 8)) + f4 * lift_fiber(g.star_phi, 8);
    Jet2 inv_f = Jet2(1.0) / c.f;
    for (int i = 1; i <= 7; ++i) {
        c.e_to_h.push_back(one_form(8, i, inv_f));
        c.h_to_e.push_back(one_form(8, i, c.f));
    }
    c.e_to_h.push_back(one_form(8, 8, Jet2(1.0)));
    c.h_to_e.push_back(one_form(8, 8, Jet2(1.0)));
    Form<Jet2> phi_h = substitute(c.phi_mixed, c.e_to_h);
    c.structure_h = Spin7Structure<Jet2>{phi_h};
    return c;
}

struct WarpedSpin7Result {
    WarpedSpin7Coords coords;
    TorsionSpin7<Jet2> torsion_h;
    TorsionSpin7<Jet2> torsion_mixed;
    double delta_lambda1 = 0.0;
    double scal = 0.0;
    double dphi_norm = 0.0;
};

inline WarpedSpin7Result warped_spin7_torsion(const G2FiberEntry& fiber, const ScalarFn& f_fn, double t) {
    using warp_detail::lift_fiber;
    using warp_detail::wedge_dt;
    WarpedSpin7Result r;
    r.coords = warped_spin7_coords(f_fn, t);
    const Jet2& f = r.coords.f;
    Jet2 fp = warp_detail::derivative_jet(f);
    const TorsionG2<Exact>& ts = fiber.torsion;
    G2Structure<Exact> g = canonical_g2<Exact>();

    Jet2 tau0(ts.tau0.to_double());
    Form<Jet2> tau1 = lift_fiber(ts.tau1, 8), tau2 = lift_fiber(ts.tau2, 8);
    Form<Jet2> phi = lift_fiber(g.phi, 8), star_phi = lift_fiber(g.star_phi, 8);
    Form<Jet2> star_tau3 = lift_fiber(hodge(ts.tau3), 8);

    Jet2 u = (tau0 + Jet2(4.0) * fp) / f;
    Jet2 f3 = f * f * f, f4 = f3 * f;
    TorsionSpin7<Jet2>& tm = r.torsion_mixed;
    tm.lambda1 = warp_detail::one_form(8, 8, u) + Jet2(24.0 / 7.0) * tau1;
    tm.lambda5 = Jet2(-3.0 / 7.0) * f3 * wedge_dt(wedge(tau1, phi)) +
                 Jet2(4.0 / 7.0) * f4 * wedge(tau1, star_phi) + f4 * wedge(tau2, phi) +
                 f3 * wedge_dt(star_tau3);

    r.torsion_h.lambda1 = substitute(tm.lambda1, r.coords.e_to_h);
    r.torsion_h.lambda5 = substitute(tm.lambda5, r.coords.e_to_h);

    // δλ₁ for λ₁ = u dt + (24/7)τ₁: −(u f⁷)'/f⁷ + (24/7) δ₇τ₁ / f².
    r.delta_lambda1 =
        -(u.d1 + 7.0 * u.v * f.d1 / f.v) + (24.0 / 7.0) * fiber.delta_tau1.to_double() / (f.v * f.v);

    TorsionSpin7<double> tn;
    tn.lambda1 = value_part(r.torsion_h.lambda1);
    tn.lambda5 = value_part(r.torsion_h.lambda5);
    r.scal = spin7_scalar(tn, r.delta_lambda1);

    Form<double> phi_h = value_part(r.coords.structure_h.phi4);
    Form<double> dphi = wedge(tn.lambda1, phi_h) + tn.lambda5;
    r.dphi_norm = std::sqrt(norm2(dphi));
    return r;
}

/// Residuals of the vanishing conditions for the warped 8-dim torsion:
/// i) τ₀ + 4f' (λ₁ dt-slot), ii) ‖τ₁‖ (λ₁ fiber slot),
/// iii) ‖τ₁‖, iv) ‖τ₂‖, v) ‖τ₃‖ (λ₅ slots).
inline std::vector<double> cor_spin7_conditions(const G2FiberEntry& fiber, const ScalarFn& f_fn, double t) {
    Jet2 f = f_fn(t);
    double tau1n = std::sqrt(std::abs(norm2(fiber.torsion.tau1).to_double()));
    return {std::abs(fiber.torsion.tau0.to_double() + 4.0 * f.d1), tau1n, tau1n,
            std::sqrt(std::abs(norm2(fiber.torsion.tau2).to_double())),
            std::sqrt(std::abs(norm2(fiber.torsion.tau3).to_double()))};
}

/// Independent extraction path for the 8-dim torsion: dϕ assembled by the
/// Leibniz rule from the fiber differentials (rebuilt from the fiber torsion
/// record), converted to the orthonormal coframe and decomposed.
inline CrosscheckReport warped_spin7_generic_crosscheck(const G2FiberEntry& fiber, const ScalarFn& f_fn,
                                                        double t, double tol = 1e-9) {
    using warp_detail::lift_fiber;
    WarpedSpin7Result closed = warped_spin7_torsion(fiber, f_fn, t);
    const WarpedSpin7Coords& c = closed.coords;
    G2Structure<Exact> g = canonical_g2<Exact>();
    auto [dphi7, dstar7] = g2_differentials(g, fiber.torsion);

    Jet2 f3 = c.f * c.f * c.f, f4 = f3 * c.f;
    Jet2 fp = warp_detail::derivative_jet(c.f);
    // dϕ = f³ dφ∧dt + 4f³f' *₇φ∧dt + f⁴ d*₇φ.
    Form<Jet2> dphi_mixed = f3 * warp_detail::wedge_dt(lift_fiber(dphi7, 8)) +
                            Jet2(4.0) * f3 * fp * warp_detail::wedge_dt(lift_fiber(g.star_phi, 8)) +
                            f4 * lift_fiber(dstar7, 8);
    Form<Jet2> dphi_h = substitute(dphi_mixed, c.e_to_h);

    Spin7Structure<double> sh{value_part(c.structure_h.phi4)};
    TorsionSpin7<double> extracted = spin7_torsion(sh, value_part(dphi_h));

    CrosscheckReport rep;
    rep.reference = std::max(1.0, value_part(dphi_h).max_abs());
    rep.max_deviation = (extracted.lambda1 - value_part(closed.torsion_h.lambda1)).max_abs();
    rep.max_deviation =
        std::max(rep.max_deviation, (extracted.lambda5 - value_part(closed.torsion_h.lambda5)).max_abs());
    rep.membership_residual = spin7_membership_residual(sh, extracted);
    // Self-duality of the product 4-form in orthonormal coordinates.
    rep.star_residual = value_part(hodge(c.structure_h.phi4) - c.structure_h.phi4).max_abs();
    rep.ok = rep.max_deviation <= tol * rep.reference;
    return rep;
}

// ---------------------------------------------------------------------------
// Named warped families.
// ---------------------------------------------------------------------------

/// A constructed family instance: the profile, the predicted strict class and
/// the predicted Einstein constant of the 7-dim metric.
struct G2Family {
    WarpProfile profile;
    G2Class expected_class;
    double lambda = 0.0;
    std::string description;
};

namespace warp_detail {

inline std::map<std::string, std::string> parse_params(const std::string& spec, std::string& family) {
    std::map<std::string, std::string> out;
    size_t colon = spec.find(':');
    family = spec.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::string rest = spec.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw HypothesisError("family_spec", "malformed family parameter '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

inline double param_num(const std::map<std::string, std::string>& p, const std::string& key,
                        std::optional<double> fallback = std::nullopt) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (fallback) return *fallback;
        throw HypothesisError("family_spec", "missing family parameter '" + key + "'");
    }
    size_t pos = 0;
    double val = std::stod(it->second, &pos);
    if (pos != it->second.size())
        throw HypothesisError("family_spec", "bad numeric value for '" + key + "'");
    return val;
}

inline std::string param_str(const std::map<std::string, std::string>& p, const std::string& key,
                             const std::string& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

/// Domain for the unbounded profiles (an interior window of the half-line).
constexpr double kOpenDomainMax = 3.0;

inline void require_unit_scalars(const SU3FiberEntry& fiber) {
    Exact norm = fiber.torsion.pi0 * fiber.torsion.pi0 + fiber.torsion.sigma0 * fiber.torsion.sigma0;
    if (norm != Exact(4))
        throw HypothesisError("fiber_class", "family requires fiber scalar torsion with π₀²+σ₀² = 4");
    SU3Class c = su3_class(fiber.torsion);
    if (c.w2p || c.w2m || c.w3 || c.w4 || c.w5)
        throw HypothesisError("fiber_class", "family requires a fiber with scalar torsion only");
}

inline double coupled_constant(const SU3FiberEntry& fiber) {
    SU3Class c = su3_class(fiber.torsion);
    if (!c.coupled_c)
        throw HypothesisError("fiber_class", "family requires a coupled fiber (dω = cψ₊)");
    return c.coupled_c->to_double();
}

inline double lambda_for(const std::string& f_name) {
    if (f_name == "t") return 0.0;
    if (f_name == "sin") return 6.0;
    if (f_name == "sinh" || f_name == "exp" || f_name == "cosh") return -6.0;
    throw HypothesisError("profile_name", "unsupported warping function '" + f_name + "'");
}

inline std::pair<double, double> default_domain(const std::string& f_name) {
    if (f_name == "sin") return {0.0, M_PI};
    if (f_name == "exp" || f_name == "cosh") return {-kOpenDomainMax, kOpenDomainMax};
    return {0.0, kOpenDomainMax};  // t, sinh
}

}  // namespace warp_detail

/// Builds a named warped family over the given fiber. Family spec syntax:
/// "name" or "name:key=val,key=val". Families:
///   cone_parallel                        f = t, (α,β) = (−σ₀/2, −π₀/2)
///   sine_cone_np:eps=±1                  f = sin, (α,β) = (cos(εt+ρ), sin(εt+ρ))
///   lcp:f=<t|sin|sinh|exp>,eps=±1        constant (α,β) = (εσ₀/2, επ₀/2)
///   coclosed_theta:f=<t|sin|sinh>        θ(t) = a − arccos(−2f'/C)
///   cosh_cone                            f = cosh, (α,β) = (1,0) over a 1-form-torsion fiber
///   coupled_const:variant=<1|2|3>,f=...  constant (α,β) over a coupled fiber
///   coupled_theta:f=<sin|sinh>           α = (3/c) f'
///   x234_theta:f=<t|sin|sinh>            θ = 2 arctan(w(t)^{−2c})
///   x1x4_theta:f=<t|sin|sinh>,C=...      θ = 2 arctan(e^C w(t))
///   family_56:C=...                      f = sin, θ = 2 arctan(e^C tan(t/2))
///   family_57:a=...,b=...[,f=...]        constant-coefficient deformation family
/// A constructor for a strict three-slot family combining the scalar, 2-form
/// and 1-form torsion slots is deliberately not provided: it would need a
/// fiber with σ₀ = −2 and ν₁ = π₁ ≠ 0, whose existence is an open question.
inline G2Family make_g2_family(const std::string& spec, const SU3FiberEntry& fiber) {
    std::string family;
    auto params = warp_detail::parse_params(spec, family);
    G2Family out;
    double pi0 = fiber.torsion.pi0.to_double();
    double sg0 = fiber.torsion.sigma0.to_double();

    if (family == "cone_parallel") {
        warp_detail::require_unit_scalars(fiber);
        out.profile = {named_fn("t"), constant_fn(-sg0 / 2.0), constant_fn(-pi0 / 2.0), 0.0,
                       warp_detail::kOpenDomainMax, "t"};
        out.expected_class = G2Class{};
        out.lambda = 0.0;
        out.description = "torsion-free cone";
        return out;
    }
    if (family == "sine_cone_np") {
        warp_detail::require_unit_scalars(fiber);
        double eps = warp_detail::param_num(params, "eps", 1.0);
        if (eps != 1.0 && eps != -1.0)
            throw HypothesisError("family_spec", "eps must be +1 or -1");
        double rho = std::atan2(-pi0 / 2.0, -sg0 / 2.0);
        out.profile = {named_fn("sin"),
                       [eps, rho](double t) { return cos(Jet2(eps) * Jet2::var(t) + Jet2(rho)); },
                       [eps, rho](double t) { return sin(Jet2(eps) * Jet2::var(t) + Jet2(rho)); },
                       0.0, M_PI, "sin"};
        out.expected_class = G2Class{true, false, false, false};
        out.lambda = 6.0;
        out.description = "sine-cone with scalar torsion 4*eps";
        return out;
    }
    if (family == "lcp") {
        std::string f_name = warp_detail::param_str(params, "f", "exp");
        double eps = warp_detail::param_num(params, "eps", 1.0);
        if (eps != 1.0 && eps != -1.0)
            throw HypothesisError("family_spec", "eps must be +1 or -1");
        SU3Class fc = su3_class(fiber.torsion);
        double alpha, beta;
        bool torsion_free_fiber = !(fc.w1p || fc.w1m || fc.w2p || fc.w2m || fc.w3 || fc.w4 || fc.w5);
        if (torsion_free_fiber) {
            if (f_name != "exp")
                throw HypothesisError("fiber_class",
                                      "a torsion-free fiber admits this family only with f = exp");
            alpha = 1.0;
            beta = 0.0;
        } else {
            warp_detail::require_unit_scalars(fiber);
            if (f_name == "exp" || f_name == "cosh")
                throw HypothesisError("einstein_pairing",
                                      "a scalar-torsion fiber admits this family only with f in {t, sin, sinh}");
            alpha = eps * sg0 / 2.0;
            beta = eps * pi0 / 2.0;
        }
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), constant_fn(alpha), constant_fn(beta), lo, hi, f_name};
        bool parallel = (!torsion_free_fiber && f_name == "t" && eps == -1.0);
        out.expected_class = parallel ? G2Class{} : G2Class{false, false, false, true};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "conformally scaled cone with 1-form torsion";
        return out;
    }
    if (family == "coclosed_theta") {
        std::string f_name = warp_detail::param_str(params, "f", "t");
        double C = std::sqrt(pi0 * pi0 + sg0 * sg0);
        SU3Class fc = su3_class(fiber.torsion);
        if (fc.w2p || fc.w2m || fc.w4 || fc.w5 || C == 0.0)
            throw HypothesisError("fiber_class",
                                  "family requires a fiber with scalar and 3-form torsion only");
        if ((f_name == "sinh" && C <= 2.0) || C < 2.0)
            throw HypothesisError("domain_parameter",
                                  "scalar-torsion magnitude C must exceed 2 for this profile");
        double a = std::acos(sg0 / C);
        ScalarFn theta;
        double lo = 0.0, hi;
        if (f_name == "t") {
            double th = a - std::acos(-2.0 / C);
            theta = constant_fn(th);
            hi = warp_detail::kOpenDomainMax;
        } else if (f_name == "sin") {
            theta = [a, C](double t) { return Jet2(a) - acos(Jet2(-2.0 / C) * cos(Jet2::var(t))); };
            hi = M_PI;
        } else if (f_name == "sinh") {
            theta = [a, C](double t) { return Jet2(a) - acos(Jet2(-2.0 / C) * cosh(Jet2::var(t))); };
            hi = std::log((C + std::sqrt(C * C - 4.0)) / 2.0);
        } else {
            throw HypothesisError("profile_name", "coclosed family admits f in {t, sin, sinh}");
        }
        out.profile = {named_fn(f_name), [theta](double t) { return cos(theta(t)); },
                       [theta](double t) { return sin(theta(t)); }, lo, hi, f_name};
        out.expected_class = G2Class{true, false, true, false};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "coclosed cone with rotation angle locked to the warping slope";
        return out;
    }
    if (family == "cosh_cone") {
        SU3Class fc = su3_class(fiber.torsion);
        if (!(fc.w5 && !(fc.w1p || fc.w1m || fc.w2p || fc.w2m || fc.w3 || fc.w4)))
            throw HypothesisError("fiber_class", "family requires a fiber whose torsion is a 1-form");
        out.profile = {named_fn("cosh"), constant_fn(1.0), constant_fn(0.0),
                       -warp_detail::kOpenDomainMax, warp_detail::kOpenDomainMax, "cosh"};
        out.expected_class = G2Class{false, true, true, true};
        out.lambda = -6.0;
        out.description = "hyperbolic cosine cone over a 1-form-torsion fiber";
        return out;
    }
    if (family == "coupled_const") {
        double c = warp_detail::coupled_constant(fiber);
        if (std::abs(c) <= 3.0)
            throw HypothesisError("domain_parameter", "coupled constant must satisfy |c| > 3");
        int variant = static_cast<int>(warp_detail::param_num(params, "variant", 1.0));
        std::string f_name = warp_detail::param_str(params, "f", "t");
        double alpha, beta;
        if (variant == 1) {
            alpha = 1.0;
            beta = 0.0;
            out.expected_class = G2Class{false, true, false, true};
        } else if (variant == 2) {
            alpha = 0.0;
            beta = 1.0;
            out.expected_class = G2Class{true, false, true, true};
        } else if (variant == 3) {
            if (f_name != "t")
                throw HypothesisError("profile_name", "variant 3 admits only f = t");
            alpha = 3.0 / c;
            beta = std::sqrt(c * c - 9.0) / c;
            out.expected_class = G2Class{true, true, true, false};
        } else {
            throw HypothesisError("family_spec", "variant must be 1, 2 or 3");
        }
        if (f_name != "t" && f_name != "sin" && f_name != "sinh")
            throw HypothesisError("profile_name", "family admits f in {t, sin, sinh}");
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), constant_fn(alpha), constant_fn(beta), lo, hi, f_name};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "constant-angle cone over a coupled fiber";
        return out;
    }
    if (family == "coupled_theta") {
        double c = warp_detail::coupled_constant(fiber);
        if (std::abs(c) <= 3.0)
            throw HypothesisError("domain_parameter", "coupled constant must satisfy |c| > 3");
        std::string f_name = warp_detail::param_str(params, "f", "sin");
        double lo = 0.0, hi;
        ScalarFn fpj;
        if (f_name == "sin") {
            hi = M_PI;
            fpj = [](double t) { return cos(Jet2::var(t)); };
        } else if (f_name == "sinh") {
            hi = std::log((std::abs(c) + std::sqrt(c * c - 9.0)) / 3.0);
            fpj = [](double t) { return cosh(Jet2::var(t)); };
        } else {
            throw HypothesisError("profile_name", "family admits f in {sin, sinh}");
        }
        ScalarFn alpha = [c, fpj](double t) { return Jet2(3.0 / c) * fpj(t); };
        ScalarFn beta = [alpha](double t) { return sqrt(Jet2(1.0) - alpha(t) * alpha(t)); };
        out.profile = {named_fn(f_name), alpha, beta, lo, hi, f_name};
        out.expected_class = G2Class{true, true, true, false};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "cone over a coupled fiber with angle locked to kill the 1-form slot";
        return out;
    }
    auto theta_from_u = [](const ScalarFn& u) {
        ScalarFn alpha = [u](double t) {
            Jet2 x = u(t);
            return (Jet2(1.0) - x * x) / (Jet2(1.0) + x * x);
        };
        ScalarFn beta = [u](double t) {
            Jet2 x = u(t);
            return Jet2(2.0) * x / (Jet2(1.0) + x * x);
        };
        return std::pair(alpha, beta);
    };
    auto half_angle_base = [](const std::string& f_name) -> ScalarFn {
        if (f_name == "t") return [](double t) { return Jet2::var(t); };
        if (f_name == "sin") return [](double t) { return tan(Jet2(0.5) * Jet2::var(t)); };
        if (f_name == "sinh") return [](double t) { return tanh(Jet2(0.5) * Jet2::var(t)); };
        throw HypothesisError("profile_name", "family admits f in {t, sin, sinh}");
    };
    if (family == "x234_theta") {
        double c = warp_detail::coupled_constant(fiber);
        if (std::abs(c) <= 3.0)
            throw HypothesisError("domain_parameter", "coupled constant must satisfy |c| > 3");
        std::string f_name = warp_detail::param_str(params, "f", "t");
        ScalarFn w = half_angle_base(f_name);
        ScalarFn u = [w, c](double t) { return pow(w(t), -2.0 * c); };
        auto [alpha, beta] = theta_from_u(u);
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), alpha, beta, lo, hi, f_name};
        out.expected_class = G2Class{false, true, true, true};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "rotating cone over a coupled fiber with vanishing scalar slot";
        return out;
    }
    if (family == "x1x4_theta" || family == "family_56") {
        warp_detail::require_unit_scalars(fiber);
        std::string f_name =
            family == "family_56" ? "sin" : warp_detail::param_str(params, "f", "t");
        double C = warp_detail::param_num(params, "C", 0.0);
        ScalarFn w = half_angle_base(f_name);
        double scale = std::exp(C);
        ScalarFn u = [w, scale](double t) { return Jet2(scale) * w(t); };
        auto [alpha, beta] = theta_from_u(u);
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), alpha, beta, lo, hi, f_name};
        bool pure_scalar = (f_name == "sin" && C == 0.0);
        out.expected_class = pure_scalar ? G2Class{true, false, false, false}
                                         : G2Class{true, false, false, true};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "rotating cone with scalar and 1-form torsion";
        return out;
    }
    if (family == "const_angle") {
        // Fixed rotation angle (α,β) over an arbitrary fiber; the predicted
        // class comes from the nine vanishing conditions swept over the grid.
        double a = warp_detail::param_num(params, "a");
        double b = warp_detail::param_num(params, "b");
        if (std::abs(a * a + b * b - 1.0) > 1e-12)
            throw HypothesisError("family_spec", "(a,b) must lie on the unit circle");
        std::string f_name = warp_detail::param_str(params, "f", "t");
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), constant_fn(a), constant_fn(b), lo, hi, f_name};
        double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
        for (double t : chebyshev_grid(lo, hi)) {
            std::vector<double> r = cor_g2_conditions(fiber, out.profile, t);
            c1 = std::max(c1, r[0]);
            c4 = std::max({c4, r[1], r[2]});
            c2 = std::max({c2, r[3], r[4]});
            c3 = std::max({c3, r[5], r[6], r[7], r[8]});
        }
        const double tol = 1e-9;
        out.expected_class = G2Class{c1 > tol, c2 > tol, c3 > tol, c4 > tol};
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "fixed-angle cone";
        return out;
    }
    if (family == "family_57") {
        double a = warp_detail::param_num(params, "a");
        double b = warp_detail::param_num(params, "b");
        std::string f_name = warp_detail::param_str(params, "f", "t");
        double alpha, beta;
        G2Class cls;
        auto near = [](double x, double y) { return std::abs(x - y) < 1e-12; };
        if (f_name == "t") {
            double c = warp_detail::coupled_constant(fiber);
            if (std::abs(c) <= 3.0)
                throw HypothesisError("domain_parameter", "coupled constant must satisfy |c| > 3");
            double a0 = 3.0 / c, b0 = std::sqrt(c * c - 9.0) / c;
            if (std::abs(a0 * a0 * a * a + b0 * b0 * b * b - 1.0) > 1e-12)
                throw HypothesisError("family_spec", "(a,b) must lie on the deformation ellipse");
            alpha = a * a0;
            beta = b * b0;
            if (near(a, 1.0) && near(b, 1.0))
                cls = G2Class{true, true, true, false};
            else if (near(a, 1.0 / a0) && near(b, 0.0))
                cls = G2Class{false, true, false, true};
            else if (near(a, 0.0) && near(b, 1.0 / b0))
                cls = G2Class{true, false, true, true};
            else
                cls = G2Class{true, true, true, true};
        } else if (f_name == "sin" || f_name == "sinh") {
            double c = warp_detail::coupled_constant(fiber);
            if (std::abs(c) <= 3.0)
                throw HypothesisError("domain_parameter", "coupled constant must satisfy |c| > 3");
            if (std::abs(a * a + b * b - 1.0) > 1e-12)
                throw HypothesisError("family_spec", "(a,b) must lie on the unit circle");
            alpha = a;
            beta = b;
            if (near(a, 1.0) && near(b, 0.0))
                cls = G2Class{false, true, false, true};
            else if (near(a, 0.0) && near(b, 1.0))
                cls = G2Class{true, false, true, true};
            else
                cls = G2Class{true, true, true, true};
        } else {
            throw HypothesisError("profile_name", "family admits f in {t, sin, sinh}");
        }
        auto [lo, hi] = warp_detail::default_domain(f_name);
        out.profile = {named_fn(f_name), constant_fn(alpha), constant_fn(beta), lo, hi, f_name};
        out.expected_class = cls;
        out.lambda = warp_detail::lambda_for(f_name);
        out.description = "identical-metric deformation family over a coupled fiber";
        return out;
    }
    if (family == "x1x2x4_open") {
        throw HypothesisError(
            "unimplemented",
            "this three-slot family needs an Einstein fiber with scalar slot -2 and equal nonzero "
            "1-form slots; no such fiber is known and its existence is an open problem");
    }
    throw HypothesisError("family_spec", "unknown family '" + family + "'");
}

/// Classifies a warped family over the default interior grid: a torsion slot
/// is nonzero iff its norm exceeds tol × ‖dφ‖ at some grid point.
struct FamilyClassification {
    G2Class cls;
    double scal_min = 0.0, scal_max = 0.0;
    double max_unit_residual = 0.0;  // α²+β²−1 over the grid
    std::vector<double> grid;
};

inline FamilyClassification classify_g2_family(const SU3FiberEntry& fiber, const WarpProfile& w,
                                               int grid_n = 17, double tol = 1e-9) {
    FamilyClassification out;
    out.grid = chebyshev_grid(w.t_min, w.t_max, grid_n);
    bool first = true;
    for (double t : out.grid) {
        WarpedG2Result r = warped_g2_torsion(fiber, w, t);
        double bar = tol * std::max(r.dphi_norm, 1e-300);
        out.cls.x1 = out.cls.x1 || std::abs(r.torsion_h.tau0.v) > bar;
        out.cls.x2 = out.cls.x2 || std::sqrt(norm2(value_part(r.torsion_h.tau2))) > bar;
        out.cls.x3 = out.cls.x3 || std::sqrt(norm2(value_part(r.torsion_h.tau3))) > bar;
        out.cls.x4 = out.cls.x4 || std::sqrt(norm2(value_part(r.torsion_h.tau1))) > bar;
        out.scal_min = first ? r.scal : std::min(out.scal_min, r.scal);
        out.scal_max = first ? r.scal : std::max(out.scal_max, r.scal);
        out.max_unit_residual = std::max(out.max_unit_residual, profile_unit_residual(w, t));
        first = false;
    }
    return out;
}

inline Spin7Class classify_spin7_family(const G2FiberEntry& fiber, const ScalarFn& f_fn, double t_min,
                                        double t_max, int grid_n = 17, double tol = 1e-9) {
    Spin7Class cls;
    for (double t : chebyshev_grid(t_min, t_max, grid_n)) {
        WarpedSpin7Result r = warped_spin7_torsion(fiber, f_fn, t);
        double bar = tol * std::max(r.dphi_norm, 1e-300);
        cls.y1 = cls.y1 || std::sqrt(norm2(value_part(r.torsion_h.lambda1))) > bar;
        cls.y2 = cls.y2 || std::sqrt(norm2(value_part(r.torsion_h.lambda5))) > bar;
    }
    return cls;
}

}  // namespace holotor

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holotor/form.hpp"
#include "holotor/frame.hpp"
#include "holotor/linalg.hpp"

namespace holotor {

/// SU(3)-structure data (ω, ψ₊, ψ₋) on a 6-dimensional adapted coframe.
struct SU3Structure {
    Form<Exact> omega;      // degree 2
    Form<Exact> psi_plus;   // degree 3
    Form<Exact> psi_minus;  // degree 3
};

/// The canonical adapted-coframe structure:
/// ω = e12+e34+e56, ψ₊ = e135−e146−e236−e245, ψ₋ = e136+e145+e235−e246.
inline SU3Structure canonical_su3() {
    using F = Form<Exact>;
    SU3Structure s;
    s.omega = F::monomial(6, {1, 2}) + F::monomial(6, {3, 4}) + F::monomial(6, {5, 6});
    s.psi_plus = F::monomial(6, {1, 3, 5}) - F::monomial(6, {1, 4, 6}) - F::monomial(6, {2, 3, 6}) -
                 F::monomial(6, {2, 4, 5});
    s.psi_minus = F::monomial(6, {1, 3, 6}) + F::monomial(6, {1, 4, 5}) + F::monomial(6, {2, 3, 5}) -
                  F::monomial(6, {2, 4, 6});
    return s;
}

/// Almost complex structure of the adapted coframe acting on forms as a
/// pullback: Je¹ = e², Je² = −e¹, Je³ = e⁴, Je⁴ = −e³, Je⁵ = e⁶, Je⁶ = −e⁵.
template <class S>
Form<S> apply_j(const Form<S>& a) {
    if (a.dim != 6) throw std::invalid_argument("apply_j: 6-dimensional forms only");
    std::vector<Form<S>> images;
    for (int i = 1; i <= 6; ++i) {
        bool odd = (i % 2) == 1;
        int target = odd ? i + 1 : i - 1;
        Form<S> img(6, 1);
        img.add_term(Monomial(1) << (target - 1), odd ? S(1) : S(-1));
        images.push_back(img);
    }
    return substitute(a, images);
}

/// Torsion forms of an SU(3)-structure:
/// dω  = −(3/2)σ₀ψ₊ + (3/2)π₀ψ₋ + ν₁∧ω + ν₃,
/// dψ₊ = π₀ω² + π₁∧ψ₊ − π₂∧ω,
/// dψ₋ = σ₀ω² + π₁∧ψ₋ − σ₂∧ω.
struct TorsionSU3 {
    Exact pi0, sigma0;
    Form<Exact> pi1{6, 1}, nu1{6, 1};
    Form<Exact> pi2{6, 2}, sigma2{6, 2};
    Form<Exact> nu3{6, 3};
};

namespace detail {

/// Coefficients x of the orthogonal projection of r onto span{basis}: solves
/// the Gram system. The basis must be linearly independent.
inline std::vector<Exact> project_coeffs(const Form<Exact>& r, const std::vector<Form<Exact>>& basis) {
    size_t n = basis.size();
    Matrix<Exact> gram(n, std::vector<Exact>(n));
    std::vector<Exact> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        rhs[i] = inner(r, basis[i]);
        for (size_t j = 0; j < n; ++j) gram[i][j] = inner(basis[i], basis[j]);
    }
    return solve(gram, rhs);
}

/// Inverts the Lefschetz map β ↦ β∧ω on 2-forms (a bijection Λ² → Λ⁴ in
/// dimension 6): finds β with β∧ω = rho.
inline Form<Exact> lefschetz_invert(const Form<Exact>& rho, const Form<Exact>& omega) {
    std::vector<Monomial> basis2, basis4;
    for (Monomial m = 0; m < (1 << 6); ++m) {
        int p = detail::popcount(m);
        if (p == 2) basis2.push_back(m);
        if (p == 4) basis4.push_back(m);
    }
    size_t n = basis2.size();
    Matrix<Exact> a(n, std::vector<Exact>(n, Exact(0)));
    std::vector<Exact> b(n, Exact(0));
    for (size_t col = 0; col < n; ++col) {
        Form<Exact> e2(6, 2);
        e2.add_term(basis2[col], Exact(1));
        Form<Exact> image = wedge(e2, omega);
        for (size_t row = 0; row < n; ++row) a[row][col] = image.coeff(basis4[row]);
    }
    for (size_t row = 0; row < n; ++row) b[row] = rho.coeff(basis4[row]);
    std::vector<Exact> x = solve(a, b);
    Form<Exact> beta(6, 2);
    for (size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) beta.add_term(basis2[i], x[i]);
    return beta;
}

}  // namespace detail

/// Membership test for the 8-dimensional module of primitive J-invariant
/// 2-forms: Jβ = β and β∧ω² = 0.
inline bool in_omega2_8(const Form<Exact>& beta, const SU3Structure& s) {
    Form<Exact> omega2 = wedge(s.omega, s.omega);
    return (apply_j(beta) - beta).is_zero_form() && wedge(beta, omega2).is_zero_form();
}

/// Membership test for the 12-dimensional 3-form module:
/// γ∧ω = 0, γ∧ψ₊ = 0, γ∧ψ₋ = 0.
inline bool in_omega3_12(const Form<Exact>& gamma, const SU3Structure& s) {
    return wedge(gamma, s.omega).is_zero_form() && wedge(gamma, s.psi_plus).is_zero_form() &&
           wedge(gamma, s.psi_minus).is_zero_form();
}

/// Extracts the torsion forms by orthogonal projection of (dω, dψ₊, dψ₋)
/// onto the irreducible pieces, then verifies that the three differentials
/// admit a single consistent record. Exact arithmetic throughout.
inline TorsionSU3 su3_torsion(const SU3Structure& s, const FrameAlgebra& f) {
    if (f.dim != 6) throw std::invalid_argument("su3_torsion: 6-dimensional frame required");
    Form<Exact> domega = f.d(s.omega);
    Form<Exact> dpsi_p = f.d(s.psi_plus);
    Form<Exact> dpsi_m = f.d(s.psi_minus);
    Form<Exact> omega2 = wedge(s.omega, s.omega);
    Exact omega2_norm2 = norm2(omega2);  // 12 for the canonical structure

    TorsionSU3 t;
    t.pi0 = inner(dpsi_p, omega2) / omega2_norm2;
    t.sigma0 = inner(dpsi_m, omega2) / omega2_norm2;

    // 1-form slots of dψ± via Gram solves over span{e^i∧ψ±}.
    std::vector<Form<Exact>> basis_p, basis_m, basis_w;
    for (int i = 1; i <= 6; ++i) {
        Form<Exact> ei(6, 1);
        ei.add_term(Monomial(1) << (i - 1), Exact(1));
        basis_p.push_back(wedge(ei, s.psi_plus));
        basis_m.push_back(wedge(ei, s.psi_minus));
        basis_w.push_back(wedge(ei, s.omega));
    }
    std::vector<Exact> cp = detail::project_coeffs(dpsi_p, basis_p);
    std::vector<Exact> cm = detail::project_coeffs(dpsi_m, basis_m);
    for (int i = 0; i < 6; ++i) {
        if (!cp[i].is_zero()) t.pi1.add_term(Monomial(1) << i, cp[i]);
        if (cp[i] != cm[i])
            throw std::domain_error("su3_torsion: inconsistent 1-form slot between the two 3-form differentials");
    }

    // π₂, σ₂ from the Lefschetz-inverted remainders; Ω²₈ membership checked.
    Form<Exact> rem_p = t.pi0 * omega2 + wedge(t.pi1, s.psi_plus) - dpsi_p;
    Form<Exact> rem_m = t.sigma0 * omega2 + wedge(t.pi1, s.psi_minus) - dpsi_m;
    t.pi2 = detail::lefschetz_invert(rem_p, s.omega);
    t.sigma2 = detail::lefschetz_invert(rem_m, s.omega);
    if (!in_omega2_8(t.pi2, s) || !in_omega2_8(t.sigma2, s))
        throw std::domain_error("su3_torsion: 2-form slot not primitive J-invariant — not an SU(3)-structure");

    // dω: scalar slots must agree with the 3-form differentials.
    Exact psi_norm2 = norm2(s.psi_plus);  // 4 for the canonical structure
    Exact sigma0_from_domega = Exact(-2) / Exact(3) * (inner(domega, s.psi_plus) / psi_norm2);
    Exact pi0_from_domega = Exact(2) / Exact(3) * (inner(domega, s.psi_minus) / psi_norm2);
    if (sigma0_from_domega != t.sigma0 || pi0_from_domega != t.pi0)
        throw std::domain_error("su3_torsion: scalar torsion slots of dω disagree with dψ±");

    std::vector<Exact> cw = detail::project_coeffs(domega, basis_w);
    for (int i = 0; i < 6; ++i)
        if (!cw[i].is_zero()) t.nu1.add_term(Monomial(1) << i, cw[i]);

    t.nu3 = domega + Exact(3) / Exact(2) * t.sigma0 * s.psi_plus -
            Exact(3) / Exact(2) * t.pi0 * s.psi_minus - wedge(t.nu1, s.omega);
    if (!in_omega3_12(t.nu3, s))
        throw std::domain_error("su3_torsion: 3-form remainder not in the 12-dimensional module");
    return t;
}

/// Rebuilds (dω, dψ₊, dψ₋) from a torsion record.
struct SU3Differentials {
    Form<Exact> domega{6, 3}, dpsi_plus{6, 4}, dpsi_minus{6, 4};
};

inline SU3Differentials su3_differentials(const SU3Structure& s, const TorsionSU3& t) {
    Form<Exact> omega2 = wedge(s.omega, s.omega);
    SU3Differentials d;
    d.domega = Exact(-3) / Exact(2) * t.sigma0 * s.psi_plus + Exact(3) / Exact(2) * t.pi0 * s.psi_minus +
               wedge(t.nu1, s.omega) + t.nu3;
    d.dpsi_plus = t.pi0 * omega2 + wedge(t.pi1, s.psi_plus) - wedge(t.pi2, s.omega);
    d.dpsi_minus = t.sigma0 * omega2 + wedge(t.pi1, s.psi_minus) - wedge(t.sigma2, s.omega);
    return d;
}

/// Torsion-class label: one flag per irreducible component, plus the named
/// composite classes.
struct SU3Class {
    bool w1p = false;  // π₀
    bool w1m = false;  // σ₀
    bool w2p = false;  // π₂
    bool w2m = false;  // σ₂
    bool w3 = false;   // ν₃
    bool w4 = false;   // ν₁
    bool w5 = false;   // π₁
    std::optional<Exact> coupled_c;  // dω = cψ₊ constant for coupled structures

    std::string name() const {
        std::string out;
        auto app = [&out](bool flag, const char* label) {
            if (!flag) return;
            if (!out.empty()) out += "+";
            out += label;
        };
        app(w1p, "W1+");
        app(w1m, "W1-");
        app(w2p, "W2+");
        app(w2m, "W2-");
        app(w3, "W3");
        app(w4, "W4");
        app(w5, "W5");
        return out.empty() ? "torsion-free" : out;
    }

    std::vector<std::string> special_names() const {
        std::vector<std::string> out;
        bool all_zero = !(w1p || w1m || w2p || w2m || w3 || w4 || w5);
        if (all_zero) out.push_back("Calabi-Yau");
        if (w1m && !(w1p || w2p || w2m || w3 || w4 || w5)) out.push_back("nearly Kahler");
        if (!(w1p || w5 || w4 || w2p)) out.push_back("half-flat");
        if (!(w5 || w4 || w2m)) out.push_back("nearly half-flat");
        // dω = cψ₊ with c constant: class W1-⊕W2- with σ₀ ≠ 0.
        if (w1m && w2m && !(w1p || w2p || w3 || w4 || w5)) out.push_back("coupled");
        return out;
    }
};

inline SU3Class su3_class(const TorsionSU3& t) {
    SU3Class c;
    c.w1p = !t.pi0.is_zero();
    c.w1m = !t.sigma0.is_zero();
    c.w2p = !t.pi2.is_zero_form();
    c.w2m = !t.sigma2.is_zero_form();
    c.w3 = !t.nu3.is_zero_form();
    c.w4 = !t.nu1.is_zero_form();
    c.w5 = !t.pi1.is_zero_form();
    if (c.w1m && c.w2m && !(c.w1p || c.w2p || c.w3 || c.w4 || c.w5))
        c.coupled_c = Exact(-3) / Exact(2) * t.sigma0;
    return c;
}

inline Exact su3_scalar_from_parts(const TorsionSU3& t, const Exact& delta_pi1, const Exact& delta_nu1) {
    Exact fifteen_halves = Exact::ratio(15, 2);
    return fifteen_halves * t.pi0 * t.pi0 + fifteen_halves * t.sigma0 * t.sigma0 + Exact(2) * delta_pi1 +
           Exact(2) * delta_nu1 - norm2(t.nu1) - Exact::ratio(1, 2) * norm2(t.sigma2) -
           Exact::ratio(1, 2) * norm2(t.pi2) - Exact::ratio(1, 2) * norm2(t.nu3) +
           Exact(4) * inner(t.pi1, t.nu1);
}

/// Scalar curvature from the torsion record; codifferentials of π₁, ν₁ are
/// computed on the supplying frame.
inline Exact su3_scalar(const TorsionSU3& t, const FrameAlgebra& f) {
    Exact delta_pi1 = f.codifferential(t.pi1).coeff(0);
    Exact delta_nu1 = f.codifferential(t.nu1).coeff(0);
    return su3_scalar_from_parts(t, delta_pi1, delta_nu1);
}

}  // namespace holotor

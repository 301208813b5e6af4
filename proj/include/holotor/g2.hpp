#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "holotor/form.hpp"

namespace holotor {

/// Fully antisymmetric coefficient a(i1,...,ip) of a form, for arbitrary
/// (possibly unsorted) index tuples. Zero on repeated indices.
template <class S>
S antisym_coeff(const Form<S>& a, std::vector<int> idx) {
    int sign = 1;
    // Insertion sort, tracking the permutation parity.
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    Monomial m = 0;
    for (int i : idx) {
        Monomial bit = Monomial(1) << (i - 1);
        if (m & bit) return S(0);
        m |= bit;
    }
    S c = a.coeff(m);
    return sign < 0 ? -c : c;
}

/// Induced metric of a definite 3-form in dimension 7:
/// g(e_i,e_j) = (1/6) Σ_{k,l} φ(e_i,e_k,e_l) φ(e_j,e_k,e_l).
/// Returns the matrix of double values (identity for an orthonormal coframe).
template <class S>
std::vector<std::vector<double>> g2_metric(const Form<S>& phi) {
    int n = phi.dim;
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            double total = 0.0;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    total += to_double(antisym_coeff(phi, {i, k, l})) *
                             to_double(antisym_coeff(phi, {j, k, l}));
            g[i - 1][j - 1] = g[j - 1][i - 1] = total / 6.0;
        }
    return g;
}

/// G₂-structure: a definite 3-form and its cached Hodge dual over a
/// 7-dimensional orthonormal coframe.
template <class S>
struct G2Structure {
    Form<S> phi;       // degree 3
    Form<S> star_phi;  // degree 4

    static G2Structure from_phi(Form<S> p) { return {p, hodge(p)}; }
};

/// Canonical coframe expression φ = e127+e347+e567+e135−e146−e236−e245.
template <class S = Exact>
G2Structure<S> canonical_g2() {
    using F = Form<S>;
    F phi = F::monomial(7, {1, 2, 7}) + F::monomial(7, {3, 4, 7}) + F::monomial(7, {5, 6, 7}) +
            F::monomial(7, {1, 3, 5}) - F::monomial(7, {1, 4, 6}) - F::monomial(7, {2, 3, 6}) -
            F::monomial(7, {2, 4, 5});
    return G2Structure<S>::from_phi(phi);
}

/// Torsion forms: dφ = τ₀*₇φ + 3τ₁∧φ + *₇τ₃, d*₇φ = 4τ₁∧*₇φ + τ₂∧φ.
template <class S>
struct TorsionG2 {
    S tau0 = S(0);
    Form<S> tau1{7, 1};
    Form<S> tau2{7, 2};
    Form<S> tau3{7, 3};
};

/// Extraction formulas; dφ and d*₇φ are caller-supplied (frame differential
/// or warped-product differential).
template <class S>
TorsionG2<S> g2_torsion(const G2Structure<S>& g, const Form<S>& dphi, const Form<S>& dstarphi) {
    TorsionG2<S> t;
    S inv7 = S(1) / S(7);
    t.tau0 = inv7 * hodge(wedge(dphi, g.phi)).coeff(0);
    t.tau1 = -(S(1) / S(12)) * hodge(wedge(hodge(dphi), g.phi));
    t.tau2 = -hodge(dstarphi) + S(4) * hodge(wedge(t.tau1, g.star_phi));
    t.tau3 = hodge(dphi) - t.tau0 * g.phi - S(3) * hodge(wedge(t.tau1, g.phi));
    return t;
}

/// Largest residual of the module-membership constraints
/// τ₂∧*₇φ = 0, τ₃∧φ = 0, τ₃∧*₇φ = 0 (zero for consistent inputs).
template <class S>
double g2_membership_residual(const G2Structure<S>& g, const TorsionG2<S>& t) {
    double r = wedge(t.tau2, g.star_phi).max_abs();
    r = std::max(r, wedge(t.tau3, g.phi).max_abs());
    r = std::max(r, wedge(t.tau3, g.star_phi).max_abs());
    return r;
}

/// Rebuilds (dφ, d*₇φ) from a torsion record.
template <class S>
std::pair<Form<S>, Form<S>> g2_differentials(const G2Structure<S>& g, const TorsionG2<S>& t) {
    Form<S> dphi = t.tau0 * g.star_phi + S(3) * wedge(t.tau1, g.phi) + hodge(t.tau3);
    Form<S> dstarphi = S(4) * wedge(t.tau1, g.star_phi) + wedge(t.tau2, g.phi);
    return {dphi, dstarphi};
}

/// One of the 16 torsion classes: a vanishing pattern over (τ₀, τ₁, τ₂, τ₃).
struct G2Class {
    bool x1 = false;  // τ₀
    bool x2 = false;  // τ₂
    bool x3 = false;  // τ₃
    bool x4 = false;  // τ₁

    std::string name() const {
        std::string out;
        auto app = [&out](bool flag, const char* label) {
            if (!flag) return;
            if (!out.empty()) out += "+";
            out += label;
        };
        app(x1, "X1");
        app(x2, "X2");
        app(x3, "X3");
        app(x4, "X4");
        return out.empty() ? "P" : out;
    }

    std::string special_name() const {
        if (!(x1 || x2 || x3 || x4)) return "parallel";
        if (x1 && !x2 && !x3 && !x4) return "nearly parallel";
        if (x2 && !x1 && !x3 && !x4) return "closed";
        if (x3 && !x1 && !x2 && !x4) return "coclosed of pure type";
        if (x4 && !x1 && !x2 && !x3) return "locally conformal parallel";
        if (x1 && x3 && !x2 && !x4) return "coclosed";
        return "";
    }

    bool operator==(const G2Class&) const = default;
};

/// Classifies a numeric torsion record: a slot is nonzero when its norm
/// exceeds tol·reference (reference = the scale of the parent differential).
template <class S>
G2Class g2_class(const TorsionG2<S>& t, double tol, double reference = 1.0) {
    double bar = tol * std::max(reference, 1e-300);
    G2Class c;
    c.x1 = std::abs(to_double(t.tau0)) > bar;
    c.x2 = std::sqrt(std::abs(to_double(norm2(t.tau2)))) > bar;
    c.x3 = std::sqrt(std::abs(to_double(norm2(t.tau3)))) > bar;
    c.x4 = std::sqrt(std::abs(to_double(norm2(t.tau1)))) > bar;
    return c;
}

/// Scalar curvature: Scal = 12δτ₁ + (21/8)τ₀² + 30|τ₁|² − ½|τ₂|² − ½|τ₃|².
template <class S>
double g2_scalar(const TorsionG2<S>& t, double delta_tau1) {
    double tau0 = to_double(t.tau0);
    return 12.0 * delta_tau1 + (21.0 / 8.0) * tau0 * tau0 + 30.0 * to_double(norm2(t.tau1)) -
           0.5 * to_double(norm2(t.tau2)) - 0.5 * to_double(norm2(t.tau3));
}

}  // namespace holotor

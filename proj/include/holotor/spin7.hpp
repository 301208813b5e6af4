#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "holotor/form.hpp"
#include "holotor/g2.hpp"

namespace holotor {

/// Spin(7)-structure: a self-dual 4-form over an 8-dimensional orthonormal
/// coframe.
template <class S>
struct Spin7Structure {
    Form<S> phi4;  // degree 4
};

/// Canonical coframe expression
/// ϕ = e1278+e3478+e5678+e1358−e1468−e2368−e2458+e1234+e1256+e3456+e1367+e1457+e2357−e2467.
template <class S = Exact>
Spin7Structure<S> canonical_spin7() {
    using F = Form<S>;
    F phi = F::monomial(8, {1, 2, 7, 8}) + F::monomial(8, {3, 4, 7, 8}) + F::monomial(8, {5, 6, 7, 8}) +
            F::monomial(8, {1, 3, 5, 8}) - F::monomial(8, {1, 4, 6, 8}) - F::monomial(8, {2, 3, 6, 8}) -
            F::monomial(8, {2, 4, 5, 8}) + F::monomial(8, {1, 2, 3, 4}) + F::monomial(8, {1, 2, 5, 6}) +
            F::monomial(8, {3, 4, 5, 6}) + F::monomial(8, {1, 3, 6, 7}) + F::monomial(8, {1, 4, 5, 7}) +
            F::monomial(8, {2, 3, 5, 7}) - F::monomial(8, {2, 4, 6, 7});
    return {phi};
}

/// Induced metric from the contraction identity ϕ_{iabc}ϕ_{jabc} = 42 δ_ij
/// (ordered index triples), normalized so the canonical expression induces
/// the identity metric.
template <class S>
std::vector<std::vector<double>> spin7_metric(const Form<S>& phi4) {
    int n = phi4.dim;
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            double total = 0.0;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    for (int m = 1; m <= n; ++m)
                        total += to_double(antisym_coeff(phi4, {i, k, l, m})) *
                                 to_double(antisym_coeff(phi4, {j, k, l, m}));
            g[i - 1][j - 1] = g[j - 1][i - 1] = total / 42.0;
        }
    return g;
}

/// Torsion forms: dϕ = λ₁∧ϕ + λ₅ with λ₅ in the 48-dimensional module.
template <class S>
struct TorsionSpin7 {
    Form<S> lambda1{8, 1};
    Form<S> lambda5{8, 5};
};

/// λ₁ = −(1/7) *₈((*₈dϕ)∧ϕ); λ₅ is the remainder dϕ − λ₁∧ϕ.
template <class S>
TorsionSpin7<S> spin7_torsion(const Spin7Structure<S>& s, const Form<S>& dphi4) {
    TorsionSpin7<S> t;
    t.lambda1 = -(S(1) / S(7)) * hodge(wedge(hodge(dphi4), s.phi4));
    t.lambda5 = dphi4 - wedge(t.lambda1, s.phi4);
    return t;
}

/// Residual of the Ω⁵₄₈ membership test ϕ∧*₈λ₅ = 0.
template <class S>
double spin7_membership_residual(const Spin7Structure<S>& s, const TorsionSpin7<S>& t) {
    return wedge(s.phi4, hodge(t.lambda5)).max_abs();
}

/// Class per the two-slot lattice: P, Y1 (locally conformal parallel),
/// Y2 (balanced), Y1⊕Y2 (general).
struct Spin7Class {
    bool y1 = false;  // λ₁
    bool y2 = false;  // λ₅

    std::string name() const {
        if (y1 && y2) return "Y1+Y2";
        if (y1) return "Y1";
        if (y2) return "Y2";
        return "P";
    }

    std::string special_name() const {
        if (y1 && y2) return "general";
        if (y1) return "locally conformal parallel";
        if (y2) return "balanced";
        return "parallel";
    }

    bool operator==(const Spin7Class&) const = default;
};

template <class S>
Spin7Class spin7_class(const TorsionSpin7<S>& t, double tol, double reference = 1.0) {
    double bar = tol * std::max(reference, 1e-300);
    Spin7Class c;
    c.y1 = std::sqrt(std::abs(to_double(norm2(t.lambda1)))) > bar;
    c.y2 = std::sqrt(std::abs(to_double(norm2(t.lambda5)))) > bar;
    return c;
}

/// Scalar curvature: Scal = (21/8)|λ₁|² − ½|λ₅|² + (7/2)δλ₁.
template <class S>
double spin7_scalar(const TorsionSpin7<S>& t, double delta_lambda1) {
    return (21.0 / 8.0) * to_double(norm2(t.lambda1)) - 0.5 * to_double(norm2(t.lambda5)) +
           3.5 * delta_lambda1;
}

}  // namespace holotor

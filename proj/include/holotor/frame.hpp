#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "holotor/form.hpp"
#include "holotor/linalg.hpp"

namespace holotor {

/// Leibniz extension of the coframe differentials:
/// d(e^{i1...ip}) = Σ_k (−1)^{k−1} e^{i1..} ∧ de^{i_k} ∧ e^{..ip}.
/// d_coframe[i] is de^{i+1}, a degree-2 form (or a higher-degree zero form is
/// never needed — structure coefficients are constant).
template <class S>
Form<S> d_form(const Form<S>& a, const std::vector<Form<S>>& d_coframe) {
    Form<S> out(a.dim, a.degree + 1);
    for (const auto& [m, c] : a.coeffs) {
        auto idx = monomial_indices(m);
        Monomial prefix = 0;
        for (size_t k = 0; k < idx.size(); ++k) {
            Monomial suffix = m & ~prefix & ~(Monomial(1) << (idx[k] - 1));
            const Form<S>& de = d_coframe[idx[k] - 1];
            for (const auto& [dm, dc] : de.coeffs) {
                int s1 = detail::wedge_sign(prefix, dm);
                if (s1 == 0) continue;
                int s2 = detail::wedge_sign(prefix | dm, suffix);
                if (s2 == 0) continue;
                int sign = s1 * s2 * ((k % 2) ? -1 : 1);
                S v = c * dc;
                if (sign < 0) v = -v;
                out.add_term(prefix | dm | suffix, v);
            }
            prefix |= Monomial(1) << (idx[k] - 1);
        }
    }
    return out;
}

/// Constant structure coefficients de^i = Σ_{j<k} c^i_{jk} e^j∧e^k on an
/// orthonormal coframe, with exact coefficients.
class FrameAlgebra {
public:
    int dim = 0;
    std::vector<Form<Exact>> d_coframe;  // d_coframe[i] = de^{i+1}

    FrameAlgebra() = default;
    explicit FrameAlgebra(int n) : dim(n), d_coframe(n, Form<Exact>(n, 2)) {}
    FrameAlgebra(int n, std::vector<Form<Exact>> d) : dim(n), d_coframe(std::move(d)) {
        if (static_cast<int>(d_coframe.size()) != n)
            throw std::invalid_argument("frame: need one differential per coframe element");
        for (const auto& f : d_coframe)
            if (f.dim != n || f.degree != 2)
                throw std::invalid_argument("frame: coframe differentials must be 2-forms");
    }

    static FrameAlgebra abelian(int n) { return FrameAlgebra(n); }

    Form<Exact> d(const Form<Exact>& a) const { return d_form(a, d_coframe); }

    /// δ = (−1)^{n(p+1)+1} * d * on p-forms in dimension n.
    Form<Exact> codifferential(const Form<Exact>& a) const {
        int n = dim, p = a.degree;
        Form<Exact> out = hodge(d(hodge(a)));
        if ((n * (p + 1) + 1) % 2 != 0) out = -out;
        return out;
    }

    struct ValidationReport {
        bool ok = true;
        std::vector<std::pair<int, Form<Exact>>> failures;  // (coframe index, d² residual)
    };

    /// d² = 0 on every coframe element (Jacobi identity).
    ValidationReport validate() const {
        ValidationReport rep;
        for (int i = 0; i < dim; ++i) {
            Form<Exact> r = d(d_coframe[i]);
            if (!r.is_zero_form()) {
                rep.ok = false;
                rep.failures.emplace_back(i + 1, r);
            }
        }
        return rep;
    }
};

/// Rewrites the structure equations in the coframe h = B·e (h^i = Σ_j B_ij e^j).
/// dh^i = Σ_j B_ij de^j, re-expressed in h via e = B⁻¹·h.
inline FrameAlgebra change_basis(const FrameAlgebra& f, const Matrix<Exact>& b) {
    const int n = f.dim;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("change_basis: matrix size mismatch");
    Matrix<Exact> binv = invert(b);
    std::vector<Form<Exact>> e_in_h(n, Form<Exact>(n, 1));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!binv[j][k].is_zero()) e_in_h[j].add_term(Monomial(1) << k, binv[j][k]);
    std::vector<Form<Exact>> dh(n, Form<Exact>(n, 2));
    for (int i = 0; i < n; ++i) {
        Form<Exact> de_sum(n, 2);
        for (int j = 0; j < n; ++j)
            if (!b[i][j].is_zero()) de_sum += b[i][j] * f.d_coframe[j];
        dh[i] = substitute(de_sum, e_in_h);
    }
    return FrameAlgebra(n, std::move(dh));
}

}  // namespace holotor

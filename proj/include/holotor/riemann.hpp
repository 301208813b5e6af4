#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "holotor/frame.hpp"

namespace holotor {

/// Connection coefficients Γ^k_{ij} = <∇_{e_i} e_j, e_k> of the Levi-Civita
/// connection of a left-invariant metric on an orthonormal frame.
/// Indexed gamma[i][j][k], all 0-based.
struct ConnectionCoefficients {
    int dim = 0;
    std::vector<std::vector<std::vector<double>>> gamma;

    double at(int i, int j, int k) const { return gamma[i][j][k]; }
};

namespace detail {

/// Commutation coefficients c^k_{ij} ([e_i,e_j] = Σ c^k_{ij} e_k) from the
/// coframe differentials: de^k(e_i,e_j) = −c^k_{ij}.
inline std::vector<std::vector<std::vector<double>>> commutation_coeffs(const FrameAlgebra& f) {
    int n = f.dim;
    std::vector c(n, std::vector(n, std::vector<double>(n, 0.0)));
    for (int k = 0; k < n; ++k)
        for (const auto& [m, coeff] : f.d_coframe[k].coeffs) {
            auto idx = monomial_indices(m);  // i < j, 1-based
            double a = coeff.to_double();
            c[k][idx[0] - 1][idx[1] - 1] = -a;
            c[k][idx[1] - 1][idx[0] - 1] = a;
        }
    return c;
}

}  // namespace detail

/// Koszul formula on an orthonormal frame:
/// 2Γ^k_{ij} = c^k_{ij} − c^i_{jk} + c^j_{ki}.
inline ConnectionCoefficients levi_civita(const FrameAlgebra& f) {
    if (!f.validate().ok) throw std::invalid_argument("levi_civita: frame fails d² = 0");
    int n = f.dim;
    auto c = detail::commutation_coeffs(f);
    ConnectionCoefficients out;
    out.dim = n;
    out.gamma.assign(n, std::vector(n, std::vector<double>(n, 0.0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.gamma[i][j][k] = 0.5 * (c[k][i][j] - c[i][j][k] + c[j][k][i]);
    return out;
}

/// Ricci tensor of the frame-constant connection:
/// Ric_{jk} = Σ_{i,m} (Γ^m_{jk} Γ^i_{im} − Γ^m_{ik} Γ^i_{jm} − c^m_{ij} Γ^i_{mk}).
inline std::vector<std::vector<double>> ricci(const FrameAlgebra& f) {
    int n = f.dim;
    ConnectionCoefficients g = levi_civita(f);
    auto c = detail::commutation_coeffs(f);
    std::vector ric(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double total = 0.0;
            for (int i = 0; i < n; ++i)
                for (int m = 0; m < n; ++m)
                    total += g.gamma[j][k][m] * g.gamma[i][m][i] - g.gamma[i][k][m] * g.gamma[j][m][i] -
                             c[m][i][j] * g.gamma[m][k][i];
            ric[j][k] = total;
        }
    return ric;
}

/// Verdict of the Einstein check Ric = μ·id on an orthonormal frame.
struct EinsteinReport {
    bool ok = false;
    double max_deviation = 0.0;  // ‖Ric − μ·id‖_max
    double fitted_mu = 0.0;      // trace(Ric)/dim
    double scal = 0.0;           // trace(Ric)
};

inline EinsteinReport einstein_verify(const FrameAlgebra& f, double mu, double tol) {
    auto ric = ricci(f);
    int n = f.dim;
    EinsteinReport rep;
    for (int i = 0; i < n; ++i) {
        rep.scal += ric[i][i];
        for (int j = 0; j < n; ++j) {
            double want = (i == j) ? mu : 0.0;
            rep.max_deviation = std::max(rep.max_deviation, std::abs(ric[i][j] - want));
        }
    }
    rep.fitted_mu = rep.scal / n;
    rep.ok = rep.max_deviation < tol;
    return rep;
}

}  // namespace holotor

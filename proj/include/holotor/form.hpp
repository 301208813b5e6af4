#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "holotor/exact.hpp"
#include "holotor/jet.hpp"

namespace holotor {

inline bool is_zero(double x) { return x == 0.0; }
inline double to_double(double x) { return x; }

/// A strictly increasing index tuple (i1 < ... < ip, indices 1..n) packed as a
/// bitmask: bit k-1 set means index k is present.
using Monomial = std::uint16_t;

namespace detail {

inline int popcount(Monomial m) { return __builtin_popcount(m); }

/// Sign of reordering e^I ∧ e^J into the sorted monomial e^{I∪J}; 0 if the
/// index sets overlap. Counts inversions: pairs i ∈ I, j ∈ J with i > j.
inline int wedge_sign(Monomial a, Monomial b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Monomial rest = b; rest; rest &= rest - 1) {
        Monomial j = rest & (~rest + 1);
        inversions += popcount(a & ~(j | (j - 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace detail

inline Monomial monomial_of(std::initializer_list<int> indices) {
    Monomial m = 0;
    for (int i : indices) m |= Monomial(1) << (i - 1);
    return m;
}

inline std::vector<int> monomial_indices(Monomial m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

/// Graded exterior element over an n-dimensional orthonormal coframe with
/// coefficients in a scalar ring S (Exact, Jet2 or double).
template <class S>
class Form {
public:
    int dim = 0;
    int degree = 0;
    std::map<Monomial, S> coeffs;

    Form() = default;
    Form(int n, int p) : dim(n), degree(p) {
        if (p < 0) throw std::invalid_argument("form degree must be nonnegative");
    }

    static Form monomial(int n, std::initializer_list<int> indices, S coeff = S(1)) {
        Form f(n, static_cast<int>(indices.size()));
        for (int i : indices)
            if (i < 1 || i > n) throw std::invalid_argument("coframe index out of range");
        f.add_term(monomial_of(indices), coeff);
        return f;
    }

    static Form scalar(int n, S value) {
        Form f(n, 0);
        f.add_term(0, value);
        return f;
    }

    void add_term(Monomial m, const S& c) {
        if (detail::popcount(m) != degree) throw std::invalid_argument("monomial degree mismatch");
        auto it = coeffs.find(m);
        if (it == coeffs.end()) {
            if (!is_zero(c)) coeffs.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) coeffs.erase(it);
        }
    }

    const S coeff(Monomial m) const {
        auto it = coeffs.find(m);
        return it == coeffs.end() ? S(0) : it->second;
    }

    bool is_zero_form() const { return coeffs.empty(); }

    friend Form operator+(const Form& a, const Form& b) {
        a.check_same(b);
        Form out = a;
        for (const auto& [m, c] : b.coeffs) out.add_term(m, c);
        return out;
    }
    friend Form operator-(const Form& a, const Form& b) {
        a.check_same(b);
        Form out = a;
        for (const auto& [m, c] : b.coeffs) out.add_term(m, -c);
        return out;
    }
    friend Form operator-(const Form& a) {
        Form out(a.dim, a.degree);
        for (const auto& [m, c] : a.coeffs) out.coeffs.emplace(m, -c);
        return out;
    }
    friend Form operator*(const S& s, const Form& a) {
        Form out(a.dim, a.degree);
        for (const auto& [m, c] : a.coeffs) {
            S v = s * c;
            if (!is_zero(v)) out.coeffs.emplace(m, v);
        }
        return out;
    }
    friend Form operator*(const Form& a, const S& s) { return s * a; }

    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }

    friend bool operator==(const Form& a, const Form& b) {
        return a.dim == b.dim && a.degree == b.degree && a.coeffs == b.coeffs;
    }

    void check_same(const Form& b) const {
        if (dim != b.dim) throw std::invalid_argument("form dimension mismatch");
        if (degree != b.degree) throw std::invalid_argument("form degree mismatch");
    }

    /// Largest |coefficient| (value part for jets); tolerance reference.
    double max_abs() const {
        double best = 0.0;
        for (const auto& [m, c] : coeffs) best = std::max(best, std::abs(to_double(c)));
        return best;
    }
};

/// Exterior product. Degrees add; the result above top degree is the zero
/// form (its degree field still records p+q).
template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
    Form<S> out(a.dim, a.degree + b.degree);
    if (out.degree > a.dim) return out;
    for (const auto& [ma, ca] : a.coeffs)
        for (const auto& [mb, cb] : b.coeffs) {
            int s = detail::wedge_sign(ma, mb);
            if (s == 0) continue;
            S v = ca * cb;
            if (s < 0) v = -v;
            out.add_term(ma | mb, v);
        }
    return out;
}

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b, const Form<S>& c) {
    return wedge(wedge(a, b), c);
}

/// Hodge star for the orthonormal coframe with orientation e^1∧...∧e^n:
/// on monomials, e^I ∧ *e^I = vol_n.
template <class S>
Form<S> hodge(const Form<S>& a) {
    Monomial full = (Monomial(1) << a.dim) - 1;
    Form<S> out(a.dim, a.dim - a.degree);
    for (const auto& [m, c] : a.coeffs) {
        Monomial comp = full & ~m;
        int s = detail::wedge_sign(m, comp);
        out.add_term(comp, s < 0 ? -c : c);
    }
    return out;
}

/// Pointwise inner product with <e^I, e^J> = δ_IJ.
template <class S>
S inner(const Form<S>& a, const Form<S>& b) {
    a.check_same(b);
    S total(0);
    for (const auto& [m, c] : a.coeffs) {
        auto it = b.coeffs.find(m);
        if (it != b.coeffs.end()) total += c * it->second;
    }
    return total;
}

template <class S>
S norm2(const Form<S>& a) {
    return inner(a, a);
}

/// Algebra morphism determined by images of the coframe 1-forms:
/// e^i ↦ images[i-1] (a 1-form over the target coframe), extended by
/// e^{i1...ip} ↦ images[i1]∧...∧images[ip]. Used for basis changes and for
/// rewriting fiber forms in the warped orthonormal coframe.
template <class S>
Form<S> substitute(const Form<S>& a, const std::vector<Form<S>>& images) {
    if (static_cast<int>(images.size()) != a.dim)
        throw std::invalid_argument("substitute: need one image per coframe element");
    int target_dim = images.empty() ? a.dim : images[0].dim;
    Form<S> out(target_dim, a.degree);
    for (const auto& [m, c] : a.coeffs) {
        Form<S> term = Form<S>::scalar(target_dim, c);
        for (int i : monomial_indices(m)) term = wedge(term, images[i - 1]);
        out += term;
    }
    return out;
}

/// Coefficient-wise conversion between scalar rings, e.g. Exact -> double or
/// Exact -> Jet2 (constants).
template <class T, class S, class Fn>
Form<T> map_coeffs(const Form<S>& a, Fn&& fn) {
    Form<T> out(a.dim, a.degree);
    for (const auto& [m, c] : a.coeffs) {
        T v = fn(c);
        if (!is_zero(v)) out.coeffs.emplace(m, v);
    }
    return out;
}

inline Form<double> to_numeric(const Form<Exact>& a) {
    return map_coeffs<double>(a, [](const Exact& c) { return c.to_double(); });
}

inline Form<double> value_part(const Form<Jet2>& a) {
    return map_coeffs<double>(a, [](const Jet2& c) { return c.v; });
}

template <class S>
Form<Jet2> lift_constant(const Form<S>& a) {
    return map_coeffs<Jet2>(a, [](const S& c) { return Jet2(to_double(c)); });
}

/// Formats a monomial in the frame-file style: "e1^e6" (empty mask -> "1").
inline std::string monomial_name(Monomial m, const std::string& prefix = "e") {
    if (m == 0) return "1";
    std::string out;
    for (int i : monomial_indices(m)) {
        if (!out.empty()) out += "^";
        out += prefix + std::to_string(i);
    }
    return out;
}

/// Parses "e1^e6"-style monomials against the given coframe names.
inline Monomial parse_monomial(const std::string& text, const std::vector<std::string>& coframe) {
    Monomial m = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t sep = text.find('^', start);
        std::string name = text.substr(start, sep == std::string::npos ? sep : sep - start);
        bool found = false;
        for (size_t i = 0; i < coframe.size(); ++i) {
            if (coframe[i] == name) {
                Monomial bit = Monomial(1) << i;
                if (m & bit) throw std::invalid_argument("repeated coframe element in '" + text + "'");
                m |= bit;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown coframe element '" + name + "' in '" + text + "'");
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return m;
}

}  // namespace holotor

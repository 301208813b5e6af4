#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace holotor {

/// Second-order jet (value, first and second derivative) of a scalar function
/// of one variable at a sample point. Arithmetic propagates derivatives by the
/// Leibniz and chain rules; this is enough for every curvature formula here,
/// which differentiates the warping data at most twice.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    Jet2() = default;
    Jet2(double value) : v(value) {}
    Jet2(double value, double first, double second) : v(value), d1(first), d2(second) {}

    /// The coordinate function t at the sample point t.
    static Jet2 var(double t) { return Jet2(t, 1.0, 0.0); }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
    friend Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        if (b.v == 0.0) throw std::domain_error("jet division by zero value");
        double v = a.v / b.v;
        double d1 = (a.d1 - v * b.d1) / b.v;
        double d2 = (a.d2 - v * b.d2 - 2.0 * d1 * b.d1) / b.v;
        return {v, d1, d2};
    }

    Jet2& operator+=(const Jet2& o) { return *this = *this + o; }
    Jet2& operator-=(const Jet2& o) { return *this = *this - o; }
    Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
    Jet2& operator/=(const Jet2& o) { return *this = *this / o; }

    bool is_zero() const { return v == 0.0 && d1 == 0.0 && d2 == 0.0; }
};

inline bool is_zero(const Jet2& x) { return x.is_zero(); }
inline double to_double(const Jet2& x) { return x.v; }

namespace detail {
/// Composition g(u) from the pointwise values (g, g', g'') at u.v.
inline Jet2 compose(double g, double dg, double ddg, const Jet2& u) {
    return {g, dg * u.d1, ddg * u.d1 * u.d1 + dg * u.d2};
}
}  // namespace detail

inline Jet2 sin(const Jet2& u) { return detail::compose(std::sin(u.v), std::cos(u.v), -std::sin(u.v), u); }
inline Jet2 cos(const Jet2& u) { return detail::compose(std::cos(u.v), -std::sin(u.v), -std::cos(u.v), u); }
inline Jet2 sinh(const Jet2& u) { return detail::compose(std::sinh(u.v), std::cosh(u.v), std::sinh(u.v), u); }
inline Jet2 cosh(const Jet2& u) { return detail::compose(std::cosh(u.v), std::sinh(u.v), std::cosh(u.v), u); }
inline Jet2 exp(const Jet2& u) {
    double e = std::exp(u.v);
    return detail::compose(e, e, e, u);
}

inline Jet2 tan(const Jet2& u) {
    double c = std::cos(u.v);
    if (c == 0.0) throw std::domain_error("tan: pole at argument " + std::to_string(u.v));
    double t = std::tan(u.v);
    double s2 = 1.0 + t * t;
    return detail::compose(t, s2, 2.0 * t * s2, u);
}

inline Jet2 tanh(const Jet2& u) {
    double t = std::tanh(u.v);
    double s2 = 1.0 - t * t;
    return detail::compose(t, s2, -2.0 * t * s2, u);
}

inline Jet2 atan(const Jet2& u) {
    double den = 1.0 + u.v * u.v;
    return detail::compose(std::atan(u.v), 1.0 / den, -2.0 * u.v / (den * den), u);
}

inline Jet2 asin(const Jet2& u) {
    if (u.v <= -1.0 || u.v >= 1.0)
        throw std::domain_error("asin: argument " + std::to_string(u.v) + " outside (-1,1)");
    double r = 1.0 - u.v * u.v;
    double s = std::sqrt(r);
    return detail::compose(std::asin(u.v), 1.0 / s, u.v / (r * s), u);
}

inline Jet2 acos(const Jet2& u) {
    if (u.v <= -1.0 || u.v >= 1.0)
        throw std::domain_error("acos: argument " + std::to_string(u.v) + " outside (-1,1)");
    double r = 1.0 - u.v * u.v;
    double s = std::sqrt(r);
    return detail::compose(std::acos(u.v), -1.0 / s, -u.v / (r * s), u);
}

inline Jet2 sqrt(const Jet2& u) {
    if (u.v <= 0.0) throw std::domain_error("sqrt: argument " + std::to_string(u.v) + " not positive");
    double s = std::sqrt(u.v);
    return detail::compose(s, 0.5 / s, -0.25 / (s * u.v), u);
}

inline Jet2 pow(const Jet2& u, double p) {
    if (u.v <= 0.0) throw std::domain_error("pow: base " + std::to_string(u.v) + " not positive");
    double g = std::pow(u.v, p);
    return detail::compose(g, p * g / u.v, p * (p - 1.0) * g / (u.v * u.v), u);
}

/// Evaluates a named interval function as a jet at t. Recognized names:
/// identity/t, sin, cos, sinh, cosh, exp, tan, tanh.
inline Jet2 jet_lift(const std::string& fn, double t) {
    Jet2 x = Jet2::var(t);
    if (fn == "identity" || fn == "t") return x;
    if (fn == "sin") return sin(x);
    if (fn == "cos") return cos(x);
    if (fn == "sinh") return sinh(x);
    if (fn == "cosh") return cosh(x);
    if (fn == "exp" || fn == "e^t") return exp(x);
    if (fn == "tan") return tan(x);
    if (fn == "tanh") return tanh(x);
    throw std::invalid_argument("jet_lift: unknown function '" + fn + "'");
}

}  // namespace holotor

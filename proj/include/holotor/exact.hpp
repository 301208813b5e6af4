#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace holotor {

using Rational = boost::multiprecision::cpp_rational;

/// Exact scalar of the form q0 + q2*sqrt(2) + q5*sqrt(5) + q10*sqrt(10).
///
/// The basis {1, sqrt2, sqrt5, sqrt10} is closed under multiplication
/// (sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2),
/// so this is a field: division solves the 4x4 rational system b*x = a.
class Exact {
public:
    Rational q0, q2, q5, q10;

    Exact() : q0(0), q2(0), q5(0), q10(0) {}
    Exact(long v) : q0(v), q2(0), q5(0), q10(0) {}
    Exact(Rational v) : q0(std::move(v)), q2(0), q5(0), q10(0) {}
    Exact(Rational a, Rational b, Rational c, Rational d)
        : q0(std::move(a)), q2(std::move(b)), q5(std::move(c)), q10(std::move(d)) {}

    static Exact ratio(long num, long den) { return Exact(Rational(num, den)); }
    static Exact sqrt2() { return Exact(0, 1, 0, 0); }
    static Exact sqrt5() { return Exact(0, 0, 1, 0); }
    static Exact sqrt10() { return Exact(0, 0, 0, 1); }

    bool is_zero() const { return q0 == 0 && q2 == 0 && q5 == 0 && q10 == 0; }

    friend Exact operator+(const Exact& a, const Exact& b) {
        return Exact(a.q0 + b.q0, a.q2 + b.q2, a.q5 + b.q5, a.q10 + b.q10);
    }
    friend Exact operator-(const Exact& a, const Exact& b) {
        return Exact(a.q0 - b.q0, a.q2 - b.q2, a.q5 - b.q5, a.q10 - b.q10);
    }
    friend Exact operator-(const Exact& a) { return Exact(-a.q0, -a.q2, -a.q5, -a.q10); }

    friend Exact operator*(const Exact& a, const Exact& b) {
        return Exact(a.q0 * b.q0 + 2 * a.q2 * b.q2 + 5 * a.q5 * b.q5 + 10 * a.q10 * b.q10,
                     a.q0 * b.q2 + a.q2 * b.q0 + 5 * (a.q5 * b.q10 + a.q10 * b.q5),
                     a.q0 * b.q5 + a.q5 * b.q0 + 2 * (a.q2 * b.q10 + a.q10 * b.q2),
                     a.q0 * b.q10 + a.q10 * b.q0 + a.q2 * b.q5 + a.q5 * b.q2);
    }

    friend Exact operator/(const Exact& a, const Exact& b) {
        if (b.is_zero()) throw std::domain_error("exact scalar division by zero");
        // Columns of the multiplication-by-b map in the {1,s2,s5,s10} basis.
        std::array<std::array<Rational, 5>, 4> m = {{
            {b.q0, 2 * b.q2, 5 * b.q5, 10 * b.q10, a.q0},
            {b.q2, b.q0, 5 * b.q10, 5 * b.q5, a.q2},
            {b.q5, 2 * b.q10, b.q0, 2 * b.q2, a.q5},
            {b.q10, b.q5, b.q2, b.q0, a.q10},
        }};
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (m[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::domain_error("exact scalar division: singular system");
            std::swap(m[col], m[piv]);
            for (int r = 0; r < 4; ++r) {
                if (r == col) continue;
                Rational factor = m[r][col] / m[col][col];
                if (factor == 0) continue;
                for (int c = col; c < 5; ++c) m[r][c] -= factor * m[col][c];
            }
        }
        return Exact(m[0][4] / m[0][0], m[1][4] / m[1][1], m[2][4] / m[2][2], m[3][4] / m[3][3]);
    }

    Exact& operator+=(const Exact& o) { return *this = *this + o; }
    Exact& operator-=(const Exact& o) { return *this = *this - o; }
    Exact& operator*=(const Exact& o) { return *this = *this * o; }
    Exact& operator/=(const Exact& o) { return *this = *this / o; }

    friend bool operator==(const Exact& a, const Exact& b) {
        return a.q0 == b.q0 && a.q2 == b.q2 && a.q5 == b.q5 && a.q10 == b.q10;
    }
    friend bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }

    double to_double() const {
        return q0.convert_to<double>() + q2.convert_to<double>() * 1.4142135623730950488 +
               q5.convert_to<double>() * 2.2360679774997896964 +
               q10.convert_to<double>() * 3.1622776601683793320;
    }
};

inline bool is_zero(const Exact& x) { return x.is_zero(); }
inline double to_double(const Exact& x) { return x.to_double(); }

namespace detail {
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}
}  // namespace detail

/// Canonical literal form, e.g. "1/2-3/2*sqrt(5)", "sqrt(10)/4" -> "1/4*sqrt(10)".
inline std::string to_string(const Exact& x) {
    std::string out;
    auto emit = [&out](const Rational& q, const char* surd) {
        if (q == 0) return;
        std::string term;
        Rational a = q < 0 ? Rational(-q) : q;
        if (!surd) {
            term = detail::rational_str(a);
        } else if (a == 1) {
            term = surd;
        } else {
            term = detail::rational_str(a) + "*" + surd;
        }
        if (out.empty())
            out = (q < 0 ? "-" : "") + term;
        else
            out += (q < 0 ? "-" : "+") + term;
    };
    emit(x.q0, nullptr);
    emit(x.q2, "sqrt(2)");
    emit(x.q5, "sqrt(5)");
    emit(x.q10, "sqrt(10)");
    return out.empty() ? "0" : out;
}

namespace detail {

struct LiteralCursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

inline Rational parse_integer(LiteralCursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("exact literal: expected number in '" + c.s + "'");
    return Rational(boost::multiprecision::cpp_int(c.s.substr(start, c.i - start)));
}

// factor := integer | "sqrt(" (2|5|10) ")"
inline Exact parse_factor(LiteralCursor& c) {
    if (c.peek() == 's') {
        if (c.s.compare(c.i, 5, "sqrt(") != 0)
            throw std::invalid_argument("exact literal: bad factor in '" + c.s + "'");
        c.i += 5;
        Rational k = parse_integer(c);
        if (c.peek() != ')') throw std::invalid_argument("exact literal: missing ')' in '" + c.s + "'");
        ++c.i;
        if (k == 2) return Exact::sqrt2();
        if (k == 5) return Exact::sqrt5();
        if (k == 10) return Exact::sqrt10();
        throw std::invalid_argument("exact literal: unsupported surd sqrt(" + rational_str(k) + ")");
    }
    return Exact(parse_integer(c));
}

// term := [sign] factor (("*"|"/") factor)*
inline Exact parse_term(LiteralCursor& c, bool negated) {
    Exact value = parse_factor(c);
    while (!c.eof() && (c.peek() == '*' || c.peek() == '/')) {
        char op = c.peek();
        ++c.i;
        Exact rhs = parse_factor(c);
        value = (op == '*') ? value * rhs : value / rhs;
    }
    return negated ? -value : value;
}

}  // namespace detail

/// Parses the exact-scalar literal grammar: signed rationals optionally times
/// sqrt(2)/sqrt(5)/sqrt(10), joined by +/-. Accepts e.g. "sqrt(10)/4",
/// "-3/2*sqrt(5)", "1+sqrt(5)".
inline Exact parse_exact(const std::string& text) {
    detail::LiteralCursor c{text};
    Exact total;
    bool first = true;
    while (!c.eof()) {
        bool neg = false;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            neg = (ch == '-');
            ++c.i;
        } else if (!first) {
            throw std::invalid_argument("exact literal: expected '+' or '-' in '" + text + "'");
        }
        total += detail::parse_term(c, neg);
        first = false;
    }
    if (first) throw std::invalid_argument("exact literal: empty input");
    return total;
}

}  // namespace holotor

#pragma once

#include <sstream>
#include <string>

#include "cremona/birational_map.hpp"

namespace cremona {

namespace detail {

inline std::string monomial_to_string(const Monomial& m) {
    std::string out;
    auto piece = [&out](const char* v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    piece("x", m.i);
    piece("y", m.j);
    piece("z", m.k);
    return out;
}

} // namespace detail

/// Canonical text form: terms in descending lex order, exact coefficients.
inline std::string poly_to_string(const HPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = detail::monomial_to_string(m);
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            Rational r = c.re();
            negative = r.sign() < 0;
            Rational a = r.abs();
            if (!(a == Rational(1)) || mono.empty()) coeff = a.str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (!coeff.empty() && !mono.empty())
            out += coeff + "*" + mono;
        else
            out += coeff.empty() ? mono : coeff;
    }
    return out;
}

inline std::string HomogeneousPolynomial::str() const { return poly_to_string(*this); }

inline std::string BirationalMap::str() const {
    return "[" + poly_to_string(f_[0]) + " : " + poly_to_string(f_[1]) + " : " + poly_to_string(f_[2]) +
           "]";
}

} // namespace cremona

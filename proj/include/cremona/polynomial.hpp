#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/unipoly.hpp"

namespace cremona {

/// Exponent triple (i,j,k) of x^i y^j z^k.
struct Monomial {
    int i = 0, j = 0, k = 0;
    int degree() const { return i + j + k; }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

/// Lex order with x > y > z, descending, so map iteration starts at the
/// leading monomial (all monomials of one polynomial share a degree).
struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.i != b.i) return a.i > b.i;
        if (a.j != b.j) return a.j > b.j;
        return a.k > b.k;
    }
};

/// Homogeneous polynomial in x, y, z over Q(i). Stored coefficients are
/// always nonzero and every exponent triple sums to the stated degree.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialLexGreater>;

    explicit HomogeneousPolynomial(int degree = 0) : degree_(degree) {
        check_arg(degree >= 0, "polynomial degree must be nonnegative");
    }

    static HomogeneousPolynomial from_terms(int degree, TermMap terms) {
        HomogeneousPolynomial p(degree);
        for (auto it = terms.begin(); it != terms.end();) {
            check_arg(it->first.degree() == degree && it->first.i >= 0 && it->first.j >= 0 && it->first.k >= 0,
                      "monomial degree mismatch");
            if (it->second.is_zero())
                it = terms.erase(it);
            else
                ++it;
        }
        p.terms_ = std::move(terms);
        return p;
    }

    static HomogeneousPolynomial monomial(int i, int j, int k, const GaussianRational& c = GaussianRational(1)) {
        HomogeneousPolynomial p(i + j + k);
        if (!c.is_zero()) p.terms_[{i, j, k}] = c;
        return p;
    }
    static HomogeneousPolynomial x() { return monomial(1, 0, 0); }
    static HomogeneousPolynomial y() { return monomial(0, 1, 0); }
    static HomogeneousPolynomial z() { return monomial(0, 0, 1); }
    static HomogeneousPolynomial constant(const GaussianRational& c) { return monomial(0, 0, 0, c); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(int i, int j, int k) const {
        auto it = terms_.find({i, j, k});
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    const Monomial& lead_monomial() const {
        check_arg(!is_zero(), "lead of zero polynomial");
        return terms_.begin()->first;
    }
    const GaussianRational& lead_coeff() const {
        check_arg(!is_zero(), "lead of zero polynomial");
        return terms_.begin()->second;
    }

    bool is_real() const {
        for (const auto& [m, c] : terms_)
            if (!c.is_real()) return false;
        return true;
    }

    HomogeneousPolynomial conj() const {
        HomogeneousPolynomial p(degree_);
        for (const auto& [m, c] : terms_) p.terms_[m] = c.conj();
        return p;
    }

    HomogeneousPolynomial operator-() const {
        HomogeneousPolynomial p(degree_);
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o) {
        check_arg(degree_ == o.degree_ || is_zero() || o.is_zero(),
                  "adding homogeneous polynomials of different degrees");
        if (o.is_zero()) return *this;
        if (is_zero()) degree_ = o.degree_;
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end())
                terms_[m] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o) { return *this += -o; }

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a += b;
    }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a -= b;
    }

    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return HomogeneousPolynomial(a.degree_ + b.degree_);
        HomogeneousPolynomial r(a.degree_ + b.degree_);
        // Dense accumulation indexed by (i,j); k is determined by the degree.
        int d = r.degree_;
        std::vector<GaussianRational> acc(static_cast<size_t>(d + 1) * (d + 1));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                int i = ma.i + mb.i, j = ma.j + mb.j;
                acc[static_cast<size_t>(i) * (d + 1) + j] += ca * cb;
            }
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j + i <= d; ++j) {
                auto& c = acc[static_cast<size_t>(i) * (d + 1) + j];
                if (!c.is_zero()) r.terms_[{i, j, d - i - j}] = std::move(c);
            }
        return r;
    }
    friend HomogeneousPolynomial operator*(const GaussianRational& s, const HomogeneousPolynomial& a) {
        HomogeneousPolynomial r(a.degree_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
        return r;
    }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return !(a == b);
    }

    /// Scales so the leading coefficient is 1.
    HomogeneousPolynomial normalized() const {
        if (is_zero()) return *this;
        return lead_coeff().inverse() * *this;
    }

    GaussianRational eval(const GaussianRational& x0, const GaussianRational& y0,
                          const GaussianRational& z0) const {
        // Power tables keep repeated evaluation cheap.
        std::vector<GaussianRational> px(degree_ + 1), py(degree_ + 1), pz(degree_ + 1);
        px[0] = py[0] = pz[0] = GaussianRational(1);
        for (int n = 1; n <= degree_; ++n) {
            px[n] = px[n - 1] * x0;
            py[n] = py[n - 1] * y0;
            pz[n] = pz[n - 1] * z0;
        }
        GaussianRational acc;
        for (const auto& [m, c] : terms_) acc += c * px[m.i] * py[m.j] * pz[m.k];
        return acc;
    }

    /// f(g0, g1, g2) for homogeneous gi of one common degree.
    HomogeneousPolynomial substitute(const HomogeneousPolynomial& g0, const HomogeneousPolynomial& g1,
                                     const HomogeneousPolynomial& g2) const {
        int gd = g0.degree();
        check_arg(g1.degree() == gd && g2.degree() == gd, "substitute: mixed degrees");
        HomogeneousPolynomial result(degree_ * gd);
        if (is_zero()) return result;
        std::vector<HomogeneousPolynomial> p0 = powers(g0), p1 = powers(g1), p2 = powers(g2);
        for (const auto& [m, c] : terms_) result += c * (p0[m.i] * p1[m.j] * p2[m.k]);
        return result;
    }

    HomogeneousPolynomial d_dx() const { return derivative(0); }
    HomogeneousPolynomial d_dy() const { return derivative(1); }
    HomogeneousPolynomial d_dz() const { return derivative(2); }

    HomogeneousPolynomial derivative(int var) const {
        if (degree_ == 0) return HomogeneousPolynomial(0);
        HomogeneousPolynomial r(degree_ - 1);
        for (const auto& [m, c] : terms_) {
            int e = var == 0 ? m.i : var == 1 ? m.j : m.k;
            if (e == 0) continue;
            Monomial n = m;
            (var == 0 ? n.i : var == 1 ? n.j : n.k) -= 1;
            r.terms_[n] = GaussianRational(Rational(e)) * c;
        }
        return r;
    }

    /// Restriction to the line s*p + t*q, as a polynomial in t (s = 1 chart
    /// is enough for gcd probing); returns f(p + t q).
    UniPoly restrict_to_line(const std::array<GaussianRational, 3>& p,
                             const std::array<GaussianRational, 3>& q) const {
        std::array<std::vector<UniPoly>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v].resize(degree_ + 1);
            pw[v][0] = UniPoly::constant(GaussianRational(1));
            UniPoly lin({p[v], q[v]});
            for (int n = 1; n <= degree_; ++n) pw[v][n] = pw[v][n - 1] * lin;
        }
        UniPoly acc;
        for (const auto& [m, c] : terms_)
            acc = acc + UniPoly::constant(c) * pw[0][m.i] * pw[1][m.j] * pw[2][m.k];
        return acc;
    }

    /// Smallest (i+j) over the terms: the vanishing order at [0:0:1].
    int order_at_origin() const {
        check_arg(!is_zero(), "order of zero polynomial");
        int best = degree_ + 1;
        for (const auto& [m, c] : terms_) best = std::min(best, m.i + m.j);
        return best;
    }

    std::string str() const; // defined in format.hpp

private:
    std::vector<HomogeneousPolynomial> powers(const HomogeneousPolynomial& g) const {
        std::vector<HomogeneousPolynomial> p;
        p.reserve(degree_ + 1);
        p.push_back(constant(GaussianRational(1)));
        for (int n = 1; n <= degree_; ++n) p.push_back(p.back() * g);
        return p;
    }

    int degree_;
    TermMap terms_;
};

using HPoly = HomogeneousPolynomial;

/// det of the Jacobian matrix of (f0, f1, f2); identically zero iff the
/// triple fails to define a dominant rational map.
inline HPoly jacobian_det(const HPoly& f0, const HPoly& f1, const HPoly& f2) {
    std::array<std::array<HPoly, 3>, 3> m = {{{f0.d_dx(), f0.d_dy(), f0.d_dz()},
                                              {f1.d_dx(), f1.d_dy(), f1.d_dz()},
                                              {f2.d_dx(), f2.d_dy(), f2.d_dz()}}};
    HPoly det(3 * (f0.degree() - 1));
    det += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    det -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    det += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det;
}

} // namespace cremona

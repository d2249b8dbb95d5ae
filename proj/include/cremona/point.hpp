#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/linalg.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/// Point of P^2 with coordinates in Q(i), stored canonically: the first
/// nonzero coordinate is 1, so equality is plain coordinate equality.
class ProjectivePoint {
public:
    ProjectivePoint(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z)
        : c_{x, y, z} {
        check_arg(!(x.is_zero() && y.is_zero() && z.is_zero()), "projective point: all coordinates zero");
        canonicalize();
    }
    explicit ProjectivePoint(const Vec3& v) : ProjectivePoint(v[0], v[1], v[2]) {}

    const GaussianRational& x() const { return c_[0]; }
    const GaussianRational& y() const { return c_[1]; }
    const GaussianRational& z() const { return c_[2]; }
    const GaussianRational& operator[](int k) const { return c_[k]; }
    Vec3 coords() const { return c_; }

    ProjectivePoint conj() const {
        return ProjectivePoint(c_[0].conj(), c_[1].conj(), c_[2].conj());
    }

    bool is_real() const { return *this == conj(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ < b.c_; }

    std::string str() const {
        return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
    }

private:
    void canonicalize() {
        for (auto& v : c_) {
            if (!v.is_zero()) {
                GaussianRational inv = v.inverse();
                for (auto& w : c_) w *= inv;
                return;
            }
        }
    }
    Vec3 c_;
};

inline ProjectivePoint conjugate_point(const ProjectivePoint& p) { return p.conj(); }

inline GaussianRational eval_at(const HPoly& f, const ProjectivePoint& p) {
    return f.eval(p.x(), p.y(), p.z());
}

inline bool collinear(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
    Mat3 m{{a.coords(), b.coords(), c.coords()}};
    return det3(m).is_zero();
}

/// Order of vanishing of f at p: translate p to [0:0:1] by a linear frame
/// and read off the smallest total degree in the affine variables.
inline int vanishing_order(const HPoly& f, const ProjectivePoint& p) {
    check_arg(!f.is_zero(), "vanishing_order: zero polynomial");
    static const Vec3 e1{GaussianRational(1), GaussianRational(0), GaussianRational(0)};
    static const Vec3 e2{GaussianRational(0), GaussianRational(1), GaussianRational(0)};
    static const Vec3 e3{GaussianRational(0), GaussianRational(0), GaussianRational(1)};
    const std::array<std::pair<Vec3, Vec3>, 3> choices = {{{e1, e2}, {e1, e3}, {e2, e3}}};
    for (const auto& [a, b] : choices) {
        Mat3 m{{a, b, p.coords()}};
        if (det3(m).is_zero()) continue;
        HPoly u = a[0] * HPoly::x() + b[0] * HPoly::y() + p[0] * HPoly::z();
        HPoly v = a[1] * HPoly::x() + b[1] * HPoly::y() + p[1] * HPoly::z();
        HPoly w = a[2] * HPoly::x() + b[2] * HPoly::y() + p[2] * HPoly::z();
        HPoly g = f.substitute(u, v, w);
        if (g.is_zero()) return f.degree() + 1; // f vanishes identically (cannot happen for nonzero f)
        return g.order_at_origin();
    }
    throw internal_error("vanishing_order: no frame found");
}

/// Degree-1 form vanishing at p and q, leading coefficient normalized to 1.
inline HPoly line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    check_arg(p != q, "line_through: points coincide");
    GaussianRational a = p.y() * q.z() - p.z() * q.y();
    GaussianRational b = p.z() * q.x() - p.x() * q.z();
    GaussianRational c = p.x() * q.y() - p.y() * q.x();
    HPoly l = a * HPoly::x() + b * HPoly::y() + c * HPoly::z();
    check_internal(!l.is_zero(), "line_through: degenerate cross product");
    return l.normalized();
}

/// The conic through five points, when unique. Solves the 6-coefficient
/// linear system; nullopt when the solution space has dimension != 1.
inline std::optional<HPoly> conic_through(const std::vector<ProjectivePoint>& pts) {
    check_arg(pts.size() == 5, "conic_through: need exactly five points");
    static const std::array<Monomial, 6> mons = {
        Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, 1},
        Monomial{0, 2, 0}, Monomial{0, 1, 1}, Monomial{0, 0, 2}};
    Mat rows;
    for (const auto& p : pts) {
        std::vector<GaussianRational> row;
        for (const auto& m : mons) {
            HPoly mono = HPoly::monomial(m.i, m.j, m.k);
            row.push_back(eval_at(mono, p));
        }
        rows.push_back(std::move(row));
    }
    auto basis = nullspace(rows, 6);
    if (basis.size() != 1) return std::nullopt;
    HPoly::TermMap terms;
    for (int c = 0; c < 6; ++c)
        if (!basis[0][c].is_zero()) terms[mons[c]] = basis[0][c];
    return HPoly::from_terms(2, terms).normalized();
}

/// Galois-stable base-point datum: one real point, or a pair of non-real
/// conjugate points stored by a canonical representative (its first
/// non-real coordinate has positive imaginary part).
class PointOrbit {
public:
    enum class Kind { Real, ConjugatePair };

    explicit PointOrbit(const ProjectivePoint& p) : rep_(p) {
        if (p.is_real()) {
            kind_ = Kind::Real;
            return;
        }
        kind_ = Kind::ConjugatePair;
        for (int k = 0; k < 3; ++k) {
            if (!rep_[k].im().is_zero()) {
                if (rep_[k].im().sign() < 0) rep_ = rep_.conj();
                return;
            }
        }
        throw internal_error("PointOrbit: non-real point without non-real coordinate");
    }

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_pair() const { return kind_ == Kind::ConjugatePair; }
    const ProjectivePoint& representative() const { return rep_; }

    /// 1 for a real point, 2 for a conjugate pair.
    int complex_size() const { return is_real() ? 1 : 2; }

    std::vector<ProjectivePoint> points() const {
        if (is_real()) return {rep_};
        return {rep_, rep_.conj()};
    }

    bool contains(const ProjectivePoint& p) const {
        return p == rep_ || (is_pair() && p == rep_.conj());
    }

    friend bool operator==(const PointOrbit& a, const PointOrbit& b) {
        return a.kind_ == b.kind_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const PointOrbit& a, const PointOrbit& b) { return !(a == b); }
    friend bool operator<(const PointOrbit& a, const PointOrbit& b) {
        if (a.kind_ != b.kind_) return a.kind_ == Kind::Real;
        return a.rep_ < b.rep_;
    }

    std::string str() const {
        return (is_real() ? std::string("Real ") : std::string("ConjugatePair ")) + rep_.str();
    }

private:
    Kind kind_;
    ProjectivePoint rep_;
};

} // namespace cremona

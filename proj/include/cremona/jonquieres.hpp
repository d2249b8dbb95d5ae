#pragma once

#include <optional>
#include <vector>

#include "cremona/generators.hpp"

namespace cremona {
namespace jonq {

/// 2x2 matrix with real polynomial entries in the base coordinate u = x/y,
/// acting on the fibre coordinate t = z/y by t -> (a t + b)/(c t + d).
struct Mat2 {
    UniPoly a, b, c, d;

    UniPoly det() const { return a * d - b * c; }

    Mat2 adj() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }

    int max_degree() const {
        return std::max(std::max(a.degree(), b.degree()), std::max(c.degree(), d.degree()));
    }

    /// Value at u0 as a 2x2 over Q(i).
    std::array<GaussianRational, 4> eval(const GaussianRational& u0) const {
        return {a.eval(u0), b.eval(u0), c.eval(u0), d.eval(u0)};
    }

    /// Projective image of a fibre value under the evaluated matrix;
    /// infinite values are the direction (1:0).
    static std::pair<GaussianRational, GaussianRational> apply_value(
        const std::array<GaussianRational, 4>& m, const std::pair<GaussianRational, GaussianRational>& v) {
        return {m[0] * v.first + m[1] * v.second, m[2] * v.first + m[3] * v.second};
    }

    void strip_content() {
        UniPoly g = gcd(gcd(a, b), gcd(c, d));
        if (g.degree() >= 1) {
            a = UniPoly::divmod(a, g).first;
            b = UniPoly::divmod(b, g).first;
            c = UniPoly::divmod(c, g).first;
            d = UniPoly::divmod(d, g).first;
        }
    }
};

/// Fibre value t in P^1: finite Gaussian rational or infinity.
struct FibreValue {
    bool infinite = false;
    GaussianRational t;

    bool is_real() const { return infinite || t.is_real(); }
    GaussianRational conj_t() const { return t.conj(); }
    friend bool operator==(const FibreValue& x, const FibreValue& y) {
        return x.infinite == y.infinite && (x.infinite || x.t == y.t);
    }
    std::string str() const { return infinite ? std::string("inf") : t.str(); }
};

/// One elementary surgery extracted while peeling: the fibre(s) over a real
/// base point or a conjugate pair, the blown-up fibre position, and the
/// Hirzebruch index after the move.
struct ElementaryStep {
    bool pair = false;
    GaussianRational u0;  // base root (non-real representative for pairs)
    UniPoly min_poly;     // u - u0, or the real quadratic for pairs
    FibreValue t0;        // blown-up position on the fibre (working frame)
    Mat2 matrix;          // the peeled elementary factor
    int index_after = 0;  // Hirzebruch index after this move
};

struct Factorization {
    BirationalMap base_prefix = BirationalMap::identity(); // absorbs Moebius and rotation
    std::vector<ElementaryStep> steps;
    Mat2 residual;                                         // constant-determinant tail
    BirationalMap closing = BirationalMap::identity();     // residual as a plane map (+ rotation undo)
    int final_index = 1;
};

/// Converts a fibrewise matrix action into the induced plane map
/// [x:y:z] -> [x*(C z + D y) : y*(C z + D y) : y*(A z + B y)] where the
/// capital letters homogenize the entries in (x, y).
inline BirationalMap matrix_to_map(const Mat2& m) {
    int k = m.max_degree();
    check_arg(k >= 0, "matrix_to_map: zero matrix");
    auto homog = [k](const UniPoly& p) {
        HPoly out(k);
        for (int e = 0; e <= p.degree(); ++e) {
            if (p[e].is_zero()) continue;
            out += HPoly::monomial(e, k - e, 0, p[e]);
        }
        return out;
    };
    HPoly A = homog(m.a), B = homog(m.b), C = homog(m.c), D = homog(m.d);
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    HPoly denom = C * Z + D * Y;
    HPoly numer = A * Z + B * Y;
    return BirationalMap(X * denom, Y * denom, Y * numer);
}

/// The de Jonquieres base automorphism [a x + b y : c x + d y : z].
inline BirationalMap base_automorphism(const Mobius& mu) {
    Mat3 m{{{mu.a, mu.b, GaussianRational(0)},
            {mu.c, mu.d, GaussianRational(0)},
            {GaussianRational(0), GaussianRational(0), GaussianRational(1)}}};
    return BirationalMap::from_matrix(m);
}

namespace detail2 {

/// Bivariate view f(u, 1, t) of a trivariate form, as a t-poly over Q[u].
struct TPoly {
    std::vector<UniPoly> c; // c[k] = coefficient of t^k
    int tdeg() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[k].is_zero()) return k;
        return -1;
    }
};

inline TPoly dehomogenize(const HPoly& f) {
    TPoly out;
    out.c.assign(f.degree() + 1, UniPoly());
    for (const auto& [m, coef] : f.terms()) {
        std::vector<GaussianRational> mono(m.i + 1);
        mono[m.i] = coef;
        out.c[m.k] = out.c[m.k] + UniPoly(std::move(mono));
    }
    return out;
}

/// Kernel direction of a rank-1 complex 2x2 matrix.
inline FibreValue kernel_direction(const std::array<GaussianRational, 4>& m) {
    // rows (a b; c d): kernel of the nonzero row
    const GaussianRational &a = m[0], &b = m[1], &c = m[2], &d = m[3];
    if (!a.is_zero() || !b.is_zero()) {
        if (a.is_zero()) return {true, GaussianRational()}; // b*T1 = 0 -> T1 = 0 -> t = inf
        return {false, -b / a};
    }
    check_internal(!c.is_zero() || !d.is_zero(), "kernel_direction: zero matrix");
    if (c.is_zero()) return {true, GaussianRational()};
    return {false, -d / c};
}

/// Real linear interpolant through (u0, t0) and its conjugate.
inline UniPoly real_interpolant(const GaussianRational& u0, const GaussianRational& t0) {
    if (t0.is_real() || u0.is_real()) {
        check_internal(u0.is_real() ? false : true, "interpolant: real fibre in pair step");
        if (t0.is_real()) return UniPoly::constant(t0);
    }
    // t = alpha u + beta with alpha (p + qi) + beta = a + bi, q != 0
    Rational p = u0.re(), q = u0.im(), a = t0.re(), b = t0.im();
    check_internal(!q.is_zero(), "interpolant: real base point");
    Rational alpha = b / q;
    Rational beta = a - p * alpha;
    return UniPoly({GaussianRational(beta), GaussianRational(alpha)});
}

/// Hirzebruch index bookkeeping in straightened model coordinates: V maps
/// the working fibre coordinate to the standard model of the current state
/// (negative section at infinity, or constant sections on F0).
struct IndexTracker {
    int n = 1;
    Mat2 V{UniPoly::constant(GaussianRational(1)), UniPoly(), UniPoly(),
           UniPoly::constant(GaussianRational(1))};

    FibreValue to_std(const GaussianRational& u0, const FibreValue& t0) const {
        auto mv = V.eval(u0);
        std::pair<GaussianRational, GaussianRational> v =
            t0.infinite ? std::make_pair(GaussianRational(1), GaussianRational(0))
                        : std::make_pair(t0.t, GaussianRational(1));
        auto w = Mat2::apply_value(mv, v);
        check_internal(!(w.first.is_zero() && w.second.is_zero()), "tracker: degenerate value");
        if (w.second.is_zero()) return {true, GaussianRational()};
        return {false, w.first / w.second};
    }

    /// Applies one real elementary move; returns the new index.
    int step_real(const GaussianRational& u0, const FibreValue& t0) {
        FibreValue ts = to_std(u0, t0);
        UniPoly lin({-u0, GaussianRational(1)}); // u - u0
        Mat2 e;
        if (n >= 1) {
            if (ts.infinite) {
                e = {lin, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
                n += 1;
            } else {
                e = {UniPoly::constant(GaussianRational(1)), UniPoly::constant(-ts.t), UniPoly(), lin};
                n -= 1;
            }
        } else {
            if (ts.infinite) {
                e = {lin, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
            } else {
                e = {UniPoly(), lin, UniPoly::constant(GaussianRational(1)), UniPoly::constant(-ts.t)};
            }
            n = 1;
        }
        V = e * V;
        V.strip_content();
        return n;
    }

    /// Applies one conjugate-pair elementary move; returns the new index.
    int step_pair(const GaussianRational& u0, const UniPoly& min_poly, const FibreValue& t0) {
        FibreValue ts = to_std(u0, t0);
        Mat2 e;
        if (n >= 1) {
            if (ts.infinite) {
                e = {min_poly, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
                n += 2;
            } else {
                UniPoly ell = real_interpolant(u0, ts.t);
                if (n >= 2) {
                    e = {UniPoly::constant(GaussianRational(1)), -ell, UniPoly(), min_poly};
                    n -= 2;
                } else {
                    e = {UniPoly(), min_poly, UniPoly::constant(GaussianRational(1)), -ell};
                    // n stays 1: the interpolant section becomes the new
                    // negative section
                }
            }
        } else {
            if (ts.infinite) {
                e = {min_poly, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
                n = 2;
            } else if (ts.t.is_real()) {
                e = {UniPoly(), min_poly, UniPoly::constant(GaussianRational(1)),
                     UniPoly::constant(-ts.t)};
                n = 2;
            } else {
                // generic pair on F0: new ruling from the pencil of (1,1)
                // graphs through the two points
                Mat rows;
                // unknowns (c11, c10, c01, c00) of c11*u*t + c10*u + c01*t + c00
                std::vector<GaussianRational> row = {u0 * ts.t, u0, ts.t, GaussianRational(1)};
                detail::append_vanishing_rows(rows, row);
                auto basis = nullspace(rows, 4);
                check_internal(basis.size() == 2, "tracker: F0 pencil has wrong dimension");
                auto form_n = [](const std::vector<GaussianRational>& v) {
                    return UniPoly({v[3], v[1]}); // c00 + c10 u
                };
                auto form_d = [](const std::vector<GaussianRational>& v) {
                    return UniPoly({v[2], v[0]}); // c01 + c11 u
                };
                // t' = -(n2 + t d2)/(n1 + t d1)
                e = {-form_d(basis[1]), -form_n(basis[1]), form_d(basis[0]), form_n(basis[0])};
                UniPoly dt = e.det();
                check_internal(dt.degree() == 2, "tracker: F0 pencil move has wrong determinant");
                // n stays 0
            }
        }
        V = e * V;
        V.strip_content();
        return n;
    }

    /// The working-frame section that the standard model places at infinity.
    /// Returns (N, D) with the section {D(u) t = N(u)}.
    std::pair<UniPoly, UniPoly> negative_section() const {
        // V(t) = inf <=> c t + d = 0 <=> t = -d/c
        return {-V.d, V.c};
    }
};

} // namespace detail2

/// Extracts the fibrewise matrix of a base-trivial de Jonquieres map from
/// the exact z-split of (N, q) = (g2, g1/y). Coprimality of the component
/// triple makes this presentation already reduced, so the affine
/// determinant of the result is the dehomogenized twisted determinant of
/// degree 2*deg(g) - 2; a degree shortfall records surgery over the
/// infinite fibre.
inline Mat2 fibre_matrix(const BirationalMap& g) {
    check_internal((g.component(0) * HPoly::y()) == (g.component(1) * HPoly::x()),
                   "fibre_matrix: map does not fix the base");
    auto q_opt = exact_divide(g.component(1), HPoly::y());
    check_internal(q_opt.has_value(), "fibre_matrix: second component not divisible by y");
    const HPoly q = *q_opt;
    const HPoly& n = g.component(2);
    detail2::TPoly pq = detail2::dehomogenize(q), pn = detail2::dehomogenize(n);
    check_internal(pq.tdeg() <= 1 && pn.tdeg() <= 1, "fibre_matrix: action is not fibrewise Moebius");
    auto at = [](const detail2::TPoly& p, int k) {
        return k < static_cast<int>(p.c.size()) ? p.c[k] : UniPoly();
    };
    Mat2 m{at(pn, 1), at(pn, 0), at(pq, 1), at(pq, 0)};
    check_internal(!m.det().is_zero(), "fibre_matrix: singular action");
    for (const UniPoly* e : {&m.a, &m.b, &m.c, &m.d})
        check_internal(e->is_real(), "fibre_matrix: non-real entries");
    return m;
}

/// The twisted determinant has degree exactly 2*deg(g) - 2; when the affine
/// determinant falls short, the missing roots sit over the infinite fibre.
inline bool has_infinite_fibre_surgery(const BirationalMap& g) {
    if (g.degree() == 1) return false;
    Mat2 m = fibre_matrix(g);
    return m.det().degree() < 2 * g.degree() - 2;
}

/// Peels the fibrewise matrix of a base-trivial map into elementary factors.
/// The caller guarantees no surgery happens over the infinite fibre.
inline Factorization peel(const BirationalMap& g_rot, const BirationalMap& prefix,
                          const BirationalMap& rotation_undo) {
    Mat2 m = fibre_matrix(g_rot);
    Factorization out;
    out.base_prefix = prefix;
    detail2::IndexTracker tracker;

    UniPoly det = m.det();
    // surgery fibres: the irreducible factors of the determinant
    struct Site {
        UniPoly factor; // linear or quadratic, monic
        int mult;
    };
    std::vector<Site> sites;
    for (const auto& f : factor_over_Q(det)) {
        if (f.factor.degree() == 0) continue;
        if (f.factor.degree() > 2)
            throw unsupported_error("de Jonquieres fibres outside Q(i): determinant has an "
                                    "irreducible factor of degree " +
                                    std::to_string(f.factor.degree()));
        sites.push_back({f.factor, f.multiplicity});
    }
    std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
        if (a.mult != b.mult) return a.mult > b.mult;
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return false;
    });

    for (const auto& site : sites) {
        for (int rep = 0; rep < site.mult; ++rep) {
            ElementaryStep step;
            step.min_poly = site.factor;
            if (site.factor.degree() == 1) {
                step.pair = false;
                step.u0 = -site.factor[0];
            } else {
                step.pair = true;
                auto roots = roots_in_Qi(site.factor);
                check_internal(roots.roots.size() == 2, "peel: quadratic site without Q(i) roots");
                // canonical: positive imaginary part
                GaussianRational r = roots.roots[0].value;
                if (r.im().sign() < 0) r = roots.roots[1].value;
                step.u0 = r;
            }
            auto mv = m.eval(step.u0);
            check_internal(!(mv[0].is_zero() && mv[1].is_zero() && mv[2].is_zero() && mv[3].is_zero()),
                           "peel: matrix vanishes on a whole fibre");
            step.t0 = detail2::kernel_direction(mv);
            // elementary factor in the working frame
            Mat2 e;
            if (!step.pair) {
                UniPoly lin({-step.u0, GaussianRational(1)});
                if (step.t0.infinite)
                    e = {lin, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
                else
                    e = {UniPoly::constant(GaussianRational(1)), UniPoly::constant(-step.t0.t),
                         UniPoly(), lin};
            } else {
                if (step.t0.infinite)
                    e = {site.factor, UniPoly(), UniPoly(), UniPoly::constant(GaussianRational(1))};
                else
                    e = {UniPoly::constant(GaussianRational(1)),
                         -detail2::real_interpolant(step.u0, step.t0.t), UniPoly(), site.factor};
            }
            // m = m' * e: divide m * adj(e) by det(e)
            Mat2 prod = m * e.adj();
            UniPoly de = e.det();
            auto divide = [&de](const UniPoly& p) {
                auto [q, r] = UniPoly::divmod(p, de);
                check_internal(r.is_zero(), "peel: inexact elementary division");
                return q;
            };
            m = {divide(prod.a), divide(prod.b), divide(prod.c), divide(prod.d)};
            m.strip_content();
            step.matrix = e;
            step.index_after =
                step.pair ? tracker.step_pair(step.u0, site.factor, step.t0)
                          : tracker.step_real(step.u0, step.t0);
            out.steps.push_back(std::move(step));
        }
    }
    check_internal(m.det().degree() == 0, "peel: determinant degree did not reach zero");
    out.residual = m;
    out.final_index = tracker.n;
    check_internal(tracker.n == 1, "peel: factorization does not end on F1");
    // the residual must send the tracked negative section to infinity
    auto [sn, sd] = tracker.negative_section();
    // residual composed with V^{-1} maps infinity to infinity: lower-left of
    // residual * adj(V) vanishes
    Mat2 w = m * tracker.V.adj();
    check_internal(w.c.is_zero(), "peel: residual does not contract the negative section");
    (void)sn;
    (void)sd;
    BirationalMap res_map = matrix_to_map(m);
    out.closing = compose(rotation_undo, res_map);
    return out;
}

} // namespace jonq
} // namespace cremona

#pragma once

#include <optional>

#include "cremona/birational_map.hpp"

namespace cremona {

/// Class of a 2x2 matrix acting as a Moebius transformation on a pencil
/// parameter; the membership certificate for the de Jonquieres subgroups.
struct Mobius {
    GaussianRational a, b, c, d;

    GaussianRational det() const { return a * d - b * c; }

    bool is_identity() const {
        return b.is_zero() && c.is_zero() && !a.is_zero() && a == d;
    }

    friend Mobius operator*(const Mobius& m, const Mobius& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }

    Mobius inverse() const {
        check_arg(!det().is_zero(), "Mobius: singular");
        return {d, -b, -c, a};
    }

    /// Proportionality up to one scalar.
    friend bool equivalent(const Mobius& m, const Mobius& n) {
        return (m.a * n.b == m.b * n.a) && (m.a * n.c == m.c * n.a) && (m.a * n.d == m.d * n.a) &&
               (m.b * n.c == m.c * n.b) && (m.b * n.d == m.d * n.b) && (m.c * n.d == m.d * n.c);
    }

    std::string str() const {
        return "[" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + "]";
    }
};

/// Taxonomy of the distinguished generators.
enum class GeneratorTag {
    Automorphism,
    Sigma, // reserved for the literal sigma; classify() reports the orbit class
    ThreeRealQuadratic,
    OneRealPairQuadratic,
    StandardQuintic,
    DeJonquieres,
    Other,
};

inline const char* tag_name(GeneratorTag t) {
    switch (t) {
        case GeneratorTag::Automorphism: return "Automorphism";
        case GeneratorTag::Sigma: return "Sigma";
        case GeneratorTag::ThreeRealQuadratic: return "ThreeRealQuadratic";
        case GeneratorTag::OneRealPairQuadratic: return "OneRealPairQuadratic";
        case GeneratorTag::StandardQuintic: return "StandardQuintic";
        case GeneratorTag::DeJonquieres: return "DeJonquieres";
        case GeneratorTag::Other: return "Other";
    }
    return "?";
}

/// [x:y:z] -> [xz : yz : x^2+y^2], the involution generating H with Aut(P2).
inline BirationalMap sigma() {
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    BirationalMap s(X * Z, Y * Z, X * X + Y * Y);
    s.with_inverse_word({BirationalMap(X * Z, Y * Z, X * X + Y * Y)});
    return s;
}

/// [x:y:z] -> [yz : xz : xy], the involution with three real base points.
inline BirationalMap sigma_std() {
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    BirationalMap s(Y * Z, X * Z, X * Y);
    s.with_inverse_word({BirationalMap(Y * Z, X * Z, X * Y)});
    return s;
}

namespace detail {

/// Real rows expressing "the form with these (real) unknown coefficients
/// vanishes at p": one row for a real point, two (re, im) otherwise.
inline void append_vanishing_rows(Mat& rows, const std::vector<GaussianRational>& complex_row) {
    std::vector<GaussianRational> re, im;
    bool has_im = false;
    for (const auto& c : complex_row) {
        re.push_back(GaussianRational(c.re()));
        im.push_back(GaussianRational(c.im()));
        if (!c.im().is_zero()) has_im = true;
    }
    rows.push_back(std::move(re));
    if (has_im) rows.push_back(std::move(im));
}

inline std::vector<Monomial> monomial_basis(int degree) {
    std::vector<Monomial> mons;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) mons.push_back({i, j, degree - i - j});
    return mons; // descending lex: matches MonomialLexGreater
}

inline HPoly poly_from_coeffs(int degree, const std::vector<Monomial>& mons,
                              const std::vector<GaussianRational>& v) {
    HPoly::TermMap terms;
    for (size_t c = 0; c < mons.size(); ++c)
        if (!v[c].is_zero()) terms[mons[c]] = v[c];
    return HPoly::from_terms(degree, terms);
}

/// Matrix of the projective frame (p1,p2,p3;p4): columns are the p_i scaled
/// so the unit point maps to p4. Requires general position.
inline std::optional<Mat3> frame_matrix(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                        const ProjectivePoint& p3, const ProjectivePoint& p4) {
    Mat3 m{};
    for (int r = 0; r < 3; ++r) m[r] = {p1[r], p2[r], p3[r]};
    if (det3(m).is_zero()) return std::nullopt;
    Vec3 a = mat3_apply(mat3_inverse(m), p4.coords());
    if (a[0].is_zero() || a[1].is_zero() || a[2].is_zero()) return std::nullopt;
    Mat3 f{};
    for (int r = 0; r < 3; ++r) f[r] = {a[0] * p1[r], a[1] * p2[r], a[2] * p3[r]};
    return f;
}

/// The real projectivity taking two non-collinear conjugate pairs onto the
/// standard pencil's base pairs. The Galois-compatible frame correspondence
/// forces realness up to one scalar; assignments are tried in a fixed order
/// so the result is deterministic.
inline BirationalMap pairs_to_standard_pairs(const PointOrbit& t1, const PointOrbit& t2) {
    check_arg(t1.is_pair() && t2.is_pair(), "pairs_to_standard_pairs: need two conjugate pairs");
    const ConicPencil& P = standard_pencil();
    const ProjectivePoint w1 = P.base_orbits()[0].representative();
    const ProjectivePoint w3 = P.base_orbits()[1].representative();
    auto fw = frame_matrix(w1, w1.conj(), w3, w3.conj());
    check_internal(fw.has_value(), "pairs_to_standard_pairs: degenerate standard frame");
    for (int swap = 0; swap < 2; ++swap) {
        for (int fl1 = 0; fl1 < 2; ++fl1) {
            for (int fl2 = 0; fl2 < 2; ++fl2) {
                const PointOrbit& oa = swap ? t2 : t1;
                const PointOrbit& ob = swap ? t1 : t2;
                ProjectivePoint v1 = fl1 ? oa.representative().conj() : oa.representative();
                ProjectivePoint v3 = fl2 ? ob.representative().conj() : ob.representative();
                auto fv = frame_matrix(v1, v1.conj(), v3, v3.conj());
                if (!fv) continue;
                Mat3 m = mat3_mul(*fw, mat3_inverse(*fv));
                GaussianRational scale;
                for (int r = 0; r < 3 && scale.is_zero(); ++r)
                    for (int c = 0; c < 3 && scale.is_zero(); ++c) scale = m[r][c];
                if (scale.is_zero()) continue;
                GaussianRational inv = scale.inverse();
                Mat3 n{};
                bool real = true;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) {
                        n[r][c] = m[r][c] * inv;
                        real = real && n[r][c].is_real();
                    }
                if (!real || det3(n).is_zero()) continue;
                BirationalMap cand = BirationalMap::from_matrix(n);
                if (PointOrbit(cand.apply(v1)) == P.base_orbits()[0] &&
                    PointOrbit(cand.apply(v3)) == P.base_orbits()[1])
                    return cand;
            }
        }
    }
    throw internal_error("pairs_to_standard_pairs: no real projectivity found");
}

} // namespace detail

/// Degree-2 map whose base points are exactly the given orbits: the three
/// conics through the points, in the canonical reduced-echelon basis over
/// the lex-ordered conic monomials.
inline BirationalMap quadratic_with_base_points(const std::vector<PointOrbit>& orbits,
                                                bool attach_inverse = true) {
    int total = 0;
    int pairs = 0;
    std::vector<ProjectivePoint> pts;
    for (const auto& o : orbits) {
        total += o.complex_size();
        pairs += o.is_pair() ? 1 : 0;
        for (const auto& p : o.points()) pts.push_back(p);
    }
    check_arg(total == 3 && (pairs == 0 || pairs == 1),
              "quadratic: base orbits must be three real points or one real point and a pair");
    check_arg(pts[0] != pts[1] && pts[0] != pts[2] && pts[1] != pts[2], "quadratic: repeated base point");
    check_arg(!collinear(pts[0], pts[1], pts[2]), "quadratic: collinear base points");

    auto mons = detail::monomial_basis(2);
    Mat rows;
    std::set<ProjectivePoint> seen;
    for (const auto& o : orbits) {
        const ProjectivePoint& p = o.representative();
        std::vector<GaussianRational> row;
        for (const auto& m : mons) row.push_back(eval_at(HPoly::monomial(m.i, m.j, m.k), p));
        detail::append_vanishing_rows(rows, row);
    }
    auto basis = nullspace(rows, mons.size());
    check_internal(basis.size() == 3, "quadratic: conic system has wrong rank");
    std::array<HPoly, 3> f;
    for (int k = 0; k < 3; ++k) {
        f[k] = detail::poly_from_coeffs(2, mons, basis[k]);
        check_internal(f[k].is_real(), "quadratic: non-real basis conic");
    }
    BirationalMap q(f[0], f[1], f[2]);
    check_internal(q.degree() == 2, "quadratic: degenerate system");

    auto an = analyze_base_points(q);
    check_internal(!an.has_infinitely_near && an.complex_point_count() == 3,
                   "quadratic: constructed map has wrong base scheme");
    for (const auto& [o, m] : an.orbits) {
        bool found = false;
        for (const auto& in : orbits) found = found || in == o;
        check_internal(found, "quadratic: base points differ from the request");
    }

    if (attach_inverse) {
        std::vector<PointOrbit> images;
        for (const auto& c : contracted_curves(q)) images.push_back(c.image);
        BirationalMap g = quadratic_with_base_points(images, false);
        BirationalMap a = compose(g, q);
        check_internal(a.is_automorphism(), "quadratic: inverse candidate is not inverse");
        BirationalMap ainv = a.inverse();
        q.with_inverse_word({g, ainv});
        // g^-1 = f o a^-1
        g.with_inverse_word({ainv, q});
    }
    return q;
}

/// Membership in the de Jonquieres group of the pencil of lines through
/// [0:0:1] with parameter [x:y]: a Moebius witness (a,b,c,d) with
/// f0*(c x + d y) = f1*(a x + b y), invertible; nullopt when none exists.
inline std::optional<Mobius> is_in_Jstar(const BirationalMap& f) {
    HPoly X = HPoly::x(), Y = HPoly::y();
    std::array<HPoly, 4> cols = {-(f.component(1) * X), -(f.component(1) * Y), f.component(0) * X,
                                 f.component(0) * Y};
    auto mons = detail::monomial_basis(f.degree() + 1);
    Mat rows(mons.size(), std::vector<GaussianRational>(4));
    for (size_t r = 0; r < mons.size(); ++r)
        for (int c = 0; c < 4; ++c) rows[r][c] = cols[c].coeff(mons[r].i, mons[r].j, mons[r].k);
    auto basis = nullspace(rows, 4);
    auto to_mobius = [](const std::vector<GaussianRational>& v) {
        return Mobius{v[0], v[1], v[2], v[3]};
    };
    for (const auto& v : basis) {
        Mobius m = to_mobius(v);
        if (!m.det().is_zero()) return m;
    }
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            std::vector<GaussianRational> v(4);
            for (int k = 0; k < 4; ++k) v[k] = basis[i][k] + basis[j][k];
            Mobius m = to_mobius(v);
            if (!m.det().is_zero()) return m;
        }
    return std::nullopt;
}

/// Membership in the group preserving the standard conic pencil:
/// c1(f)*(c*c1 + d*c2) = c2(f)*(a*c1 + b*c2) with invertible (a,b,c,d).
inline std::optional<Mobius> is_in_Jcirc(const BirationalMap& f) {
    const ConicPencil& P = standard_pencil();
    const auto& fs = f.components();
    HPoly c1f = P.c1().substitute(fs[0], fs[1], fs[2]);
    HPoly c2f = P.c2().substitute(fs[0], fs[1], fs[2]);
    std::array<HPoly, 4> cols = {-(c2f * P.c1()), -(c2f * P.c2()), c1f * P.c1(), c1f * P.c2()};
    auto mons = detail::monomial_basis(2 * f.degree() + 2);
    Mat rows(mons.size(), std::vector<GaussianRational>(4));
    for (size_t r = 0; r < mons.size(); ++r)
        for (int c = 0; c < 4; ++c) rows[r][c] = cols[c].coeff(mons[r].i, mons[r].j, mons[r].k);
    auto basis = nullspace(rows, 4);
    for (const auto& v : basis) {
        Mobius m{v[0], v[1], v[2], v[3]};
        if (!m.det().is_zero()) return m;
    }
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Mobius m{basis[i][0] + basis[j][0], basis[i][1] + basis[j][1], basis[i][2] + basis[j][2],
                     basis[i][3] + basis[j][3]};
            if (!m.det().is_zero()) return m;
        }
    return std::nullopt;
}

/// Degree-5 map with double points at the four standard pencil base points
/// and at the given pair; the three quintics of the canonical reduced
/// echelon basis in graded-lex order.
inline BirationalMap standard_quintic(const PointOrbit& q3, bool attach_inverse = true) {
    check_arg(q3.is_pair(), "standard_quintic: third base locus must be a conjugate pair");
    const ConicPencil& P = standard_pencil();
    std::vector<ProjectivePoint> six;
    for (const auto& o : P.base_orbits())
        for (const auto& p : o.points()) six.push_back(p);
    for (const auto& p : q3.points()) {
        check_arg(!P.is_base_point(p), "standard_quintic: pair meets the standard points");
        six.push_back(p);
    }
    for (size_t a = 0; a < six.size(); ++a)
        for (size_t b = a + 1; b < six.size(); ++b)
            for (size_t c = b + 1; c < six.size(); ++c)
                check_arg(!collinear(six[a], six[b], six[c]),
                          "standard_quintic: three of the six points are collinear");
    PencilValue t = P.parameter(q3.representative());
    check_arg(!t.is_real(),
              "standard_quintic: the six points lie on one pencil conic (pair parameter is real)");

    auto mons = detail::monomial_basis(5);
    Mat rows;
    std::vector<ProjectivePoint> reps = {P.base_orbits()[0].representative(),
                                         P.base_orbits()[1].representative(), q3.representative()};
    for (const auto& p : reps) {
        for (int var = 0; var < 3; ++var) {
            std::vector<GaussianRational> row;
            for (const auto& m : mons)
                row.push_back(eval_at(HPoly::monomial(m.i, m.j, m.k).derivative(var), p));
            detail::append_vanishing_rows(rows, row);
        }
    }
    auto basis = nullspace(rows, mons.size());
    check_arg(basis.size() == 3, "standard_quintic: linear system has wrong rank");
    std::array<HPoly, 3> f;
    for (int k = 0; k < 3; ++k) {
        f[k] = detail::poly_from_coeffs(5, mons, basis[k]);
        check_internal(f[k].is_real(), "standard_quintic: non-real basis form");
    }
    BirationalMap q_raw(f[0], f[1], f[2]);
    check_arg(q_raw.degree() == 5, "standard_quintic: system degenerates below degree 5");

    // The echelon basis determines the map only up to a left automorphism,
    // which generally moves the target pencil away from the standard one.
    // Straighten with the projectivity taking the image pencil's base pairs
    // back to the standard four points. Those pairs are the images of the
    // two contracted quartics vanishing only simply at the standard points.
    auto curves = contracted_curves(q_raw);
    check_internal(curves.size() == 3, "standard_quintic: expected three contracted quartics");
    // Vanishing pattern at the two standard representatives: the factors in
    // the class of a standard pair vanish there with orders {1,2}; the
    // q3-class factor vanishes doubly at both.
    std::vector<PointOrbit> targets;
    int q3_class = 0;
    for (const auto& c : curves) {
        int o1 = vanishing_order(c.curve, P.base_orbits()[0].representative());
        int o2 = vanishing_order(c.curve, P.base_orbits()[1].representative());
        if (o1 == 2 && o2 == 2)
            ++q3_class;
        else if (std::min(o1, o2) == 1 && std::max(o1, o2) == 2)
            targets.push_back(c.image);
        else
            throw internal_error("standard_quintic: unexpected quartic vanishing pattern");
    }
    check_internal(targets.size() == 2 && q3_class == 1,
                   "standard_quintic: could not locate the image pencil pairs");
    BirationalMap straighten = detail::pairs_to_standard_pairs(targets[0], targets[1]);
    BirationalMap q = compose(straighten, q_raw);
    check_internal(q.degree() == 5, "standard_quintic: straightening changed the degree");

    auto an = analyze_base_points(q);
    check_internal(!an.has_infinitely_near && an.orbits.size() == 3, "standard_quintic: base scheme wrong");
    for (const auto& [o, m] : an.orbits) {
        check_internal(o.is_pair() && m == 2, "standard_quintic: expected double conjugate pairs");
    }
    check_internal(is_in_Jcirc(q).has_value(), "standard_quintic: lies outside the conic pencil group");

    if (attach_inverse) {
        PointOrbit image_pair = [&q, &P]() {
            for (const auto& c : contracted_curves(q)) {
                if (!P.is_base_point(c.image.representative())) return c.image;
            }
            throw internal_error("standard_quintic: no non-standard image pair found");
        }();
        BirationalMap g = standard_quintic(image_pair, false);
        BirationalMap a = compose(g, q);
        check_internal(a.is_automorphism(), "standard_quintic: inverse candidate fails");
        BirationalMap ainv = a.inverse();
        q.with_inverse_word({g, ainv});
        g.with_inverse_word({ainv, q});
    }
    return q;
}

/// The spec's generating-set taxonomy for a single map.
inline GeneratorTag classify(const BirationalMap& f) {
    if (f.degree() == 1) return GeneratorTag::Automorphism;
    if (f.degree() == 2 || f.degree() == 5) {
        BasePointAnalysis an;
        bool analyzed = true;
        try {
            an = analyze_base_points(f);
        } catch (const unsupported_error&) {
            analyzed = false;
        }
        if (analyzed && !an.has_infinitely_near) {
            if (f.degree() == 2 && an.complex_point_count() == 3) {
                int pairs = 0;
                for (const auto& [o, m] : an.orbits) pairs += o.is_pair() ? 1 : 0;
                if (pairs == 0) return GeneratorTag::ThreeRealQuadratic;
                if (pairs == 1) return GeneratorTag::OneRealPairQuadratic;
            }
            if (f.degree() == 5 && an.orbits.size() == 3) {
                bool quintic_shape = true;
                std::vector<ProjectivePoint> pts;
                for (const auto& [o, m] : an.orbits) {
                    quintic_shape = quintic_shape && o.is_pair() && m == 2;
                    for (const auto& p : o.points()) pts.push_back(p);
                }
                if (quintic_shape) {
                    bool no3 = true;
                    for (size_t a = 0; a < pts.size() && no3; ++a)
                        for (size_t b = a + 1; b < pts.size() && no3; ++b)
                            for (size_t c = b + 1; c < pts.size() && no3; ++c)
                                no3 = !collinear(pts[a], pts[b], pts[c]);
                    if (no3) return GeneratorTag::StandardQuintic;
                }
            }
        }
    }
    if (is_in_Jstar(f)) return GeneratorTag::DeJonquieres;
    return GeneratorTag::Other;
}

/// Remark-on-H made executable: automorphisms alpha, beta with
/// alpha o f o beta = sigma, for any quadratic with one real base point and
/// a conjugate pair.
struct SigmaNormalization {
    BirationalMap alpha, beta;
};

inline SigmaNormalization normalize_to_sigma(const BirationalMap& f) {
    check_arg(classify(f) == GeneratorTag::OneRealPairQuadratic,
              "normalize_to_sigma: map is not a one-real-one-pair quadratic");
    auto an = analyze_base_points(f);
    std::optional<ProjectivePoint> real_opt, pair_opt;
    for (const auto& [o, m] : an.orbits) {
        if (o.is_real())
            real_opt = o.representative();
        else
            pair_opt = o.representative();
    }
    check_internal(real_opt.has_value() && pair_opt.has_value(), "normalize_to_sigma: missing orbit");
    const ProjectivePoint& real_pt = *real_opt;
    const ProjectivePoint& pair_pt = *pair_opt;

    // beta sends [0:0:1] -> real_pt and [1:i:0] -> pair_pt (up to a complex
    // scalar lambda = s + it on the non-real column pair).
    Vec3 u, v;
    for (int k = 0; k < 3; ++k) {
        u[k] = GaussianRational(pair_pt[k].re());
        v[k] = GaussianRational(pair_pt[k].im());
    }
    static const std::array<std::pair<long, long>, 5> lambdas = {{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}}};
    std::optional<Mat3> beta_m;
    for (const auto& [s, t] : lambdas) {
        Mat3 m{};
        for (int k = 0; k < 3; ++k) {
            m[k][0] = GaussianRational(s) * u[k] - GaussianRational(t) * v[k];
            m[k][1] = GaussianRational(t) * u[k] + GaussianRational(s) * v[k];
            m[k][2] = real_pt[k];
        }
        if (!det3(m).is_zero()) {
            beta_m = m;
            break;
        }
    }
    check_internal(beta_m.has_value(), "normalize_to_sigma: no invertible frame");
    BirationalMap beta = BirationalMap::from_matrix(*beta_m);

    BirationalMap g = compose(f, beta);
    // Components of g lie in the net spanned by (xz, yz, x^2+y^2).
    std::array<HPoly, 3> net = {HPoly::x() * HPoly::z(), HPoly::y() * HPoly::z(),
                                HPoly::x() * HPoly::x() + HPoly::y() * HPoly::y()};
    auto mons = detail::monomial_basis(2);
    Mat3 A{};
    for (int k = 0; k < 3; ++k) {
        // solve g_k = sum_j A[k][j] * net[j] by matching coefficients
        Mat rows;
        for (const auto& m : mons) {
            std::vector<GaussianRational> row = {net[0].coeff(m.i, m.j, m.k), net[1].coeff(m.i, m.j, m.k),
                                                 net[2].coeff(m.i, m.j, m.k),
                                                 g.component(k).coeff(m.i, m.j, m.k)};
            rows.push_back(std::move(row));
        }
        auto pivots = rref(rows);
        // read the solution of [net | g_k]: last column must not be a pivot
        for (int p : pivots) check_internal(p != 3, "normalize_to_sigma: component outside the net");
        std::array<GaussianRational, 3> sol{};
        for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = rows[r][3];
        A[k] = {sol[0], sol[1], sol[2]};
    }
    check_internal(!det3(A).is_zero(), "normalize_to_sigma: singular net matrix");
    BirationalMap alpha = BirationalMap::from_matrix(mat3_inverse(A));
    check_internal(equals(compose(alpha, g), sigma()), "normalize_to_sigma: verification failed");
    return {alpha, beta};
}

} // namespace cremona

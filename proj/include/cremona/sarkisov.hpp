#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/jonquieres.hpp"
#include "cremona/pencil.hpp"

namespace cremona {

enum class SurfaceKind { P2, Q, Fn, C6, C5, C4, X6, X7 };

inline const char* surface_name(SurfaceKind s) {
    switch (s) {
        case SurfaceKind::P2: return "P2";
        case SurfaceKind::Q: return "Q";
        case SurfaceKind::Fn: return "F";
        case SurfaceKind::C6: return "C6";
        case SurfaceKind::C5: return "C5";
        case SurfaceKind::C4: return "C4";
        case SurfaceKind::X6: return "X6";
        case SurfaceKind::X7: return "X7";
    }
    return "?";
}

/// Vertex of the square complex at rank 1: a Mori fibre space with a
/// marking to P2 where one is concrete; surfaces other than P2 carry no
/// coordinate ring, so their markings stay symbolic and every semantic
/// check happens on P2 composites.
struct FibrationVertex {
    SurfaceKind surface = SurfaceKind::P2;
    int index = 0;       // n for F(n)
    bool over_p1 = false; // base P1 rather than a point
    std::optional<BirationalMap> marking;

    std::string str() const {
        std::string s = surface_name(surface);
        if (surface == SurfaceKind::Fn) s += std::to_string(index);
        s += over_p1 ? "/P1" : "/pt";
        return s;
    }

    friend bool same_shape(const FibrationVertex& a, const FibrationVertex& b) {
        return a.surface == b.surface && a.index == b.index && a.over_p1 == b.over_p1;
    }
};

inline FibrationVertex vertex_p2() { return {SurfaceKind::P2, 0, false, std::nullopt}; }
inline FibrationVertex vertex_p2(const BirationalMap& marking) {
    return {SurfaceKind::P2, 0, false, marking};
}
inline FibrationVertex vertex_f(int n) { return {SurfaceKind::Fn, n, true, std::nullopt}; }
inline FibrationVertex vertex_q() { return {SurfaceKind::Q, 0, false, std::nullopt}; }
inline FibrationVertex vertex_c6() { return {SurfaceKind::C6, 0, true, std::nullopt}; }

enum class LinkKind { I, II, III, IV };

inline const char* link_kind_name(LinkKind k) {
    switch (k) {
        case LinkKind::I: return "I";
        case LinkKind::II: return "II";
        case LinkKind::III: return "III";
        case LinkKind::IV: return "IV";
    }
    return "?";
}

/// A Sarkisov link as data. `induced` is the concrete plane map realized
/// through the working models when the construction provides one; the
/// spec-level `p2_composite` is only set when both endpoint markings reach
/// P2 concretely.
struct Link {
    LinkKind kind = LinkKind::II;
    FibrationVertex source, target;
    std::optional<PointOrbit> blown_up;
    std::optional<HPoly> contracted;          // curve descriptor in working coordinates
    std::optional<PencilValue> fibre_parameter; // base parameter of the contracted fibre(s)
    std::optional<BirationalMap> induced;
    std::optional<BirationalMap> p2_composite;
};

/// A composable chain of links. `composite` holds the verified product of
/// the induced maps (or the externally verified composite for symbolic
/// words).
struct LinkWord {
    std::vector<Link> links;
    std::optional<BirationalMap> composite;

    size_t size() const { return links.size(); }
    bool empty() const { return links.empty(); }

    void validate_chain() const {
        for (size_t k = 0; k + 1 < links.size(); ++k)
            check_internal(same_shape(links[k].target, links[k + 1].source),
                           "link word: endpoints do not chain");
    }

    /// Product of the per-link induced maps, where all are present.
    std::optional<BirationalMap> recompose() const {
        MapWord maps;
        for (const auto& l : links) {
            if (!l.induced) return std::nullopt;
            maps.push_back(*l.induced);
        }
        if (maps.empty()) return std::nullopt;
        return compose_word(maps);
    }
};

// ---------------------------------------------------------------------------
// sigma as two links of type II through the quadric
// ---------------------------------------------------------------------------

/// sigma = phi2 o phi1 with phi1: P2 -> Q blowing up [1:+-i:0] and
/// contracting the line z through them, and phi2: Q -> P2 blowing up the
/// image of [0:0:1] and contracting the conic x^2+y^2. The Q vertex is
/// symbolic; the verification anchor is the composite.
inline LinkWord sigma_link_factorization() {
    BirationalMap s = sigma();
    GaussianRational i = GaussianRational::i();
    PointOrbit pair(ProjectivePoint(GaussianRational(1), i, GaussianRational(0)));
    PointOrbit real_pt(ProjectivePoint(GaussianRational(0), GaussianRational(0), GaussianRational(1)));

    Link l1;
    l1.kind = LinkKind::II;
    l1.source = vertex_p2(BirationalMap::identity());
    l1.target = vertex_q();
    l1.blown_up = pair;
    l1.contracted = HPoly::z();

    Link l2;
    l2.kind = LinkKind::II;
    l2.source = vertex_q();
    l2.target = vertex_p2(s);
    l2.blown_up = real_pt;
    l2.contracted = HPoly::x() * HPoly::x() + HPoly::y() * HPoly::y();

    LinkWord w;
    w.links = {l1, l2};
    w.composite = s;
    w.validate_chain();
    return w;
}

// ---------------------------------------------------------------------------
// decompose_de_jonquieres
// ---------------------------------------------------------------------------

/// Factors an element of Jstar into the type I link at the center, a chain
/// of elementary type II links between Hirzebruch surfaces, and a closing
/// type III link. The word recomposes to f exactly; every blown-up fibre
/// position and the Hirzebruch index walk are recorded.
inline LinkWord decompose_de_jonquieres(const BirationalMap& f) {
    auto witness = is_in_Jstar(f);
    check_arg(witness.has_value(), "decompose: map does not preserve the pencil of lines through [0:0:1]");
    LinkWord word;
    if (equals(f, BirationalMap::identity())) {
        word.composite = f;
        return word; // empty word between P2 vertices
    }

    BirationalMap l_mu = jonq::base_automorphism(*witness);
    BirationalMap g = compose(f, l_mu.inverse());

    // Move every surgery fibre away from infinity if needed.
    BirationalMap rot = BirationalMap::identity();
    BirationalMap rot_undo = BirationalMap::identity();
    BirationalMap g_rot = g;
    if (g.degree() >= 2 && jonq::has_infinite_fibre_surgery(g)) {
        jonq::Mat2 m = jonq::fibre_matrix(g);
        UniPoly det = m.det();
        long k0 = 0;
        for (long cand = 0;; cand = cand > 0 ? -cand : -cand + 1) {
            if (!det.eval(GaussianRational(cand)).is_zero()) {
                k0 = cand;
                break;
            }
            check_arg(cand < 64, "decompose: no rotation constant found");
        }
        Mat3 rho{{{GaussianRational(0), GaussianRational(1), GaussianRational(0)},
                  {GaussianRational(1), GaussianRational(-k0), GaussianRational(0)},
                  {GaussianRational(0), GaussianRational(0), GaussianRational(1)}}};
        rot = BirationalMap::from_matrix(rho);
        rot_undo = rot.inverse();
        g_rot = compose(compose(rot, g), rot_undo);
        check_internal(!jonq::has_infinite_fibre_surgery(g_rot), "decompose: rotation failed");
    }

    BirationalMap prefix = compose(rot, l_mu);
    jonq::Factorization fact = jonq::peel(g_rot, prefix, rot_undo);

    Link open;
    open.kind = LinkKind::I;
    open.source = vertex_p2(BirationalMap::identity());
    open.target = vertex_f(1);
    open.blown_up = PointOrbit(ProjectivePoint(GaussianRational(0), GaussianRational(0), GaussianRational(1)));
    open.induced = prefix;
    word.links.push_back(open);

    int prev_index = 1;
    for (const auto& step : fact.steps) {
        Link l;
        l.kind = LinkKind::II;
        l.source = vertex_f(prev_index);
        l.target = vertex_f(step.index_after);
        l.fibre_parameter = PencilValue{false, step.u0};
        if (!step.t0.infinite) {
            // the blown point in the working frame: [u0 : 1 : t0]
            l.blown_up = PointOrbit(ProjectivePoint(step.u0, GaussianRational(1), step.t0.t));
        }
        // the contracted fibre(s): x - u0 y, or the real quadratic in (x, y)
        {
            HPoly fib(step.min_poly.degree());
            HPoly::TermMap terms;
            for (int e = 0; e <= step.min_poly.degree(); ++e)
                if (!step.min_poly[e].is_zero())
                    terms[{e, step.min_poly.degree() - e, 0}] = step.min_poly[e];
            l.contracted = HPoly::from_terms(step.min_poly.degree(), terms);
        }
        l.induced = jonq::matrix_to_map(step.matrix);
        word.links.push_back(l);
        prev_index = step.index_after;
    }

    Link close;
    close.kind = LinkKind::III;
    close.source = vertex_f(fact.final_index);
    close.target = vertex_p2(f);
    close.induced = fact.closing;
    word.links.push_back(close);

    auto re = word.recompose();
    check_internal(re.has_value() && equals(*re, f), "decompose: recomposition mismatch");
    word.composite = f;
    word.validate_chain();
    return word;
}

// ---------------------------------------------------------------------------
// explicit paths for quadratics
// ---------------------------------------------------------------------------

namespace detail {

/// Deterministic real frame with e3 -> center, avoiding a list of points on
/// the would-be infinite fibre (the line through column 0 and the center).
inline BirationalMap frame_with_center(const ProjectivePoint& center,
                                       const std::vector<ProjectivePoint>& avoid_infinite) {
    static const std::array<std::array<long, 3>, 6> cands = {{{1, 0, 0},
                                                              {0, 1, 0},
                                                              {0, 0, 1},
                                                              {1, 1, 1},
                                                              {1, -1, 2},
                                                              {2, 1, -1}}};
    for (size_t ia = 0; ia < cands.size(); ++ia) {
        ProjectivePoint a(GaussianRational(cands[ia][0]), GaussianRational(cands[ia][1]),
                          GaussianRational(cands[ia][2]));
        if (a == center) continue;
        bool bad = false;
        HPoly inf_line = line_through(a, center);
        for (const auto& p : avoid_infinite) bad = bad || eval_at(inf_line, p).is_zero();
        if (bad) continue;
        for (size_t ib = 0; ib < cands.size(); ++ib) {
            if (ib == ia) continue;
            ProjectivePoint b(GaussianRational(cands[ib][0]), GaussianRational(cands[ib][1]),
                              GaussianRational(cands[ib][2]));
            Mat3 m{};
            for (int r = 0; r < 3; ++r) m[r] = {a[r], b[r], center[r]};
            if (det3(m).is_zero()) continue;
            return BirationalMap::from_matrix(m);
        }
    }
    throw internal_error("frame_with_center: no frame found");
}

} // namespace detail

/// The explicit four-link path of a quadratic with three real base points:
/// blow p1; elementary link at p2 contracting the line p1p2; elementary
/// link at p3 contracting the line p1p3; contract the line p2p3.
inline LinkWord three_real_quadratic_path(const BirationalMap& f) {
    check_arg(classify(f) == GeneratorTag::ThreeRealQuadratic,
              "three_real_quadratic_path: map is not a three-real quadratic");
    auto an = analyze_base_points(f);
    std::vector<ProjectivePoint> pts;
    for (const auto& [o, m] : an.orbits) pts.push_back(o.representative());
    check_internal(pts.size() == 3, "three_real_quadratic_path: expected three points");
    const ProjectivePoint &p1 = pts[0], &p2 = pts[1], &p3 = pts[2];

    // frame T: e3 -> p1, e2 -> p2, [1:1:0] -> p3 (fourth point pins scales)
    ProjectivePoint e3(GaussianRational(0), GaussianRational(0), GaussianRational(1));
    ProjectivePoint e2(GaussianRational(0), GaussianRational(1), GaussianRational(0));
    ProjectivePoint m110(GaussianRational(1), GaussianRational(1), GaussianRational(0));
    ProjectivePoint m211(GaussianRational(2), GaussianRational(1), GaussianRational(1));
    std::optional<ProjectivePoint> fourth;
    static const std::array<std::array<long, 3>, 5> lams = {
        {{1, 1, 1}, {1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {1, 3, 2}}};
    std::array<HPoly, 3> lines = {line_through(p1, p2), line_through(p1, p3), line_through(p2, p3)};
    for (const auto& lam : lams) {
        Vec3 v{};
        for (int k = 0; k < 3; ++k)
            v[k] = GaussianRational(lam[0]) * p1[k] + GaussianRational(lam[1]) * p2[k] +
                   GaussianRational(lam[2]) * p3[k];
        ProjectivePoint r(v);
        bool on_line = false;
        for (const auto& l : lines) on_line = on_line || eval_at(l, r).is_zero();
        if (!on_line) {
            fourth = r;
            break;
        }
    }
    check_internal(fourth.has_value(), "three_real_quadratic_path: no generic fourth point");
    auto fsrc = detail::frame_matrix(e3, e2, m110, m211);
    auto ftgt = detail::frame_matrix(p1, p2, p3, *fourth);
    check_internal(fsrc && ftgt, "three_real_quadratic_path: degenerate frame");
    BirationalMap T = BirationalMap::from_matrix(mat3_mul(*ftgt, mat3_inverse(*fsrc)));
    BirationalMap Tinv = T.inverse();

    // model pieces centered at e3: elementary links at (u,t) = (0,0) and (1,0)
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    BirationalMap g2_model(X * X, X * Y, Y * Z);
    BirationalMap g3_model(X * (X - Y), Y * (X - Y), Y * Z);
    BirationalMap g2_model_inv(X * Y, Y * Y, Z * X);
    BirationalMap g3_model_inv(X * Y, Y * Y, Z * (X - Y));
    check_internal(equals(compose(g2_model, g2_model_inv), BirationalMap::identity()),
                   "three_real_quadratic_path: bad model inverse");
    check_internal(equals(compose(g3_model, g3_model_inv), BirationalMap::identity()),
                   "three_real_quadratic_path: bad model inverse");

    BirationalMap g2 = compose(T, compose(g2_model, Tinv));
    BirationalMap g3 = compose(T, compose(g3_model, Tinv));
    BirationalMap partial_inv =
        compose(T, compose(g2_model_inv, compose(g3_model_inv, Tinv)));
    BirationalMap g4 = compose(f, partial_inv);
    check_internal(g4.degree() == 2, "three_real_quadratic_path: closing piece has wrong degree");
    {
        HPoly jac = jacobian_det(g4.component(0), g4.component(1), g4.component(2));
        check_internal(exact_divide(jac, lines[2]).has_value(),
                       "three_real_quadratic_path: closing piece does not contract the line p2p3");
    }

    LinkWord word;
    Link l1;
    l1.kind = LinkKind::I;
    l1.source = vertex_p2(BirationalMap::identity());
    l1.target = vertex_f(1);
    l1.blown_up = PointOrbit(p1);
    l1.induced = BirationalMap::identity();

    Link l2;
    l2.kind = LinkKind::II;
    l2.source = vertex_f(1);
    l2.target = vertex_f(0);
    l2.blown_up = PointOrbit(p2);
    l2.contracted = lines[0];
    l2.induced = g2;

    Link l3;
    l3.kind = LinkKind::II;
    l3.source = vertex_f(0);
    l3.target = vertex_f(1);
    l3.blown_up = PointOrbit(p3);
    l3.contracted = lines[1];
    l3.induced = g3;

    Link l4;
    l4.kind = LinkKind::III;
    l4.source = vertex_f(1);
    l4.target = vertex_p2(f);
    l4.contracted = lines[2];
    l4.induced = g4;

    word.links = {l1, l2, l3, l4};
    auto re = word.recompose();
    check_internal(re.has_value() && equals(*re, f), "three_real_quadratic_path: recomposition failed");
    word.composite = f;
    word.validate_chain();
    return word;
}

/// Path [I at the real base point][pair elementary link][III] for a
/// quadratic with one real base point and a conjugate pair; the source and
/// target centers differ, so the de Jonquieres machinery runs in adapted
/// frames.
inline LinkWord one_real_pair_quadratic_path(const BirationalMap& f) {
    check_arg(classify(f) == GeneratorTag::OneRealPairQuadratic,
              "one_real_pair_quadratic_path: wrong map class");
    auto an = analyze_base_points(f);
    std::optional<PointOrbit> real_orbit, pair_orbit;
    for (const auto& [o, m] : an.orbits) (o.is_real() ? real_orbit : pair_orbit) = o;
    check_internal(real_orbit && pair_orbit, "one_real_pair_quadratic_path: missing orbits");

    // target center: the image of the contracted real line (the real base
    // point of the inverse)
    std::optional<PointOrbit> tgt_real, tgt_pair;
    for (const auto& c : contracted_curves(f)) {
        if (c.image.is_real())
            tgt_real = c.image;
        else
            tgt_pair = c.image;
    }
    check_internal(tgt_real && tgt_pair, "one_real_pair_quadratic_path: missing image orbits");

    std::vector<ProjectivePoint> avoid_src = pair_orbit->points();
    std::vector<ProjectivePoint> avoid_tgt = tgt_pair->points();
    BirationalMap t_src = detail::frame_with_center(real_orbit->representative(), avoid_src);
    BirationalMap t_tgt = detail::frame_with_center(tgt_real->representative(), avoid_tgt);
    BirationalMap f_hat = compose(t_tgt.inverse(), compose(f, t_src));
    LinkWord inner = decompose_de_jonquieres(f_hat);
    check_internal(inner.size() == 3, "one_real_pair_quadratic_path: expected [I][II][III]");
    check_internal(inner.links[1].kind == LinkKind::II && inner.links[1].fibre_parameter &&
                       !inner.links[1].fibre_parameter->t.is_real(),
                   "one_real_pair_quadratic_path: middle link is not a pair link");

    LinkWord word = inner;
    word.links[0].induced = compose(*inner.links[0].induced, t_src.inverse());
    word.links[0].blown_up = real_orbit;
    word.links[0].source = vertex_p2(BirationalMap::identity());
    word.links[2].induced = compose(t_tgt, *inner.links[2].induced);
    word.links[2].target = vertex_p2(f);
    word.links[1].blown_up = pair_orbit; // ambient coordinates of the blown pair
    auto re = word.recompose();
    check_internal(re.has_value() && equals(*re, f), "one_real_pair_quadratic_path: recomposition failed");
    word.composite = f;
    return word;
}

// ---------------------------------------------------------------------------
// quintic_to_c6_link
// ---------------------------------------------------------------------------

/// The C6/P1 type II link conjugate to a standard quintic: blown-up orbit
/// is the quintic's third base pair, the contracted fibre parameter is its
/// pencil coordinate, and the P2 composite is the quintic itself.
inline Link quintic_to_c6_link(const BirationalMap& q) {
    check_arg(classify(q) == GeneratorTag::StandardQuintic, "quintic_to_c6_link: not a standard quintic");
    check_arg(is_in_Jcirc(q).has_value(), "quintic_to_c6_link: quintic not adapted to the standard pencil");
    const ConicPencil& P = standard_pencil();
    std::optional<PointOrbit> third;
    for (const auto& o : base_points(q)) {
        if (!P.is_base_point(o.representative())) third = o;
    }
    check_internal(third.has_value(), "quintic_to_c6_link: no third base pair");
    PencilValue t = P.parameter(third->representative());
    check_arg(!t.is_real(), "quintic_to_c6_link: the pair sits on a real fibre (no elementary link)");

    Link l;
    l.kind = LinkKind::II;
    l.source = vertex_c6();
    l.target = vertex_c6();
    l.blown_up = *third;
    l.fibre_parameter = t;
    l.p2_composite = q;
    return l;
}

} // namespace cremona

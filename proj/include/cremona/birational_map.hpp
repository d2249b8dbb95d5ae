#pragma once

#include <array>
#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "cremona/pencil.hpp"
#include "cremona/point.hpp"
#include "cremona/poly_gcd.hpp"

namespace cremona {

class BirationalMap;
using MapWord = std::vector<BirationalMap>;

/// Element of the real plane Cremona group: a coprime triple of real
/// homogeneous forms of one degree with nonvanishing Jacobian, stored in
/// the canonical scale (leading coefficient of the first component is 1).
/// Values are immutable; all operations are pure.
class BirationalMap {
public:
    /// Validating constructor: checks realness, strips a common factor
    /// (recording that it did), and certifies dominance via the Jacobian.
    BirationalMap(HPoly f0, HPoly f1, HPoly f2) : f_{std::move(f0), std::move(f1), std::move(f2)} {
        check_arg(f_[0].degree() == f_[1].degree() && f_[1].degree() == f_[2].degree(),
                  "map components must share one degree");
        check_arg(!f_[0].is_zero() && !f_[1].is_zero() && !f_[2].is_zero(),
                  "map components must be nonzero");
        for (const auto& f : f_) check_arg(f.is_real(), "map components must be real");
        HPoly g = poly_gcd(poly_gcd(f_[0], f_[1]), f_[2]);
        if (g.degree() > 0) {
            simplified_ = true;
            for (auto& f : f_) f = *exact_divide(f, g);
        }
        check_arg(f_[0].degree() >= 1, "map components must be nonconstant");
        check_arg(!jacobian_det(f_[0], f_[1], f_[2]).is_zero(),
                  "map is not dominant (Jacobian identically zero)");
        rescale();
    }

    static BirationalMap identity() {
        return from_matrix(Mat3{{{GaussianRational(1), GaussianRational(0), GaussianRational(0)},
                                 {GaussianRational(0), GaussianRational(1), GaussianRational(0)},
                                 {GaussianRational(0), GaussianRational(0), GaussianRational(1)}}});
    }

    /// Degree-1 map from an invertible real matrix (rows give components).
    static BirationalMap from_matrix(const Mat3& m) {
        check_arg(!det3(m).is_zero(), "from_matrix: singular matrix");
        std::array<HPoly, 3> f;
        for (int r = 0; r < 3; ++r) {
            check_arg(m[r][0].is_real() && m[r][1].is_real() && m[r][2].is_real(),
                      "from_matrix: entries must be real");
            f[r] = m[r][0] * HPoly::x() + m[r][1] * HPoly::y() + m[r][2] * HPoly::z();
        }
        return BirationalMap(Trusted{}, std::move(f));
    }

    int degree() const { return f_[0].degree(); }
    const HPoly& component(int k) const { return f_[k]; }
    const std::array<HPoly, 3>& components() const { return f_; }
    bool was_simplified() const { return simplified_; }

    bool is_automorphism() const { return degree() == 1; }

    Mat3 as_matrix() const {
        check_arg(is_automorphism(), "as_matrix: map has degree > 1");
        Mat3 m{};
        for (int r = 0; r < 3; ++r) {
            m[r][0] = f_[r].coeff(1, 0, 0);
            m[r][1] = f_[r].coeff(0, 1, 0);
            m[r][2] = f_[r].coeff(0, 0, 1);
        }
        return m;
    }

    /// Image of a point outside the base locus.
    ProjectivePoint apply(const ProjectivePoint& p) const {
        GaussianRational a = eval_at(f_[0], p), b = eval_at(f_[1], p), c = eval_at(f_[2], p);
        check_arg(!(a.is_zero() && b.is_zero() && c.is_zero()), "apply: point is a base point");
        return ProjectivePoint(a, b, c);
    }

    PointOrbit apply(const PointOrbit& o) const { return PointOrbit(apply(o.representative())); }

    friend bool operator==(const BirationalMap& a, const BirationalMap& b) { return a.f_ == b.f_; }
    friend bool operator!=(const BirationalMap& a, const BirationalMap& b) { return !(a == b); }

    /// g after f, with the common factor of the substituted triple removed.
    friend BirationalMap compose(const BirationalMap& g, const BirationalMap& f, int degree_guard);

    BirationalMap& with_inverse_word(MapWord word);
    const MapWord* inverse_word() const { return inv_ ? inv_.get() : nullptr; }
    bool has_inverse() const { return is_automorphism() || inv_ != nullptr; }
    BirationalMap inverse() const;

    std::string str() const; // defined in format.hpp

private:
    struct Trusted {};
    BirationalMap(Trusted, std::array<HPoly, 3> f) : f_(std::move(f)) { rescale(); }

    void rescale() {
        GaussianRational lead = f_[0].lead_coeff();
        if (lead == GaussianRational(1)) return;
        GaussianRational inv = lead.inverse();
        for (auto& f : f_) f = inv * f;
    }

    std::array<HPoly, 3> f_;
    bool simplified_ = false;
    std::shared_ptr<const MapWord> inv_;
    friend struct MapComposer;
};

/// Same group element: the component triples are proportional. With the
/// canonical rescaling this is plain equality.
inline bool equals(const BirationalMap& a, const BirationalMap& b) { return a == b; }

inline bool is_identity(const BirationalMap& f) { return f == BirationalMap::identity(); }

namespace detail {

/// Candidate low-degree contracted-curve factors of f, used when reducing
/// a composition: lines through pairs of base points and conics through
/// five of them, grouped into Galois-stable (real) products.
std::vector<HPoly> contracted_factor_candidates(const BirationalMap& f);

inline bool certified_coprime(const std::array<HPoly, 3>& f) {
    // Restrict to lines until none of the restrictions vanishes; a constant
    // univariate gcd then certifies triple coprimality.
    for (long seed = 1; seed <= 8; ++seed) {
        std::array<GaussianRational, 3> p{GaussianRational(1), GaussianRational(seed),
                                          GaussianRational(seed + 1)};
        std::array<GaussianRational, 3> q{GaussianRational(seed + 2), GaussianRational(1),
                                          GaussianRational(2 * seed + 1)};
        UniPoly r0 = f[0].restrict_to_line(p, q);
        if (r0.is_zero()) continue;
        UniPoly r1 = f[1].restrict_to_line(p, q);
        if (r1.is_zero()) continue;
        UniPoly g = gcd(r0, r1);
        if (g.degree() == 0) return true;
        UniPoly r2 = f[2].restrict_to_line(p, q);
        if (r2.is_zero()) continue;
        if (gcd(g, r2).degree() == 0) return true;
        return false; // restrictions nonzero but share a factor: likely a genuine common factor
    }
    return false;
}

} // namespace detail

struct MapComposer {
    static BirationalMap make_trusted(std::array<HPoly, 3> f) {
        return BirationalMap(BirationalMap::Trusted{}, std::move(f));
    }
};

inline BirationalMap compose(const BirationalMap& g, const BirationalMap& f, int degree_guard = 600) {
    long raw_degree = static_cast<long>(g.degree()) * f.degree();
    check_arg(raw_degree <= degree_guard, "compose: degree guard exceeded");
    std::array<HPoly, 3> h;
    for (int k = 0; k < 3; ++k) h[k] = g.f_[k].substitute(f.f_[0], f.f_[1], f.f_[2]);

    // Strip the common monomial part first, then peel known low-degree
    // contracted factors of f, then certify coprimality; a full gcd is the
    // fallback when the cheap certificates fail.
    auto strip_monomials = [&h]() {
        Monomial m0 = monomial_content(h[0]), m1 = monomial_content(h[1]), m2 = monomial_content(h[2]);
        Monomial c{std::min({m0.i, m1.i, m2.i}), std::min({m0.j, m1.j, m2.j}),
                   std::min({m0.k, m1.k, m2.k})};
        if (c.i + c.j + c.k == 0) return;
        HPoly mono = HPoly::monomial(c.i, c.j, c.k);
        for (auto& x : h) x = *exact_divide(x, mono);
    };
    strip_monomials();

    if (h[0].degree() > 0 && !detail::certified_coprime(h)) {
        if (f.degree() >= 2 && f.degree() <= 8) {
            for (const HPoly& cand : detail::contracted_factor_candidates(f)) {
                while (h[0].degree() >= cand.degree()) {
                    auto q0 = exact_divide(h[0], cand);
                    if (!q0) break;
                    auto q1 = exact_divide(h[1], cand);
                    if (!q1) break;
                    auto q2 = exact_divide(h[2], cand);
                    if (!q2) break;
                    h = {std::move(*q0), std::move(*q1), std::move(*q2)};
                }
            }
            strip_monomials();
        }
        if (h[0].degree() > 0 && !detail::certified_coprime(h)) {
            HPoly g3 = poly_gcd(poly_gcd(h[0], h[1]), h[2]);
            if (g3.degree() > 0)
                for (auto& x : h) x = *exact_divide(x, g3);
        }
    }
    check_internal(h[0].degree() >= 1, "compose: degenerate composite");
    BirationalMap out = MapComposer::make_trusted(std::move(h));
    if ((g.is_automorphism() || g.inv_) && (f.is_automorphism() || f.inv_)) {
        MapWord w;
        if (g.inv_)
            w = *g.inv_;
        else
            w.push_back(g.inverse());
        MapWord wf;
        if (f.inv_)
            wf = *f.inv_;
        else
            wf.push_back(f.inverse());
        // (g o f)^-1 = f^-1 o g^-1: apply g^-1 first in word order.
        MapWord inv = w;
        inv.insert(inv.end(), wf.begin(), wf.end());
        out.with_inverse_word(std::move(inv));
    }
    return out;
}

/// Composite of a word: letters apply in sequence, so the result is
/// word[n-1] o ... o word[0]. Folded so the small letter sits inside.
inline BirationalMap compose_word(const MapWord& word, int degree_guard = 600) {
    check_arg(!word.empty(), "compose_word: empty word");
    BirationalMap acc = word.back();
    for (int k = static_cast<int>(word.size()) - 2; k >= 0; --k) acc = compose(acc, word[k], degree_guard);
    return acc;
}

inline BirationalMap& BirationalMap::with_inverse_word(MapWord word) {
    check_arg(!word.empty(), "inverse word must be nonempty");
    inv_ = std::make_shared<const MapWord>(std::move(word));
    return *this;
}

inline BirationalMap BirationalMap::inverse() const {
    if (is_automorphism()) return from_matrix(mat3_inverse(as_matrix()));
    check_arg(inv_ != nullptr, "inverse: no inverse word attached");
    return compose_word(*inv_);
}

// ---------------------------------------------------------------------------
// Base points
// ---------------------------------------------------------------------------

struct BasePointAnalysis {
    std::vector<std::pair<PointOrbit, int>> orbits; // orbit with multiplicity
    bool has_infinitely_near = false;

    int complex_point_count() const {
        int n = 0;
        for (const auto& [o, m] : orbits) n += o.complex_size();
        return n;
    }
};

namespace detail {

/// Projective roots (alpha:beta) of a homogeneous binary form given as a
/// trivariate polynomial using exactly the two variables va < vb.
struct BinaryRoots {
    std::vector<std::pair<std::array<GaussianRational, 2>, int>> roots; // ((a:b), mult)
    bool leftover = false; // a factor without Q(i) roots remained
};

inline BinaryRoots binary_form_roots(const HPoly& form, int va, int vb) {
    BinaryRoots out;
    if (form.is_zero()) throw internal_error("binary_form_roots: zero form");
    // Dehomogenize: u = va-coordinate, vb = 1.
    std::vector<GaussianRational> coeffs(form.degree() + 1);
    int min_b = form.degree() + 1;
    for (const auto& [m, c] : form.terms()) {
        int ea = va == 0 ? m.i : va == 1 ? m.j : m.k;
        int eb = vb == 0 ? m.i : vb == 1 ? m.j : m.k;
        check_internal(ea + eb == form.degree(), "binary_form_roots: form uses a third variable");
        coeffs[ea] = c;
        min_b = std::min(min_b, eb);
    }
    UniPoly u{std::move(coeffs)};
    if (min_b > 0) // (1:0) root with multiplicity = vb-valuation
        out.roots.push_back({{GaussianRational(1), GaussianRational(0)}, min_b});
    if (u.degree() >= 1) {
        QiRoots qr = roots_in_Qi(u);
        for (const auto& r : qr.roots) out.roots.push_back({{r.value, GaussianRational(1)}, r.multiplicity});
        if (qr.non_rational.degree() >= 1) out.leftover = true;
    }
    return out;
}

/// Common zeros of two coprime forms, gathered by eliminating `elim`.
inline void elimination_points(const HPoly& p, const HPoly& q, int elim, std::set<ProjectivePoint>& sink,
                               bool& leftover) {
    auto degree_in = [](const HPoly& h, int var) {
        int d = 0;
        for (const auto& [m, c] : h.terms()) d = std::max(d, var == 0 ? m.i : var == 1 ? m.j : m.k);
        return d;
    };
    if (degree_in(p, elim) == 0 || degree_in(q, elim) == 0) return;
    HPoly res = resultant_wrt(p, q, elim);
    if (res.is_zero()) return; // shared factor; the caller handles that route
    int va = elim == 0 ? 1 : 0;
    int vb = elim == 2 ? 1 : 2;
    BinaryRoots roots = binary_form_roots(res, va, vb);
    if (roots.leftover) leftover = true;
    for (const auto& [ab, mult] : roots.roots) {
        // Solve for the eliminated coordinate along this root line.
        Vec3 base{};
        base[va] = ab[0];
        base[vb] = ab[1];
        Vec3 dir{};
        dir[elim] = GaussianRational(1);
        UniPoly pu = p.restrict_to_line(base, dir);
        UniPoly qu = q.restrict_to_line(base, dir);
        UniPoly g;
        if (pu.is_zero() && qu.is_zero())
            throw internal_error("elimination_points: positive-dimensional locus");
        else if (pu.is_zero())
            g = qu;
        else if (qu.is_zero())
            g = pu;
        else
            g = gcd(pu, qu);
        if (g.degree() < 1) continue;
        QiRoots qr = roots_in_Qi(g);
        if (qr.non_rational.degree() >= 1) leftover = true;
        for (const auto& r : qr.roots) {
            Vec3 v = base;
            v[elim] = r.value;
            sink.insert(ProjectivePoint(v));
        }
        // The probe line's point at infinity is the elim-axis coordinate
        // point, which the caller tests as a candidate on its own.
    }
}

} // namespace detail

/// Proper base points of f over Q(i), grouped into Galois orbits with
/// multiplicities, plus the infinitely-near flag raised when the homaloidal
/// counts fall short of 3(d-1) and d^2-1.
inline BasePointAnalysis analyze_base_points(const BirationalMap& f) {
    int d = f.degree();
    check_arg(d <= 5, "base points: supported for degree <= 5");
    BasePointAnalysis out;
    if (d == 1) return out;

    const auto& c = f.components();
    std::set<ProjectivePoint> candidates;
    bool leftover = false;

    static const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [a, b] : pairs) {
        HPoly g = poly_gcd(c[a], c[b]);
        const HPoly* third = &c[3 - a - b];
        if (g.degree() > 0) {
            // base points on the shared curve are its intersections with the
            // third component
            for (int elim = 0; elim < 3; ++elim)
                detail::elimination_points(g, *third, elim, candidates, leftover);
            HPoly pa = *exact_divide(c[a], g);
            HPoly pb = *exact_divide(c[b], g);
            if (pa.degree() > 0 && pb.degree() > 0)
                for (int elim = 0; elim < 3; ++elim)
                    detail::elimination_points(pa, pb, elim, candidates, leftover);
        } else {
            for (int elim = 0; elim < 3; ++elim)
                detail::elimination_points(c[a], c[b], elim, candidates, leftover);
        }
    }

    // Coordinate points evade some probe directions; test them outright.
    for (int k = 0; k < 3; ++k) {
        Vec3 v{};
        v[k] = GaussianRational(1);
        candidates.insert(ProjectivePoint(v));
    }

    std::set<ProjectivePoint> verified;
    for (const auto& p : candidates)
        if (eval_at(c[0], p).is_zero() && eval_at(c[1], p).is_zero() && eval_at(c[2], p).is_zero())
            verified.insert(p);

    std::set<PointOrbit> orbits;
    for (const auto& p : verified) orbits.insert(PointOrbit(p));

    int sum = 0, sum_sq = 0;
    for (const auto& o : orbits) {
        int m = f.degree() + 1;
        for (int k = 0; k < 3; ++k) m = std::min(m, vanishing_order(c[k], o.representative()));
        check_internal(m >= 1, "base point with zero multiplicity");
        out.orbits.push_back({o, m});
        sum += m * o.complex_size();
        sum_sq += m * m * o.complex_size();
    }

    if (sum != 3 * (d - 1) || sum_sq != d * d - 1) {
        if (leftover)
            throw unsupported_error("base points outside Q(i): common-zero scheme has a component "
                                    "that does not split over the Gaussian rationals");
        check_internal(sum <= 3 * (d - 1) && sum_sq <= d * d - 1,
                       "base point analysis exceeded homaloidal bounds");
        out.has_infinitely_near = true;
    }
    return out;
}

/// Proper base-point orbits; refuses maps with infinitely near base points.
inline std::vector<PointOrbit> base_points(const BirationalMap& f) {
    BasePointAnalysis a = analyze_base_points(f);
    if (a.has_infinitely_near)
        throw unsupported_error("map has infinitely near base points; only the proper ones are "
                                "computable here");
    std::vector<PointOrbit> out;
    for (const auto& [o, m] : a.orbits) out.push_back(o);
    return out;
}

namespace detail {

/// A Galois-stable (real) candidate factor of the Jacobian, together with
/// one Q(i)-irreducible component and a base point lying on it.
struct ContractionCandidate {
    HPoly real_factor; // normalized, real
    HPoly component;   // line or conic over Q(i) generating the factor
    ProjectivePoint anchor;
};

inline std::vector<ContractionCandidate> contraction_candidates(const BirationalMap& f) {
    std::vector<ContractionCandidate> out;
    BasePointAnalysis an;
    try {
        an = analyze_base_points(f);
    } catch (const error&) {
        return out;
    }
    std::vector<ProjectivePoint> pts;
    for (const auto& [o, m] : an.orbits)
        for (const auto& p : o.points()) pts.push_back(p);
    auto push = [&out](const HPoly& h, const ProjectivePoint& anchor) {
        HPoly n = h.normalized();
        HPoly real_factor = n.is_real() ? n : (n * n.conj()).normalized();
        for (const auto& e : out)
            if (e.real_factor == real_factor) return;
        out.push_back({real_factor, n, anchor});
    };
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            if (pts[a] != pts[b]) push(line_through(pts[a], pts[b]), pts[a]);
    if (pts.size() >= 5) {
        std::vector<int> sel(5);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == 5) {
                std::vector<ProjectivePoint> five;
                for (int s : sel) five.push_back(pts[s]);
                auto conic = conic_through(five);
                if (conic) push(*conic, five[0]);
                return;
            }
            for (int k = start; k < static_cast<int>(pts.size()); ++k) {
                sel[depth] = k;
                rec(k + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    return out;
}

inline std::vector<HPoly> contracted_factor_candidates(const BirationalMap& f) {
    std::vector<HPoly> out;
    for (auto& c : contraction_candidates(f)) out.push_back(c.real_factor);
    return out;
}

/// A point of the curve `component` at which f is defined, in Q(i).
inline ProjectivePoint probe_point_on(const HPoly& component, const ProjectivePoint& anchor,
                                      const BirationalMap& f) {
    auto defined_at = [&f](const ProjectivePoint& p) {
        for (int k = 0; k < 3; ++k)
            if (!eval_at(f.component(k), p).is_zero()) return true;
        return false;
    };
    if (component.degree() == 1) {
        // Parametrize the line from its coefficient vector.
        GaussianRational a = component.coeff(1, 0, 0), b = component.coeff(0, 1, 0),
                         c = component.coeff(0, 0, 1);
        Vec3 v1, v2;
        if (!a.is_zero()) {
            v1 = {-b / a, GaussianRational(1), GaussianRational(0)};
            v2 = {-c / a, GaussianRational(0), GaussianRational(1)};
        } else if (!b.is_zero()) {
            v1 = {GaussianRational(1), GaussianRational(0), GaussianRational(0)};
            v2 = {GaussianRational(0), -c / b, GaussianRational(1)};
        } else {
            v1 = {GaussianRational(1), GaussianRational(0), GaussianRational(0)};
            v2 = {GaussianRational(0), GaussianRational(1), GaussianRational(0)};
        }
        for (long t = 0; t <= 12; ++t) {
            Vec3 w;
            for (int k = 0; k < 3; ++k) w[k] = v1[k] + GaussianRational(t) * v2[k];
            if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) continue;
            ProjectivePoint p(w);
            if (defined_at(p)) return p;
        }
        ProjectivePoint p2(v2);
        if (defined_at(p2)) return p2;
        throw unsupported_error("no probe point found on contracted line");
    }
    // Conic: intersect with lines through the anchor; the second root is
    // rational because the anchor is already on the conic.
    check_internal(eval_at(component, anchor).is_zero(), "probe: anchor not on conic");
    for (long d = 0; d < 6; ++d) {
        Vec3 dir{GaussianRational(d == 0 ? 1 : d), GaussianRational(d <= 1 ? 1 : d - 1),
                 GaussianRational(d <= 2 ? 0 : 1)};
        UniPoly r = component.restrict_to_line(anchor.coords(), dir);
        if (r.degree() != 2) continue; // tangent or degenerate direction
        QiRoots roots = roots_in_Qi(r);
        for (const auto& root : roots.roots) {
            if (root.value.is_zero()) continue;
            Vec3 w;
            for (int k = 0; k < 3; ++k) w[k] = anchor[k] + root.value * dir[k];
            if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) continue;
            ProjectivePoint p(w);
            if (defined_at(p)) return p;
        }
    }
    throw unsupported_error("no probe point found on contracted conic");
}

} // namespace detail

/// A real irreducible factor of the Jacobian together with the orbit of the
/// point(s) its components map to.
struct ContractedCurve {
    HPoly curve;
    PointOrbit image;
};

/// Irreducible real factors of the Jacobian determinant, each paired with
/// the image orbit. Candidates come from the proper base points (lines
/// through pairs, conics through five); every factor is certified by exact
/// division of the Jacobian, and a non-constant remainder is refused.
inline std::vector<ContractedCurve> contracted_curves(const BirationalMap& f) {
    check_arg(f.degree() >= 2, "contracted_curves: degree must be >= 2");
    HPoly jac = jacobian_det(f.component(0), f.component(1), f.component(2));
    check_internal(!jac.is_zero(), "contracted_curves: zero Jacobian on a valid map");
    std::vector<ContractedCurve> out;
    auto candidates = detail::contraction_candidates(f);
    std::sort(candidates.begin(), candidates.end(),
              [](const detail::ContractionCandidate& a, const detail::ContractionCandidate& b) {
                  if (a.real_factor.degree() != b.real_factor.degree())
                      return a.real_factor.degree() < b.real_factor.degree();
                  return MonomialLexGreater{}(a.real_factor.lead_monomial(), b.real_factor.lead_monomial());
              });
    for (const auto& cand : candidates) {
        bool divides = false;
        while (true) {
            auto q = exact_divide(jac, cand.real_factor);
            if (!q) break;
            jac = *q;
            divides = true;
        }
        if (!divides) continue;
        ProjectivePoint probe = detail::probe_point_on(cand.component, cand.anchor, f);
        out.push_back({cand.real_factor, PointOrbit(f.apply(probe))});
    }
    if (jac.degree() > 0)
        throw unsupported_error("contracted_curves: Jacobian has a factor outside the catalog "
                                "(lines through base-point pairs and conics through five of them)");
    return out;
}

} // namespace cremona

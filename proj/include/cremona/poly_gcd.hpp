#pragma once

#include <algorithm>
#include <array>
#include <optional>

#include "cremona/polynomial.hpp"

namespace cremona {
namespace detail {

/// Homogeneous binary form of stated degree in an (a,b) variable pair:
/// sum of u[e] * a^e * b^(deg-e). The UniPoly carries the a-exponents;
/// b-powers live in the degree slack deg - u.degree().
struct BForm {
    UniPoly u;
    int deg = 0;
    bool is_zero() const { return u.is_zero(); }
    bool is_const() const { return !is_zero() && deg == 0; }
};

inline BForm bf_one() { return {UniPoly::constant(GaussianRational(1)), 0}; }

inline BForm bf_mul(const BForm& a, const BForm& b) {
    if (a.is_zero() || b.is_zero()) return {UniPoly(), a.deg + b.deg};
    return {a.u * b.u, a.deg + b.deg};
}

inline BForm bf_sub(const BForm& a, const BForm& b) {
    check_internal(a.is_zero() || b.is_zero() || a.deg == b.deg, "BForm: degree mismatch in subtraction");
    return {a.u - b.u, a.is_zero() ? b.deg : a.deg};
}

inline BForm bf_divexact(const BForm& a, const BForm& b) {
    check_internal(!b.is_zero(), "BForm: division by zero");
    if (a.is_zero()) return {UniPoly(), a.deg - b.deg};
    auto [q, r] = UniPoly::divmod(a.u, b.u);
    check_internal(r.is_zero(), "BForm: inexact division");
    return {q, a.deg - b.deg};
}

inline BForm bf_gcd(const BForm& a, const BForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int bval_a = a.deg - a.u.degree();
    int bval_b = b.deg - b.u.degree();
    UniPoly g = gcd(a.u, b.u);
    return {g, g.degree() + std::min(bval_a, bval_b)};
}

/// Polynomial in one main variable with binary-form coefficients; the
/// coefficient of main^m has degree weight - m, so the whole object is a
/// homogeneous trivariate polynomial of degree weight.
struct XPoly {
    std::vector<BForm> c; // c[m] multiplies main^m
    int weight = 0;
    int deg() const {
        for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m)
            if (!c[m].is_zero()) return m;
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
    const BForm& lead() const { return c[deg()]; }
};

// var: 0 = x main (coeffs in (y,z)), 1 = y main (coeffs in (x,z)), 2 = z main.
inline XPoly to_xpoly(const HPoly& f, int var) {
    XPoly p;
    p.weight = f.degree();
    p.c.assign(f.degree() + 1, BForm{});
    for (const auto& [m, coef] : f.terms()) {
        int e_main = var == 0 ? m.i : var == 1 ? m.j : m.k;
        int e_a = var == 0 ? m.j : var == 1 ? m.i : m.i;
        BForm& b = p.c[e_main];
        if (b.is_zero() && b.u.is_zero()) b.deg = f.degree() - e_main;
        std::vector<GaussianRational> v(std::max<size_t>(b.u.coeffs().size(), e_a + 1));
        for (size_t s = 0; s < b.u.coeffs().size(); ++s) v[s] = b.u.coeffs()[s];
        v[e_a] += coef;
        b.u = UniPoly(std::move(v));
        b.deg = f.degree() - e_main;
    }
    return p;
}

inline HPoly from_xpoly(const XPoly& p, int var) {
    int d = p.weight;
    HPoly::TermMap terms;
    for (int m = 0; m < static_cast<int>(p.c.size()); ++m) {
        const BForm& b = p.c[m];
        if (b.is_zero()) continue;
        check_internal(b.deg == d - m, "from_xpoly: inconsistent weight");
        for (int e = 0; e <= b.u.degree(); ++e) {
            const GaussianRational& coef = b.u[e];
            if (coef.is_zero()) continue;
            int eb = b.deg - e;
            Monomial mo;
            if (var == 0) mo = {m, e, eb};
            else if (var == 1) mo = {e, m, eb};
            else mo = {e, eb, m};
            terms[mo] = coef;
        }
    }
    return HPoly::from_terms(d, terms);
}

inline BForm xp_content(const XPoly& p) {
    BForm g{};
    for (const auto& b : p.c)
        if (!b.is_zero()) g = g.is_zero() ? b : bf_gcd(g, b);
    return g;
}

inline XPoly xp_divexact_bf(const XPoly& p, const BForm& b) {
    XPoly q;
    q.weight = p.weight - b.deg;
    q.c.assign(p.c.size(), BForm{});
    for (size_t m = 0; m < p.c.size(); ++m) {
        if (p.c[m].is_zero()) {
            q.c[m].deg = q.weight - static_cast<int>(m);
            continue;
        }
        q.c[m] = bf_divexact(p.c[m], b);
    }
    return q;
}

inline XPoly xp_primitive(const XPoly& p) {
    BForm c = xp_content(p);
    if (c.is_zero() || (c.deg == 0)) return p;
    return xp_divexact_bf(p, c);
}

/// One pseudo-remainder: repeatedly scales by lc(b) and cancels the top term.
inline XPoly xp_prem(XPoly a, const XPoly& b) {
    int db = b.deg();
    check_internal(db >= 0, "prem: zero divisor");
    const BForm& v = b.c[db];
    int guard = a.deg() - db + 2;
    while (!a.is_zero() && a.deg() >= db) {
        check_internal(guard-- > 0, "prem: no progress");
        int da = a.deg();
        BForm t = a.c[da];
        XPoly next;
        next.weight = a.weight + v.deg;
        next.c.assign(std::max(a.c.size(), b.c.size() + da - db), BForm{});
        for (size_t m = 0; m < next.c.size(); ++m) next.c[m].deg = next.weight - static_cast<int>(m);
        for (size_t m = 0; m < a.c.size(); ++m)
            if (!a.c[m].is_zero()) next.c[m] = bf_mul(v, a.c[m]);
        for (size_t m = 0; m < b.c.size(); ++m) {
            if (b.c[m].is_zero()) continue;
            size_t idx = m + da - db;
            BForm prod = bf_mul(t, b.c[m]);
            next.c[idx] = next.c[idx].is_zero() ? BForm{-prod.u, prod.deg} : bf_sub(next.c[idx], prod);
        }
        // the top term cancels exactly
        check_internal(next.deg() < da, "prem: leading term survived");
        a = std::move(next);
    }
    return a;
}

} // namespace detail

/// Monomial factor x^i y^j z^k common to all terms.
inline Monomial monomial_content(const HPoly& f) {
    check_arg(!f.is_zero(), "monomial_content of zero");
    Monomial m{f.degree() + 1, f.degree() + 1, f.degree() + 1};
    for (const auto& [mo, c] : f.terms()) {
        m.i = std::min(m.i, mo.i);
        m.j = std::min(m.j, mo.j);
        m.k = std::min(m.k, mo.k);
    }
    return m;
}

/// Exact division of homogeneous polynomials; nullopt when not divisible.
inline std::optional<HPoly> exact_divide(const HPoly& f, const HPoly& h) {
    check_arg(!h.is_zero(), "exact_divide: zero divisor");
    if (f.is_zero()) return HPoly(std::max(0, f.degree() - h.degree()));
    if (f.degree() < h.degree()) return std::nullopt;
    HPoly rem = f;
    HPoly quot(f.degree() - h.degree());
    const Monomial& hl = h.lead_monomial();
    while (!rem.is_zero()) {
        const Monomial& rl = rem.lead_monomial();
        Monomial q{rl.i - hl.i, rl.j - hl.j, rl.k - hl.k};
        if (q.i < 0 || q.j < 0 || q.k < 0) return std::nullopt;
        HPoly term = HPoly::monomial(q.i, q.j, q.k, rem.lead_coeff() / h.lead_coeff());
        quot += term;
        rem -= term * h;
    }
    return quot;
}

/// gcd of homogeneous trivariate polynomials over Q(i), normalized to
/// leading coefficient 1. Primitive PRS over binary-form coefficients,
/// with a cheap line-restriction certificate for the coprime case.
inline HPoly poly_gcd(const HPoly& f, const HPoly& g) {
    using namespace detail;
    if (f.is_zero() && g.is_zero()) throw validation_error("poly_gcd: both arguments zero");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();

    Monomial mf = monomial_content(f), mg = monomial_content(g);
    Monomial common{std::min(mf.i, mg.i), std::min(mf.j, mg.j), std::min(mf.k, mg.k)};
    HPoly monopart = HPoly::monomial(common.i, common.j, common.k);
    HPoly f1 = *exact_divide(f, HPoly::monomial(mf.i, mf.j, mf.k));
    HPoly g1 = *exact_divide(g, HPoly::monomial(mg.i, mg.j, mg.k));
    // carry the non-shared monomial parts back in only through `common`
    HPoly fr = *exact_divide(f, monopart);
    HPoly gr = *exact_divide(g, monopart);
    (void)f1;
    (void)g1;

    if (fr.degree() == 0 || gr.degree() == 0) return monopart.normalized();

    // Coprimality fast path: a line on which neither vanishes identically.
    {
        static const std::array<std::array<std::array<long, 3>, 2>, 3> lines = {{
            {{{1, 0, 0}, {0, 1, 1}}},
            {{{0, 1, 0}, {1, 0, 2}}},
            {{{1, 1, 1}, {1, 2, 3}}},
        }};
        for (const auto& ln : lines) {
            std::array<GaussianRational, 3> p{GaussianRational(ln[0][0]), GaussianRational(ln[0][1]),
                                              GaussianRational(ln[0][2])};
            std::array<GaussianRational, 3> q{GaussianRational(ln[1][0]), GaussianRational(ln[1][1]),
                                              GaussianRational(ln[1][2])};
            UniPoly rf = fr.restrict_to_line(p, q);
            UniPoly rg = gr.restrict_to_line(p, q);
            if (rf.is_zero() || rg.is_zero()) continue;
            if (gcd(rf, rg).degree() == 0) return monopart.normalized();
            break;
        }
    }

    // Main variable: first of x,y,z with positive degree in both.
    auto degree_in = [](const HPoly& h, int var) {
        int d = 0;
        for (const auto& [m, c] : h.terms()) d = std::max(d, var == 0 ? m.i : var == 1 ? m.j : m.k);
        return d;
    };
    int var = -1;
    for (int v = 0; v < 3; ++v)
        if (degree_in(fr, v) > 0 && degree_in(gr, v) > 0) {
            var = v;
            break;
        }
    if (var < 0) {
        // One polynomial misses every variable the other uses; after the
        // line-probe failed this still means a binary-vs-binary situation.
        for (int v = 0; v < 3; ++v) {
            if (degree_in(fr, v) == 0 && degree_in(gr, v) == 0) continue;
            if (degree_in(fr, v) == 0 || degree_in(gr, v) == 0) {
                // gcd divides the content of the one that uses v
                const HPoly& without = degree_in(fr, v) == 0 ? fr : gr;
                const HPoly& with = degree_in(fr, v) == 0 ? gr : fr;
                XPoly xp = to_xpoly(with, v);
                BForm cont = xp_content(xp);
                HPoly cont_poly = from_xpoly(XPoly{{cont}, cont.deg}, v);
                return (monopart * poly_gcd(without, cont_poly)).normalized();
            }
        }
        return monopart.normalized();
    }

    XPoly A = to_xpoly(fr, var), B = to_xpoly(gr, var);
    BForm ca = xp_content(A), cb = xp_content(B);
    A = xp_divexact_bf(A, ca);
    B = xp_divexact_bf(B, cb);
    BForm cont = bf_gcd(ca, cb);
    if (A.deg() < B.deg()) std::swap(A, B);
    while (true) {
        XPoly r = xp_prem(A, B);
        if (r.is_zero()) break;
        r = xp_primitive(r);
        A = std::move(B);
        B = std::move(r);
        if (B.deg() == 0) {
            // coprime apart from content
            HPoly cont_poly = from_xpoly(XPoly{{cont}, cont.deg}, var);
            return (monopart * cont_poly).normalized();
        }
    }
    HPoly prs = from_xpoly(xp_primitive(B), var);
    HPoly cont_poly = from_xpoly(XPoly{{cont}, cont.deg}, var);
    return (monopart * cont_poly * prs).normalized();
}

inline HPoly poly_gcd(const HPoly& f, const HPoly& g, const HPoly& h) {
    if (f.is_zero()) return poly_gcd(g, h);
    HPoly fg = poly_gcd(f, g);
    if (fg.degree() == 0) return fg;
    return poly_gcd(fg, h);
}

/// Resultant of f and g with respect to one variable: a homogeneous
/// polynomial in the remaining two variables (Sylvester determinant via
/// fraction-free Bareiss elimination over binary forms).
inline HPoly resultant_wrt(const HPoly& f, const HPoly& g, int var) {
    using namespace detail;
    XPoly A = to_xpoly(f, var), B = to_xpoly(g, var);
    int n = A.deg(), m = B.deg();
    check_arg(n >= 1 && m >= 1, "resultant: inputs must involve the eliminated variable");
    int size = n + m;
    std::vector<std::vector<BForm>> mat(size, std::vector<BForm>(size));
    // rows 0..m-1: shifted f, rows m..m+n-1: shifted g; column c = coeff of main^(size-1-c).
    for (int r = 0; r < m; ++r)
        for (int c2 = 0; c2 <= n; ++c2) mat[r][r + (n - c2)] = A.c[c2];
    for (int r = 0; r < n; ++r)
        for (int c2 = 0; c2 <= m; ++c2) mat[m + r][r + (m - c2)] = B.c[c2];

    BForm prev = bf_one();
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < size; ++r)
                if (!mat[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return HPoly(f.degree() * g.degree()); // zero resultant
            std::swap(mat[k], mat[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < size; ++r) {
            for (int c2 = k + 1; c2 < size; ++c2) {
                BForm t1 = bf_mul(mat[k][k], mat[r][c2]);
                BForm t2 = bf_mul(mat[r][k], mat[k][c2]);
                BForm num;
                if (t1.is_zero() && t2.is_zero())
                    num = BForm{UniPoly(), t1.deg};
                else if (t2.is_zero())
                    num = t1;
                else if (t1.is_zero())
                    num = BForm{-t2.u, t2.deg};
                else
                    num = bf_sub(t1, t2);
                mat[r][c2] = prev.is_const() && prev.u == UniPoly::constant(GaussianRational(1))
                                 ? num
                                 : bf_divexact(num, prev);
            }
            mat[r][k] = BForm{};
        }
        prev = mat[k][k];
    }
    BForm det = mat[size - 1][size - 1];
    if (sign < 0 && !det.is_zero()) det.u = -det.u;
    XPoly wrap{{det}, det.deg};
    return from_xpoly(wrap, var);
}

} // namespace cremona

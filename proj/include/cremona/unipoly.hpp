#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/gaussian.hpp"

namespace cremona {

/// Dense univariate polynomial over Q(i). coeff(k) is the coefficient of t^k;
/// the zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const GaussianRational& a) { return UniPoly({a}); }
    static UniPoly monomial(int k, const GaussianRational& a) {
        std::vector<GaussianRational> v(k + 1);
        v[k] = a;
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const GaussianRational& operator[](int k) const {
        static const GaussianRational zero;
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero;
    }
    const GaussianRational& lead() const {
        check_arg(!is_zero(), "UniPoly: lead of zero");
        return c_.back();
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    bool is_real() const {
        for (const auto& a : c_)
            if (!a.is_real()) return false;
        return true;
    }

    UniPoly conj() const {
        std::vector<GaussianRational> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a.conj());
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const {
        std::vector<GaussianRational> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const GaussianRational& s, const UniPoly& a) {
        std::vector<GaussianRational> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_) v.push_back(s * x);
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly();
        std::vector<GaussianRational> v(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k)
            v[k - 1] = GaussianRational(Rational(static_cast<long>(k))) * c_[k];
        return UniPoly(std::move(v));
    }

    /// Quotient and remainder over the field Q(i).
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        check_arg(!b.is_zero(), "UniPoly: division by zero");
        UniPoly r = a;
        if (a.degree() < b.degree()) return {UniPoly(), r};
        std::vector<GaussianRational> q(a.degree() - b.degree() + 1);
        GaussianRational inv = b.lead().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            GaussianRational f = r.lead() * inv;
            q[k] = f;
            std::vector<GaussianRational> rc = r.c_;
            for (int j = 0; j <= b.degree(); ++j) rc[k + j] -= f * b.c_[j];
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), r};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return lead().inverse() * *this;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.is_zero() ? x : x.monic();
}

inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() < 1) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() < 1) return p.monic();
    return UniPoly::divmod(p, g).first.monic();
}

// ---------------------------------------------------------------------------
// Factorization over Q: squarefree reduction, Berlekamp mod a small prime,
// monicizing transform, quadratic Hensel lifting up to a Landau-Mignotte
// bound, subset recombination with exact trial division.
// ---------------------------------------------------------------------------

using IntPoly = std::vector<Integer>; // [k] = coeff of t^k, no trailing zeros

namespace detail {

inline void ip_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int ip_deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Integer ip_content(const IntPoly& p) {
    Integer g(0);
    for (const auto& c : p) g = cremona::gcd(g, c);
    return g;
}

/// Exact division over Z; nullopt when b does not divide a.
inline std::optional<IntPoly> ip_exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return IntPoly{};
    if (ip_deg(a) < ip_deg(b)) return std::nullopt;
    IntPoly r = a;
    IntPoly q(ip_deg(a) - ip_deg(b) + 1, Integer(0));
    for (int k = ip_deg(a) - ip_deg(b); k >= 0; --k) {
        int top = k + ip_deg(b);
        Integer c = (top < static_cast<int>(r.size())) ? r[top] : Integer(0);
        if (c == 0) continue;
        Integer f = c / b.back();
        if (f * b.back() != c) return std::nullopt;
        q[k] = f;
        for (int j = 0; j <= ip_deg(b); ++j) r[k + j] -= f * b[j];
    }
    ip_trim(r);
    if (!r.empty()) return std::nullopt;
    ip_trim(q);
    return q;
}

// --- F_p polynomial arithmetic (p a small odd prime, int64 safe) ---

using FpPoly = std::vector<int64_t>;

inline void fp_trim(FpPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

inline int64_t fp_inv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % p) + p) % p;
}

inline std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, int64_t p) {
    FpPoly r = a, q;
    fp_trim(r);
    FpPoly bb = b;
    fp_trim(bb);
    check_internal(!bb.empty(), "fp_divmod: zero divisor");
    if (r.size() < bb.size()) return {q, r};
    q.assign(r.size() - bb.size() + 1, 0);
    int64_t inv = fp_inv(bb.back(), p);
    for (int k = static_cast<int>(r.size() - bb.size()); k >= 0; --k) {
        size_t top = k + bb.size() - 1;
        int64_t c = (top < r.size()) ? r[top] : 0;
        if (c == 0) continue;
        int64_t f = c * inv % p;
        q[k] = f;
        for (size_t j = 0; j < bb.size(); ++j) r[k + j] = ((r[k + j] - f * bb[j]) % p + p) % p;
    }
    fp_trim(r);
    fp_trim(q);
    return {q, r};
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

inline FpPoly fp_sub(const FpPoly& a, const FpPoly& b, int64_t p) {
    FpPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    fp_trim(r);
    return r;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, int64_t p) {
    return fp_divmod(fp_mul(a, b, p), m, p).second;
}

inline FpPoly fp_derivative(const FpPoly& a, int64_t p) {
    if (a.size() < 2) return {};
    FpPoly r(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) r[k - 1] = (a[k] * static_cast<int64_t>(k % p)) % p;
    fp_trim(r);
    return r;
}

/// Berlekamp factorization of a monic squarefree polynomial mod p.
inline std::vector<FpPoly> berlekamp(const FpPoly& f, int64_t p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 1) return {f};
    FpPoly xp;
    {
        FpPoly base = {0, 1}, acc = {1};
        int64_t e = p;
        while (e > 0) {
            if (e & 1) acc = fp_mulmod(acc, base, f, p);
            base = fp_mulmod(base, base, f, p);
            e >>= 1;
        }
        xp = acc;
    }
    std::vector<FpPoly> cols(d);
    cols[0] = {1};
    for (int i = 1; i < d; ++i) cols[i] = fp_mulmod(cols[i - 1], xp, f, p);
    std::vector<std::vector<int64_t>> m(d, std::vector<int64_t>(d, 0));
    for (int i = 0; i < d; ++i) {
        for (size_t k = 0; k < cols[i].size(); ++k) m[k][i] = cols[i][k];
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int piv = -1;
        for (int row = rank; row < d; ++row)
            if (m[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        int64_t inv = fp_inv(m[rank][col], p);
        for (int j = 0; j < d; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (int row = 0; row < d; ++row) {
            if (row == rank || m[row][col] == 0) continue;
            int64_t f2 = m[row][col];
            for (int j = 0; j < d; ++j) m[row][j] = ((m[row][j] - f2 * m[rank][j]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(d, false);
    for (int pc : pivot_col) is_pivot[pc] = true;
    std::vector<FpPoly> basis;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(d, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = ((-m[r][col]) % p + p) % p;
        fp_trim(v);
        basis.push_back(v);
    }
    size_t nfactors = basis.size();
    std::vector<FpPoly> factors = {f};
    if (nfactors <= 1) return factors;
    for (const auto& h : basis) {
        if (factors.size() >= nfactors) break;
        if (h.size() <= 1) continue;
        for (int64_t c = 0; c < p && factors.size() < nfactors; ++c) {
            FpPoly hc = fp_sub(h, FpPoly{c}, p);
            std::vector<FpPoly> next;
            for (const auto& u : factors) {
                if (u.size() <= 2) {
                    next.push_back(u);
                    continue;
                }
                FpPoly g = fp_gcd(u, hc, p);
                if (g.size() <= 1 || g.size() == u.size())
                    next.push_back(u);
                else {
                    next.push_back(g);
                    next.push_back(fp_divmod(u, g, p).first);
                }
            }
            factors = std::move(next);
        }
    }
    check_internal(factors.size() == nfactors, "berlekamp: splitting incomplete");
    return factors;
}

// --- mod m arithmetic on integer polynomials (m = p^k) ---

inline IntPoly mod_reduce(IntPoly p, const Integer& m) {
    for (auto& x : p) {
        x %= m;
        if (x < 0) x += m;
    }
    ip_trim(p);
    return p;
}

inline IntPoly mod_mul(const IntPoly& a, const IntPoly& b, const Integer& m) {
    return mod_reduce(ip_mul(a, b), m);
}

inline IntPoly mod_add(const IntPoly& a, const IntPoly& b, const Integer& m) {
    IntPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return mod_reduce(std::move(r), m);
}

inline IntPoly mod_sub(const IntPoly& a, const IntPoly& b, const Integer& m) {
    IntPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return mod_reduce(std::move(r), m);
}

inline std::pair<IntPoly, IntPoly> mod_divmod_monic(const IntPoly& a, const IntPoly& b, const Integer& m) {
    check_internal(!b.empty() && b.back() == 1, "mod_divmod_monic: divisor not monic");
    IntPoly r = mod_reduce(a, m);
    if (ip_deg(r) < ip_deg(b)) return {{}, r};
    IntPoly q(ip_deg(r) - ip_deg(b) + 1, Integer(0));
    for (int k = ip_deg(r) - ip_deg(b); k >= 0; --k) {
        int top = k + ip_deg(b);
        Integer c = (top < static_cast<int>(r.size())) ? r[top] : Integer(0);
        c %= m;
        if (c < 0) c += m;
        if (c == 0) continue;
        q[k] = c;
        for (int j = 0; j <= ip_deg(b); ++j) {
            r[k + j] -= c * b[j];
            r[k + j] %= m;
            if (r[k + j] < 0) r[k + j] += m;
        }
    }
    ip_trim(r);
    ip_trim(q);
    return {q, r};
}

struct BezoutFp {
    FpPoly s, t; // s*g + t*h = 1 mod p
};

inline BezoutFp fp_bezout(const FpPoly& g, const FpPoly& h, int64_t p) {
    FpPoly a = g, b = h, sa = {1}, sb = {};
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        auto [q, r] = fp_divmod(a, b, p);
        FpPoly ns = fp_sub(sa, fp_mul(q, sb, p), p);
        a = b;
        b = r;
        sa = sb;
        sb = ns;
    }
    check_internal(a.size() == 1, "fp_bezout: inputs not coprime");
    int64_t inv = fp_inv(a[0], p);
    for (auto& c : sa) c = c * inv % p;
    FpPoly sg = fp_mul(sa, g, p);
    FpPoly one = {1};
    FpPoly t = fp_divmod(fp_sub(one, sg, p), h, p).first;
    return {sa, t};
}

/// Lifts the monic factorization f = g*h from mod p to mod >= target.
inline std::pair<IntPoly, IntPoly> hensel_lift_pair(const IntPoly& f, const FpPoly& g0, const FpPoly& h0,
                                                    int64_t p, const Integer& target) {
    auto to_int = [](const FpPoly& a) {
        IntPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<long>(a[i]));
        ip_trim(r);
        return r;
    };
    BezoutFp bez = fp_bezout(g0, h0, p);
    IntPoly g = to_int(g0), h = to_int(h0), s = to_int(bez.s), t = to_int(bez.t);
    Integer m(static_cast<long>(p));
    while (m < target) {
        Integer m2 = m * m;
        IntPoly e = mod_sub(mod_reduce(f, m2), mod_mul(g, h, m2), m2);
        IntPoly dh = mod_divmod_monic(mod_mul(s, e, m2), h, m2).second;
        auto [dg, rem] = mod_divmod_monic(mod_sub(e, mod_mul(g, dh, m2), m2), h, m2);
        check_internal(rem.empty(), "hensel: inexact factor correction");
        IntPoly g1 = mod_add(g, dg, m2);
        IntPoly h1 = mod_add(h, dh, m2);
        IntPoly b = mod_sub(mod_add(mod_mul(s, g1, m2), mod_mul(t, h1, m2), m2), IntPoly{Integer(1)}, m2);
        IntPoly ds = mod_divmod_monic(mod_mul(s, b, m2), h1, m2).second;
        auto [dt, rem2] = mod_divmod_monic(mod_sub(b, mod_mul(g1, ds, m2), m2), h1, m2);
        check_internal(rem2.empty(), "hensel: inexact bezout correction");
        s = mod_sub(s, ds, m2);
        t = mod_sub(t, dt, m2);
        g = g1;
        h = h1;
        m = m2;
    }
    return {g, h};
}

/// Lifts all monic modular factors of monic f to mod >= target.
inline std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, std::vector<FpPoly> factors, int64_t p,
                                             const Integer& target) {
    if (factors.size() == 1) {
        return {mod_reduce(f, [&] {
            Integer m(static_cast<long>(p));
            while (m < target) m = m * m;
            return m;
        }())};
    }
    size_t half = factors.size() / 2;
    FpPoly g0 = {1}, h0 = {1};
    for (size_t i = 0; i < half; ++i) g0 = fp_mul(g0, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i], p);
    auto [g, h] = hensel_lift_pair(f, g0, h0, p, target);
    std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> right(factors.begin() + half, factors.end());
    auto lg = hensel_lift_tree(g, std::move(left), p, target);
    auto rg = hensel_lift_tree(h, std::move(right), p, target);
    lg.insert(lg.end(), rg.begin(), rg.end());
    return lg;
}

inline Integer ip_norm2_ceil(const IntPoly& f) {
    Integer s(0);
    for (const auto& c : f) s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

/// Balanced representative in (-m/2, m/2].
inline Integer mod_balance(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

/// Factors a primitive squarefree monic integer polynomial into monic
/// irreducibles over Z.
inline std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
    int d = ip_deg(f);
    if (d <= 1) return {f};
    static const int64_t primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                                     43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                                     101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    int64_t p = 0;
    FpPoly fp;
    for (int64_t cand : primes) {
        FpPoly g(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Integer r = f[i] % cand;
            if (r < 0) r += cand;
            g[i] = r.get_si();
        }
        fp_trim(g);
        if (static_cast<int>(g.size()) - 1 != d) continue; // lc vanished (cannot happen, monic)
        FpPoly der = fp_derivative(g, cand);
        FpPoly gg = fp_gcd(g, der, cand);
        if (gg.size() == 1) {
            p = cand;
            fp = g;
            break;
        }
    }
    check_internal(p != 0, "factor: no squarefree prime found");
    std::vector<FpPoly> modular = berlekamp(fp, p);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });
    if (modular.size() > 24) throw unsupported_error("factor: too many modular factors");
    Integer bound = Integer(1) << (d + 1);
    bound *= ip_norm2_ceil(f);
    Integer target = 2 * bound + 1;
    std::vector<IntPoly> lifted = hensel_lift_tree(f, modular, p, target);
    Integer m(static_cast<long>(p));
    while (m < target) m = m * m;

    std::vector<IntPoly> result;
    std::vector<IntPoly> pool = lifted;
    IntPoly rest = f;
    size_t s = 1;
    while (2 * s <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            IntPoly cand = {Integer(1)};
            for (size_t i : idx) cand = mod_mul(cand, pool[i], m);
            for (auto& c : cand) c = mod_balance(c, m);
            ip_trim(cand);
            auto quot = ip_exact_div(rest, cand);
            if (quot) {
                result.push_back(cand);
                rest = *quot;
                std::vector<IntPoly> np;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(s) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - s + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (ip_deg(rest) > 0) result.push_back(rest);
    return result;
}

} // namespace detail

/// Monic irreducible factor with multiplicity, coefficients in Q.
struct RationalFactor {
    UniPoly factor; // monic, real coefficients, irreducible over Q
    int multiplicity;
};

namespace detail {

inline IntPoly unipoly_to_primitive_int(const UniPoly& p) {
    check_arg(p.is_real(), "factorization over Q requires real coefficients");
    Integer l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, c.re().den());
    IntPoly ip(p.coeffs().size());
    for (size_t k = 0; k < ip.size(); ++k) {
        Rational r = p.coeffs()[k].re() * Rational(l);
        ip[k] = r.num();
    }
    Integer content = ip_content(ip);
    if (content > 1)
        for (auto& c : ip) c /= content;
    if (!ip.empty() && ip.back() < 0)
        for (auto& c : ip) c = -c;
    return ip;
}

inline UniPoly int_to_unipoly(const IntPoly& p) {
    std::vector<GaussianRational> v(p.size());
    for (size_t k = 0; k < p.size(); ++k) v[k] = GaussianRational(Rational(p[k]));
    return UniPoly(std::move(v));
}

/// Zassenhaus on a primitive squarefree integer polynomial (any lc).
inline std::vector<IntPoly> factor_squarefree_int(const IntPoly& f) {
    int d = ip_deg(f);
    if (d <= 0) return {};
    if (d == 1) return {f};
    Integer lc = f.back();
    if (lc == 1) return factor_monic_squarefree(f);
    // Monicize: F(t) = lc^(d-1) f(t/lc), i.e. F[k] = f[k]*lc^(d-1-k), F[d] = 1.
    IntPoly F(d + 1, Integer(0));
    F[d] = 1;
    Integer acc(1);
    for (int k = d - 1; k >= 0; --k) {
        F[k] = f[k] * acc;
        acc *= lc;
    }
    auto monic_factors = factor_monic_squarefree(F);
    std::vector<IntPoly> out;
    for (const auto& g : monic_factors) {
        // g(t) -> primitive part of g(lc*t)
        IntPoly h(g.size());
        Integer a(1);
        for (size_t k = 0; k < g.size(); ++k) {
            h[k] = g[k] * a;
            a *= lc;
        }
        Integer c = ip_content(h);
        if (c > 1)
            for (auto& x : h) x /= c;
        if (!h.empty() && h.back() < 0)
            for (auto& x : h) x = -x;
        out.push_back(h);
    }
    return out;
}

} // namespace detail

/// Factors a real univariate polynomial into monic irreducible factors over Q
/// with multiplicities (Yun squarefree decomposition + Zassenhaus).
inline std::vector<RationalFactor> factor_over_Q(const UniPoly& p) {
    check_arg(!p.is_zero(), "factor_over_Q: zero polynomial");
    std::vector<RationalFactor> out;
    if (p.degree() < 1) return out;
    // Yun: p = prod a_i^i with a_i squarefree pairwise coprime.
    UniPoly f = p.monic();
    UniPoly g = gcd(f, f.derivative());
    UniPoly c = UniPoly::divmod(f, g).first; // product of distinct factors
    int mult = 1;
    while (c.degree() >= 1) {
        UniPoly d = gcd(c, g);
        UniPoly part = UniPoly::divmod(c, d).first; // factors of exact multiplicity `mult`
        if (part.degree() >= 1) {
            IntPoly ip = detail::unipoly_to_primitive_int(part);
            for (const auto& fac : detail::factor_squarefree_int(ip))
                out.push_back({detail::int_to_unipoly(fac).monic(), mult});
        }
        c = d;
        if (!g.is_zero()) g = UniPoly::divmod(g, d).first;
        ++mult;
        if (mult > p.degree() + 1) throw internal_error("factor_over_Q: Yun loop runaway");
    }
    return out;
}

/// Root of a polynomial in Q(i) together with its multiplicity.
struct QiRoot {
    GaussianRational value;
    int multiplicity;
};

/// Result of exact root extraction over Q(i): the roots found plus the monic
/// product of the irreducible factors with no Q(i) roots (degree >= 3 factors,
/// or quadratics with non-square discriminant).
struct QiRoots {
    std::vector<QiRoot> roots;
    UniPoly non_rational; // monic; constant 1 when the polynomial splits
};

namespace detail {

inline std::optional<std::pair<GaussianRational, GaussianRational>> solve_quadratic_qi(
    const GaussianRational& a, const GaussianRational& b, const GaussianRational& c) {
    GaussianRational disc = b * b - GaussianRational(4) * a * c;
    auto s = disc.sqrt();
    if (!s) return std::nullopt;
    GaussianRational two_a = GaussianRational(2) * a;
    return std::make_pair((-b + *s) / two_a, (-b - *s) / two_a);
}

} // namespace detail

/// All roots of p in Q(i), exactly, with multiplicities.
inline QiRoots roots_in_Qi(const UniPoly& p) {
    check_arg(!p.is_zero(), "roots_in_Qi: zero polynomial");
    QiRoots out;
    out.non_rational = UniPoly::constant(GaussianRational(1));
    if (p.degree() < 1) return out;

    auto mult_of = [&p](const GaussianRational& r) {
        int m = 0;
        UniPoly q = p;
        UniPoly lin({-r, GaussianRational(1)});
        while (true) {
            auto [quo, rem] = UniPoly::divmod(q, lin);
            if (!rem.is_zero()) break;
            ++m;
            q = quo;
        }
        return m;
    };

    auto add_root = [&](const GaussianRational& r) {
        for (const auto& existing : out.roots)
            if (existing.value == r) return;
        int m = mult_of(r);
        check_internal(m >= 1, "roots_in_Qi: claimed root is not a root");
        out.roots.push_back({r, m});
    };

    auto handle_piece = [&](const UniPoly& piece) {
        // piece: squarefree, over Q(i); degree 1 or 2 solved directly,
        // anything larger contributes to non_rational (its roots cannot lie
        // in Q(i): a Q(i) element has degree <= 2 over Q, and pieces arrive
        // as gcds against irreducible rational factors of degree <= 2).
        if (piece.degree() == 1) {
            add_root(-piece[0] / piece[1]);
        } else if (piece.degree() == 2) {
            auto sols = detail::solve_quadratic_qi(piece[2], piece[1], piece[0]);
            if (sols) {
                add_root(sols->first);
                add_root(sols->second);
            } else {
                out.non_rational = out.non_rational * piece.monic();
            }
        } else if (piece.degree() >= 3) {
            out.non_rational = out.non_rational * piece.monic();
        }
    };

    UniPoly sf = squarefree_part(p);
    if (sf.is_real()) {
        for (const auto& fac : factor_over_Q(sf)) handle_piece(fac.factor);
        return out;
    }
    // Non-real coefficients: split against the rational factors of p * conj(p).
    UniPoly norm = sf * sf.conj();
    UniPoly remaining = sf.monic();
    for (const auto& fac : factor_over_Q(norm)) {
        if (remaining.degree() < 1) break;
        UniPoly g = gcd(remaining, fac.factor);
        if (g.degree() >= 1) {
            handle_piece(g);
            remaining = UniPoly::divmod(remaining, g).first.monic();
        }
    }
    check_internal(remaining.degree() < 1, "roots_in_Qi: norm splitting incomplete");
    return out;
}

} // namespace cremona

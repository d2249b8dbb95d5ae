#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/gaussian.hpp"
#include "cremona/rational.hpp"
#include "cremona/unipoly.hpp"

using namespace cremona;

TEST_CASE("rational arithmetic is reduced with positive denominator") {
    Rational a(2, -4);
    CHECK(a == Rational(-1, 2));
    CHECK(a.den() == 2);
    CHECK(a.num() == -1);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 7) * Rational(7, 3)) == Rational(1));
    CHECK(Rational::from_string("-6/8") == Rational(-3, 4));
    CHECK(Rational(9, 4).sqrt().value() == Rational(3, 2));
    CHECK(!Rational(2).sqrt().has_value());
    CHECK(!Rational(-4).sqrt().has_value());
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(3, 4));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).is_real());
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z.norm() == Rational(1, 4) + Rational(9, 16));

    SUBCASE("square roots in Q(i)") {
        GaussianRational w(Rational(0), Rational(2)); // 2i = (1+i)^2
        auto s = w.sqrt();
        REQUIRE(s.has_value());
        CHECK(*s * *s == w);
        CHECK(GaussianRational(-4).sqrt().value() == GaussianRational(Rational(0), Rational(2)));
        CHECK(!GaussianRational(2).sqrt().has_value());
        GaussianRational u(Rational(3), Rational(4)); // (2+i)^2
        CHECK(u.sqrt().has_value());
    }
}

TEST_CASE("univariate division, gcd, squarefree part") {
    // p = (t-1)^2 (t+2)
    UniPoly t = UniPoly::monomial(1, GaussianRational(1));
    UniPoly one = UniPoly::constant(GaussianRational(1));
    UniPoly p = (t - one) * (t - one) * (t + UniPoly::constant(GaussianRational(2)));
    auto [q, r] = UniPoly::divmod(p, t - one);
    CHECK(r.is_zero());
    CHECK(q == (t - one) * (t + UniPoly::constant(GaussianRational(2))));
    UniPoly g = gcd(p, p.derivative());
    CHECK(g.degree() == 1);
    CHECK(squarefree_part(p).degree() == 2);
}

TEST_CASE("factorization over Q") {
    UniPoly t = UniPoly::monomial(1, GaussianRational(1));
    UniPoly one = UniPoly::constant(GaussianRational(1));

    SUBCASE("splits linears and quadratics") {
        // (t^2+1)(t-3)^2 (2t-1)
        UniPoly p = (t * t + one) * (t - UniPoly::constant(GaussianRational(3))) *
                    (t - UniPoly::constant(GaussianRational(3))) *
                    (UniPoly::constant(GaussianRational(2)) * t - one);
        auto factors = factor_over_Q(p);
        int total = 0;
        bool saw_quadratic = false, saw_double = false, saw_half = false;
        for (const auto& f : factors) {
            total += f.factor.degree() * f.multiplicity;
            if (f.factor.degree() == 2) saw_quadratic = true;
            if (f.multiplicity == 2) saw_double = true;
            if (f.factor.degree() == 1 && -f.factor[0] == GaussianRational(Rational(1, 2)))
                saw_half = true;
        }
        CHECK(total == 5);
        CHECK(saw_quadratic);
        CHECK(saw_double);
        CHECK(saw_half);
    }

    SUBCASE("sextic with three quadratic factors") {
        // (t^2+1)(t^2+2t+2)(t^2-2t+3), no rational roots anywhere
        UniPoly q1 = t * t + one;
        UniPoly q2 = t * t + UniPoly::constant(GaussianRational(2)) * t + UniPoly::constant(GaussianRational(2));
        UniPoly q3 = t * t - UniPoly::constant(GaussianRational(2)) * t + UniPoly::constant(GaussianRational(3));
        auto factors = factor_over_Q(q1 * q2 * q3);
        CHECK(factors.size() == 3);
        for (const auto& f : factors) CHECK(f.factor.degree() == 2);
    }

    SUBCASE("irreducible quartic stays whole") {
        // t^4 + t + 1 is irreducible over Q
        UniPoly p = t * t * t * t + t + one;
        auto factors = factor_over_Q(p);
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].factor.degree() == 4);
    }
}

TEST_CASE("roots in Q(i)") {
    UniPoly t = UniPoly::monomial(1, GaussianRational(1));
    UniPoly one = UniPoly::constant(GaussianRational(1));
    GaussianRational i = GaussianRational::i();

    SUBCASE("real polynomial with mixed roots") {
        // (t^2+1)(t - 1/2)^2: roots i, -i, 1/2 (double)
        UniPoly half = UniPoly::constant(GaussianRational(Rational(1, 2)));
        UniPoly p = (t * t + one) * (t - half) * (t - half);
        auto rr = roots_in_Qi(p);
        CHECK(rr.non_rational.degree() == 0);
        REQUIRE(rr.roots.size() == 3);
        int found = 0;
        for (const auto& root : rr.roots) {
            if (root.value == i) { CHECK(root.multiplicity == 1); ++found; }
            if (root.value == -i) { CHECK(root.multiplicity == 1); ++found; }
            if (root.value == GaussianRational(Rational(1, 2))) { CHECK(root.multiplicity == 2); ++found; }
        }
        CHECK(found == 3);
    }

    SUBCASE("roots outside Q(i) are reported, not invented") {
        UniPoly p = t * t - UniPoly::constant(GaussianRational(2)); // sqrt(2) irrational
        auto rr = roots_in_Qi(p);
        CHECK(rr.roots.empty());
        CHECK(rr.non_rational.degree() == 2);
    }

    SUBCASE("non-real coefficients") {
        // (t - i)(t - (1+i)) has coefficients in Q(i) proper
        UniPoly p = (t - UniPoly::constant(i)) * (t - UniPoly::constant(GaussianRational(1) + i));
        auto rr = roots_in_Qi(p);
        REQUIRE(rr.roots.size() == 2);
        CHECK(rr.non_rational.degree() == 0);
    }
}

#include "cremona/pencil.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/point.hpp"

namespace {
cremona::ProjectivePoint pt(long x, long y, long z) {
    return cremona::ProjectivePoint(cremona::GaussianRational(x), cremona::GaussianRational(y),
                                    cremona::GaussianRational(z));
}
cremona::ProjectivePoint pti(long xr, long xi, long yr, long yi, long zr, long zi) {
    using cremona::GaussianRational;
    using cremona::Rational;
    return cremona::ProjectivePoint(GaussianRational(Rational(xr), Rational(xi)),
                                    GaussianRational(Rational(yr), Rational(yi)),
                                    GaussianRational(Rational(zr), Rational(zi)));
}
} // namespace

TEST_CASE("point conjugation and canonical orbits") {
    auto p = pti(1, 0, 0, 1, 0, 0); // [1:i:0]
    CHECK(conjugate_point(p) == pti(1, 0, 0, -1, 0, 0));
    CHECK(conjugate_point(conjugate_point(p)) == p);
    CHECK(conjugate_point(pt(0, 0, 1)) == pt(0, 0, 1));
    CHECK(conjugate_point(pti(0, 0, 1, 0, 0, 1)) == pti(0, 0, 1, 0, 0, -1));

    PointOrbit real_orbit(pt(0, 0, 1));
    CHECK(real_orbit.is_real());
    CHECK(real_orbit.complex_size() == 1);

    // canonical representative has positive imaginary part on the first
    // non-real coordinate, whichever of the two conjugates arrives
    PointOrbit o1(pti(1, 0, 0, 1, 0, 0));
    PointOrbit o2(pti(1, 0, 0, -1, 0, 0));
    CHECK(o1 == o2);
    CHECK(o1.complex_size() == 2);
    CHECK(o1.representative() == pti(1, 0, 0, 1, 0, 0));
}

TEST_CASE("lines through points match the cross-product oracle") {
    HPoly x = HPoly::x(), y = HPoly::y(), z = HPoly::z();
    CHECK(line_through(pti(1, 0, 0, 1, 0, 0), pti(1, 0, 0, -1, 0, 0)) == z);
    CHECK(line_through(pti(0, 0, 1, 0, 0, 1), pti(0, 0, 1, 0, 0, -1)) == x);
    CHECK(line_through(pt(1, 0, 0), pt(0, 1, 0)) == z);
    CHECK_THROWS_AS(line_through(pt(1, 2, 3), pt(1, 2, 3)), validation_error);
    CHECK(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
    CHECK(!collinear(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
}

TEST_CASE("standard pencil") {
    const ConicPencil& P = standard_pencil();
    HPoly x = HPoly::x(), y = HPoly::y(), z = HPoly::z();
    CHECK(P.c1() == x * z);
    CHECK(P.c2() == (x - z) * (x - z) + y * y);

    // c2 is the product of one cross-pairing of lines through the base points
    auto p1 = pti(1, 0, 0, 1, 0, 0);  // [1:i:0]
    auto p2 = pti(0, 0, 1, 0, 0, 1);  // [0:1:i]
    HPoly l = line_through(p1, p2);
    HPoly prod = l * l.conj();
    CHECK(prod.normalized() == P.c2().normalized());

    CHECK(eval_at(P.c2(), p1).is_zero());
    CHECK(eval_at(P.c1(), p2).is_zero());

    // the third degenerate member: (x+z)^2 + y^2 = c2 + 4*c1
    HPoly third = (x + z) * (x + z) + y * y;
    CHECK(third == P.c2() + GaussianRational(4) * P.c1());
    HPoly lc = line_through(p1, conjugate_point(p2));
    CHECK((lc * lc.conj()).normalized() == third.normalized());
}

TEST_CASE("pencil parameter convention t = -c2/c1") {
    // q on c2 = 0 with c1 nonzero forces t = 0: q = [1:i:0]+eps... use a
    // rational point of c2: (x-z)^2 + y^2 = 0 has no real points; its Q(i)
    // points include [1+i : ... ] -- take q with c2(q) = 0: x=1,z=1,y=0 gives 0:
    // but that has c1 = 1 != 0 and parameter 0.
    auto q0 = pt(1, 0, 1);
    auto v0 = pencil_parameter(q0);
    CHECK(!v0.infinite);
    CHECK(v0.t == GaussianRational(0));

    auto v1 = pencil_parameter(pt(1, 1, 1));
    CHECK(v1.t == GaussianRational(-1)); // c2(1,1,1) = 1, c1 = 1

    auto v2 = pencil_parameter(pti(1, 0, 0, 1, 1, 0)); // [1:i:1]
    CHECK(v2.t == GaussianRational(1));  // c2 = -1, c1 = 1

    // base point rejected; chart infinity reported distinctly
    CHECK_THROWS_AS(pencil_parameter(pti(1, 0, 0, 1, 0, 0)), validation_error);
    auto vinf = pencil_parameter(pt(1, 0, 0)); // c1(1,0,0) = 0, c2 = 1
    CHECK(vinf.infinite);

    // conjugate points get conjugate parameters
    auto q = pti(1, 0, 0, 1, 1, 1); // [1 : i : 1+i]
    auto a = pencil_parameter(q), b = pencil_parameter(conjugate_point(q));
    REQUIRE(!a.infinite);
    CHECK(b.t == a.t.conj());
    CHECK(!a.t.is_real());
}

TEST_CASE("polynomial gcd over Q(i)") {
    HPoly x = HPoly::x(), y = HPoly::y(), z = HPoly::z();
    GaussianRational i = GaussianRational::i();

    CHECK(poly_gcd(x * z, y * z) == z);
    CHECK(poly_gcd(x * x + y * y, x).degree() == 0);
    HPoly g = poly_gcd(x * x + y * y, (x + i * y) * z);
    CHECK(g == (x + i * y).normalized());

    SUBCASE("divides exactly and cofactors are coprime") {
        HPoly f1 = (x + y) * (x * x + y * y) * (x - z);
        HPoly f2 = (x + y) * (y + z) * (x - z) * (x + GaussianRational(2) * y + z);
        HPoly d = poly_gcd(f1, f2);
        CHECK(d == ((x + y) * (x - z)).normalized());
        auto q1 = exact_divide(f1, d), q2 = exact_divide(f2, d);
        REQUIRE(q1.has_value());
        REQUIRE(q2.has_value());
        CHECK(poly_gcd(*q1, *q2).degree() == 0);
    }

    SUBCASE("vanishing order") {
        CHECK(vanishing_order(x * x + y * y, pt(0, 0, 1)) == 2);
        CHECK(vanishing_order(x * x + y * y, pti(1, 0, 0, 1, 0, 0)) == 1);
        CHECK(vanishing_order(z, pt(1, 0, 0)) == 1);
        CHECK(vanishing_order(z, pt(0, 0, 1)) == 0);
    }

    SUBCASE("resultant eliminates a variable") {
        HPoly f = x * x + y * y;
        HPoly g = x - z;
        HPoly r = resultant_wrt(f, g, 0); // substitute x = z
        CHECK(r.normalized() == (z * z + y * y).normalized());
        // shared factor makes the resultant vanish
        HPoly r2 = resultant_wrt(x * z, (x + y) * z, 2);
        CHECK(r2.is_zero());
    }
}

TEST_CASE("conjugation fixes exactly the real polynomials") {
    HPoly x = HPoly::x(), y = HPoly::y(), z = HPoly::z();
    GaussianRational i = GaussianRational::i();
    HPoly real_poly = x * z + GaussianRational(Rational(3, 7)) * y * y;
    HPoly complex_poly = x * z + i * y * y;
    CHECK(real_poly.conj() == real_poly);
    CHECK(real_poly.is_real());
    CHECK(complex_poly.conj() != complex_poly);
    CHECK(!complex_poly.is_real());
    CHECK(complex_poly.conj().conj() == complex_poly);
}

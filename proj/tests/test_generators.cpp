#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/format.hpp"
#include "cremona/generators.hpp"

using namespace cremona;

namespace {
ProjectivePoint pt(long x, long y, long z) {
    return ProjectivePoint(GaussianRational(x), GaussianRational(y), GaussianRational(z));
}
ProjectivePoint pti(long xr, long xi, long yr, long yi, long zr, long zi) {
    return ProjectivePoint(GaussianRational(Rational(xr), Rational(xi)),
                           GaussianRational(Rational(yr), Rational(yi)),
                           GaussianRational(Rational(zr), Rational(zi)));
}
const PointOrbit q3_default{pti(1, 0, 0, 1, 1, 1)}; // [1 : i : 1+i], non-real pencil parameter
} // namespace

TEST_CASE("sigma: components, involution, base structure") {
    BirationalMap s = sigma();
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    CHECK(s.component(0) == X * Z);
    CHECK(s.component(1) == Y * Z);
    CHECK(s.component(2) == X * X + Y * Y);
    CHECK(equals(compose(s, s), BirationalMap::identity()));
    auto an = analyze_base_points(s);
    int reals = 0, pairs = 0;
    for (const auto& [o, m] : an.orbits) (o.is_real() ? reals : pairs) += 1;
    CHECK(reals == 1);
    CHECK(pairs == 1);
}

TEST_CASE("sigma_std: components, involution, classification") {
    BirationalMap s = sigma_std();
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    CHECK(s.component(0) == Y * Z);
    CHECK(s.component(1) == X * Z);
    CHECK(s.component(2) == X * Y);
    CHECK(equals(compose(s, s), BirationalMap::identity()));
    CHECK(classify(s) == GeneratorTag::ThreeRealQuadratic);
}

TEST_CASE("quadratic with prescribed base points") {
    SUBCASE("sigma's base points reproduce sigma's base scheme") {
        std::vector<PointOrbit> orbits = {PointOrbit(pt(0, 0, 1)), PointOrbit(pti(1, 0, 0, 1, 0, 0))};
        BirationalMap q = quadratic_with_base_points(orbits);
        auto got = base_points(q);
        REQUIRE(got.size() == 2);
        CHECK((got[0] == orbits[0] || got[1] == orbits[0]));
        CHECK((got[0] == orbits[1] || got[1] == orbits[1]));
        CHECK(classify(q) == GeneratorTag::OneRealPairQuadratic);
        CHECK(equals(compose(q, q.inverse()), BirationalMap::identity()));
    }
    SUBCASE("coordinate triangle reproduces sigma_std's base scheme") {
        std::vector<PointOrbit> orbits = {PointOrbit(pt(1, 0, 0)), PointOrbit(pt(0, 1, 0)),
                                          PointOrbit(pt(0, 0, 1))};
        BirationalMap q = quadratic_with_base_points(orbits);
        auto got = base_points(q);
        CHECK(got.size() == 3);
        CHECK(classify(q) == GeneratorTag::ThreeRealQuadratic);
    }
    SUBCASE("collinear input is rejected") {
        std::vector<PointOrbit> orbits = {PointOrbit(pt(1, 0, 0)), PointOrbit(pt(0, 1, 0)),
                                          PointOrbit(pt(1, 1, 0))};
        CHECK_THROWS_AS(quadratic_with_base_points(orbits), validation_error);
    }
}

TEST_CASE("de Jonquieres membership witnesses") {
    SUBCASE("sigma preserves the line pencil with the identity Moebius") {
        auto w = is_in_Jstar(sigma());
        REQUIRE(w.has_value());
        CHECK(w->is_identity());
    }
    SUBCASE("sigma_std acts by the swap Moebius") {
        auto w = is_in_Jstar(sigma_std());
        REQUIRE(w.has_value());
        CHECK(w->a.is_zero());
        CHECK(w->d.is_zero());
        CHECK(!w->b.is_zero());
        CHECK(!w->c.is_zero());
    }
    SUBCASE("a generic map is rejected") {
        HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
        BirationalMap f(X * X + Y * Z, Y * Y, Z * Z);
        CHECK(!is_in_Jstar(f).has_value());
        CHECK(!is_in_Jcirc(f).has_value());
    }
    SUBCASE("subgroup law: witness of a composition is the product") {
        BirationalMap s = sigma(), t = sigma_std();
        auto ws = is_in_Jstar(s), wt = is_in_Jstar(t);
        REQUIRE((ws && wt));
        auto wc = is_in_Jstar(compose(s, t));
        REQUIRE(wc.has_value());
        CHECK(equivalent(*wc, (*ws) * (*wt)));
    }
}

TEST_CASE("conic pencil membership") {
    CHECK(is_in_Jcirc(sigma()).has_value());
    CHECK(!is_in_Jcirc(sigma_std()).has_value());
}

TEST_CASE("standard quintic construction") {
    BirationalMap q = standard_quintic(q3_default);
    CHECK(q.degree() == 5);
    auto an = analyze_base_points(q);
    CHECK(!an.has_infinitely_near);
    REQUIRE(an.orbits.size() == 3);
    for (const auto& [o, m] : an.orbits) {
        CHECK(o.is_pair());
        CHECK(m == 2);
    }
    CHECK(is_in_Jcirc(q).has_value());
    CHECK(classify(q) == GeneratorTag::StandardQuintic);
    CHECK(equals(compose(q, q.inverse()), BirationalMap::identity()));

    SUBCASE("pair on a line with two standard points is rejected") {
        // [0:1:t] is collinear with [0:1:i] and [0:1:-i] for any t
        CHECK_THROWS_AS(standard_quintic(PointOrbit(pti(0, 0, 1, 0, 1, 1))), validation_error);
    }
    SUBCASE("six points on one pencil conic are rejected") {
        // [1:i:1] has real pencil parameter 1, so the six points sit on one conic
        CHECK_THROWS_AS(standard_quintic(PointOrbit(pti(1, 0, 0, 1, 1, 0))), validation_error);
    }
}

TEST_CASE("classification is conjugation invariant for quadratics") {
    Mat3 m{{{GaussianRational(1), GaussianRational(2), GaussianRational(0)},
            {GaussianRational(0), GaussianRational(1), GaussianRational(1)},
            {GaussianRational(1), GaussianRational(0), GaussianRational(1)}}};
    BirationalMap a = BirationalMap::from_matrix(m);
    for (const BirationalMap& f : {sigma(), sigma_std()}) {
        GeneratorTag t0 = classify(f);
        CHECK(classify(compose(a, compose(f, a.inverse()))) == t0);
    }
}

TEST_CASE("every one-real-pair quadratic normalizes to sigma") {
    std::vector<std::vector<PointOrbit>> cases = {
        {PointOrbit(pt(0, 0, 1)), PointOrbit(pti(1, 0, 0, 1, 0, 0))},
        {PointOrbit(pt(1, 1, 1)), PointOrbit(pti(1, 0, 0, 1, 0, 0))},
        {PointOrbit(pt(1, 0, 0)), PointOrbit(pti(0, 0, 1, 0, 2, 1))},
        {PointOrbit(pt(2, 1, 1)), PointOrbit(pti(1, -1, 0, 2, 1, 0))},
    };
    for (const auto& orbits : cases) {
        BirationalMap f = quadratic_with_base_points(orbits);
        auto norm = normalize_to_sigma(f);
        CHECK(equals(compose(norm.alpha, compose(f, norm.beta)), sigma()));
    }
}

TEST_CASE("classify examples from the catalog") {
    CHECK(classify(sigma()) == GeneratorTag::OneRealPairQuadratic);
    CHECK(classify(sigma_std()) == GeneratorTag::ThreeRealQuadratic);
    CHECK(classify(BirationalMap::identity()) == GeneratorTag::Automorphism);
    CHECK(classify(standard_quintic(q3_default)) == GeneratorTag::StandardQuintic);
    // an elementary de Jonquieres map with an infinitely near base point
    HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();
    BirationalMap elm(X * X, X * Y, Y * Z);
    CHECK(classify(elm) == GeneratorTag::DeJonquieres);
}

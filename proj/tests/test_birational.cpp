#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/birational_map.hpp"
#include "cremona/format.hpp"

using namespace cremona;

namespace {
HPoly X = HPoly::x(), Y = HPoly::y(), Z = HPoly::z();

BirationalMap sigma_map() { return BirationalMap(X * Z, Y * Z, X * X + Y * Y); }
BirationalMap sigma_std_map() { return BirationalMap(Y * Z, X * Z, X * Y); }

ProjectivePoint pt(long x, long y, long z) {
    return ProjectivePoint(GaussianRational(x), GaussianRational(y), GaussianRational(z));
}
} // namespace

TEST_CASE("sigma and the standard involution square to the identity") {
    BirationalMap s = sigma_map(), t = sigma_std_map();
    CHECK(equals(compose(s, s), BirationalMap::identity()));
    CHECK(equals(compose(t, t), BirationalMap::identity()));
    CHECK(!equals(s, t));
}

TEST_CASE("equality is projective") {
    BirationalMap a(X * Z, Y * Z, X * X + Y * Y);
    BirationalMap b(GaussianRational(2) * (X * Z), GaussianRational(2) * (Y * Z),
                    GaussianRational(2) * (X * X + Y * Y));
    CHECK(equals(a, b));
}

TEST_CASE("linear composition preserves degree") {
    BirationalMap alpha = BirationalMap::from_matrix(Mat3{{{GaussianRational(1), GaussianRational(0), GaussianRational(1)},
                                                           {GaussianRational(0), GaussianRational(1), GaussianRational(0)},
                                                           {GaussianRational(0), GaussianRational(0), GaussianRational(1)}}});
    BirationalMap s = sigma_map();
    CHECK(compose(alpha, s).degree() == 2);
    CHECK(compose(s, alpha).degree() == 2);
    CHECK(alpha.is_automorphism());
    CHECK(!s.is_automorphism());
    CHECK(equals(compose(alpha, alpha.inverse()), BirationalMap::identity()));
}

TEST_CASE("non-dominant triples are rejected at construction") {
    CHECK_THROWS_AS(BirationalMap(X, X, Z), validation_error);
}

TEST_CASE("non-coprime triples are simplified with a notice") {
    BirationalMap m(X * Z, Y * Z, Z * Z);
    CHECK(m.was_simplified());
    CHECK(m.degree() == 1);
    CHECK(equals(m, BirationalMap::identity()));
}

TEST_CASE("base points of the generators") {
    BirationalMap s = sigma_map();
    auto bp = base_points(s);
    REQUIRE(bp.size() == 2);
    PointOrbit real_orbit(pt(0, 0, 1));
    PointOrbit pair_orbit(ProjectivePoint(GaussianRational(1), GaussianRational::i(), GaussianRational(0)));
    CHECK((bp[0] == real_orbit || bp[1] == real_orbit));
    CHECK((bp[0] == pair_orbit || bp[1] == pair_orbit));

    auto bp2 = base_points(sigma_std_map());
    REQUIRE(bp2.size() == 3);
    for (const auto& o : bp2) CHECK(o.is_real());
    std::set<ProjectivePoint> got;
    for (const auto& o : bp2) got.insert(o.representative());
    CHECK(got == std::set<ProjectivePoint>{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});

    CHECK(base_points(BirationalMap::identity()).empty());

    SUBCASE("a quadratic has three complex base points counted right") {
        for (const BirationalMap& f : {sigma_map(), sigma_std_map()}) {
            auto an = analyze_base_points(f);
            CHECK(!an.has_infinitely_near);
            CHECK(an.complex_point_count() == 3);
        }
    }
}

TEST_CASE("infinitely near base points are flagged, not mislisted") {
    BirationalMap m(X * X, X * Y, Y * Z);
    auto an = analyze_base_points(m);
    CHECK(an.has_infinitely_near);
    CHECK_THROWS_AS(base_points(m), unsupported_error);
}

TEST_CASE("base points outside Q(i) fail loudly") {
    // common zeros [ +-sqrt(2) : 0 : 1 ]
    BirationalMap m(X * X - GaussianRational(2) * (Z * Z), X * Y, X * X + Y * Y - GaussianRational(2) * (Z * Z));
    CHECK_THROWS_AS(analyze_base_points(m), unsupported_error);
}

TEST_CASE("contracted curves of sigma") {
    auto curves = contracted_curves(sigma_map());
    REQUIRE(curves.size() == 2);
    bool saw_line = false, saw_conic = false;
    for (const auto& c : curves) {
        if (c.curve == Z) {
            saw_line = true;
            CHECK(c.image == PointOrbit(pt(0, 0, 1)));
        }
        if (c.curve == (X * X + Y * Y).normalized()) {
            saw_conic = true;
            CHECK(c.image ==
                  PointOrbit(ProjectivePoint(GaussianRational(1), GaussianRational::i(), GaussianRational(0))));
        }
    }
    CHECK(saw_line);
    CHECK(saw_conic);
}

TEST_CASE("contracted curves of the three-real involution are the coordinate lines") {
    auto curves = contracted_curves(sigma_std_map());
    REQUIRE(curves.size() == 3);
    std::set<ProjectivePoint> images;
    for (const auto& c : curves) {
        CHECK(c.curve.degree() == 1);
        images.insert(c.image.representative());
    }
    CHECK(images == std::set<ProjectivePoint>{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
}

TEST_CASE("composition with shared base structure drops degree") {
    BirationalMap c = compose(sigma_map(), sigma_std_map());
    CHECK(c.degree() == 3);
    BirationalMap back = compose(compose(sigma_std_map(), sigma_map()), c);
    // (sigma_std o sigma) o (sigma o sigma_std) = id
    CHECK(equals(back, BirationalMap::identity()));
}

TEST_CASE("inverse words compose and verify") {
    BirationalMap s = sigma_map();
    s.with_inverse_word({sigma_map()});
    BirationalMap t = sigma_std_map();
    t.with_inverse_word({sigma_std_map()});
    BirationalMap c = compose(s, t); // has a propagated inverse word
    REQUIRE(c.has_inverse());
    CHECK(equals(compose(c, c.inverse()), BirationalMap::identity()));
    CHECK(equals(compose(c.inverse(), c), BirationalMap::identity()));
}

TEST_CASE("map text form") {
    CHECK(sigma_map().str() == "[x*z : y*z : x^2 + y^2]");
    CHECK(BirationalMap::identity().str() == "[x : y : z]");
}

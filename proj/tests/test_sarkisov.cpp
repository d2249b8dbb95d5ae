#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/format.hpp"
#include "cremona/sampling.hpp"
#include "cremona/sarkisov.hpp"

using namespace cremona;

namespace {
bool index_step_ok(const Link& l) {
    if (l.source.surface != SurfaceKind::Fn || l.target.surface != SurfaceKind::Fn) return true;
    int d = l.target.index - l.source.index;
    bool pair = l.fibre_parameter.has_value() && !l.fibre_parameter->infinite &&
                !l.fibre_parameter->t.is_real();
    if (pair) return d == 0 || d == 2 || d == -2;
    return d == 1 || d == -1;
}
} // namespace

TEST_CASE("sigma factors through the quadric in two type II links") {
    LinkWord w = sigma_link_factorization();
    REQUIRE(w.size() == 2);
    CHECK(w.links[0].kind == LinkKind::II);
    CHECK(w.links[1].kind == LinkKind::II);
    CHECK(w.links[0].source.surface == SurfaceKind::P2);
    CHECK(w.links[0].target.surface == SurfaceKind::Q);
    CHECK(w.links[1].target.surface == SurfaceKind::P2);
    REQUIRE(w.composite.has_value());
    CHECK(equals(*w.composite, sigma()));
    // the two halves carry sigma's own base data
    CHECK(w.links[0].blown_up->is_pair());
    CHECK(w.links[1].blown_up->is_real());
}

TEST_CASE("decompose sigma: one pair link between F1 vertices") {
    LinkWord w = decompose_de_jonquieres(sigma());
    REQUIRE(w.size() == 3);
    CHECK(w.links[0].kind == LinkKind::I);
    CHECK(w.links[1].kind == LinkKind::II);
    CHECK(w.links[2].kind == LinkKind::III);
    CHECK(w.links[1].source.index == 1);
    CHECK(w.links[1].target.index == 1); // pair off the negative section at F1: index change 0
    REQUIRE(w.links[1].fibre_parameter.has_value());
    CHECK(w.links[1].fibre_parameter->t == GaussianRational::i());
    REQUIRE(w.links[1].blown_up.has_value());
    CHECK(*w.links[1].blown_up ==
          PointOrbit(ProjectivePoint(GaussianRational(1), GaussianRational::i(), GaussianRational(0))));
    REQUIRE(w.composite.has_value());
    CHECK(equals(*w.composite, sigma()));
}

TEST_CASE("decompose sigma_std: two real links through F1, F0, F1") {
    LinkWord w = decompose_de_jonquieres(sigma_std());
    REQUIRE(w.size() == 4);
    CHECK(w.links[0].kind == LinkKind::I);
    CHECK(w.links[1].kind == LinkKind::II);
    CHECK(w.links[2].kind == LinkKind::II);
    CHECK(w.links[3].kind == LinkKind::III);
    std::vector<int> indices = {w.links[1].source.index, w.links[1].target.index,
                                w.links[2].target.index};
    CHECK(indices == std::vector<int>{1, 0, 1});
    REQUIRE(w.composite.has_value());
    CHECK(equals(*w.composite, sigma_std()));
}

TEST_CASE("decompose identity: empty word") {
    LinkWord w = decompose_de_jonquieres(BirationalMap::identity());
    CHECK(w.empty());
}

TEST_CASE("decompose rejects maps outside Jstar") {
    CHECK_THROWS_AS(decompose_de_jonquieres(standard_quintic(
                        PointOrbit(ProjectivePoint(GaussianRational(1), GaussianRational::i(),
                                                   GaussianRational(Rational(1), Rational(1)))))),
                    validation_error);
}

TEST_CASE("seeded de Jonquieres maps recompose with legal index walks") {
    Sampler s(20240817);
    for (int trial = 0; trial < 10; ++trial) {
        BirationalMap f = s.jstar_map(3);
        LinkWord w = decompose_de_jonquieres(f); // recomposition asserted inside
        REQUIRE(w.composite.has_value());
        CHECK(equals(*w.composite, f));
        for (const auto& l : w.links) CHECK(index_step_ok(l));
        // endpoints
        CHECK(w.links.front().source.surface == SurfaceKind::P2);
        CHECK(w.links.back().target.surface == SurfaceKind::P2);
    }
}

TEST_CASE("three-real quadratic path: kinds (I, II, II, III) and recomposition") {
    SUBCASE("sigma_std with the coordinate triangle") {
        LinkWord w = three_real_quadratic_path(sigma_std());
        REQUIRE(w.size() == 4);
        CHECK(w.links[0].kind == LinkKind::I);
        CHECK(w.links[1].kind == LinkKind::II);
        CHECK(w.links[2].kind == LinkKind::II);
        CHECK(w.links[3].kind == LinkKind::III);
        CHECK(w.links[1].source.index == 1);
        CHECK(w.links[1].target.index == 0);
        CHECK(w.links[2].target.index == 1);
        REQUIRE(w.composite.has_value());
        CHECK(equals(*w.composite, sigma_std()));
        // blown-up data are the three base points; contracted lines join them
        CHECK(w.links[0].blown_up->is_real());
        CHECK(w.links[1].blown_up->is_real());
        CHECK(w.links[2].blown_up->is_real());
    }
    SUBCASE("seeded three-real quadratics") {
        Sampler s(77);
        for (int trial = 0; trial < 4; ++trial) {
            BirationalMap f = s.three_real_quadratic();
            LinkWord w = three_real_quadratic_path(f);
            REQUIRE(w.composite.has_value());
            CHECK(equals(*w.composite, f));
        }
    }
    SUBCASE("tag mismatch is rejected") {
        CHECK_THROWS_AS(three_real_quadratic_path(sigma()), validation_error);
    }
}

TEST_CASE("one-real-pair path goes through a single pair link") {
    Sampler s(31);
    for (int trial = 0; trial < 3; ++trial) {
        BirationalMap f = s.one_real_pair_quadratic();
        LinkWord w = one_real_pair_quadratic_path(f);
        REQUIRE(w.size() == 3);
        CHECK(w.links[1].kind == LinkKind::II);
        CHECK(w.links[1].blown_up->is_pair());
        REQUIRE(w.composite.has_value());
        CHECK(equals(*w.composite, f));
    }
}

TEST_CASE("quintic to C6 link") {
    GaussianRational i = GaussianRational::i();
    PointOrbit q3(ProjectivePoint(GaussianRational(1), i, GaussianRational(Rational(1), Rational(1))));
    BirationalMap q = standard_quintic(q3);
    Link l = quintic_to_c6_link(q);
    CHECK(l.kind == LinkKind::II);
    CHECK(l.source.surface == SurfaceKind::C6);
    CHECK(l.target.surface == SurfaceKind::C6);
    CHECK(l.source.over_p1);
    REQUIRE(l.blown_up.has_value());
    CHECK(l.blown_up->is_pair());
    CHECK(*l.blown_up == q3);
    REQUIRE(l.fibre_parameter.has_value());
    CHECK(l.fibre_parameter->t == standard_pencil().parameter(q3.representative()).t);
    CHECK(!l.fibre_parameter->t.is_real());
    REQUIRE(l.p2_composite.has_value());
    CHECK(equals(*l.p2_composite, q));
}

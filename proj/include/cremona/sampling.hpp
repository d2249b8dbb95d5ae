#pragma once

#include <random>

#include "cremona/sarkisov.hpp"

namespace cremona {

/// Deterministic seeded generators for the desk-scale property tests.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    Rational small_rational(long span = 3) {
        long num = int_in(-span, span);
        long den = int_in(1, span);
        return Rational(num, den);
    }

    Mat3 automorphism_matrix() {
        while (true) {
            Mat3 m{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m[r][c] = GaussianRational(int_in(-3, 3));
            if (!det3(m).is_zero()) return m;
        }
    }

    BirationalMap automorphism() { return BirationalMap::from_matrix(automorphism_matrix()); }

    /// Automorphism fixing [0:0:1], hence lying in Jstar.
    BirationalMap jstar_automorphism() {
        while (true) {
            Mat3 m{};
            m[0] = {GaussianRational(int_in(-3, 3)), GaussianRational(int_in(-3, 3)), GaussianRational(0)};
            m[1] = {GaussianRational(int_in(-3, 3)), GaussianRational(int_in(-3, 3)), GaussianRational(0)};
            m[2] = {GaussianRational(int_in(-2, 2)), GaussianRational(int_in(-2, 2)),
                    GaussianRational(int_in(1, 3))};
            if (!det3(m).is_zero()) return BirationalMap::from_matrix(m);
        }
    }

    ProjectivePoint real_point() {
        while (true) {
            GaussianRational x(small_rational()), y(small_rational()), z(small_rational());
            if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
            return ProjectivePoint(x, y, z);
        }
    }

    PointOrbit nonreal_pair() {
        while (true) {
            GaussianRational coords[3];
            bool nonreal = false;
            for (auto& c : coords) {
                c = GaussianRational(small_rational(2), Rational(int_in(-2, 2)));
                nonreal = nonreal || !c.im().is_zero();
            }
            if (!nonreal) continue;
            if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero()) continue;
            ProjectivePoint p(coords[0], coords[1], coords[2]);
            if (p.is_real()) continue;
            return PointOrbit(p);
        }
    }

    /// Elementary de Jonquieres quadratic blowing up the fibre position
    /// (u0, t0) and contracting the fibre through it.
    BirationalMap jstar_elementary() {
        GaussianRational u0(small_rational()), t0(small_rational());
        jonq::Mat2 e{UniPoly::constant(GaussianRational(1)), UniPoly::constant(-t0), UniPoly(),
                     UniPoly({-u0, GaussianRational(1)})};
        return jonq::matrix_to_map(e);
    }

    /// Elementary pair link: blows up a conjugate pair on conjugate fibres.
    BirationalMap jstar_pair_elementary() {
        GaussianRational u0(small_rational(2), Rational(int_in(1, 2)));
        GaussianRational t0(small_rational(2), Rational(int_in(-2, 2)));
        // (u - u0)(u - conj u0) = u^2 - 2 Re(u0) u + |u0|^2
        UniPoly m({GaussianRational(u0.norm()), GaussianRational(Rational(-2) * u0.re()),
                   GaussianRational(1)});
        jonq::Mat2 e{UniPoly::constant(GaussianRational(1)), -jonq::detail2::real_interpolant(u0, t0),
                     UniPoly(), m};
        return jonq::matrix_to_map(e);
    }

    /// Member of Jstar of degree <= 3: elementary links glued by Jstar
    /// automorphisms.
    BirationalMap jstar_map(int max_degree = 3) {
        while (true) {
            BirationalMap f = jstar_elementary();
            int extra = static_cast<int>(int_in(0, 2));
            if (extra >= 1) f = compose(f, jstar_automorphism());
            if (extra == 2) {
                BirationalMap g = int_in(0, 1) ? jstar_elementary() : jstar_pair_elementary();
                f = compose(g, f);
            }
            if (f.degree() <= max_degree && is_in_Jstar(f).has_value()) return f;
        }
    }

    BirationalMap three_real_quadratic() {
        while (true) {
            ProjectivePoint a = real_point(), b = real_point(), c = real_point();
            if (a == b || a == c || b == c || collinear(a, b, c)) continue;
            try {
                return quadratic_with_base_points({PointOrbit(a), PointOrbit(b), PointOrbit(c)});
            } catch (const error&) {
                continue;
            }
        }
    }

    BirationalMap one_real_pair_quadratic() {
        while (true) {
            ProjectivePoint r = real_point();
            PointOrbit pair = nonreal_pair();
            auto pts = pair.points();
            if (r == pts[0] || r == pts[1] || collinear(r, pts[0], pts[1])) continue;
            try {
                return quadratic_with_base_points({PointOrbit(r), pair});
            } catch (const error&) {
                continue;
            }
        }
    }

    /// A valid third pair for a standard quintic (non-real pencil parameter).
    PointOrbit quintic_pair() {
        while (true) {
            PointOrbit pair = nonreal_pair();
            const ConicPencil& P = standard_pencil();
            if (P.is_base_point(pair.representative())) continue;
            PencilValue t = [&]() -> PencilValue {
                try {
                    return P.parameter(pair.representative());
                } catch (const error&) {
                    return PencilValue{true, GaussianRational()};
                }
            }();
            if (t.is_real()) continue;
            try {
                standard_quintic(pair, false);
                return pair;
            } catch (const error&) {
                continue;
            }
        }
    }

    BirationalMap quintic() { return standard_quintic(quintic_pair()); }

    /// Translation [x + a z : y + b z : z] from the coset-separation family.
    BirationalMap translation() {
        Mat3 m{{{GaussianRational(1), GaussianRational(0), GaussianRational(small_rational())},
                {GaussianRational(0), GaussianRational(1), GaussianRational(small_rational())},
                {GaussianRational(0), GaussianRational(0), GaussianRational(1)}}};
        return BirationalMap::from_matrix(m);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace cremona

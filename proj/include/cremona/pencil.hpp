#pragma once

#include <optional>

#include "cremona/point.hpp"

namespace cremona {

/// Value of the pencil coordinate at a point: a finite parameter t, or the
/// distinguished chart infinity (the member c1 itself).
struct PencilValue {
    bool infinite = false;
    GaussianRational t; // meaningful only when !infinite

    bool is_real() const { return infinite || t.is_real(); }
    friend bool operator==(const PencilValue& a, const PencilValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.t == b.t);
    }
    std::string str() const { return infinite ? std::string("inf") : t.str(); }
};

/// The pencil of conics through two fixed conjugate pairs of non-real
/// points. Members are t*c1 + c2 plus the chart-infinity member c1.
class ConicPencil {
public:
    ConicPencil(HPoly c1, HPoly c2, PointOrbit o1, PointOrbit o2)
        : c1_(std::move(c1)), c2_(std::move(c2)), orbits_{o1, o2} {
        check_arg(c1_.degree() == 2 && c2_.degree() == 2, "pencil: members must be conics");
        check_arg(c1_.is_real() && c2_.is_real(), "pencil: members must be real");
        check_arg(o1.is_pair() && o2.is_pair(), "pencil: base orbits must be conjugate pairs");
        for (const auto& orbit : orbits_)
            for (const auto& p : orbit.points()) {
                check_arg(eval_at(c1_, p).is_zero() && eval_at(c2_, p).is_zero(),
                          "pencil: member does not vanish at base point");
            }
        check_arg(!(c1_.normalized() == c2_.normalized()), "pencil: members proportional");
    }

    const HPoly& c1() const { return c1_; }
    const HPoly& c2() const { return c2_; }
    const std::array<PointOrbit, 2>& base_orbits() const { return orbits_; }

    bool is_base_point(const ProjectivePoint& p) const {
        return orbits_[0].contains(p) || orbits_[1].contains(p);
    }

    /// Pencil coordinate of the member through q, per the convention
    /// t = -c2(q)/c1(q); c1(q) = 0 is the chart's infinity.
    PencilValue parameter(const ProjectivePoint& q) const {
        GaussianRational v1 = eval_at(c1_, q);
        GaussianRational v2 = eval_at(c2_, q);
        check_arg(!(v1.is_zero() && v2.is_zero()), "pencil parameter: base point");
        if (v1.is_zero()) return {true, GaussianRational()};
        return {false, -v2 / v1};
    }

    HPoly member(const PencilValue& v) const {
        if (v.infinite) return c1_;
        return v.t * c1_ + c2_;
    }

private:
    HPoly c1_, c2_;
    std::array<PointOrbit, 2> orbits_;
};

/// The fixed pencil through [1:+-i:0] and [0:1:+-i]:
/// c1 = x z (the product of the lines joining each conjugate pair) and
/// c2 = (x-z)^2 + y^2 (the product of one cross-pairing of lines).
inline const ConicPencil& standard_pencil() {
    static const ConicPencil pencil = [] {
        GaussianRational i = GaussianRational::i();
        PointOrbit o1{ProjectivePoint(GaussianRational(1), i, GaussianRational(0))};
        PointOrbit o2{ProjectivePoint(GaussianRational(0), GaussianRational(1), i)};
        HPoly x = HPoly::x(), y = HPoly::y(), z = HPoly::z();
        HPoly c1 = x * z;
        HPoly c2 = (x - z) * (x - z) + y * y;
        return ConicPencil(c1, c2, o1, o2);
    }();
    return pencil;
}

inline PencilValue pencil_parameter(const ProjectivePoint& q) {
    return standard_pencil().parameter(q);
}

} // namespace cremona

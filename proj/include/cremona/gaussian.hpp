#pragma once

#include <optional>
#include <string>

#include "cremona/rational.hpp"

namespace cremona {

/// Element of Q(i): re + im*i with exact rational parts.
/// Complex conjugation is the Galois action of Gal(C/R) on every
/// coordinate and coefficient in this library.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// re^2 + im^2, a nonnegative rational vanishing only at zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = m;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        check_arg(!o.is_zero(), "GaussianRational: division by zero");
        Rational n = o.norm();
        GaussianRational prod = *this * o.conj();
        re_ = prod.re_ / n;
        im_ = prod.im_ / n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order for deterministic containers; no arithmetic meaning.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussianRational inverse() const {
        check_arg(!is_zero(), "GaussianRational: inverse of zero");
        Rational n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    /// Exact square root in Q(i) if one exists.
    std::optional<GaussianRational> sqrt() const {
        if (is_zero()) return GaussianRational();
        auto n = norm().sqrt();
        if (!n) return std::nullopt;
        if (im_.is_zero()) {
            // sqrt of a real: either real or purely imaginary.
            if (re_.sign() > 0) {
                auto r = re_.sqrt();
                if (!r) return std::nullopt;
                return GaussianRational(*r);
            }
            auto r = (-re_).sqrt();
            if (!r) return std::nullopt;
            return GaussianRational(Rational(0), *r);
        }
        // (u + vi)^2 = re + im*i with u^2 = (re + |.|)/2, v = im/(2u).
        auto u2 = ((re_ + *n) / Rational(2)).sqrt();
        if (!u2 || u2->is_zero()) return std::nullopt;
        Rational u = *u2;
        Rational v = im_ / (Rational(2) * u);
        GaussianRational root(u, v);
        if (root * root != *this) return std::nullopt;
        return root;
    }

    /// "0", "1", "-2/3", "i", "-i", "3*i", "1+i", "1/2-3/4*i"
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!re_.is_zero()) out = re_.str();
        if (!im_.is_zero()) {
            if (!out.empty() && im_.sign() > 0) out += "+";
            if (im_ == Rational(1))
                out += "i";
            else if (im_ == Rational(-1))
                out += "-i";
            else
                out += im_.str() + "*i";
        }
        return out;
    }

private:
    Rational re_;
    Rational im_;
};

} // namespace cremona

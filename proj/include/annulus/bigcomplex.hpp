#pragma once

#include "annulus/bigfloat.hpp"

#include <utility>

namespace annulus {

/// Complex number in rectangular form: a pair of BigFloat components.
/// No interval bookkeeping; error accounting lives in the algorithms.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    BigComplex operator-() const { return {-re, -im}; }

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) {
        a += b;
        return a;
    }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) {
        a -= b;
        return a;
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigFloat& s) {
        return {a.re / s, a.im / s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
/// Squared modulus.
inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

/// r * (cos t + i sin t) at the given precision.
BigComplex polar(const BigFloat& r, const BigFloat& t);

} // namespace annulus

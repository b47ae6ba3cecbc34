#pragma once

#include "gzmom/real.hpp"

// Minimal complex arithmetic over the multiprecision real type. std::complex
// is only specified for the builtin floating types, so the few operations the
// zeta/gamma evaluators need are spelled out here.

namespace gzmom {

struct Cplx {
    Real re{};
    Real im{};

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Cplx& operator/=(const Cplx& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }

    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
    friend Cplx operator/(Cplx a, const Cplx& b) { return a /= b; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Cplx& a, const Cplx& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real norm_sq(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return sqrt(norm_sq(z)); }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal-branch logarithm.
inline Cplx log(const Cplx& z) {
    return {log(norm_sq(z)) / 2, atan2(z.im, z.re)};
}

/// base^e for a positive real base.
inline Cplx pow_real_base(const Real& base, const Cplx& e) {
    Real lb = log(base);
    return exp(Cplx(e.re * lb, e.im * lb));
}

}  // namespace gzmom

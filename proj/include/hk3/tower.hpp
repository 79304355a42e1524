#pragma once

#include <string>

#include "hk3/core.hpp"
#include "hk3/eisenstein.hpp"

namespace hk3 {

/// Exact element a + b*sqrt3 + c*i + d*sqrt3*i of Q(i, sqrt3).
struct Tower {
    Rational a, b, c, d;

    Tower() : a(0), b(0), c(0), d(0) {}
    Tower(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_))
    {
    }
    Tower(const Rational& r) : a(r), b(0), c(0), d(0) {}
    Tower(long r) : a(r), b(0), c(0), d(0) {}
    Tower(int r) : a(r), b(0), c(0), d(0) {}
    /// Embedding of Z[w]: a + b w = (a - b/2) + (b/2) sqrt3 i.
    explicit Tower(const Eis& e);

    static Tower i() { return {0, 0, 1, 0}; }
    static Tower omega() { return {Rational(-1, 2), 0, 0, Rational(1, 2)}; }
    static Tower gaussian(const Rational& re, const Rational& im) { return {re, 0, im, 0}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_real() const { return c == 0 && d == 0; }
    Tower conj() const { return {a, b, -c, -d}; }
    Tower re() const { return {a, b, 0, 0}; }
    /// Imaginary part, as a real element.
    Tower im() const { return {c, d, 0, 0}; }
    Tower inverse() const;

    friend bool operator==(const Tower& x, const Tower& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Tower& x, const Tower& y) { return !(x == y); }
    friend Tower operator+(const Tower& x, const Tower& y)
    {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Tower operator-(const Tower& x, const Tower& y)
    {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Tower operator-(const Tower& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend Tower operator*(const Tower& x, const Tower& y);
    friend Tower operator/(const Tower& x, const Tower& y) { return x * y.inverse(); }
    Tower& operator+=(const Tower& y) { return *this = *this + y; }
    Tower& operator-=(const Tower& y) { return *this = *this - y; }
    Tower& operator*=(const Tower& y) { return *this = *this * y; }

    std::string str() const;
};

/// Exact sign of a real element a + b sqrt3; throws Error on nonreal input.
int tower_sign_real(const Tower& x);

} // namespace hk3

#pragma once

#include <array>
#include <string>
#include <tuple>

#include "hk3/core.hpp"

namespace hk3 {

/// Element a + b*omega of Z[omega], omega = exp(2*pi*i/3), omega^2 = -1 - omega.
struct Eis {
    Integer a, b;

    Eis() = default;
    Eis(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    Eis(long a_) : a(a_), b(0) {}
    Eis(int a_) : a(a_), b(0) {}

    static Eis omega() { return {0, 1}; }
    static Eis omega2() { return {-1, -1}; }

    Integer norm() const { return a * a - a * b + b * b; }
    Eis conj() const { return {a - b, -b}; }
    /// 2 Re(x)
    Integer twice_re() const { return 2 * a - b; }
    /// (2/sqrt 3) Im(x)
    Integer scaled_im() const { return b; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_real() const { return b == 0; }
    bool is_unit() const { return norm() == 1; }
    /// Reduction mod 2 as the pair of parities (a mod 2, b mod 2).
    bool is_even() const;
    bool congruent_mod2(const Eis& o) const;

    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }
    friend Eis operator+(const Eis& x, const Eis& y) { return {x.a + y.a, x.b + y.b}; }
    friend Eis operator-(const Eis& x, const Eis& y) { return {x.a - y.a, x.b - y.b}; }
    friend Eis operator-(const Eis& x) { return {-x.a, -x.b}; }
    friend Eis operator*(const Eis& x, const Eis& y)
    {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        const Integer bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    Eis& operator+=(const Eis& y) { return *this = *this + y; }
    Eis& operator-=(const Eis& y) { return *this = *this - y; }
    Eis& operator*=(const Eis& y) { return *this = *this * y; }

    std::string str() const;
};

/// The six units in the fixed order 1, -1, w, -w, w^2, -w^2.
const std::array<Eis, 6>& eis_units();

/// Exact quotient x / y; throws Error unless y divides x.
Eis eis_exact_div(const Eis& x, const Eis& y);

struct EisDivMod {
    Eis q, r;
};

/// Euclidean division: x = q*y + r with norm(r) < norm(y). The quotient is the
/// componentwise nearest integer of x/y in the (1, w) basis, halves toward zero.
EisDivMod eis_divmod(const Eis& x, const Eis& y);

/// The associate of x with 0 <= b < a (the half-open sector [0, 60 deg)),
/// together with the unit u such that canonical = u * x. Zero maps to itself.
std::pair<Eis, Eis> eis_canonical(const Eis& x);

struct EisGcd {
    Eis gcd, x, y;
};

/// alpha*x + beta*y = gcd, gcd canonical (see eis_canonical).
EisGcd eis_gcd_ext(const Eis& alpha, const Eis& beta);

using EisMat2 = Mat<Eis, 2, 2>;

Eis det(const EisMat2& m);
EisMat2 conj_transpose(const EisMat2& m);
/// Inverse of a matrix with unit determinant; throws Error otherwise.
EisMat2 inverse(const EisMat2& m);
bool congruent_mod2(const EisMat2& x, const EisMat2& y);
/// Membership in G(2) = { g in GL2(Z[w]) : g = I mod 2 }.
bool in_g2(const EisMat2& m);

struct ColumnReduction {
    EisMat2 A;
    Eis delta;
};

/// For (alpha, beta) = (1, 0) mod 2, returns A in G(2) with A (alpha, beta)^T =
/// (delta, 0)^T and (delta) = (alpha, beta); delta is normalized so that
/// alpha / delta = 1 mod 2.
ColumnReduction g2_column_reduce(const Eis& alpha, const Eis& beta);

} // namespace hk3

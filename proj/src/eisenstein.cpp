#include "hk3/eisenstein.hpp"

namespace hk3 {

static bool odd(const Integer& z) { return mpz_odd_p(z.get_mpz_t()) != 0; }

bool Eis::is_even() const { return !odd(a) && !odd(b); }

bool Eis::congruent_mod2(const Eis& o) const { return (*this - o).is_even(); }

std::string Eis::str() const { return "[" + a.get_str() + "," + b.get_str() + "]"; }

const std::array<Eis, 6>& eis_units()
{
    static const std::array<Eis, 6> units = {Eis{1, 0}, Eis{-1, 0}, Eis{0, 1},
                                             Eis{0, -1}, Eis{-1, -1}, Eis{1, 1}};
    return units;
}

Eis eis_exact_div(const Eis& x, const Eis& y)
{
    if (y.is_zero())
        throw Error("zero divisor");
    const Eis p = x * y.conj();
    const Integer n = y.norm();
    if (!mpz_divisible_p(p.a.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(p.b.get_mpz_t(), n.get_mpz_t()))
        throw Error("eis_exact_div: " + y.str() + " does not divide " + x.str());
    return {p.a / n, p.b / n};
}

EisDivMod eis_divmod(const Eis& x, const Eis& y)
{
    if (y.is_zero())
        throw Error("zero divisor");
    const Eis p = x * y.conj();
    const Integer n = y.norm();
    Eis q{round_half_to_zero(ratio(p.a, n)), round_half_to_zero(ratio(p.b, n))};
    Eis r = x - q * y;
    ensure(r.norm() < n, "eis_divmod: remainder not smaller than divisor");
    return {std::move(q), std::move(r)};
}

std::pair<Eis, Eis> eis_canonical(const Eis& x)
{
    if (x.is_zero())
        return {x, Eis{1}};
    for (const Eis& u : eis_units()) {
        Eis c = u * x;
        if (c.b >= 0 && c.b < c.a)
            return {c, u};
    }
    throw InvariantViolation("eis_canonical: no associate in the fundamental sector");
}

EisGcd eis_gcd_ext(const Eis& alpha, const Eis& beta)
{
    if (alpha.is_zero() && beta.is_zero())
        throw Error("eis_gcd_ext: both inputs zero");
    // invariant: r0 = alpha*x0 + beta*y0, r1 = alpha*x1 + beta*y1
    Eis r0 = alpha, r1 = beta;
    Eis x0{1}, y0{0}, x1{0}, y1{1};
    while (!r1.is_zero()) {
        auto [q, r] = eis_divmod(r0, r1);
        Eis x2 = x0 - q * x1;
        Eis y2 = y0 - q * y1;
        r0 = std::move(r1);
        r1 = std::move(r);
        x0 = std::move(x1);
        x1 = std::move(x2);
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    auto [g, u] = eis_canonical(r0);
    return {g, u * x0, u * y0};
}

Eis det(const EisMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

EisMat2 conj_transpose(const EisMat2& m)
{
    EisMat2 t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            t(i, j) = m(j, i).conj();
    return t;
}

EisMat2 inverse(const EisMat2& m)
{
    const Eis d = det(m);
    if (!d.is_unit())
        throw Error("matrix is not invertible over Z[w]");
    const Eis di = d.conj(); // inverse of a unit
    EisMat2 inv;
    inv(0, 0) = m(1, 1) * di;
    inv(0, 1) = -m(0, 1) * di;
    inv(1, 0) = -m(1, 0) * di;
    inv(1, 1) = m(0, 0) * di;
    return inv;
}

bool congruent_mod2(const EisMat2& x, const EisMat2& y)
{
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!x(i, j).congruent_mod2(y(i, j)))
                return false;
    return true;
}

bool in_g2(const EisMat2& m)
{
    return det(m).is_unit() && congruent_mod2(m, EisMat2::identity());
}

ColumnReduction g2_column_reduce(const Eis& alpha, const Eis& beta)
{
    if (!alpha.congruent_mod2(Eis{1}) || !beta.is_even())
        throw Error("not congruent to (1,0) mod 2");
    if (beta.is_zero())
        return {EisMat2::identity(), alpha};

    auto [delta, x, y] = eis_gcd_ext(alpha, beta);
    Eis ap = eis_exact_div(alpha, delta);
    Eis bp = eis_exact_div(beta, delta);
    // ap is a unit mod 2; exactly one of ap, ap*w^2, ap*w is 1 mod 2
    // (replacing delta by w*delta divides ap by w).
    const Eis w = Eis::omega();
    for (int k = 0; k < 3 && !ap.congruent_mod2(Eis{1}); ++k) {
        delta = delta * w;
        ap = ap * w.conj();
        bp = bp * w.conj();
        x = x * w;
        y = y * w;
    }
    ensure(ap.congruent_mod2(Eis{1}), "g2_column_reduce: alpha/delta not 1 mod 2");
    ensure(ap * x + bp * y == Eis{1}, "g2_column_reduce: Bezout identity");

    EisMat2 A;
    A(0, 0) = x - bp * y;
    A(0, 1) = y + ap * y;
    A(1, 0) = -bp;
    A(1, 1) = ap;
    ensure(det(A) == Eis{1}, "g2_column_reduce: det A != 1");
    ensure(congruent_mod2(A, EisMat2::identity()), "g2_column_reduce: A not I mod 2");
    return {A, delta};
}

} // namespace hk3

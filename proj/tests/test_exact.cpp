#include "doctest.h"

#include "hk3/eisenstein.hpp"
#include "hk3/poly.hpp"
#include "hk3/tower.hpp"

using namespace hk3;

namespace {

EisMat2 m2(Eis a, Eis b, Eis c, Eis d)
{
    EisMat2 r;
    r(0, 0) = a;
    r(0, 1) = b;
    r(1, 0) = c;
    r(1, 1) = d;
    return r;
}

Eis random_eis(Rng& rng, long bound) { return {rng.uniform(-bound, bound), rng.uniform(-bound, bound)}; }

} // namespace

TEST_CASE("eisenstein basics")
{
    const Eis w = Eis::omega();
    CHECK(w * w == Eis(-1, -1));
    CHECK(w * w * w == Eis(1));
    CHECK(Eis(2, 1).norm() == 3);
    int units = 0;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            units += Eis(a, b).is_unit();
    CHECK(units == 6);
    for (const auto& u : eis_units())
        CHECK(u.is_unit());
    CHECK(Eis(3, 2).conj() == Eis(1, -2));
}

TEST_CASE("eis_divmod examples")
{
    auto qr = eis_divmod(Eis::omega(), 1);
    CHECK(qr.q == Eis::omega());
    CHECK(qr.r.is_zero());
    qr = eis_divmod(5, Eis(2, 1));
    CHECK(qr.q == Eis(2, -2));
    CHECK(qr.r == Eis(-1));
    qr = eis_divmod(Eis(1, 1), 2);
    CHECK(qr.q == Eis(0));
    CHECK(qr.r == Eis(1, 1));
    CHECK_THROWS_WITH_AS(eis_divmod(1, 0), "zero divisor", Error);
}

TEST_CASE("eis_divmod property")
{
    Rng rng(3);
    for (int n = 0; n < 10000; ++n) {
        const Eis x = random_eis(rng, 50);
        Eis y = random_eis(rng, 50);
        if (y.is_zero())
            y = 1;
        const auto qr = eis_divmod(x, y);
        CHECK(qr.q * y + qr.r == x);
        CHECK(qr.r.norm() < y.norm());
    }
}

TEST_CASE("eis_gcd_ext")
{
    auto g = eis_gcd_ext(3, Eis(0, 2));
    CHECK(g.gcd == Eis(1));
    CHECK(g.x == Eis(1));
    CHECK(g.y == Eis(1, 1));
    g = eis_gcd_ext(2, Eis(1, 1));
    CHECK(g.gcd == Eis(1));
    CHECK(g.x == Eis(0));
    CHECK(g.y == Eis(0, -1));
    g = eis_gcd_ext(Eis(-2, 0), 0);
    CHECK(g.gcd == Eis(2));
    CHECK(g.x.is_unit());
    CHECK(g.y == Eis(0));
    CHECK_THROWS_AS(eis_gcd_ext(0, 0), Error);

    Rng rng(5);
    for (int n = 0; n < 2000; ++n) {
        const Eis a = random_eis(rng, 40), b = random_eis(rng, 40);
        if (a.is_zero() && b.is_zero())
            continue;
        const auto r = eis_gcd_ext(a, b);
        CHECK(a * r.x + b * r.y == r.gcd);
        CHECK_NOTHROW(eis_exact_div(a, r.gcd));
        CHECK_NOTHROW(eis_exact_div(b, r.gcd));
        CHECK(eis_canonical(r.gcd).first == r.gcd);
    }
}

TEST_CASE("g2_column_reduce")
{
    auto c = g2_column_reduce(1, 0);
    CHECK(c.A == EisMat2::identity());
    CHECK(c.delta == Eis(1));
    c = g2_column_reduce(3, Eis(0, 2));
    CHECK(c.A == m2(3, Eis(4, 4), Eis(0, -2), 3));
    CHECK(c.delta == Eis(1));
    c = g2_column_reduce(Eis(1, 2), 0);
    CHECK(c.A == EisMat2::identity());
    CHECK(c.delta == Eis(1, 2));
    CHECK_THROWS_WITH_AS(g2_column_reduce(2, 0), "not congruent to (1,0) mod 2", Error);

    Rng rng(8);
    for (int n = 0; n < 2000; ++n) {
        Eis a = random_eis(rng, 30), b = random_eis(rng, 30);
        a = a + a + 1;
        b = b + b;
        const auto r = g2_column_reduce(a, b);
        CHECK(in_g2(r.A));
        CHECK(det(r.A) == Eis(1));
        CHECK(r.A(0, 0) * a + r.A(0, 1) * b == r.delta);
        CHECK((r.A(1, 0) * a + r.A(1, 1) * b).is_zero());
        CHECK(eis_exact_div(a, r.delta).congruent_mod2(1));
    }
}

TEST_CASE("tower field")
{
    const Tower s3{0, 1, 0, 0};
    CHECK(tower_sign_real(Tower(0)) == 0);
    CHECK(tower_sign_real(Tower(2) - s3) == 1);
    CHECK(tower_sign_real(Tower(-1) + s3) == 1);
    CHECK(tower_sign_real(Tower(1) - s3) == -1);
    CHECK_THROWS_AS(tower_sign_real(Tower::i()), Error);
    CHECK(Tower::omega() * Tower::omega() * Tower::omega() == Tower(1));
    CHECK(Tower(Eis::omega()) == Tower::omega());
    CHECK(Tower::i() * Tower::i() == Tower(-1));
    CHECK_THROWS_AS(Tower(0).inverse(), Error);

    Rng rng(4);
    auto rnd = [&] {
        auto r = [&] { return ratio(rng.uniform(-9, 9), rng.uniform(1, 5)); };
        return Tower{r(), r(), r(), r()};
    };
    for (int n = 0; n < 300; ++n) {
        const Tower x = rnd(), y = rnd();
        if (!x.is_zero())
            CHECK(x * x.inverse() == Tower(1));
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK(x.conj().conj() == x);
        CHECK(tower_sign_real(x.re() * x.re()) >= 0);
    }
}

TEST_CASE("polynomials")
{
    const auto x0 = PolyZ::var(0), x1 = PolyZ::var(1);
    const std::array<Rational, 5> pt = {2, 3, 1, 1, 1};
    CHECK((x0 * x1).eval(pt) == 6);
    CHECK((x0 + x1).pow(2) == x0 * x0 + Integer(2) * x0 * x1 + x1 * x1);
    PolyZ vdm = PolyZ::constant(1);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            vdm = vdm * (PolyZ::var(i) - PolyZ::var(j));
    CHECK(vdm.eval({1, 2, 3, 4, 5}) == 288);
    CHECK((x0 - x0).is_zero());
    CHECK((x0 - x0).num_terms() == 0);

    Rng rng(9);
    for (int n = 0; n < 50; ++n) {
        PolyZ p, q;
        for (int k = 0; k < 4; ++k) {
            const auto e1 = static_cast<unsigned>(rng.uniform(0, 3));
            const auto e2 = static_cast<unsigned>(rng.uniform(0, 2));
            p += PolyZ::monomial({e1, 0, e2, 1, 0}, Integer(rng.uniform(-5, 5)));
            q += PolyZ::monomial({0, e2, 1, 0, e1}, Integer(rng.uniform(-5, 5)));
        }
        std::array<Rational, 5> at;
        for (auto& v : at)
            v = ratio(rng.uniform(-7, 7), rng.uniform(1, 3));
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    }
}

#include "doctest.h"

#include "hk3/lattice.hpp"
#include "hk3/period.hpp"

using namespace hk3;

namespace {

const Tower I = Tower::i();

PeriodPoint q0() { return dm_from_chart(2 * I, 2 * I, 0, 0); }

HermitianPoint herm(Tower a, Tower b, Tower c, Tower d)
{
    HermitianPoint t;
    t.tau(0, 0) = a;
    t.tau(0, 1) = b;
    t.tau(1, 0) = c;
    t.tau(1, 1) = d;
    return t;
}

} // namespace

TEST_CASE("chart")
{
    CHECK(q0().z[1] == Tower(8));
    CHECK(dm_from_chart(I, I, 0, 0).z[1] == Tower(2));
    const auto real = dm_from_chart(1, 2, 3, 4);
    CHECK(pair_q(real.z, real.z).is_zero());
    CHECK(pair_q(real.z, conj(real.z)).is_zero());
    CHECK(pair_q(q0().z, conj(q0().z)) == Tower(32));
}

TEST_CASE("membership")
{
    CHECK(dm_membership(q0()) == Membership::plus);
    CHECK(dm_membership(PeriodPoint{conj(q0().z)}) == Membership::minus);
    CHECK(dm_membership(dm_from_chart(1, 1, 0, 0)) == Membership::none);
    PeriodPoint off = q0();
    off.z[1] = Tower(7);
    CHECK(dm_membership(off) == Membership::none);
}

TEST_CASE("action")
{
    const PeriodPoint z = dm_from_chart(I + 1, 3 * I, Tower(Rational(1, 2)), I);
    CHECK(act(OrthMatrix::identity(), z) == z);
    CHECK(act(-OrthMatrix::identity(), z) == z);
    CHECK(dm_membership(act(translation_h({1, 0, 0, 0}), q0())) == Membership::plus);
    OrthMatrix flip = OrthMatrix::identity();
    flip(2, 2) = -1;
    flip(3, 3) = -1;
    CHECK(dm_membership(act(flip, q0())) == Membership::minus);
    // g0 swaps z1 and z2; a point with z2 = 0 escapes the chart
    CHECK_THROWS_WITH_AS(act(named::g0(), dm_from_chart(I, 0, 0, 0)), "chart escape", Error);
}

TEST_CASE("psi examples")
{
    const auto t = psi(q0());
    CHECK(t == herm(2 * I, 0, 0, 2 * I));
    const auto p = dm_from_chart(I, I, 1, 0);
    CHECK(p.z[1] == Tower(4));
    const auto tp = psi(p);
    CHECK(tp == herm(I, 1, 1, I));
    CHECK(det(tp.tau) == Tower(-2));
    CHECK(psi_inv(t) == q0());
    const auto basis = psi_inv(herm(I, Tower::omega(), Tower::omega() * Tower::omega(), I));
    CHECK(basis.z[4] == Tower(0));
    CHECK(basis.z[5] == Tower(1));
    CHECK_THROWS_AS(psi(PeriodPoint{conj(q0().z)}), Error);
    CHECK_THROWS_AS(psi_inv(herm(-I, 0, 0, I)), Error);
}

TEST_CASE("psi round trips on random points")
{
    Rng rng(21);
    for (int n = 0; n < 100; ++n) {
        const PeriodPoint z = random_chart_point(rng);
        const HermitianPoint t = psi(z);
        CHECK(in_h2(t.tau));
        CHECK(psi_inv(t) == z);
        CHECK(psi(psi_inv(t)) == t);
        CHECK(z.z[1] + Tower(2) * det(t.tau) == Tower(0));
    }
}

TEST_CASE("action respects orientation")
{
    Rng rng(22);
    using namespace named;
    const std::vector<OrthMatrix> gens = {g0(), g1(), g2(), u0(), u1(), u2(), i42(),
                                          translation_h({1, 0, 0, 0}),
                                          translation_h({0, 0, 1, 1})};
    OrthMatrix flip = OrthMatrix::identity();
    flip(2, 2) = -1;
    flip(3, 3) = -1;
    int checked = 0;
    for (int n = 0; n < 100; ++n) {
        OrthMatrix g = rng.coin() ? flip : OrthMatrix::identity();
        for (int k = 0; k < 5; ++k)
            g = g * gens[rng.uniform(0, gens.size() - 1)];
        const PeriodPoint z = random_chart_point(rng);
        try {
            const Membership m = dm_membership(act(g, z));
            CHECK(m == (orientation(g) == Orientation::plus ? Membership::plus : Membership::minus));
            ++checked;
        } catch (const Error&) {
            // chart escape at this sample
        }
    }
    CHECK(checked > 80);
}

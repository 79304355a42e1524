#include "doctest.h"

#include "herm_helpers.hpp"
#include "hk3/correspondence.hpp"
#include "orth_helpers.hpp"

using namespace hk3;
using namespace hk3::testing;

namespace {

bool same_up_to_sign(const OrthMatrix& a, const OrthMatrix& b) { return a == b || a == -b; }

bool same_up_to_unit(const EisMat4& a, const EisMat4& b)
{
    for (const auto& u : eis_units()) {
        EisMat4 s = b;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                s(i, j) = u * b(i, j);
        if (s == a)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("psi_hom values")
{
    using namespace named;
    const Eis w = Eis::omega();
    CHECK(psi_hom(EisMat2::identity()) == OrthMatrix::identity());
    for (const auto& u : eis_units())
        CHECK(psi_hom(m2(u, 0, 0, u)) == OrthMatrix::identity());
    CHECK(psi_hom(m2(1, 0, 1, 1)) == g1());
    CHECK(psi_hom(m2(1, 0, Eis::omega2(), 1)) == g2());
    CHECK(psi_hom(m2(1, 1, 0, 1)) == u0() * g1() * u0());
    CHECK(psi_hom(m2(0, 1, 1, 0)) == u0() * u1());
    CHECK(psi_hom(m2(w, 0, 0, 1)) == u2());
    // diag(1, -1) gives I4 + (-I2)
    CHECK(psi_hom(m2(1, 0, 0, -1)) == i42());
    CHECK_THROWS_AS(psi_hom(m2(2, 0, 0, 1)), Error);
}

TEST_CASE("psi_hom is a homomorphism with scalar kernel")
{
    Rng rng(41);
    for (int n = 0; n < 200; ++n) {
        const EisMat2 a = random_gl2(rng, 4), b = random_gl2(rng, 4);
        CHECK(psi_hom(a * b) == psi_hom(a) * psi_hom(b));
        const OrthMatrix g = psi_hom(a);
        CHECK(determinant(g) == 1);
        CHECK(orientation(g) == Orientation::plus);
        CHECK(block_parity(g) == BlockParity::diagonal);
        const bool scalar = a(0, 1).is_zero() && a(1, 0).is_zero() && a(0, 0) == a(1, 1);
        if (!scalar)
            CHECK_FALSE(g == OrthMatrix::identity());
    }
}

TEST_CASE("generator table equivariance")
{
    Rng rng(42);
    for (const auto& e : generator_table()) {
        CAPTURE(e.name);
        CHECK(is_orthogonal(e.orth));
        CHECK(orientation(e.orth) == Orientation::plus);
        for (int n = 0; n < 20; ++n)
            CHECK(equivariance_check(e, random_chart_point(rng)));
    }
    // examples at the base point
    const PeriodPoint q0 = dm_from_chart(2 * Tower::i(), 2 * Tower::i(), 0, 0);
    CHECK(equivariance_check(translation_h({1, 0, 0, 0}),
                             as_action({HToken::make_upper({1, 0, 0, 0})}), q0));
    CHECK(equivariance_check(named::g0() * named::u0() * named::i42(), {{HStep::Kind::w}}, q0));
    // a wrong pairing is detected
    CHECK_FALSE(equivariance_check(translation_h({1, 0, 0, 0}),
                                   as_action({HToken::make_upper({0, 1, 0, 0})}), q0));
}

TEST_CASE("decompose_so0")
{
    CHECK(decompose_so0(OrthMatrix::identity()).empty());
    const OrthMatrix g1sq = named::g1() * named::g1();
    CHECK(product(decompose_so0(g1sq)) == g1sq);
    CHECK_THROWS_AS(decompose_so0(named::g0()), Error);
    CHECK_THROWS_AS(decompose_so0(named::u1()), Error);

    Rng rng(43);
    for (int n = 0; n < 200; ++n) {
        const OrthMatrix x = product(random_so0_word(rng, 10));
        CHECK(product(decompose_so0(x)) == x);
    }
}

TEST_CASE("orth_to_herm")
{
    using namespace named;
    const auto h = orth_to_herm(translation_h({0, 1, 0, 0}));
    CHECK_FALSE(h.uses_t);
    CHECK_FALSE(h.uses_w);
    REQUIRE(h.word.size() == 1);
    CHECK(h.word[0].kind == HToken::Kind::upper);
    CHECK(h.word[0].b == HermB{0, 1, 0, 0});
    const auto t = orth_to_herm(u1());
    CHECK(t.uses_t);
    CHECK_FALSE(t.uses_w);
    CHECK(t.word.empty());
    const auto w = orth_to_herm(g0() * u0() * i42());
    CHECK_FALSE(w.uses_t);
    CHECK(w.uses_w);
    CHECK(w.word.empty());

    Rng rng(44);
    for (int n = 0; n < 50; ++n) {
        const OrthMatrix g = random_o_plus(rng, 8);
        const HermImage img = orth_to_herm(g);
        CHECK(membership(product(img.word)) >= HClass::hgamma0);
        const PeriodPoint z = random_chart_point(rng);
        try {
            CHECK(equivariance_check(g, img.action(), z));
        } catch (const Error&) {
            // chart escape at this sample
        }
        CHECK(same_up_to_sign(herm_to_orth(img.word, img.uses_t, img.uses_w), g));
    }
}

TEST_CASE("herm_to_orth")
{
    CHECK(herm_to_orth({}, false, false) == OrthMatrix::identity());
    Rng rng(45);
    for (int n = 0; n < 100; ++n) {
        const GenWordH w = random_hgamma1_word(rng, 8);
        const OrthMatrix g = herm_to_orth(w, false, false);
        CHECK(is_in_enr(g));
        // round trip on the Hermitian side agrees up to the six scalar units
        const HermImage back = orth_to_herm(g);
        CHECK_FALSE(back.uses_t);
        CHECK_FALSE(back.uses_w);
        CHECK(same_up_to_unit(product(back.word), product(w)));
    }
    // gA(A) with A in G(2)
    for (int n = 0; n < 50; ++n) {
        EisMat2 a = EisMat2::identity();
        for (int k = 0; k < 4; ++k)
            a = a * random_hgamma1_token(rng).a;
        CHECK(is_in_enr(psi_hom(a)));
    }
    // A outside G(2) mod scalars leaves the Enriques kernel
    CHECK_FALSE(is_in_enr(psi_hom(m2(0, 1, 1, 0))));
    CHECK_FALSE(is_in_enr(psi_hom(m2(1, 0, 1, 1))));
}

#include "doctest.h"

#include "hk3/lattice.hpp"

using namespace hk3;

namespace {

OrthMatrix diag(std::array<int, 6> d)
{
    OrthMatrix m = OrthMatrix::zero();
    for (std::size_t i = 0; i < 6; ++i)
        m(i, i) = d[i];
    return m;
}

IntVec6 vec(std::array<int, 6> v)
{
    IntVec6 r;
    for (std::size_t i = 0; i < 6; ++i)
        r[i] = v[i];
    return r;
}

std::vector<OrthMatrix> named_generators()
{
    using namespace named;
    return {g0(), g1(), g2(), u0(), u1(), u2(), i42(), minus_i42(),
            translation_h({1, 0, 0, 0}), translation_h({0, 1, 0, 0}),
            translation_h({0, 0, 1, 0}), translation_h({0, 0, 0, 1})};
}

} // namespace

TEST_CASE("gram and orthogonality")
{
    CHECK(determinant(gram_q()) == 48);
    CHECK(is_orthogonal(OrthMatrix::identity()));
    CHECK(is_orthogonal(named::g1()));
    CHECK_FALSE(is_orthogonal(diag({2, 1, 1, 1, 1, 1})));
    for (const auto& g : named_generators()) {
        CHECK(is_orthogonal(g));
        CHECK(orientation(g) == Orientation::plus);
    }
}

TEST_CASE("orientation")
{
    CHECK(orientation(OrthMatrix::identity()) == Orientation::plus);
    CHECK(orientation(-OrthMatrix::identity()) == Orientation::plus);
    CHECK(orientation(diag({1, 1, -1, -1, 1, 1})) == Orientation::minus);
    CHECK_THROWS_AS(orientation(diag({2, 1, 1, 1, 1, 1})), Error);
    // u0 g0: swapping e3, e4 keeps the sign; -g0 flips both hyperbolic planes
    CHECK(orientation(named::u0() * named::g0()) == Orientation::plus);
    CHECK(orientation(diag({-1, -1, 1, 1, 1, 1})) == Orientation::minus);
}

TEST_CASE("discriminant form values")
{
    const auto& d = disc_generators();
    CHECK(disc_elements().size() == 48);
    CHECK(disc_form_value(d[0]) == 0);
    CHECK(disc_form_value(d[0] + d[1]) == 1);
    CHECK(disc_form_value(2 * d[2]) == Rational(2, 3));
    for (const auto& v : disc_isotropic_2torsion()) {
        CHECK(disc_form_value(v) == 0);
        CHECK((2 * v).is_zero());
        CHECK_FALSE(v.is_zero());
    }
    // exactly fifteen nonzero 2-torsion classes, five of them isotropic
    int two_torsion = 0, isotropic = 0;
    for (const auto& x : disc_elements())
        if (!x.is_zero() && (2 * x).is_zero()) {
            ++two_torsion;
            isotropic += disc_form_value(x) == 0;
        }
    CHECK(two_torsion == 15);
    CHECK(isotropic == 5);
}

TEST_CASE("disc action")
{
    CHECK(disc_action(OrthMatrix::identity()) == DiscAutomorphism::identity());
    CHECK(disc_action(-OrthMatrix::identity()) == disc_inversion());
    CHECK(disc_action(named::g0()) == DiscAutomorphism::identity());
    const auto& d = disc_generators();
    const auto inv = disc_inversion();
    CHECK(inv(2 * d[2]) == 4 * d[2]);
    CHECK(inv(d[0]) == d[0]);
}

TEST_CASE("to_s5 on named generators")
{
    CHECK(to_s5(named::g1()).cycles() == "(14)(35)");
    CHECK(to_s5(named::g2()).cycles() == "(15)(34)");
    CHECK(to_s5(named::u0()).cycles() == "(12)");
    CHECK(to_s5(named::u1()).cycles() == "(35)");
    CHECK(to_s5(named::u2()).cycles() == "(345)");
    CHECK(to_s5(OrthMatrix::identity()) == S5Perm::identity());
}

TEST_CASE("S5 notation")
{
    const auto p = S5Perm::from_cycles("(14)(35)");
    CHECK(p.cycles() == "(14)(35)");
    CHECK(p.is_even());
    CHECK_FALSE(S5Perm::from_cycles("(12)").is_even());
    CHECK(S5Perm::from_cycles("()") == S5Perm::identity());
    CHECK_THROWS_AS(S5Perm::from_cycles("(11)"), Error);
    CHECK_THROWS_AS(S5Perm::from_cycles("(12"), Error);
    // (12)(23) = (123) with (f*g)(i) = f(g(i))
    CHECK((S5Perm::from_cycles("(12)") * S5Perm::from_cycles("(23)")).cycles() == "(123)");
}

TEST_CASE("to_s5 is a homomorphism on random products")
{
    Rng rng(11);
    const auto gens = named_generators();
    for (int n = 0; n < 300; ++n) {
        OrthMatrix g = OrthMatrix::identity(), h = OrthMatrix::identity();
        for (int k = 0; k < 4; ++k) {
            g = g * gens[rng.uniform(0, gens.size() - 1)];
            h = h * gens[rng.uniform(0, gens.size() - 1)];
        }
        CHECK(to_s5(g * h) == to_s5(g) * to_s5(h));
        CHECK(disc_action(g * h) == disc_action(g) * disc_action(h));
        const Integer dt = determinant(g);
        CHECK((dt == 1 || dt == -1));
        CHECK_NOTHROW(block_parity(g));
        const auto f = disc_action(g);
        const bool fixes_two_torsion = [&] {
            for (const auto& x : disc_elements())
                if ((2 * x).is_zero() && !(f(x) == x))
                    return false;
            return true;
        }();
        CHECK(is_in_k3(g) == (f == DiscAutomorphism::identity()));
        CHECK(is_in_enr(g) == fixes_two_torsion);
        if (is_in_enr(g))
            CHECK((f == DiscAutomorphism::identity() || f == disc_inversion()));
    }
}

TEST_CASE("congruence subgroups")
{
    CHECK(is_in_k3(named::g0()));
    CHECK_FALSE(is_in_k3(-OrthMatrix::identity()));
    CHECK(is_in_enr(-OrthMatrix::identity()));
    CHECK_FALSE(is_in_enr(named::u1()));
    CHECK_THROWS_AS(is_in_k3(diag({1, 1, -1, -1, 1, 1})), Error);
}

TEST_CASE("disc orthogonal group")
{
    const auto grp = enumerate_disc_orthogonal();
    CHECK(grp.elements.size() == 240);
    std::vector<S5Perm> image;
    std::size_t kernel = 0;
    for (std::size_t i = 0; i < grp.elements.size(); ++i) {
        CHECK(grp.elements[i].preserves_form());
        if (grp.action[i] == S5Perm::identity()) {
            ++kernel;
            CHECK((grp.elements[i] == DiscAutomorphism::identity() ||
                   grp.elements[i] == disc_inversion()));
        }
        if (std::find(image.begin(), image.end(), grp.action[i]) == image.end())
            image.push_back(grp.action[i]);
    }
    CHECK(kernel == 2);
    CHECK(image.size() == 120);
}

TEST_CASE("translations")
{
    CHECK(translation_h({0, 0, 0, 0}) == OrthMatrix::identity());
    const auto h = translation_h({1, 0, 0, 0});
    CHECK(h(1, 0) == 0);
    CHECK(h(1, 2) == 0);
    CHECK(h(1, 3) == -2);
    CHECK(h(1, 4) == 0);
    CHECK(h(1, 5) == 0);
    CHECK(block_parity(translation_h({1, 1, 1, 1})) == BlockParity::diagonal);
    CHECK(block_parity(named::g0()) == BlockParity::antidiagonal);
    CHECK(block_parity(OrthMatrix::identity()) == BlockParity::diagonal);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            const std::array<Integer, 4> x = {a, b, a - b, 1}, y = {b, 2, -a, a};
            const std::array<Integer, 4> s = {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
            CHECK(translation_h(x) * translation_h(y) == translation_h(s));
            CHECK(is_orthogonal(translation_h(x)));
        }
}

TEST_CASE("orthogonal complements")
{
    for (const auto& v : {vec({1, -1, 0, 0, 0, 0}), vec({0, 0, 0, 0, 1, 0}),
                          vec({0, 0, 0, 0, 1, 2}), vec({0, 3, 0, 0, 1, 2})}) {
        const auto c = orthogonal_complement(v);
        REQUIRE(c.basis.size() == 5);
        for (const auto& b : c.basis)
            CHECK(pair_q(b, v) == 0);
        const Integer dt = determinant(c.gram);
        CHECK(dt != 0);
        const Integer bound = 48 * abs(pair_q(v, v));
        CHECK(bound % dt == 0);
    }
    // e1 - e2: <2> + <6> + <-2>^3 has determinant 96
    CHECK(abs(determinant(orthogonal_complement(vec({1, -1, 0, 0, 0, 0})).gram)) == 96);
    CHECK_THROWS_AS(orthogonal_complement(vec({0, 0, 0, 0, 0, 0})), Error);
    CHECK_THROWS_AS(orthogonal_complement(vec({2, 0, 0, 0, 0, 0})), Error);
}

#include "doctest.h"

#include <algorithm>

#include "hk3/cubic.hpp"

using namespace hk3;

namespace {

Lambda ones() { return {1, 1, 1, 1, 1}; }

Rational random_rational(Rng& rng)
{
    Integer num = static_cast<long>(rng.uniform(-30, 30));
    Integer den = static_cast<long>(rng.uniform(1, 12));
    return ratio(num, den);
}

Lambda random_nonzero_lambda(Rng& rng)
{
    Lambda l;
    for (auto& x : l) {
        do
            x = random_rational(rng);
        while (x == 0);
    }
    return l;
}

Lambda permuted(const Lambda& l, const std::array<int, 5>& p)
{
    Lambda out;
    for (std::size_t i = 0; i < 5; ++i)
        out[i] = l[p[i]];
    return out;
}

} // namespace

TEST_CASE("elementary symmetric functions")
{
    const auto a = elem_sym(ones());
    CHECK(a == std::array<Rational, 5>{5, 10, 10, 5, 1});
    const auto b = elem_sym({1, 2, 3, 4, 5});
    CHECK(b == std::array<Rational, 5>{15, 85, 225, 274, 120});
    CHECK(elem_sym({0, 2, 3, ratio(1, 2), 7})[4] == 0);
    CHECK_THROWS_AS(elem_sym_poly(6), Error);
}

TEST_CASE("classical invariants")
{
    const auto inv = classical_invariants(ones());
    CHECK(inv.i8 == -15);
    CHECK(inv.i16 == 5);
    CHECK(inv.i24 == 5);
    CHECK(inv.i32 == 10);
    CHECK(inv.i40 == 1);
    CHECK(inv.i100 == 0);

    const Lambda deg{0, 2, 3, 5, 7};
    const auto d = classical_invariants(deg);
    const auto s = elem_sym(deg);
    CHECK(d.i16 == 0);
    CHECK(d.i24 == 0);
    CHECK(d.i32 == 0);
    CHECK(d.i40 == 0);
    CHECK(d.i100 == 0);
    CHECK(d.i8 == s[3] * s[3]);

    CHECK(classical_invariants({1, 1, 2, 3, 4}).i100 == 0);
    CHECK(classical_invariants({1, 2, 3, 4, 5}).i100 != 0);
}

TEST_CASE("delta sing values")
{
    CHECK(delta_sing(ones()) == -1215);
    CHECK(delta_sing({1, 1, 1, 1, ratio(1, 16)}) == 0);
    CHECK(delta_sing_poly().degree() == 32);

    const auto inv = classical_invariants(ones());
    const Rational a = inv.i8 * inv.i8 - 64 * inv.i16;
    CHECK(a * a - 16384 * (inv.i32 + inv.i8 * inv.i24 / 8) == -1215);
}

TEST_CASE("delta sing against the radical product at square parameters")
{
    // λi = 1/ki² makes every 1/√λi an integer
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        std::array<Integer, 5> k;
        Lambda l;
        Rational prod_l = 1;
        for (std::size_t i = 0; i < 5; ++i) {
            k[i] = static_cast<long>(rng.uniform(1, 9));
            l[i] = ratio(1, k[i] * k[i]);
            prod_l *= l[i];
        }
        Integer factors = 1;
        for (unsigned mask = 0; mask < 16; ++mask) {
            Integer f = k[0];
            for (std::size_t i = 1; i < 5; ++i)
                f += ((mask >> (i - 1)) & 1u) ? -k[i] : k[i];
            factors *= f;
        }
        Rational expected = factors;
        for (int e = 0; e < 8; ++e)
            expected *= prod_l;
        CHECK(delta_sing(l) == expected);
    }
}

TEST_CASE("delta sing equals its invariant expression")
{
    CHECK(delta_sing_poly() == delta_sing_invariant_poly());
}

TEST_CASE("delta km")
{
    CHECK(delta_km(ones()) == 5);
    CHECK(kummer_invariant(ones()) == 5);
    CHECK_THROWS_WITH_AS(delta_km({0, 1, 1, 1, 1}), "Sylvester degenerate for μ", Error);
    CHECK(delta_km_cleared_poly() == kummer_sigma_poly());

    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto l = random_nonzero_lambda(rng);
        const auto s = elem_sym(l);
        const Rational s5 = s[4];
        CHECK(s5 * s5 * s5 * delta_km(l) == kummer_sigma_poly().eval(l));
        CHECK(kummer_invariant(l) == s5 * s5 * s5 * s5 * kummer_sigma_poly().eval(l));
        Lambda doubled = l;
        for (auto& x : doubled)
            x *= 2;
        CHECK(delta_km(doubled) == delta_km(l) / 8);
    }
}

TEST_CASE("permutation invariance")
{
    Rng rng(7);
    auto check = [](const Lambda& l, const Lambda& p) {
        CHECK(elem_sym(l) == elem_sym(p));
        const auto a = classical_invariants(l);
        const auto b = classical_invariants(p);
        CHECK(a.i8 == b.i8);
        CHECK(a.i16 == b.i16);
        CHECK(a.i24 == b.i24);
        CHECK(a.i32 == b.i32);
        CHECK(a.i40 == b.i40);
        CHECK((a.i100 == b.i100 || a.i100 == -b.i100));
        CHECK(vandermonde(l) * vandermonde(l) == vandermonde(p) * vandermonde(p));
        CHECK(delta_sing(l) == delta_sing(p));
        CHECK(delta_km(l) == delta_km(p));
    };
    for (int t = 0; t < 100; ++t) {
        const auto l = random_nonzero_lambda(rng);
        std::array<int, 5> p{0, 1, 2, 3, 4};
        for (int i = 4; i > 0; --i)
            std::swap(p[i], p[rng.uniform(0, i)]);
        check(l, permuted(l, p));
    }
    const Lambda l{2, ratio(-1, 3), 5, ratio(7, 2), -4};
    std::array<int, 5> p{0, 1, 2, 3, 4};
    int count = 0;
    do {
        check(l, permuted(l, p));
        ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(count == 120);
}

TEST_CASE("homogeneity")
{
    Rng rng(13);
    const auto l = random_nonzero_lambda(rng);
    auto scaled = [&](const Rational& c) {
        Lambda m = l;
        for (auto& x : m)
            x *= c;
        return m;
    };
    auto exponent = [](Rational ratio_value, const Rational& c) {
        int d = 0;
        while (ratio_value != 1 && d < 200) {
            ratio_value /= c;
            ++d;
        }
        return ratio_value == 1 ? d : -1;
    };
    using Getter = Rational (*)(const Lambda&);
    const std::vector<std::pair<Getter, int>> cases = {
        {[](const Lambda& x) { return classical_invariants(x).i8; }, 8},
        {[](const Lambda& x) { return classical_invariants(x).i16; }, 16},
        {[](const Lambda& x) { return classical_invariants(x).i24; }, 24},
        {[](const Lambda& x) { return classical_invariants(x).i32; }, 32},
        {[](const Lambda& x) { return classical_invariants(x).i40; }, 40},
        {[](const Lambda& x) { return classical_invariants(x).i100; }, 100},
        {[](const Lambda& x) { return delta_sing(x); }, 32},
    };
    for (const auto& [get, expected] : cases) {
        const Rational base = get(l);
        REQUIRE(base != 0);
        const int d = exponent(get(scaled(2)) / base, 2);
        CHECK(d == expected);
        for (int c = 3; c < 13; ++c) {
            Rational f = 1;
            for (int e = 0; e < d; ++e)
                f *= c;
            CHECK(get(scaled(c)) == f * base);
        }
    }
    for (int c = 2; c < 12; ++c) {
        const auto a = classify(l);
        const auto b = classify(scaled(ratio(c, 3)));
        CHECK(a.sylvester_degenerate == b.sylvester_degenerate);
        CHECK(a.singular == b.singular);
        CHECK(a.eckardt == b.eckardt);
        CHECK(a.kummer == b.kummer);
    }
}

TEST_CASE("hessian equations")
{
    const auto h = hessian_equations(ones());
    PolyZ expected;
    for (std::size_t i = 0; i < 5; ++i) {
        PolyZ term = PolyZ::constant(1);
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i)
                term *= PolyZ::var(j);
        expected += term;
    }
    CHECK(h.quartic == expected);

    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const auto l = random_nonzero_lambda(rng);
        const auto eqs = hessian_equations(l);
        for (int m = 0; m < 5; ++m)
            for (int n = 0; n < 5; ++n) {
                if (m == n)
                    continue;
                ProjPoint x{};
                x[m] = 1;
                x[n] = -1;
                CHECK(eqs.quartic.eval(x) == 0);
            }
        // a point with Σ1/(λiXi) = 0, solving for the last coordinate
        ProjPoint x;
        Rational s = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            do
                x[i] = random_rational(rng);
            while (x[i] == 0);
            s += 1 / (l[i] * x[i]);
        }
        if (s == 0)
            continue;
        x[4] = -1 / (l[4] * s);
        CHECK(eqs.quartic.eval(x) == 0);
    }
}

TEST_CASE("hessian nodes")
{
    const auto pts = hessian_singular_points(ones());
    REQUIRE(pts.size() == 10);
    CHECK(pts[0] == ProjPoint{0, 0, 0, 1, -1});
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            CHECK(pts[a] != pts[b]);

    Rng rng(19);
    for (int t = 0; t < 12; ++t) {
        const auto l = random_nonzero_lambda(rng);
        const auto eqs = hessian_equations(l);
        for (const auto& p : hessian_singular_points(l)) {
            CHECK(eqs.linear.eval(p) == 0);
            CHECK(eqs.quartic.eval(p) == 0);
            CHECK(hessian_is_node(eqs, p));
        }
    }
    CHECK(hessian_is_node(hessian_equations(ones()), ProjPoint{1, -1, 0, 0, 0}));
    CHECK_FALSE(hessian_is_node(hessian_equations(ones()), ProjPoint{1, 1, -2, 0, 0}));
}

TEST_CASE("hessian lines")
{
    Rng rng(23);
    const auto sym = hessian_quartic_symbolic();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j)
                continue;
            CHECK(hessian_line_check(ones(), i, j));
            CHECK(hessian_line_check(random_nonzero_lambda(rng), i, j));
            CHECK(vanishes_on_coordinate_line(sym, i, j));
        }
    auto perturbed = hessian_equations(ones()).quartic + PolyZ::var(0).pow(4);
    CHECK_FALSE(vanishes_on_coordinate_line(perturbed, 1, 2));
    CHECK(vanishes_on_coordinate_line(perturbed, 0, 1));
    CHECK_THROWS_AS(hessian_line_check(ones(), 2, 2), Error);
}

TEST_CASE("enriques involution")
{
    CHECK(enriques_involution_check(ones()));
    CHECK(enriques_is_involution(ones()));
    Rng rng(29);
    for (int t = 0; t < 6; ++t) {
        const auto l = random_nonzero_lambda(rng);
        CHECK(enriques_involution_check(l));
        CHECK(enriques_is_involution(l));
    }
    CHECK_THROWS_AS(enriques_involution_check({0, 1, 1, 1, 1}), Error);
}

TEST_CASE("classify")
{
    const auto a = classify(ones());
    CHECK_FALSE(a.sylvester_degenerate);
    CHECK_FALSE(a.singular);
    CHECK(a.eckardt);
    CHECK_FALSE(a.kummer);
    CHECK(classify({1, 1, 1, 1, ratio(1, 16)}).singular);
    CHECK(classify({0, 1, 1, 1, 1}).sylvester_degenerate);
    CHECK_FALSE(classify({1, 2, 3, 4, 5}).eckardt);
    CHECK_THROWS_AS(classify({0, 0, 0, 0, 0}), Error);
}

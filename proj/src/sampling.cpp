#include "hk3/sampling.hpp"

namespace hk3 {

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

} // namespace

HToken random_hgamma1_token(Rng& rng)
{
    auto small = [&] { return Integer(rng.uniform(-2, 2)); };
    switch (rng.uniform(0, 2)) {
    case 0: {
        const Eis e{2 * rng.uniform(-1, 1), 2 * rng.uniform(-1, 1)};
        switch (rng.uniform(0, 2)) {
        case 0:
            return HToken::make_a(m2(1, e, 0, 1));
        case 1:
            return HToken::make_a(m2(1, 0, e, 1));
        default:
            return HToken::make_a(m2(-1, 0, 0, 1));
        }
    }
    case 1:
        return HToken::make_upper({small(), small(), small(), small()});
    default:
        return HToken::make_lower({small(), small(), small(), small()});
    }
}

GenWordH random_hgamma1_word(Rng& rng, int max_len)
{
    GenWordH w;
    const auto len = rng.uniform(1, max_len);
    for (int k = 0; k < len; ++k)
        w.push_back(random_hgamma1_token(rng));
    return w;
}

EisMat2 random_gl2(Rng& rng, int len)
{
    EisMat2 a = EisMat2::identity();
    const auto& gens = gl2_generators();
    for (int k = 0; k < len; ++k) {
        const EisMat2& s = gens[rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1)];
        a = a * (rng.coin() ? s : inverse(s));
    }
    return a;
}

EisMat4 random_hgamma0(Rng& rng, int len)
{
    EisMat4 g = EisMat4::identity();
    for (int k = 0; k < len; ++k)
        g = g * (rng.coin() ? g_a(random_gl2(rng, 2)) : random_hgamma1_token(rng).matrix());
    return g;
}

OToken random_so0_token(Rng& rng)
{
    using K = OToken::Kind;
    auto small = [&] { return Integer(rng.uniform(-2, 2)); };
    switch (rng.uniform(0, 8)) {
    case 0:
        return OToken::translation({small(), small(), small(), small()});
    case 1:
        return OToken::dual_translation({small(), small(), small(), small()});
    case 2:
        return OToken::make(K::g1, rng.uniform(-2, 2));
    case 3:
        return OToken::make(K::g2, rng.uniform(-2, 2));
    case 4:
        return OToken::make(K::g1_conj, rng.uniform(-2, 2));
    case 5:
        return OToken::make(K::i42);
    case 6:
        return OToken::make(K::minus_i42);
    case 7:
        return OToken::make(K::u0u1);
    default:
        return OToken::make(K::u2, rng.uniform(1, 2));
    }
}

GenWordO random_so0_word(Rng& rng, int max_len)
{
    GenWordO w;
    const auto len = rng.uniform(1, max_len);
    for (int k = 0; k < len; ++k)
        w.push_back(random_so0_token(rng));
    return w;
}

OrthMatrix random_o_plus(Rng& rng, int max_len)
{
    OrthMatrix g = product(random_so0_word(rng, max_len));
    if (rng.coin())
        g = named::g0() * named::u0() * named::i42() * g;
    if (rng.coin())
        g = g * named::u1();
    if (rng.coin())
        g = named::u1() * g;
    return g;
}

} // namespace hk3

#include "hk3/tower.hpp"

namespace hk3 {

Tower::Tower(const Eis& e)
    : a(Rational(e.a) - ratio(e.b, 2)), b(0), c(0), d(ratio(e.b, 2))
{
}

Tower operator*(const Tower& x, const Tower& y)
{
    // basis 1, s, i, si with s^2 = 3, i^2 = -1
    return {x.a * y.a + 3 * x.b * y.b - x.c * y.c - 3 * x.d * y.d,
            x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
            x.a * y.c + x.c * y.a + 3 * x.b * y.d + 3 * x.d * y.b,
            x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
}

Tower Tower::inverse() const
{
    if (is_zero())
        throw Error("Tower::inverse: zero");
    // x = u + v i with u, v in Q(sqrt3); x * conj(x) = u^2 + v^2 is real and
    // nonzero, and p + q sqrt3 has inverse (p - q sqrt3) / (p^2 - 3 q^2).
    const Tower n = *this * conj();
    const Rational denom = n.a * n.a - 3 * n.b * n.b;
    const Tower ninv{n.a / denom, -n.b / denom, 0, 0};
    return conj() * ninv;
}

std::string Tower::str() const
{
    return "[\"" + to_string(a) + "\",\"" + to_string(b) + "\",\"" + to_string(c) + "\",\"" +
           to_string(d) + "\"]";
}

static int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int tower_sign_real(const Tower& x)
{
    if (!x.is_real())
        throw Error("tower_sign_real: nonreal input");
    const int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: the larger of a^2 and 3 b^2 decides
    const Rational a2 = x.a * x.a, b2 = 3 * x.b * x.b;
    if (a2 == b2)
        return 0;
    return a2 > b2 ? sa : sb;
}

} // namespace hk3

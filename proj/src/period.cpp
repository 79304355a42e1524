#include "hk3/period.hpp"

namespace hk3 {

PeriodPoint PeriodPoint::from_projective(const std::array<Tower, 6>& w)
{
    if (w[0].is_zero())
        throw Error("chart escape");
    const Tower s = w[0].inverse();
    PeriodPoint p;
    for (std::size_t k = 0; k < 6; ++k)
        p.z[k] = w[k] * s;
    return p;
}

PeriodPoint dm_from_chart(const Tower& z3, const Tower& z4, const Tower& z5, const Tower& z6)
{
    const Tower z2 = Tower(-2) * (z3 * z4 - z5 * z5 + z5 * z6 - z6 * z6);
    return PeriodPoint{{Tower(1), z2, z3, z4, z5, z6}};
}

Tower pair_q(const std::array<Tower, 6>& z, const std::array<Tower, 6>& w)
{
    const auto& q = gram_q();
    Tower s;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (q(i, j) != 0)
                s += Tower(Rational(q(i, j))) * z[i] * w[j];
    return s;
}

std::array<Tower, 6> conj(const std::array<Tower, 6>& z)
{
    std::array<Tower, 6> c;
    for (std::size_t k = 0; k < 6; ++k)
        c[k] = z[k].conj();
    return c;
}

Membership dm_membership(const PeriodPoint& p)
{
    if (!pair_q(p.z, p.z).is_zero())
        return Membership::none;
    if (tower_sign_real(pair_q(p.z, conj(p.z))) <= 0)
        return Membership::none;
    // z_1 = 1, so Im z_3 is already normalized
    const int s = tower_sign_real(p.z[2].im());
    ensure(s != 0, "dm_membership: Im z3 = 0 on a positive point");
    return s > 0 ? Membership::plus : Membership::minus;
}

PeriodPoint act(const OrthMatrix& g, const PeriodPoint& p)
{
    if (!is_orthogonal(g))
        throw Error("act: matrix is not in O(M)");
    std::array<Tower, 6> w;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (g(r, c) != 0)
                w[r] += Tower(Rational(g(r, c))) * p.z[c];
    return PeriodPoint::from_projective(w);
}

TowerMat2 conj_transpose(const TowerMat2& m)
{
    TowerMat2 t;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            t(i, j) = m(j, i).conj();
    return t;
}

TowerMat2 imaginary_part(const TowerMat2& tau)
{
    const Tower half_i_inv = (Tower(2) * Tower::i()).inverse();
    TowerMat2 y;
    const TowerMat2 s = conj_transpose(tau);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            y(i, j) = (tau(i, j) - s(i, j)) * half_i_inv;
    return y;
}

Tower det(const TowerMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

TowerMat2 inverse(const TowerMat2& m)
{
    const Tower d = det(m);
    if (d.is_zero())
        throw InvariantViolation("singular 2x2 matrix");
    const Tower di = d.inverse();
    TowerMat2 r;
    r(0, 0) = m(1, 1) * di;
    r(0, 1) = -m(0, 1) * di;
    r(1, 0) = -m(1, 0) * di;
    r(1, 1) = m(0, 0) * di;
    return r;
}

bool in_h2(const TowerMat2& tau)
{
    const TowerMat2 y = imaginary_part(tau);
    // Y is Hermitian, so Y11 and det Y are real
    return tower_sign_real(y(0, 0)) > 0 && tower_sign_real(det(y)) > 0;
}

HermitianPoint psi(const PeriodPoint& p)
{
    if (dm_membership(p) != Membership::plus)
        throw Error("psi: point is not in D_M^+");
    const Tower w = Tower::omega();
    const auto& z = p.z;
    HermitianPoint t;
    t.tau(0, 0) = z[2];
    t.tau(0, 1) = z[4] + w * z[5];
    t.tau(1, 0) = z[4] + w * w * z[5];
    t.tau(1, 1) = z[3];
    return t;
}

PeriodPoint psi_inv(const HermitianPoint& t)
{
    if (!in_h2(t.tau))
        throw Error("psi_inv: matrix is not in H_2");
    // t12 - t21 = (w - w^2) z6 = i sqrt3 z6
    const Tower i_sqrt3{0, 0, 0, 1};
    const Tower z6 = (t(0, 1) - t(1, 0)) * i_sqrt3.inverse();
    const Tower z5 = t(0, 1) - Tower::omega() * z6;
    return dm_from_chart(t(0, 0), t(1, 1), z5, z6);
}

namespace {

Rational small_rational(Rng& rng, long num_bound)
{
    return ratio(rng.uniform(-num_bound, num_bound), rng.uniform(1, 4));
}

} // namespace

PeriodPoint random_chart_point(Rng& rng)
{
    for (;;) {
        const Rational y3 = ratio(rng.uniform(1, 12), rng.uniform(1, 3));
        const Rational y4 = ratio(rng.uniform(1, 12), rng.uniform(1, 3));
        const Rational y5 = small_rational(rng, 3), y6 = small_rational(rng, 3);
        // positivity of the imaginary form y3 y4 - y5^2 + y5 y6 - y6^2
        if (y3 * y4 - y5 * y5 + y5 * y6 - y6 * y6 <= 0)
            continue;
        const Tower z3 = Tower::gaussian(small_rational(rng, 6), y3);
        const Tower z4 = Tower::gaussian(small_rational(rng, 6), y4);
        const Tower z5 = Tower::gaussian(small_rational(rng, 6), y5);
        const Tower z6 = Tower::gaussian(small_rational(rng, 6), y6);
        PeriodPoint p = dm_from_chart(z3, z4, z5, z6);
        ensure(dm_membership(p) == Membership::plus, "random_chart_point: sample left D_M^+");
        return p;
    }
}

std::string to_json_string(const PeriodPoint& p)
{
    std::string s = "[";
    for (std::size_t k = 0; k < 6; ++k)
        s += (k ? "," : "") + p.z[k].str();
    return s + "]";
}

} // namespace hk3

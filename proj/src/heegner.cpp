#include "hk3/heegner.hpp"

#include "hk3/hermitian.hpp"

namespace hk3 {

std::string to_string(Locus l)
{
    switch (l) {
    case Locus::node: return "node";
    case Locus::eckardt: return "eckardt";
    case Locus::ns: return "ns";
    case Locus::km: return "km";
    }
    return "?";
}

bool HeegnerFlags::get(Locus l) const
{
    switch (l) {
    case Locus::node: return node;
    case Locus::eckardt: return eckardt;
    case Locus::ns: return ns;
    case Locus::km: return km;
    }
    return false;
}

HeegnerFlags heegner_membership(const HermitianPoint& t)
{
    if (!in_h2(t.tau))
        throw Error("tau is not in H2");
    const Tower half(ratio(1, 2));
    const Tower w = Tower::omega();
    HeegnerFlags f;
    f.node = Tower(2) * det(t.tau) == Tower(-1);
    f.eckardt = t(1, 0) == -t(0, 1);
    f.ns = t(0, 1) == t(1, 0);
    f.km = t(0, 1) - half * w == t(1, 0) - half * w * w;
    return f;
}

IntVec6 heegner_vector(Locus l)
{
    switch (l) {
    case Locus::node: return {1, -1, 0, 0, 0, 0};
    case Locus::eckardt: return {0, 0, 0, 0, 1, 0};
    case Locus::ns: return {0, 0, 0, 0, 1, 2};
    case Locus::km: return {0, 3, 0, 0, 1, 2};
    }
    throw Error("unknown locus");
}

bool coordinate_condition(Locus l, const PeriodPoint& p)
{
    const auto& z = p.z;
    switch (l) {
    case Locus::node: return z[1] == Tower(1);
    case Locus::eckardt: return z[5] == Tower(2) * z[4];
    case Locus::ns: return z[5].is_zero();
    case Locus::km: return Tower(2) * z[5] == Tower(1);
    }
    return false;
}

std::array<PerpRecord, 4> perp_equivalence(const PeriodPoint& p)
{
    const HeegnerFlags flags = heegner_membership(psi(p));
    std::array<PerpRecord, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        const Locus l = all_loci[k];
        const IntVec6 v = heegner_vector(l);
        std::array<Tower, 6> vt;
        for (std::size_t i = 0; i < 6; ++i)
            vt[i] = Tower(Rational(v[i]));
        out[k] = {l, pair_q(p.z, vt).is_zero(), coordinate_condition(l, p), flags.get(l)};
    }
    return out;
}

namespace {

using Gram = std::vector<std::vector<Integer>>;

Gram block_diag(const std::vector<Gram>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.size();
    Gram g(n, std::vector<Integer>(n, 0));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                g[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return g;
}

Gram hyperbolic(long k) { return {{0, k}, {k, 0}}; }
Gram scalar(long k) { return {{k}}; }

struct ListedComplement {
    Locus locus;
    std::vector<IntVec6> basis;
    Gram claimed;
};

std::vector<ListedComplement> listed_complements()
{
    return {
        {Locus::node,
         {{1, 1, 1, 0, 0, 0},
          {3, 3, 0, -3, 1, 2},
          {1, 1, 1, -1, 0, 0},
          {-1, -1, 0, 1, 0, -1},
          {-1, -1, 0, 1, -1, -1}},
         block_diag({scalar(2), scalar(6), scalar(-2), scalar(-2), scalar(-2)})},
        {Locus::eckardt,
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 1, 2}},
         block_diag({hyperbolic(1), hyperbolic(2), scalar(-12)})},
        {Locus::ns,
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 1, 0}},
         block_diag({hyperbolic(1), hyperbolic(2), scalar(-4)})},
        {Locus::km,
         {{0, 1, 0, 0, 0, 0}, {2, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
          {0, 1, 0, 0, 1, 0}},
         block_diag({hyperbolic(2), hyperbolic(2), scalar(-4)})},
    };
}

} // namespace

std::vector<ComplementCheck> complement_gram_verify()
{
    std::vector<ComplementCheck> out;
    for (const auto& lc : listed_complements()) {
        ComplementCheck c;
        c.locus = lc.locus;
        c.basis = lc.basis;
        c.claimed_gram = lc.claimed;
        const IntVec6 v = heegner_vector(lc.locus);
        c.orthogonal = true;
        for (const auto& b : lc.basis)
            c.orthogonal = c.orthogonal && pair_q(b, v) == 0;
        c.gram = gram_of(lc.basis);
        c.gram_matches = c.gram == lc.claimed;
        c.basis_det = determinant(c.gram);
        c.complement_det = determinant(orthogonal_complement(v).gram);
        // a full-rank sublattice of the complement has index sqrt(det ratio)
        c.index_one = c.basis_det != 0 && abs(c.basis_det) == abs(c.complement_det);
        out.push_back(std::move(c));
    }
    return out;
}

PeriodPoint random_locus_point(Locus l, Rng& rng)
{
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const PeriodPoint p = random_chart_point(rng);
        const auto& z = p.z;
        PeriodPoint q;
        switch (l) {
        case Locus::node: {
            HermitianPoint t = psi(p);
            if (t(0, 0).is_zero())
                continue;
            t.tau(1, 1) = (Tower(ratio(-1, 2)) + t(0, 1) * t(1, 0)) / t(0, 0);
            if (!in_h2(t.tau))
                continue;
            q = psi_inv(t);
            break;
        }
        case Locus::eckardt: q = dm_from_chart(z[2], z[3], z[4], Tower(2) * z[4]); break;
        case Locus::ns: q = dm_from_chart(z[2], z[3], z[4], Tower(0)); break;
        case Locus::km: q = dm_from_chart(z[2], z[3], z[4], Tower(ratio(1, 2))); break;
        }
        if (dm_membership(q) == Membership::plus)
            return q;
    }
    throw InvariantViolation("random_locus_point: no sample found");
}

HermitianPoint half_shift(const HermitianPoint& tau, int b_index, int sign)
{
    const auto& bs = phi9_b();
    if (b_index < 0 || b_index > 3)
        throw Error("coset index must be 0..3");
    const EisMat2 b = bs[static_cast<std::size_t>(b_index)].matrix();
    HermitianPoint r = tau;
    const Tower half(ratio(sign, 2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r.tau(i, j) += half * Tower(b(i, j));
    return r;
}

OrbitReport orbit_relation_check(int samples, Rng& rng)
{
    OrbitReport r;
    r.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const HermitianPoint tau = psi(random_locus_point(Locus::ns, rng));
        ensure(heegner_membership(tau).ns, "orbit_relation_check: sample not symmetric");
        r.transpose_ns += heegner_membership(involution_t(tau)).ns;
        r.shift_b1_ns += heegner_membership(half_shift(tau, 0)).ns;
        r.shift_b2_ns += heegner_membership(half_shift(tau, 1)).ns;
        r.shift_b3_km += heegner_membership(half_shift(tau, 2)).km;
        r.shift_b4_transposed_km += heegner_membership(involution_t(half_shift(tau, 3))).km;

        const HermitianPoint sigma = psi(random_locus_point(Locus::km, rng));
        const HermitianPoint back = half_shift(sigma, 2, -1);
        r.km_pulls_back += heegner_membership(sigma).km && heegner_membership(back).ns;
    }
    return r;
}

} // namespace hk3

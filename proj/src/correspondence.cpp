#include "hk3/correspondence.hpp"

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

/// Chart coordinates (z3, z4, z5, z6) of tau = Psi(z), for Eisenstein tau:
/// tau12 - tau21 = (w - w^2) z6 = (1 + 2w) z6.
std::array<Integer, 4> chart_coords(const EisMat2& tau)
{
    const Eis z6 = eis_exact_div(tau(0, 1) - tau(1, 0), Eis(1, 2));
    const Eis z5 = tau(0, 1) - Eis::omega() * z6;
    ensure(tau(0, 0).is_real() && tau(1, 1).is_real() && z5.is_real() && z6.is_real(),
           "psi_hom: image coordinates are not rational integers");
    return {tau(0, 0).a, tau(1, 1).a, z5.a, z6.a};
}

EisMat2 tau_of_basis(std::size_t j)
{
    // Psi of e3, e4, e5, e6 (linear part)
    switch (j) {
    case 0:
        return m2(1, 0, 0, 0);
    case 1:
        return m2(0, 0, 0, 1);
    case 2:
        return m2(0, 1, 1, 0);
    default:
        return m2(0, Eis::omega(), Eis::omega2(), 0);
    }
}

const Eis& unit_power(const Integer& k)
{
    static const std::array<Eis, 3> w = {Eis(1), Eis::omega(), Eis::omega2()};
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), 3);
    return w[r.get_ui()];
}

} // namespace

OrthMatrix psi_hom(const EisMat2& a)
{
    if (!det(a).is_unit())
        throw Error("psi_hom: matrix is not invertible over Z[w]");
    const EisMat2 as = conj_transpose(a);
    OrthMatrix g = OrthMatrix::identity();
    for (std::size_t j = 0; j < 4; ++j) {
        const auto c = chart_coords(a * tau_of_basis(j) * as);
        for (std::size_t i = 0; i < 4; ++i)
            g(i + 2, j + 2) = c[i];
    }
    ensure(is_orthogonal(g), "psi_hom: image is not orthogonal");
    return g;
}

// --- tokens ----------------------------------------------------------------------

OrthMatrix OToken::matrix() const
{
    using namespace named;
    switch (kind) {
    case Kind::h:
        return translation_h(m);
    case Kind::hp:
        return g0() * translation_h(m) * g0();
    case Kind::g1:
        return orth_power(g1(), power);
    case Kind::g2:
        return orth_power(g2(), power);
    case Kind::g1_conj:
        return orth_power(u0() * g1() * u0(), power);
    case Kind::i42:
        return i42();
    case Kind::minus_i42:
        return minus_i42();
    case Kind::u0u1:
        return u0() * u1();
    case Kind::u2:
        return orth_power(u2(), power);
    }
    throw InvariantViolation("bad orthogonal token");
}

OToken OToken::inverse() const
{
    switch (kind) {
    case Kind::h:
    case Kind::hp:
        return {kind, {-m[0], -m[1], -m[2], -m[3]}, 1};
    case Kind::i42:
    case Kind::minus_i42:
    case Kind::u0u1:
        return *this;
    default:
        return {kind, {}, -power};
    }
}

HToken OToken::herm() const
{
    const Eis w = Eis::omega();
    switch (kind) {
    case Kind::h:
        return HToken::make_upper({m[0], m[1], m[2], m[3]});
    case Kind::hp:
        return HToken::make_lower({-m[1], -m[0], m[2], m[3]});
    case Kind::g1:
        return HToken::make_a(m2(1, 0, Eis(power), 1));
    case Kind::g2:
        return HToken::make_a(m2(1, 0, Eis(power) * Eis::omega2(), 1));
    case Kind::g1_conj:
        return HToken::make_a(m2(1, Eis(power), 0, 1));
    case Kind::i42:
    case Kind::minus_i42:
        return HToken::make_a(m2(1, 0, 0, -1));
    case Kind::u0u1:
        return HToken::make_a(m2(0, 1, 1, 0));
    case Kind::u2:
        return HToken::make_a(m2(unit_power(power), 0, 0, 1));
    }
    (void)w;
    throw InvariantViolation("bad orthogonal token");
}

std::string OToken::str() const
{
    auto vec = [&] {
        return "[" + m[0].get_str() + "," + m[1].get_str() + "," + m[2].get_str() + "," +
               m[3].get_str() + "]";
    };
    auto pw = [&](const char* name) {
        return power == 1 ? std::string(name) : std::string(name) + "^" + power.get_str();
    };
    switch (kind) {
    case Kind::h:
        return "h" + vec();
    case Kind::hp:
        return "h'" + vec();
    case Kind::g1:
        return pw("g1");
    case Kind::g2:
        return pw("g2");
    case Kind::g1_conj:
        return pw("u0g1u0");
    case Kind::i42:
        return "I42";
    case Kind::minus_i42:
        return "-I42";
    case Kind::u0u1:
        return "u0u1";
    case Kind::u2:
        return pw("u2");
    }
    return "?";
}

OrthMatrix product(const GenWordO& w)
{
    OrthMatrix p = OrthMatrix::identity();
    for (const auto& t : w)
        p = p * t.matrix();
    return p;
}

// --- Hermitian actions -----------------------------------------------------------

HermitianPoint apply_action(const HermAction& a, const HermitianPoint& tau)
{
    HermitianPoint t = tau;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        switch (it->kind) {
        case HStep::Kind::token:
            t = moebius(it->token.matrix(), t);
            break;
        case HStep::Kind::t:
            t = involution_t(t);
            break;
        case HStep::Kind::w:
            t = involution_w(t);
            break;
        }
    }
    return t;
}

HermAction as_action(const GenWordH& w)
{
    HermAction a;
    for (const auto& t : w)
        a.push_back({HStep::Kind::token, t});
    return a;
}

const std::vector<DictionaryEntry>& generator_table()
{
    static const std::vector<DictionaryEntry> table = [] {
        using namespace named;
        std::vector<DictionaryEntry> t;
        auto token = [](const OToken& o) { return HermAction{{HStep::Kind::token, o.herm()}}; };
        auto add = [&](std::string name, const OToken& o) {
            t.push_back({std::move(name), o.matrix(), token(o)});
        };
        for (int i = 0; i < 4; ++i) {
            std::array<Integer, 4> e{};
            e[i] = 1;
            add("h" + std::to_string(i + 1), OToken::translation(e));
            add("h" + std::to_string(i + 1) + "'", OToken::dual_translation(e));
        }
        add("g1", OToken::make(OToken::Kind::g1));
        add("g2", OToken::make(OToken::Kind::g2));
        add("u0g1u0", OToken::make(OToken::Kind::g1_conj));
        add("I42", OToken::make(OToken::Kind::i42));
        add("-I42", OToken::make(OToken::Kind::minus_i42));
        add("u0u1", OToken::make(OToken::Kind::u0u1));
        add("u2", OToken::make(OToken::Kind::u2));
        t.push_back({"u1", u1(), {{HStep::Kind::t}}});
        t.push_back({"g0u0I42", g0() * u0() * i42(), {{HStep::Kind::w}}});
        // W' = T [A] W with A = [[0,1],[1,0]]
        t.push_back({"g0I42", g0() * i42(),
                     {{HStep::Kind::t},
                      {HStep::Kind::token, HToken::make_a(m2(0, 1, 1, 0))},
                      {HStep::Kind::w}}});
        return t;
    }();
    return table;
}

bool equivariance_check(const OrthMatrix& g, const HermAction& herm, const PeriodPoint& z)
{
    return psi(act(g, z)) == apply_action(herm, psi(z));
}

bool equivariance_check(const DictionaryEntry& entry, const PeriodPoint& z)
{
    return equivariance_check(entry.orth, entry.herm, z);
}

// --- decomposition of SO+(M)_0 ----------------------------------------------------

namespace {

struct OReducer {
    OrthMatrix x;
    GenWordO word; // inverses of the applied left factors, in order

    void apply(const OToken& t)
    {
        x = t.matrix() * x;
        word.push_back(t.inverse());
    }
    const Integer& at(std::size_t i, std::size_t j) const { return x(i, j); }
};

using K = OToken::Kind;

/// Integer Euclid driving x(lo, col) to zero. `shrink_hi(k)` subtracts
/// 2k * x(lo) from x(hi); `shrink_lo(k)` adds k * x(hi) to x(lo).
template <class F, class G>
void pair_euclid(OReducer& r, std::size_t col, std::size_t hi, std::size_t lo, F shrink_hi,
                 G shrink_lo)
{
    while (r.at(lo, col) != 0) {
        const Integer before = abs(r.at(hi, col)) + abs(r.at(lo, col));
        const Integer a = r.at(hi, col), b = r.at(lo, col);
        if (abs(a) > abs(b))
            r.apply(shrink_hi(round_half_to_zero(ratio(a, 2 * b))));
        else
            r.apply(shrink_lo(-round_half_to_zero(ratio(b, a))));
        ensure(abs(r.at(hi, col)) + abs(r.at(lo, col)) < before,
               "decompose_so0: Euclid step did not decrease");
    }
}

Eis z_of(const OReducer& r, std::size_t col) { return {r.at(4, col), r.at(5, col)}; }

struct Move {
    Integer norm;
    std::vector<OToken> tokens;
};

/// Candidates z - q * s for an Eisenstein multiplier q (quotient or unit).
void eis_candidates(const Eis& z, const Integer& s, std::vector<Move>& out,
                    const std::function<std::vector<OToken>(const Eis&)>& tokens)
{
    if (s == 0)
        return;
    std::vector<Eis> qs(eis_units().begin(), eis_units().end());
    qs.push_back(eis_divmod(z, Eis(s)).q);
    for (const auto& q : qs)
        out.push_back({(z - q * Eis(s)).norm(), tokens(q)});
}

/// Shrink z = x5 + w x6 of column `col` to zero. a_i is a coordinate with
/// Eisenstein translations, b_i one with only real translations after a
/// unit rotation by u2 and I42.
void shrink_z(OReducer& r, std::size_t col, std::size_t ia,
              const std::function<std::vector<OToken>(const Eis&)>& sub_a, std::size_t ib,
              const std::function<OToken(const Integer&)>& sub_b, std::size_t ic,
              const std::function<std::vector<OToken>(const Eis&)>& sub_c)
{
    while (!z_of(r, col).is_zero()) {
        const Eis z = z_of(r, col);
        const Integer nz = z.norm();
        std::vector<Move> moves;
        eis_candidates(z, r.at(ia, col), moves, sub_a);
        if (ic < 6)
            eis_candidates(z, r.at(ic, col), moves, sub_c);
        const Integer s = ib < 6 ? r.at(ib, col) : Integer(0);
        if (s != 0) {
            for (int k = 0; k < 3; ++k)
                for (int sign = 0; sign < 2; ++sign) {
                    Eis e = k == 0 ? Eis(1) : (k == 1 ? Eis::omega() : Eis::omega2());
                    if (sign)
                        e = -e;
                    const Eis ez = e * z;
                    const Integer n = round_half_to_zero(ratio(ez.twice_re(), 2 * s));
                    std::vector<OToken> tk;
                    if (k)
                        tk.push_back(OToken::make(K::u2, k));
                    if (sign)
                        tk.push_back(OToken::make(K::i42));
                    tk.push_back(sub_b(n));
                    moves.push_back({(ez - Eis(n * s)).norm(), tk});
                }
        }
        ensure(!moves.empty(), "decompose_so0: no reducing coordinate");
        const Move* best = &moves[0];
        for (const auto& m : moves)
            if (m.norm < best->norm)
                best = &m;
        for (const auto& t : best->tokens)
            r.apply(t);
        ensure(z_of(r, col).norm() < nz, "decompose_so0: |z| did not decrease");
    }
}

bool is_unit_column(const OrthMatrix& x, std::size_t col, std::size_t row)
{
    for (std::size_t i = 0; i < 6; ++i)
        if (x(i, col) != (i == row ? 1 : 0))
            return false;
    return true;
}

} // namespace

GenWordO decompose_so0(const OrthMatrix& x)
{
    if (!is_orthogonal(x) || determinant(x) != 1 || block_parity(x) != BlockParity::diagonal ||
        orientation(x) != Orientation::plus)
        throw Error("decompose_so0: matrix is not in SO+(M)_0");
    OReducer r{x, {}};
    GenWordO tail;

    // (i) column 2 -> e2
    pair_euclid(
        r, 1, 1, 2, [](const Integer& k) { return OToken::translation({0, k, 0, 0}); },
        [](const Integer& k) { return OToken::dual_translation({k, 0, 0, 0}); });
    ensure(!mpz_even_p(r.at(1, 1).get_mpz_t()), "decompose_so0: a2 is even");
    auto trans = [](const Eis& q) {
        return std::vector<OToken>{OToken::translation({0, 0, -q.a, -q.b})};
    };
    auto dual = [](const Eis& q) {
        return std::vector<OToken>{OToken::dual_translation({0, 0, -q.a, -q.b})};
    };
    shrink_z(r, 1, 0, trans, 6, nullptr, 1, dual);
    ensure(r.at(0, 1) == 0 && r.at(2, 1) == 0, "decompose_so0: a1 a2 = 2|z|^2 violated");
    pair_euclid(
        r, 1, 1, 3, [](const Integer& k) { return OToken::translation({k, 0, 0, 0}); },
        [](const Integer& k) { return OToken::dual_translation({0, k, 0, 0}); });
    if (r.at(1, 1) == -1)
        r.apply(OToken::make(K::minus_i42));
    ensure(is_unit_column(r.x, 1, 1), "decompose_so0: column 2 is not e2");

    // strip the translation: X = (I2 + X') h(m)
    for (std::size_t j = 0; j < 6; ++j)
        ensure(r.at(0, j) == (j == 0 ? 1 : 0), "decompose_so0: row 1 is not e1");
    {
        // m = X'^{-1} c with X'^{-1} = Q'^{-1} X'^T Q'
        const OrthMatrix inv = orth_inverse(r.x);
        std::array<Integer, 4> m;
        for (std::size_t i = 0; i < 4; ++i) {
            m[i] = 0;
            for (std::size_t k = 0; k < 4; ++k)
                m[i] += inv(i + 2, k + 2) * r.at(k + 2, 0);
        }
        r.x = r.x * translation_h({-m[0], -m[1], -m[2], -m[3]});
        if (m != std::array<Integer, 4>{})
            tail.insert(tail.begin(), OToken::translation(m));
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if ((i < 2 || j < 2) && r.at(i, j) != (i == j ? 1 : 0))
                    throw InvariantViolation("decompose_so0: residual is not I2 + X'");
    }

    // (ii) column 4 -> e4 inside I2 + O(U(2) + A2(2))
    auto via_g = [](const Eis& q) {
        std::vector<OToken> t;
        if (q.a != 0)
            t.push_back(OToken::make(K::g1, -q.a));
        if (q.b != 0)
            t.push_back(OToken::make(K::g2, -q.b));
        return t;
    };
    shrink_z(
        r, 3, 2, via_g, 3, [](const Integer& n) { return OToken::make(K::g1_conj, -n); }, 6,
        nullptr);
    ensure(r.at(2, 3) * r.at(3, 3) == 0, "decompose_so0: b3 b4 = |z|^2 violated");
    if (r.at(3, 3) == 0)
        r.apply(OToken::make(K::u0u1));
    ensure(is_unit_column(r.x, 3, 3), "decompose_so0: column 4 is not e4");

    // (iii) rotation block, then the residual g1^p g2^q
    {
        Mat<Integer, 2, 2> rot;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                rot(i, j) = r.at(i + 4, j + 4);
        bool found = false;
        for (int k = 0; k < 3 && !found; ++k)
            for (int sign = 0; sign < 2 && !found; ++sign) {
                OrthMatrix c = orth_power(named::u2(), k);
                if (sign)
                    c = named::i42() * c;
                bool eq = true;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        eq = eq && c(i + 4, j + 4) == rot(i, j);
                if (!eq)
                    continue;
                found = true;
                if (sign)
                    r.apply(OToken::make(K::i42));
                if (k)
                    r.apply(OToken::make(K::u2, -k));
            }
        ensure(found, "decompose_so0: A2 block is not a rotation");
        const Integer p = r.at(4, 2), q = r.at(5, 2);
        GenWordO rest;
        if (p != 0)
            rest.push_back(OToken::make(K::g1, p));
        if (q != 0)
            rest.push_back(OToken::make(K::g2, q));
        ensure(product(rest) == r.x, "decompose_so0: residual is not g1^p g2^q");
        tail.insert(tail.begin(), rest.begin(), rest.end());
    }

    GenWordO word = std::move(r.word);
    word.insert(word.end(), tail.begin(), tail.end());
    ensure(product(word) == x, "decompose_so0: word does not multiply back");
    return word;
}

// --- transport ---------------------------------------------------------------------

HermAction HermImage::action() const
{
    HermAction a;
    if (uses_t)
        a.push_back({HStep::Kind::t});
    if (uses_w)
        a.push_back({HStep::Kind::w});
    for (const auto& t : word)
        a.push_back({HStep::Kind::token, t});
    return a;
}

HermImage orth_to_herm(const OrthMatrix& g)
{
    using namespace named;
    if (!is_orthogonal(g) || orientation(g) != Orientation::plus)
        throw Error("orth_to_herm: matrix is not in O+(M)");
    HermImage img;
    OrthMatrix x = g;
    if (determinant(x) == -1) {
        img.uses_t = true;
        x = u1() * x;
    }
    if (block_parity(x) == BlockParity::antidiagonal) {
        img.uses_w = true;
        x = i42() * u0() * g0() * x;
    }
    img.orth_word = decompose_so0(x);
    for (const auto& t : img.orth_word)
        img.word.push_back(t.herm());
    return img;
}

OrthMatrix orth_of(const HToken& t)
{
    switch (t.kind) {
    case HToken::Kind::a:
        return psi_hom(t.a);
    case HToken::Kind::upper:
        return translation_h({t.b.m1, t.b.m2, t.b.m3, t.b.m4});
    case HToken::Kind::lower:
        return OToken::dual_translation({-t.b.m2, -t.b.m1, t.b.m3, t.b.m4}).matrix();
    }
    throw Error("herm_to_orth: unknown token");
}

OrthMatrix herm_to_orth(const GenWordH& w, bool uses_t, bool uses_w)
{
    using namespace named;
    OrthMatrix g = OrthMatrix::identity();
    if (uses_t)
        g = g * u1();
    if (uses_w)
        g = g * g0() * u0() * i42();
    for (const auto& t : w)
        g = g * orth_of(t);
    return g;
}

} // namespace hk3

#include "hk3/hermitian.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hk3 {

namespace {

bool is_even_int(const Integer& z) { return mpz_even_p(z.get_mpz_t()) != 0; }

Tower tower(const Eis& e) { return Tower(e); }

EisMat2 scalar2(const Eis& e)
{
    EisMat2 m = EisMat2::zero();
    m(0, 0) = e;
    m(1, 1) = e;
    return m;
}

bool is_even(const EisMat2& m)
{
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!m(i, j).is_even())
                return false;
    return true;
}

} // namespace

// --- HermB ---------------------------------------------------------------------

EisMat2 HermB::matrix() const
{
    EisMat2 m;
    m(0, 0) = Eis(m1);
    m(1, 1) = Eis(m2);
    m(0, 1) = Eis(m3, m4);
    m(1, 0) = Eis(m3, m4).conj();
    return m;
}

HermB HermB::from_matrix(const EisMat2& m)
{
    if (!m(0, 0).is_real() || !m(1, 1).is_real() || m(1, 0) != m(0, 1).conj())
        throw Error("matrix is not of Hermitian B form");
    return {m(0, 0).a, m(1, 1).a, m(0, 1).a, m(0, 1).b};
}

HermB HermB::off_diagonal(const Eis& b12) { return {0, 0, b12.a, b12.b}; }

HermB HermB::diagonal(const Integer& m1, const Integer& m2) { return {m1, m2, 0, 0}; }

// --- 4x4 matrices ----------------------------------------------------------------

EisMat4 from_blocks(const EisMat2& a, const EisMat2& b, const EisMat2& c, const EisMat2& d)
{
    EisMat4 g;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            g(i, j) = a(i, j);
            g(i, j + 2) = b(i, j);
            g(i + 2, j) = c(i, j);
            g(i + 2, j + 2) = d(i, j);
        }
    return g;
}

EisMat2 block(const EisMat4& g, int row, int col)
{
    EisMat2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m(i, j) = g(i + 2 * row, j + 2 * col);
    return m;
}

EisMat4 conj_transpose(const EisMat4& g)
{
    EisMat4 t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            t(i, j) = g(j, i).conj();
    return t;
}

EisMat4 conj(const EisMat4& g)
{
    EisMat4 t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            t(i, j) = g(i, j).conj();
    return t;
}

const EisMat4& hermitian_j()
{
    static const EisMat4 j = from_blocks(EisMat2::zero(), EisMat2::identity(),
                                         -EisMat2::identity(), EisMat2::zero());
    return j;
}

std::string to_string(HClass c)
{
    switch (c) {
    case HClass::not_in_hgamma:
        return "not_in_HGamma";
    case HClass::hgamma:
        return "HGamma";
    case HClass::hgamma0:
        return "HGamma0";
    case HClass::hgamma1:
        return "HGamma1";
    }
    return "?";
}

HClass membership(const EisMat4& g)
{
    const auto& j = hermitian_j();
    if (!(conj_transpose(g) * j * g == j))
        return HClass::not_in_hgamma;
    if (!is_even(block(g, 1, 0)))
        return HClass::hgamma;
    if (!congruent_mod2(block(g, 0, 0), EisMat2::identity()))
        return HClass::hgamma0;
    return HClass::hgamma1;
}

EisMat4 g_a(const EisMat2& a)
{
    return from_blocks(a, EisMat2::zero(), EisMat2::zero(), inverse(conj_transpose(a)));
}

EisMat4 g_b_upper(const HermB& b)
{
    return from_blocks(EisMat2::identity(), b.matrix(), EisMat2::zero(), EisMat2::identity());
}

EisMat4 g_b_lower(const HermB& b)
{
    return from_blocks(EisMat2::identity(), EisMat2::zero(), scalar2(2) * b.matrix(),
                       EisMat2::identity());
}

EisMat4 inverse(const EisMat4& g)
{
    if (membership(g) == HClass::not_in_hgamma)
        throw Error("inverse: matrix is not in HGamma");
    const auto& j = hermitian_j();
    return -(j * conj_transpose(g) * j);
}

// --- tokens --------------------------------------------------------------------

EisMat4 HToken::matrix() const
{
    switch (kind) {
    case Kind::a:
        return g_a(a);
    case Kind::upper:
        return g_b_upper(b);
    case Kind::lower:
        return g_b_lower(b);
    }
    throw InvariantViolation("bad token kind");
}

HToken HToken::inverse() const
{
    switch (kind) {
    case Kind::a:
        return make_a(hk3::inverse(a));
    case Kind::upper:
        return make_upper(-b);
    case Kind::lower:
        return make_lower(-b);
    }
    throw InvariantViolation("bad token kind");
}

std::string HToken::str() const
{
    auto bstr = [&] {
        return "[" + b.m1.get_str() + "," + b.m2.get_str() + "," + b.m3.get_str() + "," +
               b.m4.get_str() + "]";
    };
    switch (kind) {
    case Kind::a:
        return "gA" + to_json_string(a);
    case Kind::upper:
        return "gB_upper" + bstr();
    case Kind::lower:
        return "gB_lower" + bstr();
    }
    return "?";
}

EisMat4 product(const GenWordH& w)
{
    EisMat4 p = EisMat4::identity();
    for (const auto& t : w)
        p = p * t.matrix();
    return p;
}

// --- action on H_2 ---------------------------------------------------------------

HermitianPoint fractional(const EisMat4& g, const HermitianPoint& t)
{
    TowerMat2 a, b, c, d;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            a(i, j) = tower(g(i, j));
            b(i, j) = tower(g(i, j + 2));
            c(i, j) = tower(g(i + 2, j));
            d(i, j) = tower(g(i + 2, j + 2));
        }
    return {(a * t.tau + b) * inverse(c * t.tau + d)};
}

HermitianPoint moebius(const EisMat4& g, const HermitianPoint& t)
{
    if (membership(g) == HClass::not_in_hgamma)
        throw Error("moebius: matrix is not in HGamma");
    if (!in_h2(t.tau))
        throw Error("moebius: point is not in H_2");
    HermitianPoint r = fractional(g, t);
    ensure(in_h2(r.tau), "moebius: image left H_2");
    return r;
}

HermitianPoint involution_t(const HermitianPoint& t) { return {t.tau.transpose()}; }

HermitianPoint involution_w(const HermitianPoint& t)
{
    TowerMat2 r = inverse(t.tau);
    const Tower minus_half(Rational(-1, 2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) *= minus_half;
    return {r};
}

EisMat4 conj_by_w(const EisMat4& g)
{
    // W [[A, B], [C, D]] W^{-1} = [[D, -C/2], [-2B, A]]
    const EisMat2 c = block(g, 1, 0);
    if (!is_even(c))
        throw Error("conj_by_w: C block is not even");
    EisMat2 half_c;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            half_c(i, j) = {c(i, j).a / 2, c(i, j).b / 2};
    return from_blocks(block(g, 1, 1), -half_c, scalar2(-2) * block(g, 0, 1), block(g, 0, 0));
}

// --- decomposition of HGamma_1(2) ----------------------------------------------

namespace {

struct Reducer {
    EisMat4 x;
    GenWordH word; // inverses of the applied left factors, in order

    void apply(const HToken& t)
    {
        x = t.matrix() * x;
        word.push_back(t.inverse());
    }
};

/// Rational r with x31 = r * x11 (both Eisenstein, ratio forced real).
Rational real_ratio(const Eis& num, const Eis& den)
{
    // num * conj(den) / N(den) must have zero omega part
    const Eis p = num * den.conj();
    ensure(p.b == 0, "decompose: ratio of column entries is not real");
    return ratio(p.a, den.norm());
}

/// Integer Euclid on the pair (x[top][col], x[bot][col]) with the real
/// translations diag(k,0) or diag(0,k); drives the lower entry to zero.
void real_euclid(Reducer& r, std::size_t col)
{
    const std::size_t top = col, bot = col + 2;
    while (!r.x(bot, col).is_zero()) {
        const Integer before = r.x(top, col).norm() + r.x(bot, col).norm();
        const Rational rho = real_ratio(r.x(bot, col), r.x(top, col));
        auto diag = [&](const Integer& k) {
            return col == 0 ? HermB::diagonal(k, 0) : HermB::diagonal(0, k);
        };
        if (abs(rho) < 2) {
            const Integer k = round_half_to_zero(1 / rho);
            r.apply(HToken::make_upper(diag(-k)));
        } else {
            const Integer k = round_half_to_zero(rho / 2);
            r.apply(HToken::make_lower(diag(-k)));
        }
        ensure(r.x(top, col).norm() + r.x(bot, col).norm() < before,
               "decompose: real Euclid step did not decrease");
    }
}

/// Unit eps maximizing Re(conj(p) * eps * q); ties resolved by unit order.
Eis best_unit(const Eis& p, const Eis& q)
{
    const Eis base = p.conj() * q;
    Eis best;
    Integer best_re;
    bool first = true;
    for (const auto& u : eis_units()) {
        const Integer re = (base * u).twice_re();
        if (first || re > best_re) {
            best = u;
            best_re = re;
            first = false;
        }
    }
    return best;
}

} // namespace

GenWordH decompose_hgamma1(const EisMat4& g)
{
    if (membership(g) != HClass::hgamma1)
        throw Error("decompose_hgamma1: matrix is not in HGamma_1(2)");
    Reducer r{g, {}};

    // (i) clear x21 with A in G(2), then x31 by real translations
    const ColumnReduction cr = g2_column_reduce(r.x(0, 0), r.x(1, 0));
    if (!(cr.A == EisMat2::identity()))
        r.apply(HToken::make_a(cr.A));
    ensure(r.x(1, 0).is_zero(), "decompose: x21 not cleared");
    real_euclid(r, 0);

    // (ii) column is (alpha, 0, 0, 2 beta)
    while (!r.x(3, 0).is_zero()) {
        const Eis alpha = r.x(0, 0);
        ensure(r.x(3, 0).is_even(), "decompose: x41 is odd");
        const Eis beta{r.x(3, 0).a / 2, r.x(3, 0).b / 2};
        const Integer na = alpha.norm(), nb = beta.norm();
        if (na < 3 * nb) {
            // beta <- beta - q alpha, q the better of the best unit and the
            // nearest quotient
            Eis q = best_unit(beta, alpha);
            const Eis quot = eis_divmod(beta, alpha).q;
            if ((beta - quot * alpha).norm() < (beta - q * alpha).norm())
                q = quot;
            r.apply(HToken::make_lower(HermB::off_diagonal(-q.conj())));
            ensure(Eis(r.x(3, 0).a / 2, r.x(3, 0).b / 2).norm() < nb,
                   "decompose: |beta| did not decrease");
        } else {
            // alpha <- alpha - 2 q beta
            Eis q = best_unit(alpha, beta);
            const Eis quot = eis_divmod(alpha, beta + beta).q;
            if ((alpha - 2 * quot * beta).norm() < (alpha - 2 * q * beta).norm())
                q = quot;
            r.apply(HToken::make_upper(HermB::off_diagonal(-q)));
            ensure(r.x(0, 0).norm() < na, "decompose: |alpha| did not decrease");
        }
        ensure(r.x(1, 0).is_zero() && r.x(2, 0).is_zero(), "decompose: column shape lost");
    }
    ensure(r.x(0, 0).is_unit(), "decompose: reduced column is not a unit vector");

    // (iii) column 2; x32 = 0 is forced by the unitary relation
    ensure(r.x(2, 1).is_zero(), "decompose: x32 is not zero");
    real_euclid(r, 1);

    // (iv) residual [[A, B], [0, A^{*-1}]] = gA(A) g(A^{-1} B)^*
    ensure(block(r.x, 1, 0) == EisMat2::zero(), "decompose: C block not cleared");
    const EisMat2 a = block(r.x, 0, 0);
    ensure(in_g2(a), "decompose: residual A not in G(2)");
    const HermB b = HermB::from_matrix(inverse(a) * block(r.x, 0, 1));
    GenWordH word = std::move(r.word);
    if (!(a == EisMat2::identity()))
        word.push_back(HToken::make_a(a));
    if (!b.is_zero())
        word.push_back(HToken::make_upper(b));
    ensure(product(word) == g, "decompose_hgamma1: word does not multiply back");
    return word;
}

// --- F_4 -------------------------------------------------------------------------

F4 F4::reduce(const Eis& x)
{
    return {static_cast<int>(mpz_odd_p(x.a.get_mpz_t()) != 0),
            static_cast<int>(mpz_odd_p(x.b.get_mpz_t()) != 0)};
}

std::string F4::str() const
{
    static const char* names[2][2] = {{"0", "w"}, {"1", "w2"}};
    return names[a][b];
}

F4Matrix reduce(const EisMat2& m)
{
    F4Matrix f;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            f(i, j) = F4::reduce(m(i, j));
    return f;
}

F4 det(const F4Matrix& m) { return m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0); }

F4Matrix f_mod2(const EisMat4& g)
{
    if (membership(g) < HClass::hgamma0)
        throw Error("f_mod2: matrix is not in HGamma_0(2)");
    const F4Matrix f = reduce(block(g, 0, 0));
    ensure(!(det(f) == F4(0)), "f_mod2: A block is singular mod 2");
    return f;
}

std::string to_string(const F4Matrix& m)
{
    return "[[" + m(0, 0).str() + "," + m(0, 1).str() + "],[" + m(1, 0).str() + "," +
           m(1, 1).str() + "]]";
}

int f4_code(const F4Matrix& m)
{
    int c = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            c = c * 4 + m(i, j).a + 2 * m(i, j).b;
    return c;
}

std::vector<F4Matrix> f4_closure(const std::vector<F4Matrix>& gens)
{
    std::vector<F4Matrix> out{F4Matrix::identity()};
    std::array<bool, 256> seen{};
    seen[f4_code(out[0])] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& s : gens) {
            const F4Matrix n = out[k] * s;
            if (!seen[f4_code(n)]) {
                seen[f4_code(n)] = true;
                out.push_back(n);
            }
        }
    return out;
}

const std::vector<EisMat2>& gl2_generators()
{
    static const std::vector<EisMat2> gens = [] {
        auto m = [](Eis a, Eis b, Eis c, Eis d) {
            EisMat2 r;
            r(0, 0) = a;
            r(0, 1) = b;
            r(1, 0) = c;
            r(1, 1) = d;
            return r;
        };
        const Eis w = Eis::omega();
        return std::vector<EisMat2>{m(1, 1, 0, 1), m(1, w, 0, 1), m(1, 0, 1, 1),
                                    m(1, 0, w, 1), m(0, 1, 1, 0), m(w, 0, 0, 1)};
    }();
    return gens;
}

namespace {

struct SectionTable {
    std::map<int, EisMat2> lift;
};

const SectionTable& section_table()
{
    static const SectionTable t = [] {
        SectionTable t;
        std::deque<EisMat2> queue{EisMat2::identity()};
        t.lift.emplace(f4_code(reduce(EisMat2::identity())), EisMat2::identity());
        while (!queue.empty()) {
            const EisMat2 cur = queue.front();
            queue.pop_front();
            for (const auto& s : gl2_generators()) {
                const EisMat2 n = cur * s;
                if (t.lift.emplace(f4_code(reduce(n)), n).second)
                    queue.push_back(n);
            }
        }
        ensure(t.lift.size() == 180, "GL2(F4) section table is incomplete");
        return t;
    }();
    return t;
}

} // namespace

const EisMat2& gl2f4_section(const F4Matrix& m)
{
    const auto& t = section_table().lift;
    auto it = t.find(f4_code(m));
    if (it == t.end())
        throw Error("gl2f4_section: matrix is not invertible over F4");
    return it->second;
}

std::size_t gl2f4_section_size() { return section_table().lift.size(); }

std::array<int, 5> p1_permutation(const F4Matrix& m)
{
    // points [1:0], [x:1] for x in F4, acting on column vectors
    static const std::array<std::array<F4, 2>, 5> pts = {
        {{F4(1), F4(0)}, {F4(0), F4(1)}, {F4(1), F4(1)}, {F4(0, 1), F4(1)}, {F4(1, 1), F4(1)}}};
    auto index_of = [&](F4 u, F4 v) {
        for (int k = 0; k < 5; ++k) {
            // proportional iff u * pts[k][1] == v * pts[k][0]
            if (u * pts[k][1] == v * pts[k][0])
                return k;
        }
        throw InvariantViolation("p1_permutation: zero vector");
    };
    std::array<int, 5> p{};
    for (int k = 0; k < 5; ++k) {
        const F4 u = m(0, 0) * pts[k][0] + m(0, 1) * pts[k][1];
        const F4 v = m(1, 0) * pts[k][0] + m(1, 1) * pts[k][1];
        p[k] = index_of(u, v);
    }
    return p;
}

Hgamma0Decomposition decompose_hgamma0(const EisMat4& g)
{
    const F4Matrix f = f_mod2(g);
    const EisMat2& a0 = gl2f4_section(f);
    const EisMat4 h = g_a(inverse(a0)) * g;
    ensure(membership(h) == HClass::hgamma1, "decompose_hgamma0: remainder not in HGamma_1(2)");
    return {a0, decompose_hgamma1(h)};
}

const std::array<HermB, 4>& phi9_b()
{
    // B3 = [[0, w], [w^2, 0]], B4 = [[0, w^2], [w, 0]] with w^2 = -1 - w
    static const std::array<HermB, 4> b = {
        HermB{1, 0, 0, 0}, HermB{0, 1, 0, 0}, HermB{0, 0, 0, 1}, HermB{0, 0, -1, -1}};
    return b;
}

std::optional<int> phi9_coset_classify(const EisMat4& x)
{
    if (membership(x) == HClass::not_in_hgamma)
        throw Error("phi9_coset_classify: input is not in G");
    // S X S^{-1} r_i^{-1} = S (X g(-B_i)^*) S^{-1}; it is integral with even
    // lower-left block iff the B block of X g(-B_i)^* is even.
    std::optional<int> found;
    for (int i = 0; i < 4; ++i) {
        const EisMat4 y = x * g_b_upper(-phi9_b()[i]);
        if (is_even(block(y, 0, 1))) {
            ensure(!found, "phi9_coset_classify: two cosets matched");
            found = i + 1;
        }
    }
    return found;
}

std::string to_json_string(const EisMat2& g)
{
    return "[[" + g(0, 0).str() + "," + g(0, 1).str() + "],[" + g(1, 0).str() + "," +
           g(1, 1).str() + "]]";
}

std::string to_json_string(const EisMat4& g)
{
    std::string s = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < 4; ++j)
            s += (j ? "," : "") + g(i, j).str();
        s += "]";
    }
    return s + "]";
}

} // namespace hk3

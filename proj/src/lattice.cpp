#include "hk3/lattice.hpp"

#include <algorithm>
#include <map>

#include "hk3/tower.hpp"

namespace hk3 {

namespace {

IntMat6 from_rows(const std::array<std::array<int, 6>, 6>& rows)
{
    IntMat6 m;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            m(i, j) = rows[i][j];
    return m;
}

bool is_even(const Integer& z) { return mpz_even_p(z.get_mpz_t()) != 0; }

Integer mod(const Integer& z, long n)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace

const IntMat6& gram_q()
{
    static const IntMat6 q = from_rows({{{0, 1, 0, 0, 0, 0},
                                         {1, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 2, 0, 0},
                                         {0, 0, 2, 0, 0, 0},
                                         {0, 0, 0, 0, -4, 2},
                                         {0, 0, 0, 0, 2, -4}}});
    return q;
}

Integer pair_q(const IntVec6& x, const IntVec6& y)
{
    const auto& q = gram_q();
    Integer s = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (q(i, j) != 0)
                s += x[i] * q(i, j) * y[j];
    return s;
}

IntVec6 mul_vec(const IntMat6& g, const IntVec6& x)
{
    IntVec6 y;
    for (std::size_t i = 0; i < 6; ++i) {
        y[i] = 0;
        for (std::size_t j = 0; j < 6; ++j)
            y[i] += g(i, j) * x[j];
    }
    return y;
}

IntVec6 column(const IntMat6& g, std::size_t j)
{
    IntVec6 c;
    for (std::size_t i = 0; i < 6; ++i)
        c[i] = g(i, j);
    return c;
}

Integer determinant(std::vector<std::vector<Integer>> m)
{
    // Bareiss fraction-free elimination
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer determinant(const IntMat6& g)
{
    std::vector<std::vector<Integer>> m(6, std::vector<Integer>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            m[i][j] = g(i, j);
    return determinant(std::move(m));
}

bool is_orthogonal(const OrthMatrix& g) { return g.transpose() * gram_q() * g == gram_q(); }

OrthMatrix orth_inverse(const OrthMatrix& g)
{
    if (!is_orthogonal(g))
        throw Error("orth_inverse: matrix is not in O(M)");
    // Q^{-1} = [[0,1],[1,0]] + [[0,1/2],[1/2,0]] + (1/12)[[-4,-2],[-2,-4]]
    static const std::array<std::array<Rational, 6>, 6> qinv = [] {
        std::array<std::array<Rational, 6>, 6> m{};
        m[0][1] = m[1][0] = 1;
        m[2][3] = m[3][2] = Rational(1, 2);
        m[4][4] = m[5][5] = Rational(-1, 3);
        m[4][5] = m[5][4] = Rational(-1, 6);
        return m;
    }();
    const IntMat6 gtq = g.transpose() * gram_q();
    OrthMatrix inv;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 6; ++k)
                if (qinv[i][k] != 0)
                    s += qinv[i][k] * gtq(k, j);
            ensure(s.get_den() == 1, "orth_inverse: non-integral inverse");
            inv(i, j) = s.get_num();
        }
    ensure(inv * g == OrthMatrix::identity(), "orth_inverse: not an inverse");
    return inv;
}

OrthMatrix orth_power(const OrthMatrix& g, const Integer& k)
{
    OrthMatrix base = k < 0 ? orth_inverse(g) : g;
    Integer e = abs(k);
    OrthMatrix r = OrthMatrix::identity();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = r * base;
        base = base * base;
        e /= 2;
    }
    return r;
}

Orientation orientation(const OrthMatrix& g)
{
    if (!is_orthogonal(g))
        throw Error("orientation: matrix is not in O(M)");
    // q0 = [1 : 8 : 2i : 2i : 0 : 0] first; the others are further points of
    // D_M^+ used only when g sends q0 out of the affine chart.
    const Tower i = Tower::i();
    const std::array<std::array<Tower, 6>, 4> base = {{
        {Tower(1), Tower(8), 2 * i, 2 * i, Tower(0), Tower(0)},
        {Tower(1), Tower(6), i, 3 * i, Tower(0), Tower(0)},
        {Tower(1), Tower(8), 3 * i, i, Tower(1), Tower(0)},
        {Tower(1), Tower(8) - 4 * i, Tower(1) + 2 * i, 2 * i, Tower(0), Tower(0)},
    }};
    for (const auto& q : base) {
        std::array<Tower, 6> w;
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                if (g(r, c) != 0)
                    w[r] += Tower(Rational(g(r, c))) * q[c];
        if (w[0].is_zero())
            continue;
        const Tower z3 = w[2] / w[0];
        const int s = tower_sign_real(z3.im());
        ensure(s != 0, "orientation: image left the period domain");
        return s > 0 ? Orientation::plus : Orientation::minus;
    }
    throw InvariantViolation("orientation: every base point escaped the chart");
}

BlockParity block_parity(const OrthMatrix& g)
{
    const bool d = !is_even(g(0, 0)) && is_even(g(0, 1)) && is_even(g(1, 0)) && !is_even(g(1, 1));
    const bool a = is_even(g(0, 0)) && !is_even(g(0, 1)) && !is_even(g(1, 0)) && is_even(g(1, 1));
    if (d)
        return BlockParity::diagonal;
    if (a)
        return BlockParity::antidiagonal;
    throw InvariantViolation("block_parity: upper-left block is neither I nor J mod 2");
}

OrthMatrix translation_h(const std::array<Integer, 4>& m)
{
    // Q' = [[0,2],[2,0]] + [[-4,2],[2,-4]]
    const std::array<Integer, 4> qm = {2 * m[1], 2 * m[0], -4 * m[2] + 2 * m[3],
                                       2 * m[2] - 4 * m[3]};
    Integer mqm = 0;
    for (std::size_t k = 0; k < 4; ++k)
        mqm += m[k] * qm[k];
    OrthMatrix h = OrthMatrix::identity();
    h(1, 0) = -mqm / 2; // m^T Q' m is even
    for (std::size_t k = 0; k < 4; ++k) {
        h(k + 2, 0) = m[k];
        h(1, k + 2) = -qm[k];
    }
    return h;
}

namespace named {

OrthMatrix g0()
{
    return from_rows({{{0, 1, 0, 0, 0, 0},
                       {1, 0, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 1, 0, 0},
                       {0, 0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 0, 1}}});
}

OrthMatrix g1()
{
    return from_rows({{{1, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 1, 1, 2, -1},
                       {0, 0, 1, 0, 1, 0},
                       {0, 0, 0, 0, 0, 1}}});
}

OrthMatrix g2()
{
    return from_rows({{{1, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 1, 1, -1, 2},
                       {0, 0, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0, 1}}});
}

OrthMatrix u0()
{
    return from_rows({{{1, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 0},
                       {0, 0, 0, 1, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 0, 1}}});
}

OrthMatrix u1()
{
    return from_rows({{{1, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 1, 0, 0},
                       {0, 0, 0, 0, 1, -1},
                       {0, 0, 0, 0, 0, -1}}});
}

OrthMatrix u2()
{
    return from_rows({{{1, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 1, 0, 0},
                       {0, 0, 0, 0, 0, -1},
                       {0, 0, 0, 0, 1, -1}}});
}

OrthMatrix i42()
{
    OrthMatrix m = OrthMatrix::identity();
    m(4, 4) = -1;
    m(5, 5) = -1;
    return m;
}

OrthMatrix minus_i42() { return -i42(); }

} // namespace named

// --- discriminant group --------------------------------------------------------

DiscElement DiscElement::from_scaled(const IntVec6& y)
{
    DiscElement x;
    for (std::size_t i = 0; i < 6; ++i)
        x.six[i] = static_cast<int>(mod(y[i], 6).get_si());
    return x;
}

std::array<Rational, 6> DiscElement::value() const
{
    std::array<Rational, 6> v;
    for (std::size_t i = 0; i < 6; ++i) {
        v[i] = Rational(six[i], 6);
        v[i].canonicalize();
    }
    return v;
}

DiscElement operator+(const DiscElement& x, const DiscElement& y)
{
    DiscElement s;
    for (std::size_t i = 0; i < 6; ++i)
        s.six[i] = (x.six[i] + y.six[i]) % 6;
    return s;
}

DiscElement operator-(const DiscElement& x)
{
    DiscElement s;
    for (std::size_t i = 0; i < 6; ++i)
        s.six[i] = (6 - x.six[i]) % 6;
    return s;
}

DiscElement operator*(int k, const DiscElement& x)
{
    DiscElement s;
    for (std::size_t i = 0; i < 6; ++i)
        s.six[i] = (((k % 6) + 6) * x.six[i]) % 6;
    return s;
}

bool DiscElement::is_zero() const { return six == std::array<int, 6>{}; }

std::string DiscElement::str() const
{
    std::string s = "(";
    const auto v = value();
    for (std::size_t i = 0; i < 6; ++i)
        s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

const std::array<DiscElement, 4>& disc_generators()
{
    static const std::array<DiscElement, 4> d = {
        DiscElement{{0, 0, 3, 0, 0, 0}}, DiscElement{{0, 0, 0, 3, 0, 0}},
        DiscElement{{0, 0, 0, 0, 1, 2}}, DiscElement{{0, 0, 0, 0, 2, 1}}};
    return d;
}

const std::array<DiscElement, 5>& disc_isotropic_2torsion()
{
    static const std::array<DiscElement, 5> v = [] {
        const auto& d = disc_generators();
        return std::array<DiscElement, 5>{d[0], d[1], d[0] + d[1] + d[2] + d[3],
                                          d[0] + d[1] + 3 * d[2], d[0] + d[1] + 3 * d[3]};
    }();
    return v;
}

namespace {

struct DiscTable {
    std::vector<DiscElement> elements;
    std::vector<std::array<int, 4>> coords; // n1 d1 + n2 d2 + n3 d3 + n4 d4
    std::map<std::array<int, 6>, std::size_t> index;
};

const DiscTable& disc_table()
{
    static const DiscTable t = [] {
        DiscTable t;
        const auto& d = disc_generators();
        for (int n1 = 0; n1 < 2; ++n1)
            for (int n2 = 0; n2 < 2; ++n2)
                for (int n3 = 0; n3 < 6; ++n3)
                    for (int n4 = 0; n4 < 2; ++n4) {
                        DiscElement x = n1 * d[0] + n2 * d[1] + n3 * d[2] + n4 * d[3];
                        ensure(t.index.emplace(x.six, t.elements.size()).second,
                               "discriminant table: duplicate element");
                        t.elements.push_back(x);
                        t.coords.push_back({n1, n2, n3, n4});
                    }
        return t;
    }();
    return t;
}

IntVec6 scaled_vector(const DiscElement& x)
{
    IntVec6 y;
    for (std::size_t i = 0; i < 6; ++i)
        y[i] = x.six[i];
    return y;
}

int order_of(const DiscElement& x)
{
    for (int k = 1; k <= 6; ++k)
        if ((k * x).is_zero())
            return k;
    throw InvariantViolation("discriminant element of order > 6");
}

} // namespace

const std::vector<DiscElement>& disc_elements() { return disc_table().elements; }

std::size_t disc_index(const DiscElement& x)
{
    const auto& idx = disc_table().index;
    auto it = idx.find(x.six);
    if (it == idx.end())
        throw Error("not an element of the discriminant group: " + x.str());
    return it->second;
}

Rational disc_form_value(const DiscElement& x)
{
    const IntVec6 y = scaled_vector(x);
    Rational q(mod(pair_q(y, y), 72), 36);
    q.canonicalize();
    return q;
}

Rational disc_bilinear(const DiscElement& x, const DiscElement& y)
{
    Rational b(mod(pair_q(scaled_vector(x), scaled_vector(y)), 36), 36);
    b.canonicalize();
    return b;
}

DiscElement DiscAutomorphism::operator()(const DiscElement& x) const
{
    return disc_elements()[image[disc_index(x)]];
}

DiscAutomorphism DiscAutomorphism::identity()
{
    DiscAutomorphism f;
    for (std::size_t i = 0; i < 48; ++i)
        f.image[i] = static_cast<std::uint8_t>(i);
    return f;
}

DiscAutomorphism operator*(const DiscAutomorphism& f, const DiscAutomorphism& g)
{
    DiscAutomorphism h;
    for (std::size_t i = 0; i < 48; ++i)
        h.image[i] = f.image[g.image[i]];
    return h;
}

bool DiscAutomorphism::preserves_form() const
{
    const auto& el = disc_elements();
    for (std::size_t i = 0; i < 48; ++i)
        if (disc_form_value(el[image[i]]) != disc_form_value(el[i]))
            return false;
    return true;
}

DiscAutomorphism disc_action(const OrthMatrix& g)
{
    if (!is_orthogonal(g))
        throw Error("disc_action: matrix is not in O(M)");
    DiscAutomorphism f;
    const auto& el = disc_elements();
    for (std::size_t i = 0; i < 48; ++i)
        f.image[i] = static_cast<std::uint8_t>(
            disc_index(DiscElement::from_scaled(mul_vec(g, scaled_vector(el[i])))));
    ensure(f.preserves_form(), "disc_action: q_M not preserved");
    return f;
}

DiscAutomorphism disc_inversion()
{
    DiscAutomorphism f;
    const auto& el = disc_elements();
    for (std::size_t i = 0; i < 48; ++i)
        f.image[i] = static_cast<std::uint8_t>(disc_index(-el[i]));
    return f;
}

S5Perm S5Perm::from_cycles(const std::string& cycles)
{
    S5Perm p;
    std::vector<int> cur;
    auto close = [&] {
        for (std::size_t k = 0; k < cur.size(); ++k)
            p.perm[cur[k]] = cur[(k + 1) % cur.size()];
        cur.clear();
    };
    bool open = false;
    std::array<bool, 5> used{};
    for (char c : cycles) {
        if (c == '(') {
            if (open)
                throw Error("malformed cycle notation: " + cycles);
            open = true;
        } else if (c == ')') {
            if (!open)
                throw Error("malformed cycle notation: " + cycles);
            close();
            open = false;
        } else if (c >= '1' && c <= '5' && open && !used[c - '1']) {
            used[c - '1'] = true;
            cur.push_back(c - '1');
        } else if (c != ' ') {
            throw Error("malformed cycle notation: " + cycles);
        }
    }
    if (open)
        throw Error("malformed cycle notation: " + cycles);
    return p;
}

std::string S5Perm::cycles() const
{
    std::string s;
    std::array<bool, 5> seen{};
    for (int i = 0; i < 5; ++i) {
        if (seen[i] || perm[i] == i)
            continue;
        s += "(";
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            s += static_cast<char>('1' + j);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

bool S5Perm::is_even() const
{
    int transpositions = 0;
    std::array<bool, 5> seen{};
    for (int i = 0; i < 5; ++i) {
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 0)
            transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

S5Perm operator*(const S5Perm& f, const S5Perm& g)
{
    S5Perm h;
    for (int i = 0; i < 5; ++i)
        h.perm[i] = f.perm[g.perm[i]];
    return h;
}

S5Perm action_on_isotropic(const DiscAutomorphism& f)
{
    const auto& v = disc_isotropic_2torsion();
    S5Perm p;
    std::array<bool, 5> hit{};
    for (int i = 0; i < 5; ++i) {
        const DiscElement img = f(v[i]);
        auto it = std::find(v.begin(), v.end(), img);
        ensure(it != v.end(), "action does not permute v1..v5");
        p.perm[i] = static_cast<int>(it - v.begin());
        ensure(!hit[p.perm[i]], "action on v1..v5 is not injective");
        hit[p.perm[i]] = true;
    }
    return p;
}

S5Perm to_s5(const OrthMatrix& g) { return action_on_isotropic(disc_action(g)); }

static void require_o_plus(const OrthMatrix& g, const char* who)
{
    if (!is_orthogonal(g) || orientation(g) != Orientation::plus)
        throw Error(std::string(who) + ": matrix is not in O+(M)");
}

bool is_in_k3(const OrthMatrix& g)
{
    require_o_plus(g, "is_in_k3");
    for (std::size_t i = 0; i < 6; ++i) {
        const int e3 = i == 2, e4 = i == 3, e5 = i == 4, e6 = i == 5;
        if (!is_even(g(i, 2) - e3) || !is_even(g(i, 3) - e4))
            return false;
        if (mod(g(i, 4) + 2 * g(i, 5) - (e5 + 2 * e6), 6) != 0)
            return false;
        if (mod(2 * g(i, 4) + g(i, 5) - (2 * e5 + e6), 6) != 0)
            return false;
    }
    return true;
}

bool is_in_enr(const OrthMatrix& g)
{
    require_o_plus(g, "is_in_enr");
    for (std::size_t j = 2; j < 6; ++j)
        for (std::size_t i = 0; i < 6; ++i)
            if (!is_even(g(i, j) - (i == j ? 1 : 0)))
                return false;
    return true;
}

DiscOrthogonalGroup enumerate_disc_orthogonal()
{
    const auto& t = disc_table();
    const auto& el = t.elements;
    const auto& d = disc_generators();

    std::array<std::vector<std::size_t>, 4> candidates;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < el.size(); ++i)
            if (order_of(el[i]) == order_of(d[k]) &&
                disc_form_value(el[i]) == disc_form_value(d[k]))
                candidates[k].push_back(i);

    DiscOrthogonalGroup group;
    for (std::size_t i1 : candidates[0])
        for (std::size_t i2 : candidates[1]) {
            if (disc_bilinear(el[i1], el[i2]) != disc_bilinear(d[0], d[1]))
                continue;
            for (std::size_t i3 : candidates[2]) {
                if (disc_bilinear(el[i1], el[i3]) != disc_bilinear(d[0], d[2]) ||
                    disc_bilinear(el[i2], el[i3]) != disc_bilinear(d[1], d[2]))
                    continue;
                for (std::size_t i4 : candidates[3]) {
                    const std::array<DiscElement, 4> a = {el[i1], el[i2], el[i3], el[i4]};
                    // the only relation beyond the generator orders
                    if (!(2 * a[2] + 2 * a[3]).is_zero())
                        continue;
                    DiscAutomorphism f;
                    std::array<bool, 48> hit{};
                    bool ok = true;
                    for (std::size_t x = 0; x < 48 && ok; ++x) {
                        const auto& n = t.coords[x];
                        const DiscElement img =
                            n[0] * a[0] + n[1] * a[1] + n[2] * a[2] + n[3] * a[3];
                        const std::size_t j = disc_index(img);
                        ok = !hit[j];
                        hit[j] = true;
                        f.image[x] = static_cast<std::uint8_t>(j);
                    }
                    if (!ok || !f.preserves_form())
                        continue;
                    for (std::size_t x = 0; x < 48 && ok; ++x)
                        for (std::size_t y = 0; y < 48 && ok; ++y)
                            ok = disc_bilinear(el[f.image[x]], el[f.image[y]]) ==
                                 disc_bilinear(el[x], el[y]);
                    if (!ok)
                        continue;
                    group.elements.push_back(f);
                    group.action.push_back(action_on_isotropic(f));
                }
            }
        }
    return group;
}

// --- sublattices --------------------------------------------------------------

std::vector<std::vector<Integer>> gram_of(const std::vector<IntVec6>& basis)
{
    std::vector<std::vector<Integer>> g(basis.size(), std::vector<Integer>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            g[i][j] = pair_q(basis[i], basis[j]);
    return g;
}

Complement orthogonal_complement(const IntVec6& v)
{
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
        throw Error("orthogonal_complement: zero vector");
    Integer content = 0;
    for (const auto& x : v)
        content = gcd(content, x);
    if (content != 1)
        throw Error("orthogonal_complement: vector is not primitive");

    // w = Q v; column-reduce the row w to (g, 0, ..., 0) while tracking the
    // unimodular transform U. Columns 2..6 of U span ker(w).
    IntVec6 w = mul_vec(gram_q(), v);
    IntMat6 u = IntMat6::identity();
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& k) {
        w[dst] -= k * w[src];
        for (std::size_t i = 0; i < 6; ++i)
            u(i, dst) -= k * u(i, src);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        std::swap(w[a], w[b]);
        for (std::size_t i = 0; i < 6; ++i)
            std::swap(u(i, a), u(i, b));
    };
    for (;;) {
        std::size_t piv = 6;
        for (std::size_t j = 0; j < 6; ++j)
            if (w[j] != 0 && (piv == 6 || abs(w[j]) < abs(w[piv])))
                piv = j;
        ensure(piv != 6, "orthogonal_complement: Qv vanished");
        bool done = true;
        for (std::size_t j = 0; j < 6; ++j) {
            if (j == piv || w[j] == 0)
                continue;
            Integer k;
            mpz_fdiv_q(k.get_mpz_t(), w[j].get_mpz_t(), w[piv].get_mpz_t());
            col_axpy(j, piv, k);
            if (w[j] != 0)
                done = false;
        }
        if (done) {
            col_swap(0, piv);
            break;
        }
    }
    Complement c;
    for (std::size_t j = 1; j < 6; ++j)
        c.basis.push_back(column(u, j));
    c.gram = gram_of(c.basis);
    return c;
}

} // namespace hk3

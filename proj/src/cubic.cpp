#include "hk3/cubic.hpp"

#include <bit>

namespace hk3 {

namespace {

Rational power(const Rational& x, unsigned e)
{
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= x;
    return r;
}

Integer ipow2(unsigned e)
{
    Integer r = 1;
    r <<= e;
    return r;
}

}  // namespace

std::array<Rational, 5> elem_sym(const Lambda& l)
{
    // coefficients of Π(t + λi), built one factor at a time
    std::array<Rational, 6> c{};
    c[0] = 1;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = i + 1; k >= 1; --k)
            c[k] += c[k - 1] * l[i];
    return {c[1], c[2], c[3], c[4], c[5]};
}

Rational vandermonde(const Lambda& l)
{
    Rational d = 1;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            d *= l[i] - l[j];
    return d;
}

InvariantSet classical_invariants(const Lambda& l)
{
    const auto s = elem_sym(l);
    const Rational& s1 = s[0];
    const Rational& s2 = s[1];
    const Rational& s3 = s[2];
    const Rational& s4 = s[3];
    const Rational& s5 = s[4];
    InvariantSet r;
    r.i8 = s4 * s4 - 4 * s3 * s5;
    r.i16 = power(s5, 3) * s1;
    r.i24 = power(s5, 4) * s4;
    r.i32 = power(s5, 6) * s2;
    r.i40 = power(s5, 8);
    r.i100 = power(s5, 18) * vandermonde(l);
    return r;
}

PolyZ elem_sym_poly(int k)
{
    if (k < 1 || k > 5)
        throw Error("elem_sym_poly: index out of range");
    PolyZ s;
    for (unsigned mask = 0; mask < 32; ++mask) {
        if (std::popcount(mask) != k)
            continue;
        PolyZ::Exponents e{};
        for (std::size_t i = 0; i < 5; ++i)
            e[i] = (mask >> i) & 1u;
        s += PolyZ::monomial(e, 1);
    }
    return s;
}

const PolyZ& delta_sing_poly()
{
    static const PolyZ p = [] {
        // Π over signs of (s0 + Σ εi si), si standing for 1/√λi
        PolyZ prod = PolyZ::constant(1);
        for (unsigned mask = 0; mask < 16; ++mask) {
            PolyZ f = PolyZ::var(0);
            for (std::size_t i = 1; i < 5; ++i) {
                if ((mask >> (i - 1)) & 1u)
                    f -= PolyZ::var(i);
                else
                    f += PolyZ::var(i);
            }
            prod *= f;
        }
        ensure(prod.degree() == 16, "delta_sing: product degree");
        // si^(2k) = μi^k, and (Πλ)^8 μi^k = λi^(8-k) once the total μ-degree is 8
        return prod.map_monomials([](const PolyZ::Exponents& e) {
            PolyZ::Exponents out{};
            unsigned total = 0;
            for (std::size_t i = 0; i < 5; ++i) {
                ensure(e[i] % 2 == 0, "delta_sing: odd exponent survived");
                total += e[i] / 2;
                out[i] = 8 - e[i] / 2;
            }
            ensure(total == 8, "delta_sing: inhomogeneous term");
            return out;
        });
    }();
    return p;
}

const PolyZ& delta_sing_invariant_poly()
{
    static const PolyZ p = [] {
        const PolyZ s1 = elem_sym_poly(1), s2 = elem_sym_poly(2), s3 = elem_sym_poly(3),
                    s4 = elem_sym_poly(4), s5 = elem_sym_poly(5);
        const PolyZ i8 = s4 * s4 - Integer(4) * s3 * s5;
        const PolyZ i16 = s5.pow(3) * s1;
        const PolyZ i24 = s5.pow(4) * s4;
        const PolyZ i32 = s5.pow(6) * s2;
        const PolyZ a = i8 * i8 - ipow2(6) * i16;
        // 2^14 (I32 + 2^-3 I8 I24) = 2^14 I32 + 2^11 I8 I24
        return a * a - ipow2(14) * i32 - ipow2(11) * (i8 * i24);
    }();
    return p;
}

Rational delta_sing(const Lambda& l)
{
    return delta_sing_poly().eval(l);
}

Rational delta_km(const Lambda& l)
{
    std::array<Rational, 5> mu;
    for (std::size_t i = 0; i < 5; ++i) {
        if (l[i] == 0)
            throw Error("Sylvester degenerate for μ");
        mu[i] = 1 / l[i];
    }
    Rational cubes = 0, pairs = 0, triples = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        cubes += power(mu[i], 3);
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i)
                pairs += mu[i] * mu[i] * mu[j];
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                triples += mu[i] * mu[j] * mu[k];
    }
    return cubes - pairs + 2 * triples;
}

Rational kummer_invariant(const Lambda& l)
{
    const auto inv = classical_invariants(l);
    return inv.i8 * inv.i24 + 8 * inv.i32;
}

const PolyZ& delta_km_cleared_poly()
{
    static const PolyZ p = [] {
        PolyZ mu_form;
        for (std::size_t i = 0; i < 5; ++i) {
            mu_form += PolyZ::var(i).pow(3);
            for (std::size_t j = 0; j < 5; ++j)
                if (j != i)
                    mu_form -= PolyZ::var(i) * PolyZ::var(i) * PolyZ::var(j);
            for (std::size_t j = i + 1; j < 5; ++j)
                for (std::size_t k = j + 1; k < 5; ++k)
                    mu_form += Integer(2) * (PolyZ::var(i) * PolyZ::var(j) * PolyZ::var(k));
        }
        return mu_form.map_monomials([](const PolyZ::Exponents& e) {
            PolyZ::Exponents out{};
            for (std::size_t i = 0; i < 5; ++i)
                out[i] = 3 - e[i];
            return out;
        });
    }();
    return p;
}

const PolyZ& kummer_sigma_poly()
{
    static const PolyZ p = [] {
        const PolyZ s2 = elem_sym_poly(2), s3 = elem_sym_poly(3), s4 = elem_sym_poly(4),
                    s5 = elem_sym_poly(5);
        return s4.pow(3) - Integer(4) * (s3 * s4 * s5) + Integer(8) * (s2 * s5 * s5);
    }();
    return p;
}

std::array<Integer, 5> primitive_integer(const Lambda& l)
{
    Integer den = 1;
    for (const auto& x : l)
        den = lcm(den, Integer(x.get_den()));
    std::array<Integer, 5> v;
    Integer g = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        v[i] = l[i].get_num() * (den / l[i].get_den());
        g = gcd(g, v[i]);
    }
    if (g == 0)
        throw Error("λ must not be all zero");
    for (auto& x : v)
        x /= g;
    return v;
}

HessianEquations hessian_equations(const Lambda& l)
{
    const auto p = primitive_integer(l);
    HessianEquations h;
    for (std::size_t i = 0; i < 5; ++i) {
        h.linear += PolyZ::var(i);
        PolyZ term = PolyZ::constant(1);
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i)
                term *= p[j] * PolyZ::var(j);
        h.quartic += term;
    }
    return h;
}

Poly<10> hessian_quartic_symbolic()
{
    using P = Poly<10>;
    P q;
    for (std::size_t i = 0; i < 5; ++i) {
        P term = P::constant(1);
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i)
                term *= P::var(j) * P::var(5 + j);
        q += term;
    }
    return q;
}

std::vector<ProjPoint> hessian_singular_points(const Lambda& l)
{
    primitive_integer(l);  // rejects the zero vector
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                ProjPoint p{};
                int seen = 0;
                for (int m = 0; m < 5; ++m) {
                    if (m == i || m == j || m == k)
                        continue;
                    p[m] = seen++ == 0 ? 1 : -1;
                }
                pts.push_back(p);
            }
    return pts;
}

namespace {

PolyZ derivative(const PolyZ& f, std::size_t var)
{
    PolyZ d;
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0)
            continue;
        auto e2 = e;
        --e2[var];
        d += PolyZ::monomial(e2, c * e[var]);
    }
    return d;
}

template <std::size_t N>
bool restricts_to_zero(const Poly<N>& f, std::size_t a, std::size_t b)
{
    for (const auto& [e, c] : f.terms())
        if (e[a] == 0 && e[b] == 0)
            return false;
    return true;
}

}  // namespace

bool hessian_is_node(const HessianEquations& eqs, const ProjPoint& p)
{
    if (eqs.linear.eval(p) != 0 || eqs.quartic.eval(p) != 0)
        return false;
    for (std::size_t v = 0; v < 5; ++v)
        if (derivative(eqs.quartic, v).eval(p) != 0)
            return false;
    return true;
}

bool vanishes_on_coordinate_line(const PolyZ& quartic, int i, int j)
{
    if (i < 0 || j < 0 || i > 4 || j > 4 || i == j)
        throw Error("line index pair must be two distinct indices in 0..4");
    return restricts_to_zero(quartic, i, j);
}

bool vanishes_on_coordinate_line(const Poly<10>& quartic, int i, int j)
{
    if (i < 0 || j < 0 || i > 4 || j > 4 || i == j)
        throw Error("line index pair must be two distinct indices in 0..4");
    return restricts_to_zero(quartic, 5 + i, 5 + j);
}

bool hessian_line_check(const Lambda& l, int i, int j)
{
    return vanishes_on_coordinate_line(hessian_equations(l).quartic, i, j);
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y)
{
    return {x.num * y.den + y.num * x.den, x.den * y.den};
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y)
{
    return {x.num * y.num, x.den * y.den};
}

RationalFunction reciprocal(const RationalFunction& x)
{
    if (x.num.is_zero())
        throw Error("reciprocal of zero rational function");
    return {x.den, x.num};
}

namespace {

std::array<RationalFunction, 5> lambda_constants(const Lambda& l)
{
    std::array<RationalFunction, 5> c;
    for (std::size_t i = 0; i < 5; ++i) {
        if (l[i] == 0)
            throw Error("Sylvester degenerate for μ");
        c[i] = {PolyZ::constant(l[i].get_num()), PolyZ::constant(l[i].get_den())};
    }
    return c;
}

RationalFunction eq1(const std::vector<RationalFunction>& x)
{
    RationalFunction s{PolyZ(), PolyZ::constant(1)};
    for (const auto& xi : x)
        s = s + xi;
    return s;
}

RationalFunction eq2(const Lambda& l, const std::vector<RationalFunction>& x)
{
    const auto c = lambda_constants(l);
    RationalFunction s{PolyZ(), PolyZ::constant(1)};
    for (std::size_t i = 0; i < 5; ++i)
        s = s + reciprocal(c[i] * x[i]);
    return s;
}

std::vector<RationalFunction> identity_map()
{
    std::vector<RationalFunction> x;
    for (std::size_t i = 0; i < 5; ++i)
        x.push_back(RationalFunction::of(PolyZ::var(i)));
    return x;
}

}  // namespace

std::vector<RationalFunction> enriques_map(const Lambda& l)
{
    const auto c = lambda_constants(l);
    std::vector<RationalFunction> out;
    for (std::size_t i = 0; i < 5; ++i)
        out.push_back(reciprocal(c[i] * RationalFunction::of(PolyZ::var(i))));
    return out;
}

bool enriques_involution_check(const Lambda& l)
{
    const auto id = identity_map();
    const auto iota = enriques_map(l);
    return eq1(iota) == eq2(l, id) && eq2(l, iota) == eq1(id);
}

bool enriques_is_involution(const Lambda& l)
{
    const auto c = lambda_constants(l);
    const auto iota = enriques_map(l);
    for (std::size_t i = 0; i < 5; ++i)
        if (!(reciprocal(c[i] * iota[i]) == RationalFunction::of(PolyZ::var(i))))
            return false;
    return true;
}

LocusReport classify(const Lambda& l)
{
    primitive_integer(l);
    LocusReport r;
    r.sylvester_degenerate = elem_sym(l)[4] == 0;
    r.singular = delta_sing(l) == 0;
    r.eckardt = vandermonde(l) == 0;
    r.kummer = kummer_invariant(l) == 0;
    return r;
}

}  // namespace hk3

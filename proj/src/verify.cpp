#include "hk3/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hk3/correspondence.hpp"
#include "hk3/cubic.hpp"
#include "hk3/heegner.hpp"
#include "hk3/hermitian.hpp"
#include "hk3/lattice.hpp"
#include "hk3/sampling.hpp"

namespace hk3 {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string id, std::string claim, bool pass, std::string detail = {})
{
    out.push_back({std::move(id), std::move(claim), pass, std::move(detail)});
}

std::string count(long good, long total) { return std::to_string(good) + "/" + std::to_string(total); }

EisMat2 m2(Eis a, Eis b, Eis c, Eis d)
{
    EisMat2 r;
    r(0, 0) = a;
    r(0, 1) = b;
    r(1, 0) = c;
    r(1, 1) = d;
    return r;
}

bool same_up_to_unit(const EisMat4& a, const EisMat4& b)
{
    for (const auto& u : eis_units()) {
        EisMat4 s = b;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                s(i, j) = u * b(i, j);
        if (s == a)
            return true;
    }
    return false;
}

bool is_identity_mod2(const OrthMatrix& g)
{
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if ((g(i, j) - (i == j ? 1 : 0)) % 2 != 0)
                return false;
    return true;
}

bool is_scalar(const EisMat2& a)
{
    return a(0, 1).is_zero() && a(1, 0).is_zero() && a(0, 0) == a(1, 1);
}

/// The 72 monomial matrices with unit entries.
std::vector<EisMat2> monomial_units()
{
    std::vector<EisMat2> out;
    for (const auto& u : eis_units())
        for (const auto& v : eis_units()) {
            out.push_back(m2(u, 0, 0, v));
            out.push_back(m2(0, u, v, 0));
        }
    return out;
}

Lambda random_lambda(Rng& rng)
{
    Lambda l;
    for (auto& x : l) {
        do
            x = ratio(rng.uniform(-30, 30), rng.uniform(1, 12));
        while (x == 0);
    }
    return l;
}

// --- suites --------------------------------------------------------------------

Checks disc_group(Rng&)
{
    Checks out;
    const auto g = enumerate_disc_orthogonal();
    add(out, "disc-group/order", "O(q_M) has order 240", g.elements.size() == 240,
        std::to_string(g.elements.size()) + " automorphisms");

    std::set<std::array<int, 5>> image;
    std::vector<DiscAutomorphism> kernel;
    bool all_preserve = true;
    for (std::size_t k = 0; k < g.elements.size(); ++k) {
        image.insert(g.action[k].perm);
        if (g.action[k] == S5Perm::identity())
            kernel.push_back(g.elements[k]);
        all_preserve = all_preserve && g.elements[k].preserves_form();
    }
    add(out, "disc-group/form", "every enumerated automorphism preserves q_M", all_preserve);
    add(out, "disc-group/s5-image", "O(q_M) acts on the isotropic classes v1..v5 through all of S5",
        image.size() == 120, std::to_string(image.size()) + " permutations");
    const bool kernel_ok = kernel.size() == 2 &&
                           std::find(kernel.begin(), kernel.end(), DiscAutomorphism::identity()) !=
                               kernel.end() &&
                           std::find(kernel.begin(), kernel.end(), disc_inversion()) != kernel.end();
    add(out, "disc-group/kernel", "the kernel of the S5 action is {±1}", kernel_ok,
        std::to_string(kernel.size()) + " elements");
    return out;
}

Checks quotient_group(Rng&)
{
    Checks out;
    std::vector<F4Matrix> gens;
    for (const auto& a : gl2_generators())
        gens.push_back(f_mod2(g_a(a)));
    const auto group = f4_closure(gens);
    add(out, "quotient-group/gl2f4-order", "reductions of gA(A) generate GL2(F4) of order 180",
        group.size() == 180, std::to_string(group.size()) + " elements");
    add(out, "quotient-group/section", "every element of GL2(F4) has an integral lift",
        gl2f4_section_size() == 180, std::to_string(gl2f4_section_size()) + " lifts");

    std::set<std::array<int, 5>> perms;
    int scalars = 0;
    bool even = true;
    for (const auto& m : group) {
        const auto p = p1_permutation(m);
        perms.insert(p);
        S5Perm s;
        s.perm = p;
        even = even && s.is_even();
        if (m(0, 1) == F4(0) && m(1, 0) == F4(0) && m(0, 0) == m(1, 1))
            scalars += 1;
    }
    add(out, "quotient-group/scalars", "GL2(F4) has 3 scalar elements", scalars == 3,
        std::to_string(scalars) + " scalars");
    add(out, "quotient-group/quotient-order", "GL2(F4) modulo scalars acts on P1(F4) with 60 images",
        perms.size() == 60, std::to_string(perms.size()) + " permutations");
    add(out, "quotient-group/even", "the action on the 5 points of P1(F4) is by even permutations", even);
    return out;
}

Checks group_iso(Rng& rng)
{
    using namespace named;
    Checks out;
    const std::vector<std::pair<std::string, OrthMatrix>> gens = {
        {"g1", g1()}, {"g2", g2()}, {"u0", u0()}, {"u1", u1()}, {"u2", u2()}};
    const std::vector<std::string> expected = {"(14)(35)", "(15)(34)", "(12)", "(35)", "(345)"};
    std::string detail;
    bool ok = true;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto s = to_s5(gens[k].second).cycles();
        detail += (k ? " " : "") + gens[k].first + "=" + s;
        ok = ok && s == expected[k];
    }
    add(out, "group-iso/to-s5-generators",
        "g1, g2, u0, u1, u2 act as (14)(35), (15)(34), (12), (35), (345)", ok, detail);

    int hom = 0;
    for (int n = 0; n < 100; ++n) {
        const OrthMatrix a = random_o_plus(rng, 6), b = random_o_plus(rng, 6);
        hom += to_s5(a * b) == to_s5(a) * to_s5(b);
    }
    add(out, "group-iso/to-s5-homomorphism", "O+(M) -> S5 is a homomorphism", hom == 100,
        count(hom, 100));

    int psi_hom_ok = 0;
    for (int n = 0; n < 200; ++n) {
        const EisMat2 a = random_gl2(rng, 4), b = random_gl2(rng, 4);
        psi_hom_ok += psi_hom(a * b) == psi_hom(a) * psi_hom(b);
    }
    add(out, "group-iso/psi-homomorphism", "psi is a homomorphism", psi_hom_ok == 200,
        count(psi_hom_ok, 200));

    int kernel = 0, kernel_scalar = 0;
    for (const auto& u : monomial_units())
        if (psi_hom(u) == OrthMatrix::identity()) {
            ++kernel;
            kernel_scalar += is_scalar(u);
        }
    add(out, "group-iso/psi-unit-kernel", "the kernel of psi on unit matrices is the six scalars",
        kernel == 6 && kernel_scalar == 6, std::to_string(kernel) + " kernel elements");

    // samples: random products, G(2) products and all monomial unit matrices
    std::vector<EisMat2> samples;
    for (int n = 0; n < 100; ++n)
        samples.push_back(random_gl2(rng, 5));
    for (int n = 0; n < 100; ++n) {
        EisMat2 a = EisMat2::identity();
        for (int k = 0; k < 4; ++k)
            a = a * random_hgamma1_token(rng).a;
        samples.push_back(a);
    }
    for (const auto& u : monomial_units())
        samples.push_back(u);
    int literal = 0, modulo = 0;
    std::string first_bad;
    for (const auto& a : samples) {
        const bool lhs = is_identity_mod2(psi_hom(a));
        const bool in_g2_literal = in_g2(a);
        bool in_g2_scalar = false;
        for (const auto& u : eis_units())
            in_g2_scalar = in_g2_scalar || in_g2(m2(u, 0, 0, u) * a);
        literal += lhs == in_g2_literal;
        modulo += lhs == in_g2_scalar;
        if (lhs != in_g2_literal && first_bad.empty())
            first_bad = "counterexample " + to_json_string(a);
    }
    const long total = static_cast<long>(samples.size());
    add(out, "group-iso/psi-mod2", "psi(A) = I6 mod 2 iff A in G(2)", literal == total,
        count(literal, total) + (first_bad.empty() ? "" : "; " + first_bad));
    add(out, "group-iso/psi-mod2-scalars", "psi(A) = I6 mod 2 iff A in G(2) up to a scalar unit",
        modulo == total, count(modulo, total));

    add(out, "group-iso/psi-g1", "psi([[1,0],[1,1]]) = g1", psi_hom(m2(1, 0, 1, 1)) == g1());
    const OrthMatrix lit = psi_hom(m2(0, -1, 1, -1));
    add(out, "group-iso/psi-u2", "psi([[0,-1],[1,-1]]) = u2", lit == u2(),
        lit == u2() ? "" : "psi([[0,-1],[1,-1]]) differs from u2");
    add(out, "group-iso/psi-u2-diagonal", "psi(diag(w,1)) = u2",
        psi_hom(m2(Eis::omega(), 0, 0, 1)) == u2());

    int eq = 0, eq_total = 0;
    std::string bad;
    for (const auto& e : generator_table())
        for (int n = 0; n < 20; ++n) {
            ++eq_total;
            const bool pass = equivariance_check(e, random_chart_point(rng));
            eq += pass;
            if (!pass && bad.empty())
                bad = "; first failure " + e.name;
        }
    add(out, "group-iso/dictionary",
        "every orthogonal generator and its Hermitian partner act compatibly under Psi",
        eq == eq_total, count(eq, eq_total) + bad);

    int trans = 0, trans_total = 0;
    std::map<std::array<int, 4>, OrthMatrix> cache;
    for (int a = 0; a < 625; ++a) {
        std::array<int, 4> m{};
        for (int k = 0, v = a; k < 4; ++k, v /= 5)
            m[k] = v % 5 - 2;
        cache[m] = translation_h({m[0], m[1], m[2], m[3]});
    }
    for (const auto& [ma, ha] : cache)
        for (const auto& [mb, hb] : cache) {
            ++trans_total;
            trans += ha * hb ==
                     translation_h({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]});
        }
    add(out, "group-iso/translations", "h(a)h(b) = h(a+b) for all |m_i| <= 2",
        trans == trans_total, count(trans, trans_total));
    return out;
}

Checks enr_iso(Rng& rng)
{
    Checks out;
    int in_enr = 0;
    for (int n = 0; n < 100; ++n) {
        const GenWordH w = random_hgamma1_word(rng, 12);
        in_enr += is_in_enr(herm_to_orth(w, false, false));
    }
    add(out, "enr-iso/hgamma1-image", "images of HGamma1(2) lie in SO+_Enr (mod 2 congruences)",
        in_enr == 100, count(in_enr, 100));

    int back = 0, back_total = 0;
    for (int n = 0; n < 100; ++n) {
        const OrthMatrix g = product(random_so0_word(rng, 8));
        if (!is_in_enr(g))
            continue;
        ++back_total;
        const HermImage h = orth_to_herm(g);
        back += !h.uses_t && !h.uses_w && membership(product(h.word)) == HClass::hgamma1;
    }
    add(out, "enr-iso/enr-preimage", "elements of SO+(M)_0 in SO+_Enr come from HGamma1(2)",
        back == back_total, count(back, back_total));

    const OrthMatrix g0i42 = named::g0() * named::i42();
    const HermAction wprime = {{HStep::Kind::t},
                               {HStep::Kind::token, HToken::make_a(m2(0, 1, 1, 0))},
                               {HStep::Kind::w}};
    int wp = 0;
    for (int n = 0; n < 20; ++n)
        wp += equivariance_check(g0i42, wprime, random_chart_point(rng));
    add(out, "enr-iso/w-prime", "g0 I42 acts as W' = T [A] W with A = [[0,1],[1,0]]", wp == 20,
        count(wp, 20));
    return out;
}

Checks delta_sing_suite(Rng& rng)
{
    Checks out;
    const bool identity = delta_sing_poly() == delta_sing_invariant_poly();
    add(out, "delta-sing/identity",
        "the radical-free expansion of Delta_Sing equals (I8^2 - 2^6 I16)^2 - 2^14 (I32 + 2^-3 I8 I24)",
        identity,
        std::to_string(delta_sing_poly().num_terms()) + " terms, degree " +
            std::to_string(delta_sing_poly().degree()));
    const Lambda ones{1, 1, 1, 1, 1};
    const auto inv = classical_invariants(ones);
    const Rational a = inv.i8 * inv.i8 - 64 * inv.i16;
    const Rational via_inv = a * a - 16384 * (inv.i32 + inv.i8 * inv.i24 / 8);
    const Rational via_exp = delta_sing(ones);
    add(out, "delta-sing/value", "Delta_Sing(1,1,1,1,1) = -1215 from both formulas",
        via_exp == -1215 && via_inv == -1215, to_string(via_exp) + " and " + to_string(via_inv));
    add(out, "delta-sing/vanishing", "Delta_Sing(1,1,1,1,1/16) = 0",
        delta_sing({1, 1, 1, 1, ratio(1, 16)}) == 0);
    int agree = 0;
    for (int n = 0; n < 20; ++n) {
        const Lambda l = random_lambda(rng);
        agree += delta_sing(l) == delta_sing_invariant_poly().eval(l);
    }
    add(out, "delta-sing/random", "both formulas agree at random rational lambda", agree == 20,
        count(agree, 20));
    return out;
}

Checks delta_km_suite(Rng& rng)
{
    Checks out;
    add(out, "delta-km/identity",
        "sigma5^3 Delta_Km(1/lambda) = sigma4^3 - 4 sigma3 sigma4 sigma5 + 8 sigma2 sigma5^2",
        delta_km_cleared_poly() == kummer_sigma_poly(),
        std::to_string(kummer_sigma_poly().num_terms()) + " terms");
    const Lambda ones{1, 1, 1, 1, 1};
    add(out, "delta-km/value", "Delta_Km(1,1,1,1,1) = I8 I24 + 8 I32 = 5",
        delta_km(ones) == 5 && kummer_invariant(ones) == 5);
    int agree = 0;
    for (int n = 0; n < 50; ++n) {
        const Lambda l = random_lambda(rng);
        const Rational s5 = elem_sym(l)[4];
        Rational s54 = s5 * s5;
        s54 *= s54;
        // Delta_Km vanishes iff I8 I24 + 8 I32 does, away from sigma5 = 0
        agree += s54 * s5 * s5 * s5 * delta_km(l) == kummer_invariant(l) &&
                 (delta_km(l) == 0) == (kummer_invariant(l) == 0);
    }
    add(out, "delta-km/locus", "Delta_Km = 0 iff I8 I24 + 8 I32 = 0 where sigma5 != 0",
        agree == 50, count(agree, 50));
    return out;
}

Checks heegner_suite(Rng& rng)
{
    Checks out;
    int on = 0, on_total = 0;
    for (Locus l : all_loci)
        for (int n = 0; n < 100; ++n) {
            const PeriodPoint p = random_locus_point(l, rng);
            const auto recs = perp_equivalence(p);
            bool ok = true;
            for (const auto& r : recs)
                ok = ok && r.consistent() && (r.locus != l || r.perp);
            on += ok;
            ++on_total;
        }
    add(out, "heegner/on-locus", "z perp v iff the coordinate condition iff the tau condition (on each locus)",
        on == on_total, count(on, on_total));
    int gen = 0;
    for (int n = 0; n < 100; ++n) {
        bool ok = true;
        for (const auto& r : perp_equivalence(random_chart_point(rng)))
            ok = ok && r.consistent();
        gen += ok;
    }
    add(out, "heegner/generic", "the same biconditionals hold at generic points", gen == 100,
        count(gen, 100));
    const std::map<Locus, std::string> forms = {{Locus::node, "<2>+<6>+<-2>^3"},
                                                {Locus::eckardt, "U+U(2)+<-12>"},
                                                {Locus::ns, "U+U(2)+<-4>"},
                                                {Locus::km, "U(2)+U(2)+<-4>"}};
    for (const auto& c : complement_gram_verify()) {
        std::string detail = std::string(c.orthogonal ? "" : "basis not orthogonal; ") +
                             (c.gram_matches ? "" : "Gram differs; ") + "det " +
                             to_string(Rational(c.basis_det)) + " vs complement " +
                             to_string(Rational(c.complement_det));
        add(out, "heegner/complement-" + to_string(c.locus),
            "the listed basis of the complement of the " + to_string(c.locus) + " vector has Gram " +
                forms.at(c.locus),
            c.ok(), detail);
    }
    const auto orbit = orbit_relation_check(50, rng);
    add(out, "heegner/orbits", "T and the B1, B2 shifts preserve H_NS; B3 maps H_NS onto H_Km; B4 onto T H_Km",
        orbit.ok(), count(orbit.shift_b3_km, orbit.samples) + " Km shifts");
    return out;
}

Checks decompose_fuzz(Rng& rng)
{
    Checks out;
    int h1 = 0;
    for (int n = 0; n < 100; ++n) {
        const EisMat4 g = product(random_hgamma1_word(rng, 12));
        h1 += product(decompose_hgamma1(g)) == g;
    }
    add(out, "decompose-fuzz/hgamma1", "HGamma1(2) words decompose and re-multiply exactly",
        h1 == 100, count(h1, 100));

    int h0 = 0;
    for (int n = 0; n < 100; ++n) {
        const EisMat4 g = random_hgamma0(rng, 6);
        const auto d = decompose_hgamma0(g);
        h0 += g_a(d.a) * product(d.word) == g;
    }
    add(out, "decompose-fuzz/hgamma0", "HGamma0(2) elements split as gA(A) times HGamma1(2)",
        h0 == 100, count(h0, 100));

    int so = 0;
    for (int n = 0; n < 100; ++n) {
        const OrthMatrix x = product(random_so0_word(rng, 12));
        so += product(decompose_so0(x)) == x;
    }
    add(out, "decompose-fuzz/so0", "SO+(M)_0 words decompose and re-multiply exactly", so == 100,
        count(so, 100));

    int op = 0;
    for (int n = 0; n < 100; ++n) {
        const OrthMatrix g = random_o_plus(rng, 12);
        const HermImage h = orth_to_herm(g);
        const OrthMatrix back = herm_to_orth(h.word, h.uses_t, h.uses_w);
        op += back == g || back == -g;
    }
    add(out, "decompose-fuzz/o-plus", "O+(M) -> Hermitian side -> O+(M) is the identity up to -I6",
        op == 100, count(op, 100));

    int hm = 0;
    for (int n = 0; n < 100; ++n) {
        GenWordH w = random_hgamma1_word(rng, 12);
        if (rng.coin())
            w.insert(w.begin(), HToken::make_a(random_gl2(rng, 3)));
        const bool t = rng.coin(), wf = rng.coin();
        const HermImage h = orth_to_herm(herm_to_orth(w, t, wf));
        hm += h.uses_t == t && h.uses_w == wf && same_up_to_unit(product(h.word), product(w));
    }
    add(out, "decompose-fuzz/herm", "Hermitian side -> O+(M) -> Hermitian side is the identity up to the six units",
        hm == 100, count(hm, 100));
    return out;
}

Checks hessian_suite(Rng& rng)
{
    Checks out;
    int nodes = 0;
    for (int n = 0; n < 12; ++n) {
        const Lambda l = random_lambda(rng);
        const auto eqs = hessian_equations(l);
        bool ok = true;
        for (const auto& p : hessian_singular_points(l))
            ok = ok && hessian_is_node(eqs, p);
        nodes += ok;
    }
    add(out, "hessian/nodes", "the ten points P_ijk satisfy both equations and are singular",
        nodes == 12, count(nodes, 12));
    const auto sym = hessian_quartic_symbolic();
    bool lines = true;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            lines = lines && vanishes_on_coordinate_line(sym, i, j);
    add(out, "hessian/lines", "the cleared quartic vanishes identically on every X_i = X_j = 0", lines);
    int enr = 0;
    for (int n = 0; n < 6; ++n) {
        const Lambda l = random_lambda(rng);
        enr += enriques_involution_check(l) && enriques_is_involution(l);
    }
    add(out, "hessian/enriques", "X_i -> 1/(lambda_i X_i) is an involution swapping the two equations",
        enr == 6, count(enr, 6));
    return out;
}

using Suite = std::function<Checks(Rng&)>;

const std::vector<std::pair<std::string, Suite>>& suite_table()
{
    static const std::vector<std::pair<std::string, Suite>> t = {
        {"disc-group", disc_group},       {"quotient-group", quotient_group},
        {"group-iso", group_iso},         {"enr-iso", enr_iso},
        {"delta-sing", delta_sing_suite}, {"delta-km", delta_km_suite},
        {"heegner", heegner_suite},       {"decompose-fuzz", decompose_fuzz},
        {"hessian", hessian_suite},
    };
    return t;
}

} // namespace

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& VerifyReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return c;
    throw Error("no check named " + id);
}

std::string VerifyReport::text() const
{
    std::ostringstream s;
    s << "suite " << suite << " seed " << seed << "\n";
    long passed = 0;
    for (const auto& c : checks) {
        passed += c.pass;
        s << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.claim;
        if (!c.detail.empty())
            s << " [" << c.detail << "]";
        s << "\n";
    }
    s << passed << "/" << checks.size() << " checks passed\n";
    return s.str();
}

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suite_table())
            n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed)
{
    VerifyReport r;
    r.suite = suite;
    r.seed = seed;
    bool found = false;
    const auto& table = suite_table();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& [name, fn] = table[k];
        if (suite != "all" && suite != name)
            continue;
        found = true;
        // each suite draws from its own stream so results do not depend on the others
        Rng rng(seed * 1000003 + k);
        auto checks = fn(rng);
        r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    }
    if (!found)
        throw Error("unknown suite: " + suite);
    return r;
}

} // namespace hk3

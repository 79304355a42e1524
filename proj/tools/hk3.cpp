#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk3/correspondence.hpp"
#include "hk3/cubic.hpp"
#include "hk3/heegner.hpp"
#include "hk3/hermitian.hpp"
#include "hk3/io.hpp"
#include "hk3/lattice.hpp"
#include "hk3/period.hpp"
#include "hk3/verify.hpp"

using namespace hk3;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Envelope {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json diagnostics = json::array();
    bool error = false;
};

int emit(const Envelope& e, int code)
{
    json j;
    j["command"] = e.command;
    j["inputs"] = e.inputs;
    j["outputs"] = e.outputs;
    j["status"] = e.error ? "error" : "ok";
    j["diagnostics"] = e.diagnostics;
    std::cout << j.dump(2) << "\n";
    return code;
}

json word_json(const GenWordH& w)
{
    json a = json::array();
    for (const auto& t : w)
        a.push_back(t.str());
    return a;
}

json word_json(const GenWordO& w)
{
    json a = json::array();
    for (const auto& t : w)
        a.push_back(t.str());
    return a;
}

std::string orientation_name(const OrthMatrix& g)
{
    return orientation(g) == Orientation::plus ? "plus" : "minus";
}

std::string membership_name(Membership m)
{
    switch (m) {
    case Membership::plus: return "plus";
    case Membership::minus: return "minus";
    case Membership::none: return "none";
    }
    return "?";
}

json flags_json(const HeegnerFlags& f)
{
    return {{"node", f.node}, {"eckardt", f.eckardt}, {"ns", f.ns}, {"km", f.km}};
}

// --- commands ------------------------------------------------------------------

int cmd_invariants(Envelope& e, const json& doc)
{
    const Lambda l = io::parse_lambda(doc, "lambda");
    e.inputs["lambda"] = doc;
    const auto s = elem_sym(l);
    json sig = json::array();
    for (const auto& x : s)
        sig.push_back(io::to_json(x));
    const auto inv = classical_invariants(l);
    const auto loc = classify(l);
    e.outputs["sigma"] = sig;
    e.outputs["I8"] = io::to_json(inv.i8);
    e.outputs["I16"] = io::to_json(inv.i16);
    e.outputs["I24"] = io::to_json(inv.i24);
    e.outputs["I32"] = io::to_json(inv.i32);
    e.outputs["I40"] = io::to_json(inv.i40);
    e.outputs["I100"] = io::to_json(inv.i100);
    e.outputs["delta_sing"] = io::to_json(delta_sing(l));
    e.outputs["vandermonde"] = io::to_json(vandermonde(l));
    e.outputs["kummer_invariant"] = io::to_json(kummer_invariant(l));
    if (loc.sylvester_degenerate || std::any_of(l.begin(), l.end(), [](const Rational& x) { return x == 0; }))
        e.outputs["delta_km"] = nullptr;
    else
        e.outputs["delta_km"] = io::to_json(delta_km(l));
    e.outputs["loci"] = {{"sylvester_degenerate", loc.sylvester_degenerate},
                         {"singular", loc.singular},
                         {"eckardt", loc.eckardt},
                         {"kummer", loc.kummer}};
    return kOk;
}

int cmd_orth(Envelope& e, const std::string& action, const json& doc)
{
    const OrthMatrix g = io::parse_orth(doc, "matrix");
    e.inputs["matrix"] = doc;
    const bool orth = is_orthogonal(g);
    if (action == "check") {
        e.outputs["orthogonal"] = orth;
        if (orth) {
            e.outputs["det"] = io::to_json(determinant(g));
            e.outputs["orientation"] = orientation_name(g);
            const bool plus = orientation(g) == Orientation::plus;
            e.outputs["in_k3"] = plus && is_in_k3(g);
            e.outputs["in_enr"] = plus && is_in_enr(g);
        }
        return orth ? kOk : kCheckFailed;
    }
    if (!orth)
        throw Error("matrix is not in O(M)");
    if (action == "decompose") {
        const HermImage h = orth_to_herm(g);
        std::string prefix;
        if (h.uses_t)
            prefix += "u1 ";
        if (h.uses_w)
            prefix += "g0u0I42 ";
        e.outputs["prefix"] = prefix.empty() ? "" : prefix.substr(0, prefix.size() - 1);
        e.outputs["word"] = word_json(h.orth_word);
        e.outputs["sign"] = herm_to_orth(h.word, h.uses_t, h.uses_w) == g ? "+" : "-";
        return kOk;
    }
    if (action == "disc-action") {
        const auto f = disc_action(g);
        json gens = json::array();
        for (const auto& d : disc_generators())
            gens.push_back(f(d).str());
        e.outputs["generator_images"] = gens;
        e.outputs["preserves_form"] = f.preserves_form();
        e.outputs["isotropic_permutation"] = action_on_isotropic(f).cycles();
        return kOk;
    }
    if (action == "to-s5") {
        e.outputs["permutation"] = to_s5(g).cycles();
        return kOk;
    }
    throw Error("unknown orth action " + action);
}

int cmd_herm(Envelope& e, const std::string& action, const json& doc)
{
    const EisMat4 g = io::parse_eis4(doc, "matrix");
    e.inputs["matrix"] = doc;
    const HClass c = membership(g);
    if (action == "check") {
        e.outputs["class"] = to_string(c);
        return c == HClass::not_in_hgamma ? kCheckFailed : kOk;
    }
    if (action == "decompose") {
        if (c == HClass::hgamma1) {
            e.outputs["word"] = word_json(decompose_hgamma1(g));
        } else {
            const auto d = decompose_hgamma0(g);
            e.outputs["a"] = io::to_json(d.a);
            e.outputs["word"] = word_json(d.word);
        }
        return kOk;
    }
    if (action == "mod2") {
        const F4Matrix m = f_mod2(g);
        e.outputs["reduction"] = to_string(m);
        const auto p = p1_permutation(m);
        S5Perm s;
        s.perm = p;
        e.outputs["p1_permutation"] = s.cycles();
        e.outputs["in_hgamma1"] = m == F4Matrix::identity();
        return kOk;
    }
    if (action == "coset") {
        const auto k = phi9_coset_classify(g);
        e.outputs["coset"] = k ? json(*k) : json(nullptr);
        return kOk;
    }
    throw Error("unknown herm action " + action);
}

int cmd_map(Envelope& e, const std::string& action, const json& doc)
{
    if (action == "z-to-tau") {
        const PeriodPoint z = io::parse_z(doc, "z");
        e.inputs["z"] = doc;
        e.outputs["membership"] = membership_name(dm_membership(z));
        e.outputs["tau"] = io::to_json(psi(z));
        return kOk;
    }
    const HermitianPoint tau = io::parse_tau(doc, "tau");
    e.inputs["tau"] = doc;
    e.outputs["z"] = io::to_json(psi_inv(tau));
    return kOk;
}

int cmd_correspond(Envelope& e, const std::string& action, const json& doc, bool t, bool w)
{
    if (action == "o2h") {
        const OrthMatrix g = io::parse_orth(doc, "matrix");
        e.inputs["matrix"] = doc;
        if (!is_orthogonal(g))
            throw Error("matrix is not in O(M)");
        const HermImage h = orth_to_herm(g);
        e.outputs["uses_t"] = h.uses_t;
        e.outputs["uses_w"] = h.uses_w;
        e.outputs["word"] = word_json(h.word);
        e.outputs["matrix"] = io::to_json(product(h.word));
        return kOk;
    }
    const EisMat4 g = io::parse_eis4(doc, "matrix");
    e.inputs["matrix"] = doc;
    e.inputs["t"] = t;
    e.inputs["w"] = w;
    const auto d = decompose_hgamma0(g);
    GenWordH word{HToken::make_a(d.a)};
    word.insert(word.end(), d.word.begin(), d.word.end());
    const OrthMatrix x = herm_to_orth(word, t, w);
    e.outputs["matrix"] = io::to_json(x);
    e.outputs["to_s5"] = to_s5(x).cycles();
    return kOk;
}

int cmd_heegner(Envelope& e, const json& doc)
{
    const HermitianPoint tau = io::parse_tau(doc, "tau");
    e.inputs["tau"] = doc;
    e.outputs["flags"] = flags_json(heegner_membership(tau));
    json recs = json::array();
    for (const auto& r : perp_equivalence(psi_inv(tau)))
        recs.push_back({{"locus", to_string(r.locus)},
                        {"perp", r.perp},
                        {"coordinate", r.coordinate},
                        {"flag", r.flag}});
    e.outputs["perp_equivalence"] = recs;
    return kOk;
}

int cmd_verify(Envelope& e, const std::string& suite, std::uint64_t seed, bool text)
{
    e.inputs["suite"] = suite;
    e.inputs["seed"] = seed;
    const VerifyReport r = run_verify(suite, seed);
    if (text) {
        std::cout << r.text();
        return r.ok() ? kOk : kCheckFailed;
    }
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"id", c.id}, {"claim", c.claim}, {"pass", c.pass}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        checks.push_back(j);
        if (!c.pass)
            e.diagnostics.push_back("failed: " + c.id + ": " + c.claim);
    }
    e.outputs["checks"] = checks;
    e.outputs["passed"] = r.ok();
    return emit(e, r.ok() ? kOk : kCheckFailed);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for Hessian K3 surfaces and Hermitian modular groups"};
    app.require_subcommand(1);

    std::string lambda, matrix, z, tau, suite = "all";
    std::uint64_t seed = 1;
    bool use_t = false, use_w = false, text = false;
    const std::string input_help = "inline JSON, @file or - for stdin";

    auto* inv = app.add_subcommand("invariants", "classical invariants and loci of a Sylvester cubic");
    inv->add_option("--lambda", lambda, "five rationals, " + input_help)->required();

    auto* orth = app.add_subcommand("orth", "6x6 integral matrices acting on M");
    orth->require_subcommand(1);
    for (const char* name : {"check", "decompose", "disc-action", "to-s5"})
        orth->add_subcommand(name)->add_option("--matrix", matrix, input_help)->required();

    auto* herm = app.add_subcommand("herm", "4x4 matrices over Z[w]");
    herm->require_subcommand(1);
    for (const char* name : {"check", "decompose", "mod2", "coset"})
        herm->add_subcommand(name)->add_option("--matrix", matrix, input_help)->required();

    auto* map = app.add_subcommand("map", "the period map Psi and its inverse");
    map->require_subcommand(1);
    map->add_subcommand("z-to-tau")->add_option("--z", z, "six Tower coordinates, " + input_help)->required();
    map->add_subcommand("tau-to-z")->add_option("--tau", tau, "2x2 Tower matrix, " + input_help)->required();

    auto* corr = app.add_subcommand("correspond", "transport between O+(M) and the Hermitian side");
    corr->require_subcommand(1);
    corr->add_subcommand("o2h")->add_option("--matrix", matrix, input_help)->required();
    auto* h2o = corr->add_subcommand("h2o");
    h2o->add_option("--matrix", matrix, "element of HGamma0(2), " + input_help)->required();
    h2o->add_flag("--t", use_t, "compose with T");
    h2o->add_flag("--w", use_w, "compose with W");

    auto* heeg = app.add_subcommand("heegner", "Heegner divisor membership of tau");
    heeg->add_option("--tau", tau, input_help)->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(verify_suites()));
    ver->add_option("--seed", seed, "random seed");
    ver->add_flag("--text", text, "plain text report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    Envelope e;
    CLI::App* sub = app.get_subcommands().front();
    e.command = sub->get_name();
    std::string action;
    if (!sub->get_subcommands().empty()) {
        action = sub->get_subcommands().front()->get_name();
        e.command += " " + action;
    }

    try {
        int code = kOk;
        if (sub == inv)
            code = cmd_invariants(e, io::read_document(lambda));
        else if (sub == orth)
            code = cmd_orth(e, action, io::read_document(matrix));
        else if (sub == herm)
            code = cmd_herm(e, action, io::read_document(matrix));
        else if (sub == map)
            code = cmd_map(e, action, io::read_document(action == "z-to-tau" ? z : tau));
        else if (sub == corr)
            code = cmd_correspond(e, action, io::read_document(matrix), use_t, use_w);
        else if (sub == heeg)
            code = cmd_heegner(e, io::read_document(tau));
        else
            return cmd_verify(e, suite, seed, text);
        return emit(e, code);
    } catch (const Error& err) {
        e.error = true;
        e.diagnostics.push_back(err.what());
        return emit(e, kUsage);
    } catch (const InvariantViolation& err) {
        e.error = true;
        e.diagnostics.push_back(std::string("internal invariant violated: ") + err.what());
        return emit(e, kCheckFailed);
    }
}

// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hk3/verify.hpp"

using namespace hk3;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string suite;
    std::vector<std::string> checks;
    double time_limit_s;  // 0 for none
    std::vector<std::string> notes;  // informational checks, not part of the verdict
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "Delta_Sing expansion equals the invariant formula; value -1215 at (1,1,1,1,1)", "delta-sing",
         {"delta-sing/identity", "delta-sing/value"}, 30, {}},
        {2, "O(q_M) has 240 elements acting on v1..v5 through S5 with kernel {±1}", "disc-group",
         {"disc-group/order", "disc-group/form", "disc-group/s5-image", "disc-group/kernel"}, 120, {}},
        {3, "to_s5 of g1, g2, u0, u1, u2", "group-iso", {"group-iso/to-s5-generators"}, 0, {}},
        {4, "psi homomorphism, unit kernel, mod-2 criterion, psi values of g1 and u2", "group-iso",
         {"group-iso/psi-homomorphism", "group-iso/psi-unit-kernel", "group-iso/psi-mod2",
          "group-iso/psi-g1", "group-iso/psi-u2"},
         0, {"group-iso/psi-mod2-scalars", "group-iso/psi-u2-diagonal"}},
        {5, "generator dictionary equivariance at 20 points each", "group-iso", {"group-iso/dictionary"}, 0, {}},
        {6, "decomposition round trips in HGamma1(2), SO+(M)_0 and O+(M)", "decompose-fuzz",
         {"decompose-fuzz/hgamma1", "decompose-fuzz/so0", "decompose-fuzz/o-plus", "decompose-fuzz/herm"},
         60, {}},
        {7, "GL2(F4) of order 180, quotient 60 acting by even permutations on P1(F4)", "quotient-group",
         {"quotient-group/gl2f4-order", "quotient-group/scalars", "quotient-group/quotient-order",
          "quotient-group/even"},
         0, {}},
        {8, "HGamma1(2) images in SO+_Enr; g0 I42 acts as T [A] W", "enr-iso",
         {"enr-iso/hgamma1-image", "enr-iso/w-prime"}, 0, {}},
        {9, "Heegner biconditionals and complement Gram matrices", "heegner",
         {"heegner/on-locus", "heegner/generic", "heegner/complement-node", "heegner/complement-eckardt",
          "heegner/complement-ns", "heegner/complement-km"},
         0, {"heegner/orbits"}},
        {10, "Delta_Km bridge identity", "delta-km", {"delta-km/identity", "delta-km/value", "delta-km/locus"},
         0, {}},
        {11, "Hessian nodes, lines and Enriques involution", "hessian",
         {"hessian/nodes", "hessian/lines", "hessian/enriques"}, 0, {}},
        {12, "translation subgroup h(a)h(b) = h(a+b) for |m_i| <= 2", "group-iso", {"group-iso/translations"},
         0, {}},
    };

    std::map<std::string, std::pair<VerifyReport, double>> reports;
    auto report = [&](const std::string& suite) -> const std::pair<VerifyReport, double>& {
        auto it = reports.find(suite);
        if (it == reports.end()) {
            const auto t0 = std::chrono::steady_clock::now();
            VerifyReport r = run_verify(suite, 1);
            const double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            it = reports.emplace(suite, std::make_pair(std::move(r), dt)).first;
        }
        return it->second;
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto& [r, seconds] = report(c.suite);
        bool pass = true;
        std::string why;
        for (const auto& id : c.checks) {
            const auto& res = r.find(id);
            if (!res.pass) {
                pass = false;
                why += " | failed " + id + ": " + res.claim + (res.detail.empty() ? "" : " [" + res.detail + "]");
            }
        }
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            pass = false;
            why += " | over time limit";
        }
        for (const auto& id : c.notes) {
            const auto& res = r.find(id);
            why += std::string(" | ") + (res.pass ? "holds" : "fails") + ": " + res.claim;
        }
        failed += !pass;
        std::printf("criterion %2d %s: %s (%.2f s)%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                    seconds, why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hk3 {

struct CheckResult {
    std::string id;     // suite/check
    std::string claim;  // the statement being verified
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    const CheckResult& find(const std::string& id) const;
    std::string text() const;
};

const std::vector<std::string>& verify_suites();

/// Runs a named suite (or "all") deterministically from seed; throws Error
/// for an unknown suite.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed);

} // namespace hk3

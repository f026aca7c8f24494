#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace coker {

struct VerifyOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 7;
    std::uint64_t guard = (1u << 24);
    int workers = 1;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    bool conjectural = false;  // conjectural checks are reported but never fail a run
    nlohmann::ordered_json details;
};

// Suite ids, in acceptance order: prop-fw, thm-main1, bn, lemma-count, lemma-key,
// boreico, corank, cross-route, normalization, mc, determinism, conjecture.
std::vector<std::string> verification_suites();

std::vector<CheckResult> run_verification(const std::vector<std::string>& suites, const VerifyOptions& opts);

}  // namespace coker

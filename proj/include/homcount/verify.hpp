#pragma once

#include <string>
#include <vector>

#include "homcount/bigint.hpp"
#include "homcount/group.hpp"

namespace homcount {

struct VerifyOptions {
    long long max_genus = 2;
    long long max_crosscaps = 3;
    int max_edges = 3;
    long long work_bound = kDefaultWorkBound;
};

struct VerifyReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;  // optional, empty when uninteresting
    };
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The full identity battery for one group: character-table soundness,
// Frobenius-Schur/involution identities, three-way hom-count agreement,
// convolution semigroup, mod-p character expansion, integrality, and the
// mu topological-invariance sweep over small graphs.
VerifyReport verify_group(const FiniteGroup& g, const VerifyOptions& options = {});

} // namespace homcount

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcount/group.hpp"

namespace homcount {

// Irreducible character data computed modulo a prime p ≡ 1 (mod exponent),
// p > 2|G|^2. Degrees are lifted to exact integers; chi and omega rows are
// residues in [0, p). Rows are sorted by (degree, chi row lexicographic).
struct CharacterTableModP {
    std::uint64_t prime = 0;
    std::vector<long long> degrees;
    std::vector<std::vector<std::uint64_t>> chi;    // [irreducible][class]
    std::vector<std::vector<std::uint64_t>> omega;  // central characters |C|chi/d

    int count() const { return static_cast<int>(degrees.size()); }
};

CharacterTableModP character_table_mod_p(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                         std::optional<std::uint64_t> prime_hint = std::nullopt);

// Frobenius-Schur partition: indicator per irreducible in {-1, 0, +1} and
// the index sets G1 (real), G2 (complex), G3 (quaternionic).
struct FSPartition {
    std::vector<int> indicator;
    std::vector<int> g1, g2, g3;
};

FSPartition fs_partition(const FiniteGroup& g, const ConjugacyClassData& ccd,
                         const CharacterTableModP& table);

struct IdentityReport {
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Mod-p diagnostics: row/column orthogonality, sum of squared degrees,
// and the convolution identity chi_l * chi_m = (|G|/d_m) delta chi_l
// evaluated through class structure constants.
IdentityReport verify_character_identities(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                           const CharacterTableModP& table);

} // namespace homcount

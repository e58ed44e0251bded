#pragma once

#include <string>

#include "homcount/bigint.hpp"
#include "homcount/char_table.hpp"
#include "homcount/group.hpp"

namespace homcount {

// Closed surface: orientable of genus g >= 0 or non-orientable with
// k >= 1 cross-caps; chi = 2-2g or 2-k respectively.
struct SurfaceType {
    bool orientable = true;
    long long genus_or_crosscaps = 0;

    static SurfaceType orientable_genus(long long g);
    static SurfaceType non_orientable(long long k);
    static SurfaceType from_euler(bool orientable, long long euler);

    long long euler_characteristic() const {
        return orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
    }

    std::string to_string() const;
    static SurfaceType parse(const std::string& text);

    bool operator==(const SurfaceType&) const = default;
};

enum class RelatorKind { oriented, nonoriented };

// |Hom(pi_1(S), G)| via the character formulas, integer-safe:
//   orientable g>=1:  sum_l (|G|/d_l)^(2g-1) d_l          (g=0 gives 1)
//   non-orientable:   sum_{G1} (|G|/d)^(k-1) d  -  sum_{G3} (-|G|/d)^(k-1) d
Int count_hom_formula(const FiniteGroup& g, const CharacterTableModP& table,
                      const FSPartition& fs, const SurfaceType& surface);

// f_g / r_k as class functions: the base case is tabulated by brute force
// (commutators over |G|^2 pairs, squares over |G| elements), then convolved
// to the n-th power. base_override lets tests inject an independent base.
ClassFunction hom_class_function(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                 RelatorKind kind, long long n,
                                 const ClassFunction* base_override = nullptr);

// Exhaustive enumeration of relator tuples; exact, guarded by work_bound
// (approximate group-operation count |G|^(2g) or |G|^k).
Int brute_force_hom_count(const FiniteGroup& g, const SurfaceType& surface,
                          long long work_bound = kDefaultWorkBound);

// Mod-p congruence between hom_class_function at w_class and the character
// expansion with the (|G|/d)^... weights.
bool check_character_expansion(const FiniteGroup& g, const ConjugacyClassData& ccd,
                               const CharacterTableModP& table, const FSPartition& fs,
                               RelatorKind kind, long long n, int w_class);

} // namespace homcount

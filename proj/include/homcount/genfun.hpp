#pragma once

#include <map>
#include <string>
#include <vector>

#include "homcount/bigint.hpp"
#include "homcount/char_table.hpp"
#include "homcount/group.hpp"
#include "homcount/mobius_graph.hpp"

namespace homcount {

enum class ExpansionMode { oriented, mobius };

// Vertex valence profile j -> v_j with every j >= 3; the generating
// function coefficient of prod t_j^{v_j}.
struct ValenceProfile {
    std::map<int, int> counts;

    long long half_edges() const;
    long long edge_count() const { return half_edges() / 2; }
    long long vertex_count() const;

    void validate() const;  // j >= 3, even half-edge total, >= 1 vertex

    static ValenceProfile parse(const std::string& text);  // "3:2,4:1"
    std::string to_string() const;
};

// prod v_j! j^{v_j} (oriented) or prod v_j! (2j)^{v_j} (mobius): the order
// of the slot-symmetry group acting on labeled configurations.
Int symmetry_order(const ValenceProfile& profile, ExpansionMode mode);

// Labeled Wick sum: over all perfect matchings of the slots (and all twist
// assignments in Möbius mode), keep connected configurations, accumulate
// mu_Gamma(G), then normalize so the result equals
//   sum over isomorphism classes of |G|^(chi(S)-1) |Hom(pi_1(S),G)| / |Aut|.
Rat coefficient_group_side(const ValenceProfile& profile, const FiniteGroup& g,
                           ExpansionMode mode, long long work_bound = kDefaultWorkBound);

// Same enumeration, but each connected configuration contributes the
// character-side weight sum_l d_l^chi (orientable surfaces) or the
// Frobenius-Schur signed sum (non-orientable), exactly in rationals.
Rat coefficient_character_side(const ValenceProfile& profile, const FiniteGroup& g,
                               const CharacterTableModP& table, const FSPartition& fs,
                               ExpansionMode mode);

struct GraphClassInfo {
    MobiusGraph representative;
    long long orbit_size = 0;
    long long automorphisms = 0;
};

// Connected isomorphism classes of configurations for the profile, found
// by orbit enumeration under the slot-symmetry group.
std::vector<GraphClassInfo> connected_graph_classes(const ValenceProfile& profile, ExpansionMode mode);

struct OrbitStabilizerReport {
    bool pass = false;
    Int labeled_connected = 0;   // connected labeled configurations
    Int symmetry_group_order = 0;
    Rat aut_weighted_sum = 0;    // sum over classes of 1/|Aut|
    long long classes = 0;
};

// Checks labeled_connected == symmetry_order * sum 1/|Aut| with |Aut| taken
// from the fatgraph automorphism counter.
OrbitStabilizerReport verify_orbit_stabilizer(const ValenceProfile& profile, ExpansionMode mode);

} // namespace homcount

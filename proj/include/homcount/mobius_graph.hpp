#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "homcount/bigint.hpp"
#include "homcount/group.hpp"
#include "homcount/surface.hpp"

namespace homcount {

// Half-edge combinatorial map with edge twists: rotation cycles are the
// vertices with their cyclic slot order, the matching is a fixed-point-free
// involution pairing half-edges into edges, and each edge carries a twist
// bit (all zero = ribbon graph).
class MobiusGraph {
public:
    MobiusGraph(const std::vector<std::vector<int>>& rotation_cycles,
                const std::vector<std::pair<int, int>>& matching_pairs,
                const std::vector<int>& twist_bits);

    int half_edge_count() const { return h_; }
    int vertex_count() const { return static_cast<int>(cycles_.size()); }
    int edge_count() const { return h_ / 2; }

    int rotation(int half_edge) const { return rotation_[half_edge]; }
    int rotation_inv(int half_edge) const { return rotation_inv_[half_edge]; }
    int partner(int half_edge) const { return matching_[half_edge]; }
    int edge_of(int half_edge) const { return edge_of_[half_edge]; }
    int vertex_of(int half_edge) const { return vertex_of_[half_edge]; }
    int twist(int edge) const { return twists_[edge]; }

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& twists() const { return twists_; }

    bool connected() const { return connected_; }

    // Local regauging: reverse the rotation cycle of one vertex and toggle
    // the twist of each incident edge once per incidence (loops cancel).
    MobiusGraph with_vertex_flipped(int vertex) const;

private:
    int h_ = 0;
    std::vector<int> rotation_, rotation_inv_, matching_, edge_of_, vertex_of_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> twists_;
    std::vector<std::vector<int>> cycles_;
    bool connected_ = false;
};

MobiusGraph build_mobius_graph(const std::vector<std::vector<int>>& rotation_cycles,
                               const std::vector<std::pair<int, int>>& matching_pairs,
                               const std::vector<int>& twist_bits);

struct GraphSurfaceReport {
    long long faces = 0;
    bool orientable = true;
    long long euler_characteristic = 0;
    SurfaceType surface;
};

// Faces via the orientation double cover: trace the side automaton on
// (half-edge, sheet) states; every face of the base lifts to two closed
// trails, so f = orbit count / 2. The base surface is orientable exactly
// when the double cover splits into two components.
GraphSurfaceReport surface_of_graph(const MobiusGraph& graph);

// One vertex carrying f-1 tadpole loops followed by g interleaved two-loop
// flowers, all untwisted; embeds with f faces on the genus-g surface.
MobiusGraph standard_graph(long long genus, long long faces);

// Number of assignments of a group element to every half-edge such that
// paired half-edges carry mutually inverse labels (equal labels across a
// twisted edge) and the rotation-ordered product at each vertex is the
// identity. Enumerates one label per edge.
Int mu_gamma(const MobiusGraph& graph, const FiniteGroup& g, long long work_bound = kDefaultWorkBound);

enum class AutMode { oriented, mobius };

// oriented: half-edge bijections commuting with rotation and matching
// (graph must be untwisted). mobius: pairs of a bijection and a vertex
// flip set, where flipped vertices have their cycles reversed and twists
// must match after the flip rule.
long long automorphism_count(const MobiusGraph& graph, AutMode mode);

// Lexicographically least (rotation, matching, twists) encoding over all
// vertex flip subsets; a gauge normal form for graph equality.
std::vector<int> canonical_gauge_encoding(const MobiusGraph& graph);

// Every connected Möbius graph with at most max_edges edges, enumerated as
// labeled maps (all rotation permutations x fixed-point-free involutions x
// twist masks). Intended for exhaustive small-scale checks.
void for_each_connected_graph(int max_edges, bool include_twists,
                              const std::function<void(const MobiusGraph&)>& fn);

} // namespace homcount

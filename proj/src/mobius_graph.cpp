#include "homcount/mobius_graph.hpp"

#include <algorithm>
#include <numeric>

#include "homcount/error.hpp"

namespace homcount {

MobiusGraph::MobiusGraph(const std::vector<std::vector<int>>& rotation_cycles,
                         const std::vector<std::pair<int, int>>& matching_pairs,
                         const std::vector<int>& twist_bits) {
    for (const auto& cycle : rotation_cycles)
        if (cycle.empty()) throw DomainError("empty_vertex_cycle", "rotation cycle must be nonempty");
    h_ = 0;
    for (const auto& cycle : rotation_cycles) h_ += static_cast<int>(cycle.size());
    if (h_ == 0 || h_ % 2 != 0)
        throw DomainError("half_edge_count_mismatch", "half-edge count must be positive and even");
    if (static_cast<int>(matching_pairs.size()) != h_ / 2)
        throw DomainError("half_edge_count_mismatch", "matching must pair every half-edge exactly once");
    if (twist_bits.size() != matching_pairs.size())
        throw DomainError("twist_count_mismatch", "one twist bit per edge required");

    rotation_.assign(h_, -1);
    vertex_of_.assign(h_, -1);
    for (std::size_t v = 0; v < rotation_cycles.size(); ++v) {
        const auto& cycle = rotation_cycles[v];
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % cycle.size()];
            if (a < 0 || a >= h_ || vertex_of_[a] != -1)
                throw DomainError("half_edge_reused", "half-edge missing or referenced twice in rotation");
            vertex_of_[a] = static_cast<int>(v);
            rotation_[a] = b;
        }
    }
    rotation_inv_.assign(h_, -1);
    for (int x = 0; x < h_; ++x) rotation_inv_[rotation_[x]] = x;
    cycles_ = rotation_cycles;

    matching_.assign(h_, -1);
    edge_of_.assign(h_, -1);
    for (std::size_t e = 0; e < matching_pairs.size(); ++e) {
        auto [a, b] = matching_pairs[e];
        if (a < 0 || a >= h_ || b < 0 || b >= h_)
            throw DomainError("half_edge_out_of_range", "matching references a missing half-edge");
        if (a == b) throw DomainError("matching_fixed_point", "matching must have no fixed points");
        if (matching_[a] != -1 || matching_[b] != -1)
            throw DomainError("half_edge_reused", "half-edge paired twice in matching");
        matching_[a] = b;
        matching_[b] = a;
        edge_of_[a] = edge_of_[b] = static_cast<int>(e);
    }
    edges_ = matching_pairs;
    twists_.resize(twist_bits.size());
    for (std::size_t e = 0; e < twist_bits.size(); ++e) {
        if (twist_bits[e] != 0 && twist_bits[e] != 1)
            throw DomainError("bad_twist_bit", "twist bits must be 0 or 1");
        twists_[e] = twist_bits[e];
    }

    // connectivity over half-edges through rotation and matching
    std::vector<char> seen(h_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : {rotation_[x], matching_[x]})
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    connected_ = reached == h_;
}

MobiusGraph build_mobius_graph(const std::vector<std::vector<int>>& rotation_cycles,
                               const std::vector<std::pair<int, int>>& matching_pairs,
                               const std::vector<int>& twist_bits) {
    return MobiusGraph(rotation_cycles, matching_pairs, twist_bits);
}

MobiusGraph MobiusGraph::with_vertex_flipped(int vertex) const {
    std::vector<std::vector<int>> cycles = cycles_;
    std::reverse(cycles[vertex].begin(), cycles[vertex].end());
    std::vector<int> twists = twists_;
    for (int h : cycles_[vertex]) twists[edge_of_[h]] ^= 1;
    return MobiusGraph(cycles, edges_, twists);
}

GraphSurfaceReport surface_of_graph(const MobiusGraph& graph) {
    if (!graph.connected()) throw DomainError("disconnected_graph", "surface requires a connected graph");
    const int h = graph.half_edge_count();
    const int states = 2 * h;
    auto id = [h](int half_edge, int sheet) { return sheet * h + half_edge; };

    // face automaton on (half-edge, sheet): cross the edge, flipping the
    // sheet over a twisted edge, then rotate at the new vertex following
    // the sheet's orientation
    auto next = [&](int state) {
        int sheet = state / h, x = state % h;
        int y = graph.partner(x);
        int s = sheet ^ graph.twist(graph.edge_of(x));
        int z = s == 0 ? graph.rotation(y) : graph.rotation_inv(y);
        return id(z, s);
    };

    std::vector<char> visited(states, 0);
    long long orbits = 0;
    for (int s0 = 0; s0 < states; ++s0) {
        if (visited[s0]) continue;
        ++orbits;
        int s = s0;
        while (!visited[s]) {
            visited[s] = 1;
            s = next(s);
        }
    }
    if (orbits % 2 != 0)
        throw DomainError("face_trace_mismatch", "double-cover face trails failed to pair up");

    // orientability: the double cover of the surface is disconnected
    // exactly when no closed walk reverses orientation
    std::vector<char> comp_seen(states, 0);
    std::vector<int> stack{id(0, 0)};
    comp_seen[id(0, 0)] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int state = stack.back();
        stack.pop_back();
        ++reached;
        int sheet = state / h, x = state % h;
        int neighbors[2] = {id(graph.rotation(x), sheet),
                            id(graph.partner(x), sheet ^ graph.twist(graph.edge_of(x)))};
        for (int nb : neighbors)
            if (!comp_seen[nb]) {
                comp_seen[nb] = 1;
                stack.push_back(nb);
            }
    }

    GraphSurfaceReport report;
    report.faces = orbits / 2;
    report.orientable = reached != states;
    report.euler_characteristic = graph.vertex_count() - graph.edge_count() + report.faces;
    report.surface = SurfaceType::from_euler(report.orientable, report.euler_characteristic);
    return report;
}

MobiusGraph standard_graph(long long genus, long long faces) {
    if (genus < 0) throw DomainError("negative_genus", "genus must be >= 0");
    if (faces < 1) throw DomainError("bad_face_count", "face count must be >= 1");
    if (genus == 0 && faces == 1)
        throw DomainError("unsupported_standard_graph",
                          "(g,f)=(0,1) has no standard graph: the construction needs at least one edge");
    const long long e = (faces - 1) + 2 * genus;
    std::vector<int> cycle(2 * e);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (long long t = 0; t < faces - 1; ++t)
        pairs.emplace_back(static_cast<int>(2 * t), static_cast<int>(2 * t + 1));
    const int base = static_cast<int>(2 * (faces - 1));
    for (long long q = 0; q < genus; ++q) {
        int b = base + static_cast<int>(4 * q);
        pairs.emplace_back(b, b + 2);
        pairs.emplace_back(b + 1, b + 3);
    }
    return MobiusGraph({cycle}, pairs, std::vector<int>(pairs.size(), 0));
}

Int mu_gamma(const MobiusGraph& graph, const FiniteGroup& g, long long work_bound) {
    if (!graph.connected()) throw DomainError("disconnected_graph", "mu requires a connected graph");
    const int e = graph.edge_count();
    const int n = g.order();
    if (int_pow(Int(n), e) > Int(work_bound))
        throw DomainError("work_bound_exceeded", "mu enumeration exceeds the work bound");

    // Deterministic edge order aimed at completing vertices early: at each
    // step pick the unassigned edge whose endpoints have the fewest
    // unassigned slots remaining, breaking ties by edge index.
    const int v = graph.vertex_count();
    std::vector<int> remaining(v);
    for (int vid = 0; vid < v; ++vid) remaining[vid] = static_cast<int>(graph.cycles()[vid].size());
    std::vector<int> edge_order;
    std::vector<char> used(e, 0);
    std::vector<int> rem = remaining;
    for (int step = 0; step < e; ++step) {
        int best = -1, best_score = 1 << 30;
        for (int ei = 0; ei < e; ++ei) {
            if (used[ei]) continue;
            auto [a, b] = graph.edges()[ei];
            int score = rem[graph.vertex_of(a)] + rem[graph.vertex_of(b)];
            if (score < best_score) {
                best_score = score;
                best = ei;
            }
        }
        used[best] = 1;
        edge_order.push_back(best);
        auto [a, b] = graph.edges()[best];
        --rem[graph.vertex_of(a)];
        --rem[graph.vertex_of(b)];
    }

    // completion step at which each vertex becomes fully labeled
    std::vector<int> slots_left = remaining;
    std::vector<std::vector<int>> complete_at(e);
    for (int step = 0; step < e; ++step) {
        auto [a, b] = graph.edges()[edge_order[step]];
        for (int half : {a, b}) {
            if (--slots_left[graph.vertex_of(half)] == 0) {
                complete_at[step].push_back(graph.vertex_of(half));
                slots_left[graph.vertex_of(half)] = -1;  // fire once for loops closing a vertex
            }
        }
    }

    std::vector<int> label(graph.half_edge_count(), -1);
    Int count = 0;
    std::function<void(int)> rec = [&](int step) {
        if (step == e) {
            ++count;
            return;
        }
        int ei = edge_order[step];
        auto [a, b] = graph.edges()[ei];
        for (int w = 0; w < n; ++w) {
            label[a] = w;
            label[b] = graph.twist(ei) ? w : g.inv(w);
            bool ok = true;
            for (int vid : complete_at[step]) {
                int prod = FiniteGroup::identity;
                for (int half : graph.cycles()[vid]) prod = g.mul(prod, label[half]);
                if (prod != FiniteGroup::identity) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(step + 1);
        }
        label[a] = label[b] = -1;
    };
    rec(0);
    return count;
}

namespace {

// Seeded propagation: a commuting bijection of a connected map is fixed by
// the image of one half-edge (plus the seed vertex's flip flag in Möbius
// mode). Flip flags of further vertices are forced by the twist rule.
long long count_automorphisms(const MobiusGraph& graph, bool allow_flips) {
    const int h = graph.half_edge_count();
    long long count = 0;
    for (int seed_image = 0; seed_image < h; ++seed_image) {
        for (int seed_flip = 0; seed_flip < (allow_flips ? 2 : 1); ++seed_flip) {
            std::vector<int> phi(h, -1);
            std::vector<int> flip(graph.vertex_count(), -1);
            phi[0] = seed_image;
            flip[graph.vertex_of(0)] = seed_flip;
            std::vector<int> stack{0};
            bool ok = true;
            while (ok && !stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                int vx = graph.vertex_of(x);
                // within the vertex: rotation step, possibly reversed
                int rx = graph.rotation(x);
                int image = flip[vx] ? graph.rotation_inv(phi[x]) : graph.rotation(phi[x]);
                if (phi[rx] == -1) {
                    phi[rx] = image;
                    stack.push_back(rx);
                } else if (phi[rx] != image) {
                    ok = false;
                }
                if (!ok) break;
                // across the edge: matching step; the far vertex's flip is
                // forced by matching twists
                int mx = graph.partner(x);
                int mimage = graph.partner(phi[x]);
                int forced_flip = flip[vx] ^ graph.twist(graph.edge_of(x)) ^ graph.twist(graph.edge_of(phi[x]));
                int vm = graph.vertex_of(mx);
                if (phi[mx] == -1) {
                    phi[mx] = mimage;
                    if (flip[vm] == -1)
                        flip[vm] = forced_flip;
                    else if (flip[vm] != forced_flip)
                        ok = false;
                    stack.push_back(mx);
                } else {
                    if (phi[mx] != mimage) ok = false;
                    if (flip[vm] == -1)
                        flip[vm] = forced_flip;
                    else if (flip[vm] != forced_flip)
                        ok = false;
                }
            }
            if (!ok) continue;
            // full verification of the candidate
            std::vector<char> hit(h, 0);
            for (int x = 0; x < h && ok; ++x) {
                if (phi[x] < 0 || hit[phi[x]]) ok = false;
                else hit[phi[x]] = 1;
            }
            for (int x = 0; x < h && ok; ++x) {
                int vx = graph.vertex_of(x);
                int expect = flip[vx] ? graph.rotation_inv(phi[x]) : graph.rotation(phi[x]);
                if (phi[graph.rotation(x)] != expect) ok = false;
                if (phi[graph.partner(x)] != graph.partner(phi[x])) ok = false;
            }
            for (int ei = 0; ei < graph.edge_count() && ok; ++ei) {
                auto [a, b] = graph.edges()[ei];
                int mapped_edge = graph.edge_of(phi[a]);
                int want = graph.twist(ei) ^ flip[graph.vertex_of(a)] ^ flip[graph.vertex_of(b)];
                if (graph.twist(mapped_edge) != want) ok = false;
            }
            if (ok) ++count;
        }
    }
    return count;
}

} // namespace

long long automorphism_count(const MobiusGraph& graph, AutMode mode) {
    if (graph.half_edge_count() > 16)
        throw DomainError("automorphism_size_bound", "automorphism counting is limited to 16 half-edges");
    if (!graph.connected())
        throw DomainError("disconnected_graph", "automorphism counting requires a connected graph");
    if (mode == AutMode::oriented) {
        for (int t : graph.twists())
            if (t != 0)
                throw DomainError("oriented_mode_twisted",
                                  "oriented automorphism counting requires an untwisted graph");
        return count_automorphisms(graph, false);
    }
    return count_automorphisms(graph, true);
}

namespace {

std::vector<int> encode(const MobiusGraph& graph) {
    std::vector<int> code;
    for (int x = 0; x < graph.half_edge_count(); ++x) code.push_back(graph.rotation(x));
    for (int x = 0; x < graph.half_edge_count(); ++x) code.push_back(graph.partner(x));
    // twists keyed by the smaller half-edge of each edge for stability
    std::vector<std::pair<int, int>> keyed;
    for (int ei = 0; ei < graph.edge_count(); ++ei) {
        auto [a, b] = graph.edges()[ei];
        keyed.emplace_back(std::min(a, b), graph.twist(ei));
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto [_, t] : keyed) code.push_back(t);
    return code;
}

} // namespace

std::vector<int> canonical_gauge_encoding(const MobiusGraph& graph) {
    const int v = graph.vertex_count();
    std::vector<int> best;
    for (int mask = 0; mask < (1 << v); ++mask) {
        MobiusGraph flipped = graph;
        for (int vid = 0; vid < v; ++vid)
            if (mask & (1 << vid)) flipped = flipped.with_vertex_flipped(vid);
        std::vector<int> code = encode(flipped);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

void for_each_connected_graph(int max_edges, bool include_twists,
                              const std::function<void(const MobiusGraph&)>& fn) {
    for (int e = 1; e <= max_edges; ++e) {
        const int h = 2 * e;
        std::vector<int> perm(h);
        std::iota(perm.begin(), perm.end(), 0);
        // every permutation is a rotation system; its cycles are the vertices
        do {
            std::vector<std::vector<int>> cycles;
            std::vector<char> seen(h, 0);
            for (int start = 0; start < h; ++start) {
                if (seen[start]) continue;
                std::vector<int> cycle;
                int x = start;
                while (!seen[x]) {
                    seen[x] = 1;
                    cycle.push_back(x);
                    x = perm[x];
                }
                cycles.push_back(std::move(cycle));
            }

            // fixed-point-free involutions as matchings
            std::vector<std::pair<int, int>> pairs;
            std::vector<char> matched(h, 0);
            std::function<void()> match_rec = [&]() {
                int a = -1;
                for (int x = 0; x < h; ++x)
                    if (!matched[x]) {
                        a = x;
                        break;
                    }
                if (a == -1) {
                    for (int mask = 0; mask < (include_twists ? (1 << e) : 1); ++mask) {
                        std::vector<int> twists(e, 0);
                        for (int ei = 0; ei < e; ++ei) twists[ei] = (mask >> ei) & 1;
                        MobiusGraph graph(cycles, pairs, twists);
                        if (graph.connected()) fn(graph);
                    }
                    return;
                }
                matched[a] = 1;
                for (int b = a + 1; b < h; ++b) {
                    if (matched[b]) continue;
                    matched[b] = 1;
                    pairs.emplace_back(a, b);
                    match_rec();
                    pairs.pop_back();
                    matched[b] = 0;
                }
                matched[a] = 0;
            };
            match_rec();
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

} // namespace homcount

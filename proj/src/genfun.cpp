#include "homcount/genfun.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "homcount/error.hpp"

namespace homcount {

long long ValenceProfile::half_edges() const {
    long long h = 0;
    for (auto [j, v] : counts) h += static_cast<long long>(j) * v;
    return h;
}

long long ValenceProfile::vertex_count() const {
    long long v = 0;
    for (auto [_, c] : counts) v += c;
    return v;
}

void ValenceProfile::validate() const {
    if (counts.empty() || vertex_count() < 1)
        throw DomainError("empty_profile", "valence profile needs at least one vertex");
    for (auto [j, v] : counts) {
        if (j < 3) throw DomainError("valence_below_three", "vertex valences must be >= 3");
        if (v < 1) throw DomainError("bad_profile_count", "vertex counts must be positive");
    }
    if (half_edges() % 2 != 0)
        throw DomainError("odd_half_edge_total", "profile has an odd number of half-edges");
}

ValenceProfile ValenceProfile::parse(const std::string& text) {
    ValenceProfile profile;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("bad_profile_string", "profile items must look like j:v");
        std::string js = item.substr(0, colon), vs = item.substr(colon + 1);
        if (js.empty() || vs.empty() ||
            js.find_first_not_of("0123456789") != std::string::npos ||
            vs.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("bad_profile_string", "profile items must look like j:v");
        profile.counts[std::stoi(js)] += std::stoi(vs);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    profile.validate();
    return profile;
}

std::string ValenceProfile::to_string() const {
    std::string out;
    for (auto [j, v] : counts) {
        if (!out.empty()) out += ",";
        out += std::to_string(j) + ":" + std::to_string(v);
    }
    return out;
}

Int symmetry_order(const ValenceProfile& profile, ExpansionMode mode) {
    Int order = 1;
    for (auto [j, v] : profile.counts) {
        for (int i = 2; i <= v; ++i) order *= i;
        long long base = mode == ExpansionMode::mobius ? 2LL * j : j;
        order *= int_pow(Int(base), v);
    }
    return order;
}

namespace {

// Fixed layout for a profile: vertices sorted by valence, consecutive slot
// ranges, rotation = the slot order.
struct Layout {
    std::vector<int> valence;      // per vertex
    std::vector<int> base;         // first slot per vertex
    std::vector<std::vector<int>> cycles;
    int half_edges = 0;

    int vertex_of(int slot) const {
        int v = 0;
        while (v + 1 < static_cast<int>(base.size()) && base[v + 1] <= slot) ++v;
        return v;
    }
};

Layout make_layout(const ValenceProfile& profile) {
    Layout layout;
    int slot = 0;
    for (auto [j, count] : profile.counts)
        for (int c = 0; c < count; ++c) {
            layout.valence.push_back(j);
            layout.base.push_back(slot);
            std::vector<int> cycle(j);
            std::iota(cycle.begin(), cycle.end(), slot);
            layout.cycles.push_back(std::move(cycle));
            slot += j;
        }
    layout.half_edges = slot;
    return layout;
}

bool config_connected(const Layout& layout, const std::vector<std::pair<int, int>>& pairs) {
    const int v = static_cast<int>(layout.valence.size());
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : pairs) parent[find(layout.vertex_of(a))] = find(layout.vertex_of(b));
    for (int i = 1; i < v; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// All perfect matchings of the layout slots, plus all twist masks in
// Möbius mode; connected configurations only.
void for_each_connected_config(const Layout& layout, ExpansionMode mode,
                               const std::function<void(const std::vector<std::pair<int, int>>&,
                                                        const std::vector<int>&)>& fn) {
    const int h = layout.half_edges;
    const int e = h / 2;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> matched(h, 0);
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int x = 0; x < h; ++x)
            if (!matched[x]) {
                a = x;
                break;
            }
        if (a == -1) {
            if (!config_connected(layout, pairs)) return;
            const int masks = mode == ExpansionMode::mobius ? (1 << e) : 1;
            std::vector<int> twists(e, 0);
            for (int mask = 0; mask < masks; ++mask) {
                for (int ei = 0; ei < e; ++ei) twists[ei] = (mask >> ei) & 1;
                fn(pairs, twists);
            }
            return;
        }
        matched[a] = 1;
        for (int b = a + 1; b < h; ++b) {
            if (matched[b]) continue;
            matched[b] = 1;
            pairs.emplace_back(a, b);
            rec();
            pairs.pop_back();
            matched[b] = 0;
        }
        matched[a] = 0;
    };
    rec();
}

void check_profile_scale(const ValenceProfile& profile) {
    profile.validate();
    if (profile.edge_count() > 5)
        throw DomainError("profile_too_large", "coefficient enumeration is limited to 5 edges");
}

} // namespace

Rat coefficient_group_side(const ValenceProfile& profile, const FiniteGroup& g,
                           ExpansionMode mode, long long work_bound) {
    check_profile_scale(profile);
    Layout layout = make_layout(profile);
    Int mu_total = 0;
    for_each_connected_config(layout, mode, [&](const auto& pairs, const auto& twists) {
        MobiusGraph graph(layout.cycles, pairs, twists);
        mu_total += mu_gamma(graph, g, work_bound);
    });
    // mu carries |G|^(f-1); the |G|^(v-e) factor turns it into |G|^(chi-1)
    Rat result(mu_total);
    result *= rat_pow(Int(g.order()), profile.vertex_count() - profile.edge_count());
    result /= Rat(symmetry_order(profile, mode));
    return result;
}

Rat coefficient_character_side(const ValenceProfile& profile, const FiniteGroup& g,
                               const CharacterTableModP& table, const FSPartition& fs,
                               ExpansionMode mode) {
    check_profile_scale(profile);
    Layout layout = make_layout(profile);
    Rat total = 0;
    for_each_connected_config(layout, mode, [&](const auto& pairs, const auto& twists) {
        MobiusGraph graph(layout.cycles, pairs, twists);
        GraphSurfaceReport report = surface_of_graph(graph);
        const long long chi = report.euler_characteristic;
        Rat weight = 0;
        if (report.orientable) {
            for (long long d : table.degrees) weight += rat_pow(Int(d), chi);
        } else {
            for (int l : fs.g1) weight += rat_pow(Int(table.degrees[l]), chi);
            for (int l : fs.g3) weight += rat_pow(Int(-table.degrees[l]), chi);
        }
        total += weight;
    });
    return total / Rat(symmetry_order(profile, mode));
}

namespace {

// One element of the slot-symmetry group: a permutation of same-valence
// vertices together with a dihedral move (rotation offset, optional
// reflection) at every vertex.
struct SlotMove {
    std::vector<int> vertex_image;
    std::vector<int> rotate;
    std::vector<char> reflect;
};

std::vector<SlotMove> slot_symmetry_group(const Layout& layout, ExpansionMode mode) {
    const int v = static_cast<int>(layout.valence.size());

    // group vertices by valence (they occupy consecutive ids by layout)
    std::vector<std::pair<int, int>> blocks;  // [first, last)
    for (int i = 0; i < v;) {
        int j = i;
        while (j < v && layout.valence[j] == layout.valence[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    std::vector<SlotMove> group;
    std::vector<int> image(v);
    std::iota(image.begin(), image.end(), 0);

    // iterate block permutations via odometer over per-block permutations
    std::vector<std::vector<int>> block_perms;
    for (auto [lo, hi] : blocks) {
        std::vector<int> ids(hi - lo);
        std::iota(ids.begin(), ids.end(), lo);
        block_perms.push_back(ids);
    }

    std::function<void(std::size_t)> perm_rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            // odometer over per-vertex dihedral moves
            SlotMove move;
            move.vertex_image = image;
            move.rotate.assign(v, 0);
            move.reflect.assign(v, 0);
            std::function<void(int)> dihedral_rec = [&](int vid) {
                if (vid == v) {
                    group.push_back(move);
                    return;
                }
                const int j = layout.valence[vid];
                for (int refl = 0; refl < (mode == ExpansionMode::mobius ? 2 : 1); ++refl)
                    for (int rot = 0; rot < j; ++rot) {
                        move.rotate[vid] = rot;
                        move.reflect[vid] = static_cast<char>(refl);
                        dihedral_rec(vid + 1);
                    }
            };
            dihedral_rec(0);
            return;
        }
        auto [lo, hi] = blocks[bi];
        std::vector<int>& ids = block_perms[bi];
        std::sort(ids.begin(), ids.end());
        do {
            for (int k = lo; k < hi; ++k) image[k] = ids[k - lo];
            perm_rec(bi + 1);
        } while (std::next_permutation(ids.begin(), ids.end()));
    };
    perm_rec(0);
    return group;
}

int apply_to_slot(const Layout& layout, const SlotMove& move, int slot) {
    int vid = layout.vertex_of(slot);
    int j = layout.valence[vid];
    int q = slot - layout.base[vid];
    int q2 = move.reflect[vid] ? ((move.rotate[vid] - q) % j + j) % j : (q + move.rotate[vid]) % j;
    return layout.base[move.vertex_image[vid]] + q2;
}

// Configuration key: sorted (min, max, twist) triples, flattened.
std::vector<int> encode_config(const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& twists) {
    std::vector<std::array<int, 3>> triples;
    for (std::size_t ei = 0; ei < pairs.size(); ++ei) {
        auto [a, b] = pairs[ei];
        triples.push_back({std::min(a, b), std::max(a, b), twists[ei]});
    }
    std::sort(triples.begin(), triples.end());
    std::vector<int> flat;
    for (const auto& t : triples) {
        flat.push_back(t[0]);
        flat.push_back(t[1]);
        flat.push_back(t[2]);
    }
    return flat;
}

std::vector<int> transform_config(const Layout& layout, const SlotMove& move,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  const std::vector<int>& twists) {
    std::vector<std::pair<int, int>> mapped;
    std::vector<int> mapped_twists;
    for (std::size_t ei = 0; ei < pairs.size(); ++ei) {
        auto [a, b] = pairs[ei];
        int a2 = apply_to_slot(layout, move, a);
        int b2 = apply_to_slot(layout, move, b);
        mapped.emplace_back(a2, b2);
        int t = twists[ei];
        if (move.reflect[layout.vertex_of(a)]) t ^= 1;
        if (move.reflect[layout.vertex_of(b)]) t ^= 1;
        mapped_twists.push_back(t);
    }
    return encode_config(mapped, mapped_twists);
}

} // namespace

std::vector<GraphClassInfo> connected_graph_classes(const ValenceProfile& profile, ExpansionMode mode) {
    profile.validate();
    if (profile.half_edges() > 10)
        throw DomainError("profile_too_large", "isomorphism-class enumeration is limited to 10 half-edges");
    Layout layout = make_layout(profile);
    std::vector<SlotMove> group = slot_symmetry_group(layout, mode);

    std::set<std::vector<int>> seen;
    std::vector<GraphClassInfo> classes;
    for_each_connected_config(layout, mode, [&](const auto& pairs, const auto& twists) {
        std::vector<int> key = encode_config(pairs, twists);
        if (seen.count(key)) return;
        std::set<std::vector<int>> orbit;
        for (const SlotMove& move : group) orbit.insert(transform_config(layout, move, pairs, twists));
        seen.insert(orbit.begin(), orbit.end());

        GraphClassInfo info{MobiusGraph(layout.cycles, pairs, twists),
                            static_cast<long long>(orbit.size()), 0};
        info.automorphisms = automorphism_count(
            info.representative, mode == ExpansionMode::mobius ? AutMode::mobius : AutMode::oriented);
        classes.push_back(std::move(info));
    });
    return classes;
}

OrbitStabilizerReport verify_orbit_stabilizer(const ValenceProfile& profile, ExpansionMode mode) {
    profile.validate();
    if (profile.half_edges() > 10)
        throw DomainError("profile_too_large", "orbit-stabilizer verification is limited to 10 half-edges");
    Layout layout = make_layout(profile);

    OrbitStabilizerReport report;
    report.symmetry_group_order = symmetry_order(profile, mode);
    long long labeled = 0;
    for_each_connected_config(layout, mode, [&](const auto&, const auto&) { ++labeled; });
    report.labeled_connected = labeled;

    std::vector<GraphClassInfo> classes = connected_graph_classes(profile, mode);
    report.classes = static_cast<long long>(classes.size());
    for (const auto& cls : classes)
        report.aut_weighted_sum += Rat(Int(1)) / Rat(Int(cls.automorphisms));
    report.pass = Rat(report.labeled_connected) == Rat(report.symmetry_group_order) * report.aut_weighted_sum;
    return report;
}

} // namespace homcount

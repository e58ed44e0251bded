#include "homcount/verify.hpp"

#include <map>
#include <tuple>

#include "homcount/char_table.hpp"
#include "homcount/error.hpp"
#include "homcount/mobius_graph.hpp"
#include "homcount/modp.hpp"
#include "homcount/surface.hpp"

namespace homcount {

namespace {

bool within_bound(const FiniteGroup& g, long long tuple_len, long long bound) {
    return int_pow(Int(g.order()), tuple_len) <= Int(bound);
}

} // namespace

VerifyReport verify_group(const FiniteGroup& g, const VerifyOptions& options) {
    VerifyReport report;
    ConjugacyClassData ccd = conjugacy_data(g);
    CharacterTableModP table = character_table_mod_p(g, ccd);
    FSPartition fs = fs_partition(g, ccd, table);

    // character table internal identities
    IdentityReport identities = verify_character_identities(g, ccd, table);
    report.checks.push_back({"character_identities", identities.all_pass(), ""});

    // degrees stable under a second prime
    {
        auto p2 = modp::find_prime_in_progression(static_cast<std::uint64_t>(g.exponent()), table.prime);
        bool pass = false;
        if (p2) {
            CharacterTableModP second = character_table_mod_p(g, ccd, *p2);
            pass = second.degrees == table.degrees;
        }
        report.checks.push_back({"degrees_stable_across_primes", pass, ""});
    }

    // sum over G1 degrees - sum over G3 degrees = number of involutions
    {
        Int lhs = 0;
        for (int l : fs.g1) lhs += table.degrees[l];
        for (int l : fs.g3) lhs -= table.degrees[l];
        report.checks.push_back({"fs_involution_identity", lhs == involution_count(g), ""});
    }

    // three-way agreement, orientable
    for (long long genus = 0; genus <= options.max_genus; ++genus) {
        SurfaceType s = SurfaceType::orientable_genus(genus);
        if (!within_bound(g, 2 * genus, options.work_bound)) break;
        Int formula = count_hom_formula(g, table, fs, s);
        Int brute = brute_force_hom_count(g, s, options.work_bound);
        Int conv = genus == 0 ? Int(1) : hom_class_function(g, ccd, RelatorKind::oriented, genus).values[0];
        bool pass = formula == brute && formula == conv;
        report.checks.push_back({"three_way_" + s.to_string(), pass, formula.str()});
    }

    // three-way agreement, non-orientable
    for (long long k = 1; k <= options.max_crosscaps; ++k) {
        SurfaceType s = SurfaceType::non_orientable(k);
        if (!within_bound(g, k, options.work_bound)) break;
        Int formula = count_hom_formula(g, table, fs, s);
        Int brute = brute_force_hom_count(g, s, options.work_bound);
        Int conv = hom_class_function(g, ccd, RelatorKind::nonoriented, k).values[0];
        bool pass = formula == brute && formula == conv;
        report.checks.push_back({"three_way_" + s.to_string(), pass, formula.str()});
    }

    // RP^2 count equals the involution count
    {
        Int formula = count_hom_formula(g, table, fs, SurfaceType::non_orientable(1));
        report.checks.push_back({"rp2_involution_identity", formula == involution_count(g), ""});
    }

    // convolution semigroup: f_{a+b} = f_a * f_b, r_{a+b} = r_a * r_b
    {
        bool pass = true;
        for (long long a = 1; a + 1 <= options.max_genus && pass; ++a)
            for (long long b = 1; a + b <= options.max_genus && pass; ++b) {
                ClassFunction lhs = hom_class_function(g, ccd, RelatorKind::oriented, a + b);
                ClassFunction rhs = convolve(g, ccd, hom_class_function(g, ccd, RelatorKind::oriented, a),
                                             hom_class_function(g, ccd, RelatorKind::oriented, b));
                if (lhs.values != rhs.values) pass = false;
            }
        report.checks.push_back({"semigroup_oriented", pass, ""});
        pass = true;
        for (long long a = 1; a + 1 <= options.max_crosscaps && pass; ++a)
            for (long long b = 1; a + b <= options.max_crosscaps && pass; ++b) {
                ClassFunction lhs = hom_class_function(g, ccd, RelatorKind::nonoriented, a + b);
                ClassFunction rhs = convolve(g, ccd, hom_class_function(g, ccd, RelatorKind::nonoriented, a),
                                             hom_class_function(g, ccd, RelatorKind::nonoriented, b));
                if (lhs.values != rhs.values) pass = false;
            }
        report.checks.push_back({"semigroup_nonoriented", pass, ""});
    }

    // mod-p character expansion at every class
    {
        bool pass = true;
        for (long long genus = 1; genus <= options.max_genus && pass; ++genus)
            for (int c = 0; c < ccd.count() && pass; ++c)
                if (!check_character_expansion(g, ccd, table, fs, RelatorKind::oriented, genus, c)) pass = false;
        for (long long k = 1; k <= options.max_crosscaps && pass; ++k)
            for (int c = 0; c < ccd.count() && pass; ++c)
                if (!check_character_expansion(g, ccd, table, fs, RelatorKind::nonoriented, k, c)) pass = false;
        report.checks.push_back({"character_expansion_mod_p", pass, ""});
    }

    // |G| divides the orientable hom count for positive genus
    {
        bool pass = true;
        for (long long genus = 1; genus <= options.max_genus; ++genus) {
            Int formula = count_hom_formula(g, table, fs, SurfaceType::orientable_genus(genus));
            if (formula % g.order() != 0) pass = false;
        }
        report.checks.push_back({"hom_count_divisible_by_order", pass, ""});
    }

    // mu over the exhaustive small-graph sweep: topological invariance and
    // the |G|^(f-1) |Hom| identity
    if (options.max_edges > 0) {
        bool invariant = true, matches_hom = true;
        std::map<std::tuple<bool, long long, long long>, Int> mu_by_surface;
        std::map<std::string, Int> hom_by_surface;
        for_each_connected_graph(options.max_edges, true, [&](const MobiusGraph& graph) {
            GraphSurfaceReport sr = surface_of_graph(graph);
            Int mu = mu_gamma(graph, g, options.work_bound);
            auto key = std::make_tuple(sr.orientable, sr.euler_characteristic, sr.faces);
            auto [it, inserted] = mu_by_surface.emplace(key, mu);
            if (!inserted && it->second != mu) invariant = false;

            std::string skey = sr.surface.to_string();
            auto hit = hom_by_surface.find(skey);
            if (hit == hom_by_surface.end())
                hit = hom_by_surface.emplace(skey, brute_force_hom_count(g, sr.surface, options.work_bound)).first;
            if (mu != int_pow(Int(g.order()), sr.faces - 1) * hit->second) matches_hom = false;
        });
        report.checks.push_back({"mu_topological_invariance", invariant, ""});
        report.checks.push_back({"mu_matches_hom_count", matches_hom, ""});
    }

    return report;
}

} // namespace homcount

#include "homcount/surface.hpp"

#include <functional>

#include "homcount/error.hpp"
#include "homcount/modp.hpp"

namespace homcount {

SurfaceType SurfaceType::orientable_genus(long long g) {
    if (g < 0) throw DomainError("negative_genus", "orientable genus must be >= 0");
    return SurfaceType{true, g};
}

SurfaceType SurfaceType::non_orientable(long long k) {
    if (k < 1) throw DomainError("bad_crosscap_count", "non-orientable surface needs k >= 1 cross-caps");
    return SurfaceType{false, k};
}

SurfaceType SurfaceType::from_euler(bool orientable, long long euler) {
    if (orientable) {
        if (euler > 2 || euler % 2 != 0)
            throw DomainError("bad_euler_characteristic", "orientable Euler characteristic must be even and <= 2");
        return orientable_genus((2 - euler) / 2);
    }
    return non_orientable(2 - euler);
}

std::string SurfaceType::to_string() const {
    if (orientable) return "orientable:g=" + std::to_string(genus_or_crosscaps);
    return "nonorientable:k=" + std::to_string(genus_or_crosscaps);
}

SurfaceType SurfaceType::parse(const std::string& text) {
    auto parse_tail = [&](const std::string& prefix) -> long long {
        std::string tail = text.substr(prefix.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("bad_surface_string", "surface must be orientable:g=<uint> or nonorientable:k=<uint>");
        return std::stoll(tail);
    };
    if (text.rfind("orientable:g=", 0) == 0) return orientable_genus(parse_tail("orientable:g="));
    if (text.rfind("nonorientable:k=", 0) == 0) return non_orientable(parse_tail("nonorientable:k="));
    throw DomainError("bad_surface_string", "surface must be orientable:g=<uint> or nonorientable:k=<uint>");
}

Int count_hom_formula(const FiniteGroup& g, const CharacterTableModP& table,
                      const FSPartition& fs, const SurfaceType& surface) {
    const Int order = g.order();
    if (surface.orientable) {
        const long long genus = surface.genus_or_crosscaps;
        if (genus == 0) return Int(1);
        Int total = 0;
        for (long long d : table.degrees) total += int_pow(order / d, 2 * genus - 1) * d;
        return total;
    }
    const long long k = surface.genus_or_crosscaps;
    Int total = 0;
    for (int l : fs.g1) {
        long long d = table.degrees[l];
        total += int_pow(order / d, k - 1) * d;
    }
    for (int l : fs.g3) {
        long long d = table.degrees[l];
        total -= int_pow(-order / d, k - 1) * d;
    }
    return total;
}

namespace {

ClassFunction from_element_counts(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                  const std::vector<Int>& per_element) {
    ClassFunction out;
    out.group = &g;
    out.values.resize(ccd.count());
    for (int i = 0; i < ccd.count(); ++i) {
        const Int& v = per_element[ccd.rep[i]];
        for (int member : ccd.classes[i])
            if (per_element[member] != v)
                throw DomainError("not_class_function", "tabulated counts are not constant on a class");
        out.values[i] = v;
    }
    return out;
}

ClassFunction base_class_function(const FiniteGroup& g, const ConjugacyClassData& ccd, RelatorKind kind) {
    const int n = g.order();
    std::vector<Int> counts(n, Int(0));
    if (kind == RelatorKind::oriented) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int w = g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
                ++counts[w];
            }
    } else {
        for (int a = 0; a < n; ++a) ++counts[g.mul(a, a)];
    }
    return from_element_counts(g, ccd, counts);
}

} // namespace

ClassFunction hom_class_function(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                 RelatorKind kind, long long n,
                                 const ClassFunction* base_override) {
    if (n < 1) throw DomainError("bad_power", "hom class function needs n >= 1");
    ClassFunction base = base_override ? *base_override : base_class_function(g, ccd, kind);
    ClassFunction result = base;
    for (long long i = 1; i < n; ++i) result = convolve(g, ccd, result, base);
    return result;
}

Int brute_force_hom_count(const FiniteGroup& g, const SurfaceType& surface, long long work_bound) {
    const int n = g.order();
    const long long tuple_len = surface.orientable ? 2 * surface.genus_or_crosscaps : surface.genus_or_crosscaps;
    if (tuple_len == 0) return Int(1);  // sphere: empty relator
    if (int_pow(Int(n), tuple_len) > Int(work_bound))
        throw DomainError("work_bound_exceeded", "brute-force tuple space exceeds the work bound");

    Int count = 0;
    if (surface.orientable) {
        const long long genus = surface.genus_or_crosscaps;
        // odometer over commutator blocks with cached prefix products
        std::function<void(long long, int)> rec = [&](long long block, int prefix) {
            if (block == genus) {
                if (prefix == FiniteGroup::identity) ++count;
                return;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    int comm = g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
                    rec(block + 1, g.mul(prefix, comm));
                }
        };
        rec(0, FiniteGroup::identity);
    } else {
        const long long k = surface.genus_or_crosscaps;
        std::function<void(long long, int)> rec = [&](long long slot, int prefix) {
            if (slot == k) {
                if (prefix == FiniteGroup::identity) ++count;
                return;
            }
            for (int a = 0; a < n; ++a) rec(slot + 1, g.mul(prefix, g.mul(a, a)));
        };
        rec(0, FiniteGroup::identity);
    }
    return count;
}

bool check_character_expansion(const FiniteGroup& g, const ConjugacyClassData& ccd,
                               const CharacterTableModP& table, const FSPartition& fs,
                               RelatorKind kind, long long n, int w_class) {
    if (n < 1) throw DomainError("bad_power", "character expansion needs n >= 1");
    const std::uint64_t p = table.prime;
    ClassFunction f = hom_class_function(g, ccd, kind, n);
    Int lhs_int = f.values[w_class] % Int(p);
    std::uint64_t lhs = static_cast<std::uint64_t>(lhs_int);

    std::uint64_t rhs = 0;
    const std::uint64_t order_mod = static_cast<std::uint64_t>(g.order()) % p;
    if (kind == RelatorKind::oriented) {
        for (int l = 0; l < table.count(); ++l) {
            std::uint64_t ratio = modp::mul(order_mod, modp::inv(static_cast<std::uint64_t>(table.degrees[l]) % p, p), p);
            std::uint64_t weight = modp::pow(ratio, static_cast<std::uint64_t>(2 * n - 1), p);
            rhs = modp::add(rhs, modp::mul(weight, table.chi[l][w_class], p), p);
        }
    } else {
        for (int l : fs.g1) {
            std::uint64_t ratio = modp::mul(order_mod, modp::inv(static_cast<std::uint64_t>(table.degrees[l]) % p, p), p);
            std::uint64_t weight = modp::pow(ratio, static_cast<std::uint64_t>(n - 1), p);
            rhs = modp::add(rhs, modp::mul(weight, table.chi[l][w_class], p), p);
        }
        for (int l : fs.g3) {
            std::uint64_t ratio = modp::mul(order_mod, modp::inv(static_cast<std::uint64_t>(table.degrees[l]) % p, p), p);
            std::uint64_t weight = modp::pow(modp::neg(ratio, p), static_cast<std::uint64_t>(n - 1), p);
            rhs = modp::sub(rhs, modp::mul(weight, table.chi[l][w_class], p), p);
        }
    }
    return lhs == rhs;
}

} // namespace homcount

#include "homcount/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "homcount/error.hpp"

namespace homcount {

namespace {

void check_table_shape(const std::vector<std::vector<int>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw DomainError("empty_table", "multiplication table is empty");
    for (const auto& row : table) {
        if (row.size() != n)
            throw DomainError("ragged_table", "multiplication table is not square");
        for (int v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw DomainError("table_entry_out_of_range", "table entry outside 0..n-1");
        }
    }
}

// Light's associativity test: pick a greedy generating set, then check
// x*(g*y) == (x*g)*y for every generator g. Sufficient for a closed table.
void check_associativity(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<char> in_closure(n, 0);
    in_closure[0] = 1;
    std::vector<int> closure{0};
    std::vector<int> gens;
    auto close_over = [&](int x) {
        std::vector<int> work{x};
        if (!in_closure[x]) {
            in_closure[x] = 1;
            closure.push_back(x);
        }
        for (std::size_t w = 0; w < work.size(); ++w) {
            // products with everything currently in the closure, both sides
            for (std::size_t c = 0; c < closure.size(); ++c) {
                for (int prod : {t[work[w]][closure[c]], t[closure[c]][work[w]]}) {
                    if (!in_closure[prod]) {
                        in_closure[prod] = 1;
                        closure.push_back(prod);
                        work.push_back(prod);
                    }
                }
            }
        }
    };
    for (int x = 1; x < n; ++x) {
        if (!in_closure[x]) {
            gens.push_back(x);
            close_over(x);
        }
    }
    for (int g : gens) {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (t[t[x][g]][y] != t[x][t[g][y]])
                    throw DomainError("non_associative_table", "multiplication table is not associative");
            }
        }
    }
}

std::vector<std::vector<int>> compose_closure(int degree,
                                              const std::vector<std::vector<int>>& generators,
                                              long long max_order) {
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != degree)
            throw DomainError("generator_degree_mismatch", "generator length differs from degree");
        std::vector<char> seen(degree, 0);
        for (int image : gen) {
            if (image < 0 || image >= degree || seen[image])
                throw DomainError("non_bijective_generator", "generator is not a bijection on 0..degree-1");
            seen[image] = 1;
        }
    }

    std::set<std::vector<int>> elems;
    elems.insert(id);
    std::queue<std::vector<int>> work;
    work.push(id);
    while (!work.empty()) {
        std::vector<int> p = std::move(work.front());
        work.pop();
        for (const auto& gen : generators) {
            std::vector<int> q(degree);
            for (int x = 0; x < degree; ++x) q[x] = p[gen[x]];  // p after gen
            if (elems.insert(q).second) {
                if (static_cast<long long>(elems.size()) > max_order)
                    throw DomainError("closure_bound_exceeded", "permutation closure exceeds the group order bound");
                work.push(q);
            }
        }
    }

    // std::set iterates in lexicographic order; the identity sorts first.
    std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

    const int n = static_cast<int>(sorted.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<int> comp(degree);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < degree; ++x) comp[x] = sorted[a][sorted[b][x]];
            table[a][b] = index.at(comp);
        }
    }
    return table;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// Dihedral group of order 2n: element id = e*n + k encodes r^k s^e.
std::vector<std::vector<int>> dihedral_table(int n) {
    const int m = 2 * n;
    auto idx = [n](int k, int e) { return e * n + k; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int k = e1 ? (k1 - k2 + n) % n : (k1 + k2) % n;
                    t[idx(k1, e1)][idx(k2, e2)] = idx(k, e1 ^ e2);
                }
    return t;
}

// Quaternion units in the order 1,-1,i,-i,j,-j,k,-k; id = 2*axis + sign.
std::vector<std::vector<int>> quaternion8_table() {
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sign_mul[a][b] = 1 when the product of unit axes a,b carries a minus
    // (i*i=-1, i*j=k, j*i=-k, ...); row/col 0 is the real unit.
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax = a / 2, bx = b / 2;
            int sign = (a % 2) ^ (b % 2) ^ sign_mul[ax][bx];
            t[a][b] = 2 * axis_mul[ax][bx] + sign;
        }
    return t;
}

std::vector<std::vector<int>> symmetric_elements(int n, bool even_only) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> elems;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            if (inversions % 2) continue;
        }
        elems.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return elems;  // next_permutation emits lexicographic order
}

std::vector<std::vector<int>> table_from_perms(const std::vector<std::vector<int>>& elems) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    const int degree = static_cast<int>(elems[0].size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<int> comp(degree);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < degree; ++x) comp[x] = elems[a][elems[b][x]];
            t[a][b] = index.at(comp);
        }
    return t;
}

std::vector<std::vector<int>> product_table(const FiniteGroup& l, const FiniteGroup& r) {
    const int nl = l.order(), nr = r.order();
    const int n = nl * nr;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = l.mul(a / nr, b / nr) * nr + r.mul(a % nr, b % nr);
    return t;
}

struct PresetName {
    std::string word;  // lower-cased family name
    int n = -1;        // parameter, -1 when absent
};

PresetName split_preset(const std::string& name) {
    PresetName out;
    std::string head = name;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        head = name.substr(0, colon);
        std::string tail = name.substr(colon + 1);
        if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw DomainError("bad_preset_name", "bad preset parameter in '" + name + "'");
        out.n = std::stoi(tail);
    } else {
        // trailing digits form the parameter: S3, D4, Z12, Q8, ...
        std::size_t d = head.size();
        while (d > 0 && std::isdigit(static_cast<unsigned char>(head[d - 1]))) --d;
        if (d < head.size() && d > 0) {
            out.n = std::stoi(head.substr(d));
            head = head.substr(0, d);
        }
    }
    out.word.reserve(head.size());
    for (char c : head) out.word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

GroupSpec preset_to_spec(const std::string& name);

std::vector<std::vector<int>> preset_table(const std::string& name, const BuildLimits& limits) {
    // product presets written with 'x': Z2xZ2, S3xZ2, ...
    if (auto cross = name.find('x'); cross != std::string::npos && name != "x") {
        GroupSpec spec = GroupSpec::product(preset_to_spec(name.substr(0, cross)),
                                            preset_to_spec(name.substr(cross + 1)));
        return build_group(spec, limits).table_rows();
    }

    PresetName p = split_preset(name);
    auto need_n = [&](int lo, int hi, const char* what) {
        if (p.n < lo || p.n > hi)
            throw DomainError("bad_preset_parameter",
                              std::string(what) + " preset needs a parameter in " + std::to_string(lo) + ".." + std::to_string(hi));
    };
    if (p.word == "trivial") return cyclic_table(1);
    if (p.word == "z" || p.word == "c" || p.word == "cyclic") {
        need_n(1, 64, "cyclic");
        return cyclic_table(p.n);
    }
    if (p.word == "d" || p.word == "dihedral") {
        need_n(1, 5000, "dihedral");
        if (2LL * p.n > limits.max_order)
            throw DomainError("closure_bound_exceeded", "dihedral order exceeds the group order bound");
        return dihedral_table(p.n);
    }
    if (p.word == "s" || p.word == "symmetric") {
        need_n(1, 6, "symmetric");
        return table_from_perms(symmetric_elements(p.n, false));
    }
    if (p.word == "a" || p.word == "alternating") {
        need_n(1, 6, "alternating");
        return table_from_perms(symmetric_elements(p.n, true));
    }
    if ((p.word == "q" || p.word == "quaternion") && p.n == 8) return quaternion8_table();
    throw DomainError("unknown_preset", "unknown preset group '" + name + "'");
}

GroupSpec preset_to_spec(const std::string& name) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::preset;
    s.name = name;
    return s;
}

} // namespace

GroupSpec GroupSpec::preset(std::string name) {
    GroupSpec s;
    s.kind = Kind::preset;
    s.name = std::move(name);
    return s;
}

GroupSpec GroupSpec::permutation(int degree, std::vector<std::vector<int>> generators) {
    GroupSpec s;
    s.kind = Kind::permutation;
    s.degree = degree;
    s.generators = std::move(generators);
    return s;
}

GroupSpec GroupSpec::cayley(std::vector<std::vector<int>> table) {
    GroupSpec s;
    s.kind = Kind::cayley;
    s.table = std::move(table);
    return s;
}

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
    GroupSpec s;
    s.kind = Kind::product;
    s.left = std::make_shared<GroupSpec>(std::move(left));
    s.right = std::make_shared<GroupSpec>(std::move(right));
    return s;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) {
    check_table_shape(table);
    n_ = static_cast<int>(table.size());

    // Latin square check
    for (int a = 0; a < n_; ++a) {
        std::vector<char> row(n_, 0), col(n_, 0);
        for (int b = 0; b < n_; ++b) {
            if (row[table[a][b]]++) throw DomainError("table_not_latin", "row contains a repeated element");
            if (col[table[b][a]]++) throw DomainError("table_not_latin", "column contains a repeated element");
        }
    }
    for (int x = 0; x < n_; ++x) {
        if (table[0][x] != x || table[x][0] != x)
            throw DomainError("missing_identity", "row/column 0 is not a two-sided identity");
    }
    check_associativity(table);

    mul_.resize(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) mul_[static_cast<std::size_t>(a) * n_ + b] = table[a][b];

    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == identity) {
                inv_[a] = b;
                break;
            }

    exponent_ = 1;
    for (int a = 0; a < n_; ++a) exponent_ = std::lcm(exponent_, element_order(a));
}

long long FiniteGroup::element_order(int a) const {
    long long k = 1;
    int x = a;
    while (x != identity) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) rows[a][b] = mul(a, b);
    return rows;
}

FiniteGroup build_group(const GroupSpec& spec, const BuildLimits& limits) {
    switch (spec.kind) {
        case GroupSpec::Kind::preset:
            return FiniteGroup(preset_table(spec.name, limits));
        case GroupSpec::Kind::permutation:
            if (spec.degree < 1) throw DomainError("bad_degree", "permutation degree must be positive");
            return FiniteGroup(compose_closure(spec.degree, spec.generators, limits.max_order));
        case GroupSpec::Kind::cayley:
            if (static_cast<long long>(spec.table.size()) > limits.max_order)
                throw DomainError("closure_bound_exceeded", "cayley table exceeds the group order bound");
            return FiniteGroup(spec.table);
        case GroupSpec::Kind::product: {
            if (!spec.left || !spec.right)
                throw DomainError("bad_product_spec", "product spec needs both factors");
            FiniteGroup l = build_group(*spec.left, limits);
            FiniteGroup r = build_group(*spec.right, limits);
            if (static_cast<long long>(l.order()) * r.order() > limits.max_order)
                throw DomainError("closure_bound_exceeded", "product order exceeds the group order bound");
            return FiniteGroup(product_table(l, r));
        }
    }
    throw DomainError("bad_spec", "unreachable group spec kind");
}

ConjugacyClassData conjugacy_data(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> members;
        std::vector<char> seen(n, 0);
        for (int c = 0; c < n; ++c) {
            int y = g.mul(g.mul(c, x), g.inv(c));
            if (!seen[y]) {
                seen[y] = 1;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        int id = static_cast<int>(classes.size());
        for (int y : members) cls[y] = id;
        classes.push_back(std::move(members));
    }

    std::vector<int> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
        return classes[a][0] < classes[b][0];
    });

    ConjugacyClassData out;
    out.classes.resize(classes.size());
    out.class_of.assign(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.classes[i] = std::move(classes[order[i]]);
        for (int y : out.classes[i]) out.class_of[y] = static_cast<int>(i);
    }
    const int r = out.count();
    out.sizes.resize(r);
    out.rep.resize(r);
    out.inverse_class.resize(r);
    out.square_class.resize(r);
    for (int i = 0; i < r; ++i) {
        out.sizes[i] = static_cast<long long>(out.classes[i].size());
        out.rep[i] = out.classes[i][0];
        out.inverse_class[i] = out.class_of[g.inv(out.rep[i])];
        out.square_class[i] = out.class_of[g.mul(out.rep[i], out.rep[i])];
        for (int y : out.classes[i]) {
            if (out.class_of[g.mul(y, y)] != out.square_class[i])
                throw DomainError("square_class_ill_defined", "squaring a class does not land in one class");
        }
    }
    return out;
}

Int involution_count(const FiniteGroup& g) {
    long long count = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(x, x) == FiniteGroup::identity) ++count;
    return Int(count);
}

ClassFunction delta_identity(const FiniteGroup& g, const ConjugacyClassData& ccd) {
    ClassFunction f;
    f.group = &g;
    f.values.assign(ccd.count(), Int(0));
    f.values[0] = 1;
    return f;
}

namespace {

void check_same_group(const FiniteGroup& g, const ClassFunction& x, const ClassFunction& y, int r) {
    if (x.group != &g || y.group != &g)
        throw DomainError("class_function_group_mismatch", "class functions belong to different groups");
    if (static_cast<int>(x.values.size()) != r || static_cast<int>(y.values.size()) != r)
        throw DomainError("class_function_size_mismatch", "class function length differs from class count");
}

} // namespace

ClassFunction convolve(const FiniteGroup& g, const ConjugacyClassData& ccd,
                       const ClassFunction& x, const ClassFunction& y) {
    const int r = ccd.count();
    check_same_group(g, x, y, r);
    const int n = g.order();

    std::vector<Int> per_element(n, Int(0));
    for (int w = 0; w < n; ++w) {
        Int acc = 0;
        for (int gamma = 0; gamma < n; ++gamma) {
            const Int& xv = x.values[ccd.class_of[g.mul(w, g.inv(gamma))]];
            const Int& yv = y.values[ccd.class_of[gamma]];
            if (xv != 0 && yv != 0) acc += xv * yv;
        }
        per_element[w] = std::move(acc);
    }

    ClassFunction out;
    out.group = &g;
    out.values.resize(r);
    for (int i = 0; i < r; ++i) {
        const Int& v = per_element[ccd.rep[i]];
        for (int member : ccd.classes[i]) {
            if (per_element[member] != v)
                throw DomainError("convolution_not_class_function", "convolution is not constant on a conjugacy class");
        }
        out.values[i] = v;
    }
    return out;
}

ClassStructureConstants class_structure_constants(const FiniteGroup& g, const ConjugacyClassData& ccd) {
    const int r = ccd.count();
    if (static_cast<long long>(r) * r * r > 50'000'000)
        throw DomainError("class_count_bound_exceeded", "too many classes for the dense structure-constant tensor");
    ClassStructureConstants sc;
    sc.num_classes = r;
    sc.a.assign(static_cast<std::size_t>(r) * r * r, 0);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const std::size_t base = static_cast<std::size_t>(ccd.class_of[u]) * r * r;
        for (int v = 0; v < n; ++v)
            ++sc.a[base + static_cast<std::size_t>(ccd.class_of[v]) * r + ccd.class_of[g.mul(u, v)]];
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::size_t idx = (static_cast<std::size_t>(i) * r + j) * r + k;
                if (sc.a[idx] % ccd.sizes[k] != 0)
                    throw DomainError("structure_constant_not_integral", "class algebra count not divisible by class size");
                sc.a[idx] /= ccd.sizes[k];
            }
    return sc;
}

ClassFunction convolve_structure(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                 const ClassStructureConstants& sc,
                                 const ClassFunction& x, const ClassFunction& y) {
    const int r = ccd.count();
    check_same_group(g, x, y, r);
    ClassFunction out;
    out.group = &g;
    out.values.assign(r, Int(0));
    for (int i = 0; i < r; ++i) {
        if (x.values[i] == 0) continue;
        for (int j = 0; j < r; ++j) {
            if (y.values[j] == 0) continue;
            Int prod = x.values[i] * y.values[j];
            for (int k = 0; k < r; ++k) {
                std::int64_t c = sc.at(i, j, k);
                if (c != 0) out.values[k] += prod * c;
            }
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> class_matrix(const FiniteGroup& g,
                                                    const ConjugacyClassData& ccd, int i) {
    const int r = ccd.count();
    const int n = g.order();
    std::vector<std::vector<std::int64_t>> t(r, std::vector<std::int64_t>(r, 0));
    for (int u : ccd.classes[i])
        for (int v = 0; v < n; ++v) ++t[ccd.class_of[v]][ccd.class_of[g.mul(u, v)]];
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            if (t[j][k] % ccd.sizes[k] != 0)
                throw DomainError("structure_constant_not_integral", "class algebra count not divisible by class size");
            t[j][k] /= ccd.sizes[k];
        }
    return t;
}

} // namespace homcount

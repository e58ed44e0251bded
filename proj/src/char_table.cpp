#include "homcount/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homcount/error.hpp"
#include "homcount/modp.hpp"

namespace homcount {

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix class_matrix_mod(const FiniteGroup& g, const ConjugacyClassData& ccd, int i, std::uint64_t p) {
    auto t = class_matrix(g, ccd, i);
    const int r = ccd.count();
    Matrix m(r, std::vector<std::uint64_t>(r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) m[j][k] = static_cast<std::uint64_t>(t[j][k]) % p;
    return m;
}

// Monic characteristic polynomial coefficients c[0..d], c[d] = 1, by the
// Faddeev-LeVerrier recurrence (divisions by 1..d are units mod p).
std::vector<std::uint64_t> char_poly(const Matrix& a, std::uint64_t p) {
    const int d = static_cast<int>(a.size());
    std::vector<std::uint64_t> coeff(d + 1, 0);
    coeff[d] = 1;
    Matrix m(d, std::vector<std::uint64_t>(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    std::uint64_t c = 1;
    for (int k = 1; k <= d; ++k) {
        // m = a * (m + c_{k-1} I)  with c from previous round already added
        Matrix next(d, std::vector<std::uint64_t>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                std::uint64_t v = a[i][l];
                if (v == 0) continue;
                for (int j = 0; j < d; ++j)
                    if (m[l][j] != 0) next[i][j] = modp::add(next[i][j], modp::mul(v, m[l][j], p), p);
            }
        std::uint64_t trace = 0;
        for (int i = 0; i < d; ++i) trace = modp::add(trace, next[i][i], p);
        c = modp::mul(modp::neg(trace, p), modp::inv(k % p, p), p);
        coeff[d - k] = c;
        for (int i = 0; i < d; ++i) next[i][i] = modp::add(next[i][i], c, p);
        m = std::move(next);
    }
    // sign convention: det(xI - A) has the c_k as computed; leading term monic
    return coeff;
}

std::uint64_t eval_poly(const std::vector<std::uint64_t>& coeff, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
        acc = modp::add(modp::mul(acc, x, p), coeff[i], p);
    return acc;
}

// All roots in F_p, ascending, found by exhaustive scan.
std::vector<std::uint64_t> poly_roots(const std::vector<std::uint64_t>& coeff, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t c = 0; c < p; ++c)
        if (eval_poly(coeff, c, p) == 0) roots.push_back(c);
    return roots;
}

// Row-reduced echelon basis of a subspace of F_p^r.
struct Subspace {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(rows.size()); }
};

Subspace echelonize(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Subspace s;
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        std::uint64_t inv = modp::inv(rows[rank][col], p);
        for (int j = col; j < cols; ++j) rows[rank][j] = modp::mul(rows[rank][j], inv, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            std::uint64_t f = rows[i][col];
            for (int j = col; j < cols; ++j)
                rows[i][j] = modp::sub(rows[i][j], modp::mul(f, rows[rank][j], p), p);
        }
        s.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    s.rows = std::move(rows);
    return s;
}

// Nullspace basis of a square matrix over F_p (rows are basis vectors).
std::vector<std::vector<std::uint64_t>> nullspace(Matrix m, std::uint64_t p) {
    const int d = static_cast<int>(m.size());
    Subspace e = echelonize(std::move(m), p);
    std::vector<char> is_pivot(d, 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    std::vector<std::vector<std::uint64_t>> basis;
    for (int free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(d, 0);
        v[free] = 1;
        for (int i = 0; i < e.dim(); ++i)
            v[e.pivots[i]] = modp::neg(e.rows[i][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Matrix of t restricted to the subspace, in the subspace basis.
// Columns: coordinates of t * basis_row[l].
Matrix restrict_to(const Matrix& t, const Subspace& s, std::uint64_t p) {
    const int d = s.dim();
    const int r = static_cast<int>(t.size());
    Matrix rest(d, std::vector<std::uint64_t>(d, 0));
    for (int l = 0; l < d; ++l) {
        std::vector<std::uint64_t> u(r, 0);
        for (int row = 0; row < r; ++row) {
            std::uint64_t acc = 0;
            for (int col = 0; col < r; ++col)
                if (t[row][col] != 0 && s.rows[l][col] != 0)
                    acc = modp::add(acc, modp::mul(t[row][col], s.rows[l][col], p), p);
            u[row] = acc;
        }
        // coordinates read off the pivot entries (basis is RREF)
        std::vector<std::uint64_t> coord(d);
        for (int m2 = 0; m2 < d; ++m2) coord[m2] = u[s.pivots[m2]];
        // invariance check: u must equal sum coord[m] * rows[m]
        for (int col = 0; col < r; ++col) {
            std::uint64_t acc = 0;
            for (int m2 = 0; m2 < d; ++m2)
                if (coord[m2] != 0 && s.rows[m2][col] != 0)
                    acc = modp::add(acc, modp::mul(coord[m2], s.rows[m2][col], p), p);
            if (acc != u[col])
                throw DomainError("eigenspace_splitting_failed",
                                  "class matrix does not preserve an intermediate eigenspace");
        }
        for (int m2 = 0; m2 < d; ++m2) rest[m2][l] = coord[m2];
    }
    return rest;
}

std::uint64_t select_prime(const FiniteGroup& g, std::optional<std::uint64_t> hint) {
    const std::uint64_t order = static_cast<std::uint64_t>(g.order());
    const std::uint64_t exponent = static_cast<std::uint64_t>(g.exponent());
    const std::uint64_t lower = 2 * order * order;
    if (hint) {
        std::uint64_t p = *hint;
        if (!modp::is_prime(p) || p <= lower || (p - 1) % exponent != 0)
            throw DomainError("bad_prime_hint",
                              "prime hint must be a prime ≡ 1 (mod exponent) exceeding 2|G|^2");
        return p;
    }
    auto p = modp::find_prime_in_progression(exponent, lower);
    if (!p) throw DomainError("no_prime_found", "no usable prime below the search bound");
    return *p;
}

} // namespace

CharacterTableModP character_table_mod_p(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                         std::optional<std::uint64_t> prime_hint) {
    const int r = ccd.count();
    const std::uint64_t p = select_prime(g, prime_hint);

    // Simultaneous eigenspace splitting of the commuting class matrices
    // T_i[j][k] = a_ijk. Each common eigenvector, normalized to 1 in the
    // identity-class coordinate, is a row of central character values.
    std::vector<Subspace> spaces;
    {
        std::vector<std::vector<std::uint64_t>> id(r, std::vector<std::uint64_t>(r, 0));
        for (int i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(echelonize(std::move(id), p));
    }

    for (int i = 1; i < r; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.dim() > 1) all_split = false;
        if (all_split) break;

        Matrix t = class_matrix_mod(g, ccd, i, p);
        // Candidate eigenvalues for every subspace at this step: the roots
        // of the full matrix's characteristic polynomial (these are exactly
        // the central character values on class i).
        std::vector<std::uint64_t> candidates = poly_roots(char_poly(t, p), p);

        std::vector<Subspace> next;
        for (auto& s : spaces) {
            if (s.dim() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            Matrix rest = restrict_to(t, s, p);
            auto poly = char_poly(rest, p);
            int found = 0;
            for (std::uint64_t c : candidates) {
                if (eval_poly(poly, c, p) != 0) continue;
                Matrix shifted = rest;
                for (int l = 0; l < s.dim(); ++l) shifted[l][l] = modp::sub(shifted[l][l], c, p);
                auto null_rows = nullspace(std::move(shifted), p);
                if (null_rows.empty()) continue;
                // lift coordinates back to F_p^r
                std::vector<std::vector<std::uint64_t>> lifted;
                for (const auto& nr : null_rows) {
                    std::vector<std::uint64_t> v(r, 0);
                    for (int m2 = 0; m2 < s.dim(); ++m2) {
                        if (nr[m2] == 0) continue;
                        for (int col = 0; col < r; ++col)
                            if (s.rows[m2][col] != 0)
                                v[col] = modp::add(v[col], modp::mul(nr[m2], s.rows[m2][col], p), p);
                    }
                    lifted.push_back(std::move(v));
                }
                next.push_back(echelonize(std::move(lifted), p));
                found += next.back().dim();
            }
            if (found != s.dim())
                throw DomainError("eigenspace_splitting_failed",
                                  "eigenspaces do not span an invariant subspace");
        }
        spaces = std::move(next);
    }

    for (const auto& s : spaces)
        if (s.dim() != 1)
            throw DomainError("eigenspace_splitting_failed",
                              "class matrices failed to separate all irreducibles");

    const std::uint64_t order_mod = static_cast<std::uint64_t>(g.order()) % p;
    const std::uint64_t inv_order = modp::inv(order_mod, p);
    std::vector<std::uint64_t> inv_size(r);
    for (int i = 0; i < r; ++i) inv_size[i] = modp::inv(static_cast<std::uint64_t>(ccd.sizes[i]) % p, p);

    struct Row {
        long long degree;
        std::vector<std::uint64_t> chi;
        std::vector<std::uint64_t> omega;
    };
    std::vector<Row> rows;
    const long long degree_cap = static_cast<long long>(std::sqrt(static_cast<double>(g.order()))) + 1;

    for (const auto& s : spaces) {
        std::vector<std::uint64_t> omega = s.rows[0];
        if (omega[0] != 1)
            throw DomainError("eigenspace_splitting_failed", "eigenvector not normalized at the identity class");

        // 1/d^2 = (1/|G|) sum_i omega_i omega_{i*} / |C_i|
        std::uint64_t s_val = 0;
        for (int i = 0; i < r; ++i)
            s_val = modp::add(s_val, modp::mul(modp::mul(omega[i], omega[ccd.inverse_class[i]], p), inv_size[i], p), p);
        std::uint64_t d_sq = modp::inv(modp::mul(s_val, inv_order, p), p);

        long long degree = 0;
        for (long long cand = 1; cand <= degree_cap; ++cand) {
            if (modp::mul(static_cast<std::uint64_t>(cand) % p, static_cast<std::uint64_t>(cand) % p, p) == d_sq) {
                degree = cand;
                break;
            }
        }
        if (degree == 0 || degree * degree > g.order())
            throw DomainError("degree_lift_failed", "no integer degree <= sqrt(|G|) matches mod p");

        Row row;
        row.degree = degree;
        row.omega = omega;
        row.chi.resize(r);
        const std::uint64_t d_mod = static_cast<std::uint64_t>(degree) % p;
        for (int i = 0; i < r; ++i)
            row.chi[i] = modp::mul(modp::mul(d_mod, omega[i], p), inv_size[i], p);
        rows.push_back(std::move(row));
    }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.chi < b.chi;
    });

    CharacterTableModP table;
    table.prime = p;
    long long degree_square_sum = 0;
    for (auto& row : rows) {
        degree_square_sum += row.degree * row.degree;
        if (g.order() % row.degree != 0)
            throw DomainError("degree_lift_failed", "lifted degree does not divide |G|");
        table.degrees.push_back(row.degree);
        table.chi.push_back(std::move(row.chi));
        table.omega.push_back(std::move(row.omega));
    }
    if (static_cast<int>(table.degrees.size()) != r || degree_square_sum != g.order())
        throw DomainError("degree_lift_failed", "degrees do not satisfy sum of squares = |G|");
    return table;
}

FSPartition fs_partition(const FiniteGroup& g, const ConjugacyClassData& ccd,
                         const CharacterTableModP& table) {
    const int r = ccd.count();
    const std::uint64_t p = table.prime;
    const std::uint64_t inv_order = modp::inv(static_cast<std::uint64_t>(g.order()) % p, p);
    FSPartition fs;
    for (int l = 0; l < table.count(); ++l) {
        std::uint64_t acc = 0;
        for (int i = 0; i < r; ++i) {
            std::uint64_t term = modp::mul(static_cast<std::uint64_t>(ccd.sizes[i]) % p,
                                           table.chi[l][ccd.square_class[i]], p);
            acc = modp::add(acc, term, p);
        }
        long long nu = modp::symmetric_lift(modp::mul(acc, inv_order, p), p);
        if (nu < -1 || nu > 1)
            throw DomainError("fs_indicator_out_of_range", "lifted Frobenius-Schur indicator outside {-1,0,1}");
        fs.indicator.push_back(static_cast<int>(nu));
        if (nu == 1)
            fs.g1.push_back(l);
        else if (nu == 0)
            fs.g2.push_back(l);
        else
            fs.g3.push_back(l);
    }
    return fs;
}

IdentityReport verify_character_identities(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                           const CharacterTableModP& table) {
    const int r = ccd.count();
    const std::uint64_t p = table.prime;
    const std::uint64_t order_mod = static_cast<std::uint64_t>(g.order()) % p;
    IdentityReport report;

    bool row_orth = true;
    for (int l = 0; l < r && row_orth; ++l)
        for (int m = 0; m < r && row_orth; ++m) {
            std::uint64_t acc = 0;
            for (int i = 0; i < r; ++i) {
                std::uint64_t term = modp::mul(static_cast<std::uint64_t>(ccd.sizes[i]) % p, table.chi[l][i], p);
                acc = modp::add(acc, modp::mul(term, table.chi[m][ccd.inverse_class[i]], p), p);
            }
            if (acc != (l == m ? order_mod : 0)) row_orth = false;
        }
    report.checks.push_back({"row_orthogonality_mod_p", row_orth});

    bool col_orth = true;
    for (int i = 0; i < r && col_orth; ++i)
        for (int j = 0; j < r && col_orth; ++j) {
            std::uint64_t acc = 0;
            for (int l = 0; l < r; ++l)
                acc = modp::add(acc, modp::mul(table.chi[l][i], table.chi[l][ccd.inverse_class[j]], p), p);
            std::uint64_t expected =
                i == j ? modp::mul(order_mod, modp::inv(static_cast<std::uint64_t>(ccd.sizes[i]) % p, p), p) : 0;
            if (acc != expected) col_orth = false;
        }
    report.checks.push_back({"column_orthogonality_mod_p", col_orth});

    long long sq = 0;
    for (long long d : table.degrees) sq += d * d;
    report.checks.push_back({"degree_square_sum", sq == g.order()});

    bool divides = true;
    for (long long d : table.degrees)
        if (g.order() % d != 0) divides = false;
    report.checks.push_back({"degrees_divide_order", divides});

    // chi_l * chi_m == (|G|/d_m) delta_lm chi_l, through structure constants.
    // W[i][m][k] = sum_j a_ijk chi_m(j); conv(l,m)(k) = sum_i chi_l(i) W[i][m][k].
    bool conv_ok = true;
    std::vector<std::vector<std::vector<std::uint64_t>>> w(
        r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    for (int i = 0; i < r; ++i) {
        auto t = class_matrix(g, ccd, i);
        for (int m = 0; m < r; ++m)
            for (int k = 0; k < r; ++k) {
                std::uint64_t acc = 0;
                for (int j = 0; j < r; ++j) {
                    std::uint64_t a = static_cast<std::uint64_t>(t[j][k]) % p;
                    if (a != 0) acc = modp::add(acc, modp::mul(a, table.chi[m][j], p), p);
                }
                w[i][m][k] = acc;
            }
    }
    for (int l = 0; l < r && conv_ok; ++l)
        for (int m = 0; m < r && conv_ok; ++m) {
            std::uint64_t scale =
                l == m ? modp::mul(order_mod, modp::inv(static_cast<std::uint64_t>(table.degrees[m]) % p, p), p) : 0;
            for (int k = 0; k < r; ++k) {
                std::uint64_t acc = 0;
                for (int i = 0; i < r; ++i)
                    if (table.chi[l][i] != 0) acc = modp::add(acc, modp::mul(table.chi[l][i], w[i][m][k], p), p);
                std::uint64_t expected = l == m ? modp::mul(scale, table.chi[l][k], p) : 0;
                if (acc != expected) {
                    conv_ok = false;
                    break;
                }
            }
        }
    report.checks.push_back({"character_convolution_identity", conv_ok});

    return report;
}

} // namespace homcount

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "homcount/bigint.hpp"

namespace homcount {

struct BuildLimits {
    long long max_order = 10'000;
};

// Declarative description of a finite group. Presets are expanded to
// explicit multiplication tables; permutation specs are closed under
// composition; cayley specs are validated as given.
struct GroupSpec {
    enum class Kind { preset, permutation, cayley, product };

    Kind kind = Kind::preset;
    std::string name;                            // preset: "S3", "cyclic:4", ...
    int degree = 0;                              // permutation
    std::vector<std::vector<int>> generators;    // permutation, 0-based images
    std::vector<std::vector<int>> table;         // cayley
    std::shared_ptr<GroupSpec> left, right;      // product

    static GroupSpec preset(std::string name);
    static GroupSpec permutation(int degree, std::vector<std::vector<int>> generators);
    static GroupSpec cayley(std::vector<std::vector<int>> table);
    static GroupSpec product(GroupSpec left, GroupSpec right);
};

// A finite group given by its full multiplication table over element ids
// 0..n-1, with 0 the identity. Immutable after construction; all methods
// are const and thread-safe.
class FiniteGroup {
public:
    static constexpr int identity = 0;

    // Validates: square table, Latin rows/columns, identity at index 0,
    // associativity (Light's test over a greedy generating set).
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    long long exponent() const { return exponent_; }
    long long element_order(int a) const;

    std::vector<std::vector<int>> table_rows() const;

private:
    int n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    long long exponent_ = 1;
};

FiniteGroup build_group(const GroupSpec& spec, const BuildLimits& limits = {});

// Conjugacy classes ordered by (size ascending, minimal element id
// ascending); class 0 is always the identity class.
struct ConjugacyClassData {
    std::vector<int> class_of;               // element id -> class index
    std::vector<std::vector<int>> classes;   // element ids, ascending
    std::vector<long long> sizes;
    std::vector<int> rep;                    // minimal element id per class
    std::vector<int> inverse_class;
    std::vector<int> square_class;

    int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyClassData conjugacy_data(const FiniteGroup& g);

Int involution_count(const FiniteGroup& g);

// Integer-valued function on conjugacy classes.
struct ClassFunction {
    const FiniteGroup* group = nullptr;
    std::vector<Int> values;
};

ClassFunction delta_identity(const FiniteGroup& g, const ConjugacyClassData& ccd);

// (x*y)(w) = sum_gamma x(w gamma^-1) y(gamma), evaluated element-wise over
// the whole group and verified constant on classes.
ClassFunction convolve(const FiniteGroup& g, const ConjugacyClassData& ccd,
                       const ClassFunction& x, const ClassFunction& y);

// Class-sum structure constants a[i][j][k]: the number of ways to write a
// fixed representative of class k as (element of class i) * (element of
// class j).
struct ClassStructureConstants {
    int num_classes = 0;
    std::vector<std::int64_t> a;  // flattened i*r*r + j*r + k

    std::int64_t at(int i, int j, int k) const {
        std::size_t r = static_cast<std::size_t>(num_classes);
        return a[(static_cast<std::size_t>(i) * r + j) * r + k];
    }
};

ClassStructureConstants class_structure_constants(const FiniteGroup& g, const ConjugacyClassData& ccd);

// Same convolution through structure constants; agrees with convolve().
ClassFunction convolve_structure(const FiniteGroup& g, const ConjugacyClassData& ccd,
                                 const ClassStructureConstants& sc,
                                 const ClassFunction& x, const ClassFunction& y);

// One row T[j][k] = a[i][j][k] of the class algebra, built without the full
// r^3 tensor (needed by the character table at O(r^2) memory).
std::vector<std::vector<std::int64_t>> class_matrix(const FiniteGroup& g,
                                                    const ConjugacyClassData& ccd, int i);

} // namespace homcount

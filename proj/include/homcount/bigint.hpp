#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "homcount/error.hpp"

namespace homcount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Default guard for enumeration-style operations, measured in group
// operations. Overridable per call and via HOMCOUNT_WORK_BOUND / --work-bound.
inline constexpr long long kDefaultWorkBound = 1'000'000'000;

inline Int int_pow(Int base, long long exp) {
    if (exp < 0) throw DomainError("negative_exponent", "int_pow needs exp >= 0");
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// base^exp as an exact rational, exp may be negative (base must be nonzero).
inline Rat rat_pow(const Int& base, long long exp) {
    if (exp >= 0) return Rat(int_pow(base, exp));
    if (base == 0) throw DomainError("zero_to_negative_power", "0 cannot be raised to a negative power");
    return Rat(Int(1)) / Rat(int_pow(base, -exp));
}

} // namespace homcount

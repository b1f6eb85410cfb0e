#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace quadbraid {

/// Arbitrary-precision signed integer. Group coordinates, moduli and rational
/// numerators/denominators all use this type so no operation ever overflows.
using Int = boost::multiprecision::cpp_int;

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Floor division for b > 0 (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// Canonical residue of a modulo b, in [0, b). Requires b > 0.
inline Int pos_mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

inline long long to_int64(const Int& v) {
    using boost::multiprecision::abs;
    if (abs(v) > Int(9223372036854775807LL))
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<long long>();
}

inline std::size_t to_size(const Int& v) {
    if (v < 0) throw std::invalid_argument("negative value used as a size: " + v.str());
    return v.convert_to<std::size_t>();
}

}  // namespace quadbraid

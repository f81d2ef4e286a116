#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lcdc {

using BigInt = boost::multiprecision::cpp_int;

// base^exp for non-negative machine-word exponents.
inline BigInt big_pow(const BigInt& base, unsigned long long exp) {
    BigInt r{1};
    BigInt b = base;
    while (exp) {
        if (exp & 1ULL) r *= b;
        b *= b;
        exp >>= 1ULL;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace lcdc

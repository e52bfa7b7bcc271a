#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace eocalc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(e);
}

inline bool is_odd(const BigInt& v) { return boost::multiprecision::bit_test(v, 0); }

// 2-adic valuation.  nu2(12) == 2, nu2(odd) == 0.
inline long long nu2(const BigInt& v) {
    if (v == 0) throw std::invalid_argument("nu2: zero has no finite 2-adic valuation");
    BigInt a = v < 0 ? BigInt(-v) : v;
    return static_cast<long long>(boost::multiprecision::lsb(a));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace eocalc

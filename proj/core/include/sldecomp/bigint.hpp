#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sldecomp {

/// Arbitrary precision integer; exponents such as q^d - 1 outgrow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace sldecomp

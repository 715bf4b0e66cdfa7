#pragma once

#include <cstddef>
#include <cstdint>

#include "sldecomp/factor.hpp"

namespace sldecomp {

/// Degree over F_q of the compositum of the constant extensions of degrees a1 and a2: lcm.
std::uint64_t compositum_degree(std::uint64_t a1, std::uint64_t a2);
/// Degree of their intersection: gcd.
std::uint64_t intersection_degree(std::uint64_t a1, std::uint64_t a2);

/// Largest field size q^N accepted by verify_subfield_lattice.
inline constexpr std::uint64_t kDefaultFieldCap = 1u << 16;

/// Builds F_{q^N} = F_q[Z]/(f) with f the first monic irreducible of degree N, takes the
/// subfields fixed by x -> x^(q^a1) and x -> x^(q^a2), and checks that their intersection
/// and compositum have degrees gcd(a1, a2) and lcm(a1, a2) and coincide with the fixed
/// fields of the matching Frobenius powers. Requires lcm(a1, a2) | N; throws
/// SizeCapExceeded when q^N > cap.
bool verify_subfield_lattice(std::uint32_t q, std::uint64_t a1, std::uint64_t a2, std::uint64_t n,
                             std::uint64_t cap = kDefaultFieldCap);

/// Decomposition of a prime of degree d in the constant extension of degree r.
struct SplittingData {
    std::uint64_t primes;           ///< g = gcd(d, r)
    std::uint64_t relative_degree;  ///< f = r / g
    friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

SplittingData splitting_data(std::uint64_t d, std::uint64_t r);

/// True iff P splits completely after adjoining a primitive p^(e_p+1)-th root of unity,
/// i.e. v_p(q^deg P - 1) >= e_p + 1. Throws PreconditionError if p is not a prime, equals
/// the characteristic, or e_p != v_p(q - 1).
bool split_complete_test(const PrimeElem& prime, std::uint64_t p, unsigned e_p);

}  // namespace sldecomp

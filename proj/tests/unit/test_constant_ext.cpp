#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "sldecomp/constant_ext.hpp"
#include "sldecomp/residue.hpp"

using namespace sldecomp;

namespace {

std::uint64_t ipow(std::uint64_t q, std::uint64_t d) {
    std::uint64_t r = 1;
    while (d--) r *= q;
    return r;
}

unsigned valuation(std::uint64_t p, std::uint64_t n) {
    unsigned v = 0;
    for (; n % p == 0; n /= p) ++v;
    return v;
}

/// Smallest k >= 1 with q^k = 1 mod n.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
    std::uint64_t x = q % n, k = 1;
    while (x != 1 % n) {
        x = x * q % n;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("compositum and intersection degrees") {
    CHECK(compositum_degree(2, 3) == 6);
    CHECK(intersection_degree(2, 3) == 1);
    CHECK(compositum_degree(4, 6) == 12);
    CHECK(intersection_degree(4, 6) == 2);
    for (std::uint64_t a = 1; a <= 9; ++a) {
        CHECK(compositum_degree(a, a) == a);
        CHECK(intersection_degree(a, a) == a);
    }
}

TEST_CASE("coprimality passes to the compositum") {
    for (std::uint64_t a1 = 1; a1 <= 50; ++a1)
        for (std::uint64_t a2 = 1; a2 <= 50; ++a2)
            for (std::uint64_t a3 = 1; a3 <= 50; ++a3)
                if (std::gcd(a3, a1) == 1 && std::gcd(a3, a2) == 1)
                    REQUIRE(std::gcd(a3, compositum_degree(a1, a2)) == 1);
}

TEST_CASE("subfield lattice inside an explicit finite field") {
    CHECK(verify_subfield_lattice(2, 2, 3, 6));
    CHECK(verify_subfield_lattice(2, 1, 1, 1));
    CHECK(verify_subfield_lattice(3, 2, 2, 2));
    for (std::uint64_t a1 = 1; a1 <= 6; ++a1)
        for (std::uint64_t a2 = 1; a2 <= 6; ++a2)
            if (const auto l = std::lcm(a1, a2); l <= 6) CHECK(verify_subfield_lattice(2, a1, a2, l));
    for (std::uint64_t a1 = 1; a1 <= 4; ++a1)
        for (std::uint64_t a2 = 1; a2 <= 4; ++a2)
            if (const auto l = std::lcm(a1, a2); l <= 4) CHECK(verify_subfield_lattice(3, a1, a2, l));
    CHECK(verify_subfield_lattice(2, 2, 2, 4));
    CHECK_THROWS_AS(verify_subfield_lattice(3, 2, 3, 4), PreconditionError);
    CHECK_THROWS_AS(verify_subfield_lattice(13, 2, 3, 6), SizeCapExceeded);
}

TEST_CASE("splitting data matches Frobenius orbits") {
    CHECK(splitting_data(1, 3) == SplittingData{1, 3});
    CHECK(splitting_data(2, 4) == SplittingData{2, 2});
    for (std::uint64_t d = 1; d <= 12; ++d) {
        CHECK(splitting_data(d, d) == SplittingData{d, 1});
        for (std::uint64_t r = 1; r <= 12; ++r) {
            // Roots of a degree-d prime are Z/d under x -> x + 1; the new Frobenius is x -> x + r.
            std::vector<bool> seen(d, false);
            std::uint64_t orbits = 0, size = 0;
            for (std::uint64_t s = 0; s < d; ++s) {
                if (seen[s]) continue;
                ++orbits;
                size = 0;
                for (std::uint64_t x = s; !seen[x]; x = (x + r) % d, ++size) seen[x] = true;
            }
            const SplittingData sd = splitting_data(d, r);
            CHECK(sd.primes == orbits);
            // Each factor has degree `size` over F_{q^r}, so relative degree r*size/d over F_{q^d}.
            CHECK(sd.relative_degree * d == r * size);
        }
    }
}

TEST_CASE("split-complete examples and errors") {
    CHECK_FALSE(split_complete_test(PrimeElem(Poly::t(3)), 2, 1));
    CHECK(split_complete_test(PrimeElem(Poly(3, {1, 0, 1})), 2, 1));
    CHECK_FALSE(split_complete_test(PrimeElem(Poly::t(5)), 2, 2));
    CHECK_THROWS_AS(split_complete_test(PrimeElem(Poly::t(5)), 4, 2), PreconditionError);
    CHECK_THROWS_AS(split_complete_test(PrimeElem(Poly::t(5)), 5, 0), PreconditionError);
    CHECK_THROWS_AS(split_complete_test(PrimeElem(Poly::t(5)), 2, 1), PreconditionError);
}

TEST_CASE("valuation dichotomy and order consistency") {
    for (std::uint32_t q : {3u, 5u, 7u})
        for (std::uint64_t p : {2u, 3u}) {
            if ((q - 1) % p != 0) continue;
            const unsigned e = valuation(p, q - 1);
            const std::uint64_t r_p = mult_order(q, ipow(p, e + 1));
            for (int d = 1; d <= (q == 7 ? 3 : 4); ++d)
                for (const auto& v : oracle::monic_of_degree(q, d)) {
                    if (!oracle::irreducible(q, v)) continue;
                    const PrimeElem prime(oracle::to_poly(q, v));
                    const bool split = split_complete_test(prime, p, e);
                    const unsigned vp = valuation(p, ipow(q, d) - 1);
                    CHECK(vp >= e);
                    CHECK((vp == e) == !split);
                    CHECK(split == (splitting_data(d, r_p).relative_degree == 1));
                }
        }
}

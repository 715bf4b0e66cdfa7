#include <doctest.h>

#include "oracles.hpp"
#include "sldecomp/residue.hpp"

using namespace sldecomp;

namespace {

std::vector<Poly> monic_primes(std::uint32_t q, std::size_t max_deg) {
    std::vector<Poly> out;
    for (std::size_t d = 1; d <= max_deg; ++d)
        for (const auto& v : oracle::monic_of_degree(q, d))
            if (oracle::irreducible(q, v)) out.push_back(oracle::to_poly(q, v));
    return out;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("residue class arithmetic") {
    const Poly f(5, {2, 0, 1});  // T^2 + 2, irreducible over F_5
    ResidueClass x(f, Poly(5, {1, 3, 4, 4}));
    CHECK(x.rep().degree() < f.degree());
    CHECK((x * x.inverse()).is_one());
    CHECK(x.pow(24).is_one());
    CHECK(x.pow(BigInt(48)) == x.pow(0));
    CHECK(x + x == ResidueClass(f, x.rep() * Poly::constant(5, 2)));
    CHECK(ResidueClass(f, f).is_zero());
    CHECK_THROWS(ResidueClass(f, Poly(5)).inverse());
}

TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(2, 8) == 3);
    CHECK(p_adic_valuation(3, 8) == 0);
    CHECK(p_adic_valuation(2, 24) == 3);
    CHECK(p_adic_valuation(5, BigInt(5) * 5 * 5 * 5 * 7) == 4);
    CHECK(p_adic_valuation(2, big_pow(3, 64) - 1) == 8);  // v_2(3^n - 1) = v_2(n) + 2 for even n
}

TEST_CASE("local unit exponent") {
    CHECK(local_unit_exponent(3, 2, 1) == 8);
    CHECK(local_unit_exponent(2, 1, 3) == 4);   // (F_2[T]/T^3)^* has exponent 4
    CHECK(local_unit_exponent(3, 1, 4) == 18);  // 2 * 3^2
    CHECK(local_unit_exponent(2, 1, 1) == 1);
}

TEST_CASE("unit exponent agrees with the brute-force group exponent") {
    for (auto [q, max_deg] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{5, 2}}) {
        PolyEnumerator it(q, max_deg, false);
        while (auto b = it.next()) {
            ExponentData e = unit_exponent(*b);
            CHECK(e.value == oracle::unit_group_exponent(q, oracle::from(*b)));
            BigInt l = 1;
            for (const auto& f : e.factors) l = big_lcm(l, f.exponent);
            CHECK(l == e.value);
        }
    }
    CHECK(unit_exponent(Poly(3, {1, 0, 1})).value == 8);
    CHECK(unit_exponent(Poly::constant(7, 3)).value == 1);
    CHECK_THROWS(unit_exponent(Poly(3)));
}

TEST_CASE("power residue symbol detects m-th powers") {
    for (std::uint32_t q : {3u, 5u, 7u})
        for (const Poly& p : monic_primes(q, 2))
            for (std::uint32_t m : divisors(q - 1)) {
                const auto powers = oracle::mth_powers(q, oracle::from(p), m);
                const PrimeElem prime(p);
                PolyEnumerator as(q, p.degree().value() - 1, false);
                while (auto a = as.next()) {
                    const SymbolValue s = power_residue_symbol(*a, prime, m);
                    CHECK(PrimeField(q).pow(s.root, m).value == 1);
                    CHECK(s.is_trivial() == (powers.count(oracle::from(*a)) == 1));
                }
            }
}

TEST_CASE("symbol is multiplicative and depends only on the ideal") {
    const std::uint32_t q = 7;
    const PrimeElem p(Poly(q, {1, 0, 1}));  // T^2 + 1
    const PrimeElem p5(Poly(q, {5, 0, 5}));  // 5*(T^2 + 1)
    PolyEnumerator as(q, 1, false);
    while (auto a = as.next()) {
        PolyEnumerator bs(q, 1, false);
        while (auto b = bs.next()) {
            const auto sa = power_residue_symbol(*a, p, 6).root, sb = power_residue_symbol(*b, p, 6).root;
            CHECK(power_residue_symbol(*a * *b, p, 6).root == PrimeField(q).mul(sa, sb));
        }
        CHECK(power_residue_symbol(*a, p, 3) == power_residue_symbol(*a, p5, 3));
    }
    CHECK_THROWS_AS(power_residue_symbol(Poly(q, {1, 0, 1}), p, 6), PreconditionError);
    CHECK_THROWS_AS(power_residue_symbol(Poly::constant(q, 1), p, 4), PreconditionError);
}

TEST_CASE("m-th roots") {
    for (std::uint32_t q : {3u, 5u, 7u, 13u})
        for (const Poly& p : monic_primes(q, q > 7 ? 1 : 2))
            for (std::uint32_t m : divisors(q - 1)) {
                const PrimeElem prime(p);
                PolyEnumerator xs(q, p.degree().value() - 1, false);
                while (auto x = xs.next()) {
                    const Poly a = powmod(*x, m, p);
                    const Poly r = mth_root_mod_prime(a, prime, m);
                    CHECK(r.degree() < p.degree());
                    CHECK(powmod(r, m, p) == a);
                }
            }
    // 2 is not a square mod T over F_3.
    CHECK_THROWS_AS(mth_root_mod_prime(Poly::constant(3, 2), PrimeElem(Poly::t(3)), 2), PreconditionError);
    // Larger residue field: F_13[T]/(irreducible of degree 6).
    Poly big(13);
    PolyEnumerator tails(13, 2, true);
    while (big.is_zero()) {
        const Poly f = *tails.next() + Poly::monomial(13, 1, 6);
        if (is_irreducible(f)) big = f;
    }
    const Poly a = powmod(Poly(13, {5, 7, 1, 0, 9}), 12, big);
    CHECK(powmod(mth_root_mod_prime(a, PrimeElem(big), 12), 12, big) == a);
}

TEST_CASE("reciprocity formula matches direct symbols") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const auto primes = monic_primes(q, q == 7 ? 2 : 3);
        for (std::uint32_t m : divisors(q - 1))
            for (const Poly& r0 : primes) {
                if (r0.degree().value() > 2) continue;
                for (std::uint32_t lr = 1; lr < q; ++lr) {
                    const Poly r = r0.scaled({lr});
                    const PrimeElem rp(r);
                    for (const Poly& b0 : primes) {
                        if (b0 == r0) continue;
                        for (std::uint32_t lb : {1u, q - 1}) {
                            const Poly b = b0.scaled({lb});
                            const SymbolValue direct = power_residue_symbol(r, PrimeElem(b), m);
                            const SymbolValue predicted = symbol_by_reciprocity(
                                r, b.degree().value(), b.lead(), power_residue_symbol(b, rp, m), m);
                            CHECK(direct == predicted);
                        }
                    }
                }
            }
        // Constant references.
        for (std::uint32_t u = 1; u < q; ++u)
            for (const Poly& b : primes) {
                const SymbolValue direct = power_residue_symbol(Poly::constant(q, u), PrimeElem(b), q - 1);
                CHECK(direct == symbol_by_reciprocity(Poly::constant(q, u), b.degree().value(), b.lead(), {{1}}, q - 1));
            }
    }
}

TEST_CASE("inverse modulo") {
    const Poly g(5, {1, 1, 0, 1});
    PolyEnumerator it(5, 2, false);
    while (auto a = it.next()) {
        if (!gcd(*a, g).is_one()) continue;
        CHECK(((*a * inverse_mod(*a, g)) % g).is_one());
    }
    CHECK(inverse_mod(Poly(5, {1, 2}), Poly::constant(5, 3)).is_zero());
    CHECK_THROWS_AS(inverse_mod(Poly(5, {0, 1}), Poly(5, {0, 0, 1})), NonCoprimeInput);
}

TEST_CASE("m-th root examples") {
    const Poly r = mth_root_mod_prime(Poly::t(3), PrimeElem(Poly(3, {1, 0, 1})), 2);
    CHECK((r == Poly(3, {2, 1}) || r == Poly(3, {1, 2})));
    const Poly one = mth_root_mod_prime(Poly::constant(5, 1), PrimeElem(Poly::t(5)), 4);
    CHECK(powmod(one, 4, Poly::t(5)).is_one());
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sldecomp/sl2.hpp"

using namespace sldecomp;

namespace {

Poly random_poly(std::uint32_t q, std::size_t deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<std::int64_t> c(deg + 1);
    for (auto& x : c) x = d(rng);
    return Poly(q, c);
}

PolyMatrix random_sl2(std::uint32_t q, std::size_t len, std::size_t deg, std::mt19937_64& rng) {
    Word w;
    for (std::size_t k = 0; k < len; ++k)
        w.push_back(k % 2 ? ElemFactor{0, 1, random_poly(q, deg, rng)} : ElemFactor{1, 0, random_poly(q, deg, rng)});
    return word_product(w, q, 2);
}

PolyMatrix sl2(std::uint32_t q, Poly a, Poly b, Poly c, Poly d) {
    PolyMatrix m(q, 2);
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
}

void check_form(const PolyMatrix& input, const PowerRowForm& f) {
    const auto q = input.q();
    CHECK(f.m == q - 1);
    CHECK(f.factors.size() <= kNormalizeBudget);
    CHECK(replay(input, f.factors) == f.matrix);
    CHECK(f.matrix(0, 0) == f.a_power());
    CHECK(f.matrix(0, 1) == f.b.element());
    CHECK(f.b.degree() >= 1);
    CHECK(oracle::irreducible(q, oracle::from(f.b.monic())));
    CHECK(f.matrix.determinant().is_one());
}

}  // namespace

TEST_CASE("normalizing special first rows") {
    SUBCASE("identity needs one factor") {
        const PolyMatrix id = PolyMatrix::identity(3, 2);
        const PowerRowForm f = normalize_first_row(id, {});
        check_form(id, f);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0] == SidedFactor{Side::Right, {0, 1, Poly::t(3)}});
    }
    SUBCASE("zero corner needs at most two") {
        for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
            const PolyMatrix w = sl2(q, Poly(q), Poly::constant(q, 1), Poly::constant(q, -1), Poly(q));
            const PowerRowForm f = normalize_first_row(w, {});
            check_form(w, f);
            CHECK(f.factors.size() <= 2);
        }
    }
    SUBCASE("zero second entry with a non-trivial unit") {
        for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
            const PolyMatrix d = sl2(q, Poly::constant(q, 2), Poly(q), Poly::t(q), Poly::constant(q, PrimeField(q).inv({2}).value));
            const PowerRowForm f = normalize_first_row(d, {});
            check_form(d, f);
            CHECK(f.factors.size() == 3);
            CHECK(f.residue_search.candidates == 0);
        }
    }
    SUBCASE("F_2 row (1, T^2 + T)") {
        const std::uint32_t q = 2;
        const PolyMatrix u = sl2(q, Poly::constant(q, 1), Poly(q, {0, 1, 1}), Poly(q), Poly::constant(q, 1));
        const PowerRowForm f = normalize_first_row(u, {});
        check_form(u, f);
        CHECK(f.m == 1);
    }
    CHECK_THROWS_AS(normalize_first_row(PolyMatrix::identity(3, 3), {}), PreconditionError);
}

TEST_CASE("normalizing random SL_2 matrices") {
    std::mt19937_64 rng(41);
    for (std::uint32_t q : {2u, 3u, 5u, 7u})
        for (int k = 0; k < 25; ++k) {
            const PolyMatrix a = random_sl2(q, 2 + rng() % 5, 2, rng);
            check_form(a, normalize_first_row(a, {}));
        }
}

TEST_CASE("companion block invariants") {
    std::mt19937_64 rng(42);
    for (std::uint32_t q : {2u, 3u, 5u})
        for (int k = 0; k < 15; ++k) {
            const PolyMatrix a = random_sl2(q, 2 + rng() % 4, 2, rng);
            const PowerRowForm f = normalize_first_row(a, {});
            const CompanionBlock d = build_companion(f, {});
            CHECK(d.m == q - 1);
            CHECK(d.d(0, 0) == d.a);
            CHECK(d.d(0, 1) == d.b);
            CHECK(d.d(1, 0) == d.c);
            CHECK(d.d(1, 1) == d.d3);
            CHECK(d.d.determinant().is_one());
            CHECK(d.a == f.a);
            CHECK(d.b == f.b.element());
            if (!d.a.is_constant()) CHECK(((d.b * d.c + Poly::constant(q, 1)) % d.a).is_zero());
            CHECK(big_gcd(d.eps_b.value, d.eps_c.value) == q - 1);
            PolyMatrix p = PolyMatrix::identity(q, 2);
            for (std::uint32_t i = 0; i < d.m; ++i) p = p * d.d;
            CHECK(d.power() == p);
        }
}

TEST_CASE("bridge for m = 1 is structured") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 20; ++k) {
        const PolyMatrix a = random_sl2(2, 2 + rng() % 4, 2, rng);
        const PowerRowForm f = normalize_first_row(a, {});
        const CompanionBlock d = build_companion(f, {});
        const Word w = bridge_word(f.matrix, d);
        CHECK(w.size() <= 1);
        CHECK(word_product(w, 2, 2) * d.power() == f.matrix);
    }
}

TEST_CASE("Euclidean decomposition") {
    for (std::uint32_t q : {2u, 3u, 13u}) {
        const PolyMatrix s = sl2(q, Poly(q), Poly::constant(q, 1), Poly::constant(q, -1), Poly(q));
        const Word w = euclidean_decompose(s);
        CHECK(word_product(w, q, 2) == s);
        CHECK(w.size() <= 4);
        CHECK(euclidean_decompose(PolyMatrix::identity(q, 2)).empty());
    }
    std::mt19937_64 rng(44);
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u})
        for (int k = 0; k < 30; ++k) {
            const PolyMatrix a = random_sl2(q, 1 + rng() % 8, 3, rng);
            const Word w = euclidean_decompose(a);
            CHECK(word_product(w, q, 2) == a);
            for (const auto& e : w) CHECK(e.row != e.col);
        }
}

TEST_CASE("strict and fallback SL_2 pipelines") {
    std::mt19937_64 rng(45);
    for (std::uint32_t q : {2u, 3u, 5u})
        for (int k = 0; k < 15; ++k) {
            const PolyMatrix a = random_sl2(q, 2 + rng() % 5, 2, rng);
            const Sl2Decomposition fb = decompose_sl2_block(a, Mode::Fallback, {});
            CHECK(word_product(fb.word, q, 2) == a);
            CHECK(word_product(fb.final_word, q, 2) == fb.normalized);
            CHECK(fb.normalize.length + fb.bridge.length + fb.collapse.length == fb.length());
            if (fb.strict_complete()) CHECK(fb.length() <= kSl2Budget);
            try {
                const Sl2Decomposition st = decompose_sl2_block(a, Mode::Strict, {});
                CHECK(st.strict_complete());
                CHECK(st.length() <= kSl2Budget);
                CHECK(word_product(st.word, q, 2) == a);
                CHECK(st.word == fb.word);
            } catch (const StrictUnavailable&) {
                CHECK_FALSE(fb.strict_complete());
                CHECK((fb.bridge.method == "fallback_euclidean" || fb.collapse.method == "fallback_euclidean"));
            }
        }
}

TEST_CASE("residue reachability agrees with a direct search") {
    // Over F_3 a reachable class shows a suitable prime of degree < deg a2 + 5.
    const std::uint32_t q = 3, m = 2;
    for (std::size_t da = 1; da <= 2; ++da)
        for (const auto& av : oracle::monic_of_degree(q, static_cast<int>(da))) {
            if (!oracle::irreducible(q, av)) continue;
            for (std::int64_t unit : {1, 2}) {
                const Poly a2 = oracle::to_poly(q, av).scaled({static_cast<std::uint32_t>(unit)});
                PolyEnumerator b1s(q, da - 1, false);
                while (auto b1 = b1s.next()) {
                    bool found = false;
                    PolyEnumerator ys(q, 4);
                    while (auto y = ys.next()) {
                        const Poly b2 = *b1 + *y * a2;
                        if (b2.is_constant() || !oracle::irreducible(q, oracle::from(b2.monic()))) continue;
                        const auto squares = oracle::mth_powers(q, oracle::from(b2), m);
                        if (squares.count(oracle::from(a2 % b2))) {
                            found = true;
                            break;
                        }
                    }
                    CHECK(residue_reachable(PrimeElem(a2), *b1, m) == found);
                }
            }
        }
}

#pragma once

#include <cstdint>
#include <vector>

#include "sldecomp/poly.hpp"

namespace sldecomp {

/// Distinct-degree irreducibility test. Throws PreconditionError on constants.
bool is_irreducible(const Poly& f);

/// A prime element of F_q[T]: unit * monic irreducible.
class PrimeElem {
public:
    /// Validates irreducibility; throws PreconditionError otherwise.
    explicit PrimeElem(const Poly& element);
    PrimeElem(const Poly& monic, FieldElem unit);

    const Poly& monic() const noexcept { return monic_; }
    FieldElem unit() const noexcept { return unit_; }
    Poly element() const { return monic_.scaled(unit_); }
    std::size_t degree() const { return monic_.degree().value(); }
    std::uint32_t q() const noexcept { return monic_.q(); }

    friend bool operator==(const PrimeElem&, const PrimeElem&) = default;

private:
    Poly monic_;
    FieldElem unit_;
};

struct PrimePower {
    Poly monic;  ///< monic irreducible
    unsigned multiplicity = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// f = unit * prod monic^multiplicity, factors sorted by (degree, coefficients).
struct Factorization {
    FieldElem unit;
    std::vector<PrimePower> factors;

    Poly product(std::uint32_t q) const;
};

/// Seed used for equal-degree splitting when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eed5eedULL;

/// Full factorization (square-free, distinct-degree, then Cantor-Zassenhaus
/// equal-degree splitting driven by a seeded generator). Throws on zero input.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSplitSeed);

/// Square-free decomposition of a monic polynomial: f = prod g_i^i with g_i square-free.
std::vector<PrimePower> squarefree_decomposition(const Poly& monic_f);

struct DegreeBlock {
    Poly product;        ///< product of all monic irreducible factors of this degree
    std::size_t degree;  ///< common degree of those factors
};

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<DegreeBlock> distinct_degree_factorization(const Poly& monic_squarefree);

}  // namespace sldecomp

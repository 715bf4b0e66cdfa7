#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sldecomp/matrix.hpp"
#include "sldecomp/residue.hpp"
#include "sldecomp/search.hpp"

namespace sldecomp {

/// Result of normalizing the first row of a 2 x 2 matrix to (a^m, b) with b prime.
struct PowerRowForm {
    Poly a;
    PrimeElem b;
    std::uint32_t m;
    PolyMatrix matrix;                 ///< A2, the input after `factors`
    std::vector<SidedFactor> factors;  ///< at most three, in application order
    SearchStats prime_search;          ///< statistics of the a2 search (zero if skipped)
    SearchStats residue_search;        ///< statistics of the b2 search (zero if skipped)

    Poly a_power() const { return pow(a, m); }
};

/// D = [[a, b], [c, d3]] with b*c = -1 mod a and gcd(eps(b), eps(c)) = m.
struct CompanionBlock {
    PolyMatrix d;
    std::uint32_t m;
    Poly a;
    Poly b;
    Poly c;
    Poly d3;
    ExponentData eps_b;
    ExponentData eps_c;
    SearchStats stats;

    PolyMatrix power() const;  ///< D^m
};

enum class Mode { Strict, Fallback };

/// Budgets of the normalize, bridge and collapse phases.
inline constexpr std::size_t kNormalizeBudget = 3;
inline constexpr std::size_t kBridgeBudget = 16;
inline constexpr std::size_t kCollapseBudget = 36;
inline constexpr std::size_t kSl2Budget = kNormalizeBudget + kBridgeBudget + kCollapseBudget;

/// True iff some prime b2 = b1 mod a2 has a2 as an m-th power residue (a2 prime, coprime to b1).
/// Reciprocity gives (a2/b2) = (-1)^(de(q-1)/m) sgn(a2)^e sgn(b2)^(-d) (b1/a2) with d = deg a2,
/// e = deg b2 and sgn(x) = lc(x)^((q-1)/m): only the degree and leading coefficient of b2 move it.
bool residue_reachable(const PrimeElem& a2, const Poly& b1, std::uint32_t m);

/// The edge case a1 = 0 uses two factors, b1 = 0 one (u = 1) or three, the generic case at most three. Throws
/// PreconditionError unless det A = 1 and CapExceeded when a search runs out.
PowerRowForm normalize_first_row(const PolyMatrix& a, const SearchCaps& caps);

/// Completes (a, b) to D using find_companion(b, a, -1). Throws NonCoprimeInput if gcd(a, b) != 1.
CompanionBlock build_companion(const PowerRowForm& form, const SearchCaps& caps);

/// Word w with A2 = prod(w) * D^m, at most 16 factors. Throws StrictUnavailable when no
/// word within budget is available.
Word bridge_word(const PolyMatrix& a2, const CompanionBlock& d);

/// Word w with D^m = prod(w), at most 36 factors. Throws StrictUnavailable otherwise.
Word collapse_word(const CompanionBlock& d);

/// Euclidean row reduction of an SL_2 matrix; prod(result) == m. Unbounded length.
Word euclidean_decompose(const PolyMatrix& m);

struct PhaseReport {
    std::size_t length = 0;
    bool strict = true;
    std::string method;  ///< "identity", "structured", "euclidean_within_budget" or "fallback_euclidean"
};

struct Sl2Decomposition {
    std::vector<SidedFactor> normalize_factors;
    PolyMatrix normalized;  ///< A2
    Word final_word;        ///< bridge ++ collapse, multiplies to A2
    Word word;              ///< multiplies to the input block
    PhaseReport normalize;
    PhaseReport bridge;
    PhaseReport collapse;
    SearchStats prime_search;
    SearchStats residue_search;
    SearchStats companion_search;
    BigInt eps_b = 0;  ///< epsilon of the companion's b, zero when no companion was built
    BigInt eps_c = 0;

    bool strict_complete() const noexcept { return normalize.strict && bridge.strict && collapse.strict; }
    std::size_t length() const noexcept { return word.size(); }
};

/// Full 2 x 2 pipeline. In strict mode StrictUnavailable propagates; in fallback mode the
/// failing phase is replaced by euclidean_decompose and flagged non-strict.
Sl2Decomposition decompose_sl2_block(const PolyMatrix& b, Mode mode, const SearchCaps& caps);

}  // namespace sldecomp

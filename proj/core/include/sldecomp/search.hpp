#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "sldecomp/factor.hpp"
#include "sldecomp/poly.hpp"
#include "sldecomp/residue.hpp"

namespace sldecomp {

/// Bounds for the deterministic offset searches. Both must be positive for a search to run.
struct SearchCaps {
    std::size_t max_offset_degree = 12;
    std::size_t max_candidates = 1'000'000;
};

struct SearchStats {
    std::size_t candidates = 0;     ///< candidates examined, including the hit
    std::size_t offset_degree = 0;  ///< degree of the accepted offset (0 for the zero offset)
};

/// a2 = a0 + x*b0, a prime element.
struct PrimeHit {
    Poly offset;
    PrimeElem prime;
    SearchStats stats;
};

/// Offsets x in degree-then-lexicographic order until a0 + x*b0 is prime (and passes `also`
/// when given). Throws NonCoprimeInput when gcd(a0, b0) != 1 and CapExceeded when the caps run out.
PrimeHit find_prime_in_class(const Poly& a0, const Poly& b0, const SearchCaps& caps,
                             const std::function<bool(const Poly&)>& also = {});

/// b2 = a0 + y*b0 prime with `reference` an m-th power residue mod b2, plus the root.
struct ResidueHit {
    Poly offset;
    PrimeElem prime;
    Poly root;  ///< root^m = reference mod prime
    SearchStats stats;
};

/// Acceptance test of find_prime_in_class_with_residue for one candidate.
bool accepts_residue_candidate(const Poly& candidate, const Poly& reference, std::uint32_t m);

ResidueHit find_prime_in_class_with_residue(const Poly& a0, const Poly& b0, const Poly& reference,
                                            std::uint32_t m, const SearchCaps& caps);

/// c = c0 + t*g with b*c = u mod g and gcd(eps(b), eps(c)) = q - 1.
struct CompanionHit {
    Poly c;
    Poly offset;
    ExponentData eps_b;
    ExponentData eps_c;
    SearchStats stats;
};

/// Throws NonCoprimeInput unless gcd(b, g) = 1, PreconditionError for g = 0 or u = 0.
CompanionHit find_companion(const PrimeElem& b, const Poly& g, FieldElem u, const SearchCaps& caps);

}  // namespace sldecomp

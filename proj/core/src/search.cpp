#include "sldecomp/search.hpp"

#include <optional>

namespace sldecomp {

namespace {

void check_caps(const SearchCaps& caps) {
    if (caps.max_offset_degree == 0 || caps.max_candidates == 0)
        throw CapExceeded("search caps are zero", 0);
}

std::size_t offset_degree(const Poly& x) { return x.is_zero() ? 0 : x.degree().value(); }

void check_progression(const Poly& a0, const Poly& b0) {
    if (b0.is_zero()) throw PreconditionError("progression modulus is zero");
    if (a0.q() != b0.q()) throw PreconditionError("polynomials over different fields");
    if (!gcd(a0, b0).is_one())
        throw NonCoprimeInput("gcd(" + a0.to_string() + ", " + b0.to_string() + ") != 1");
}

/// Walks x in enumeration order, calling accept(a0 + x*b0) until it returns true.
template <typename Accept>
std::pair<Poly, SearchStats> walk_progression(const Poly& a0, const Poly& b0, const SearchCaps& caps,
                                              const char* what, Accept&& accept) {
    check_caps(caps);
    PolyEnumerator offsets(a0.q(), caps.max_offset_degree);
    SearchStats stats;
    while (auto x = offsets.next()) {
        if (stats.candidates >= caps.max_candidates) break;
        ++stats.candidates;
        if (accept(a0 + *x * b0)) {
            stats.offset_degree = offset_degree(*x);
            return {std::move(*x), stats};
        }
    }
    throw CapExceeded(what, stats.candidates);
}

}  // namespace

PrimeHit find_prime_in_class(const Poly& a0, const Poly& b0, const SearchCaps& caps,
                             const std::function<bool(const Poly&)>& also) {
    check_progression(a0, b0);
    auto [x, stats] = walk_progression(a0, b0, caps, "no prime found in residue class", [&](const Poly& v) {
        return !v.is_constant() && is_irreducible(v) && (!also || also(v));
    });
    return {x, PrimeElem(a0 + x * b0), stats};
}

bool accepts_residue_candidate(const Poly& candidate, const Poly& reference, std::uint32_t m) {
    if (candidate.is_constant() || !is_irreducible(candidate)) return false;
    if ((reference % candidate).is_zero()) return false;
    return power_residue_symbol(reference, PrimeElem(candidate), m).is_trivial();
}

ResidueHit find_prime_in_class_with_residue(const Poly& a0, const Poly& b0, const Poly& reference,
                                            std::uint32_t m, const SearchCaps& caps) {
    check_progression(a0, b0);
    if (m == 0 || (a0.q() - 1) % m != 0) throw PreconditionError("residue search needs m | q-1");
    if (reference.is_zero()) throw PreconditionError("residue search reference is zero");
    // When the reference is constant, or a prime dividing b0, every candidate's symbol is fixed by
    // its degree and leading coefficient, so hopeless candidates skip the irreducibility test.
    std::optional<SymbolValue> class_symbol;
    if (reference.is_constant())
        class_symbol = SymbolValue{{1}};
    else if ((b0 % reference).is_zero() && !(a0 % reference).is_zero() && is_irreducible(reference))
        class_symbol = power_residue_symbol(a0, PrimeElem(reference), m);
    auto possible = [&](const Poly& v) {
        return !class_symbol || v.is_zero() ||
               symbol_by_reciprocity(reference, v.degree().value(), v.lead(), *class_symbol, m).is_trivial();
    };
    auto [y, stats] = walk_progression(a0, b0, caps, "no prime with m-th power residue found", [&](const Poly& v) {
        return possible(v) && accepts_residue_candidate(v, reference, m);
    });
    PrimeElem prime(a0 + y * b0);
    Poly root = mth_root_mod_prime(reference, prime, m);
    return {std::move(y), std::move(prime), std::move(root), stats};
}

CompanionHit find_companion(const PrimeElem& b, const Poly& g, FieldElem u, const SearchCaps& caps) {
    const auto q = b.q();
    if (g.is_zero()) throw PreconditionError("companion modulus is zero");
    if (u.value == 0) throw PreconditionError("companion unit is zero");
    const Poly bp = b.element();
    if (!gcd(bp, g).is_one()) throw NonCoprimeInput("companion needs gcd(b, g) = 1");
    check_caps(caps);

    const Poly c0 = (Poly::constant(q, u) * inverse_mod(bp, g)) % g;
    ExponentData eps_b = unit_exponent(bp);
    const BigInt m = q - 1;

    PolyEnumerator offsets(q, caps.max_offset_degree);
    SearchStats stats;
    while (auto t = offsets.next()) {
        if (stats.candidates >= caps.max_candidates) break;
        Poly c = c0 + *t * g;
        if (c.is_zero()) continue;
        ++stats.candidates;
        ExponentData eps_c = unit_exponent(c);
        if (big_gcd(eps_b.value, eps_c.value) == m) {
            stats.offset_degree = offset_degree(*t);
            return {std::move(c), std::move(*t), std::move(eps_b), std::move(eps_c), stats};
        }
    }
    throw CapExceeded("no companion element found", stats.candidates);
}

}  // namespace sldecomp

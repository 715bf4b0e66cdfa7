#pragma once

#include <cstdint>
#include <vector>

#include "sldecomp/bigint.hpp"
#include "sldecomp/factor.hpp"
#include "sldecomp/poly.hpp"

namespace sldecomp {

/// Element of the quotient ring F_q[T]/(modulus).
class ResidueClass {
public:
    ResidueClass(Poly modulus, const Poly& value);

    const Poly& modulus() const noexcept { return modulus_; }
    const Poly& rep() const noexcept { return rep_; }

    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_one() const;
    bool is_unit() const;
    ResidueClass inverse() const;
    ResidueClass pow(const BigInt& e) const;
    ResidueClass pow(std::uint64_t e) const;

    ResidueClass operator+(const ResidueClass& o) const;
    ResidueClass operator-(const ResidueClass& o) const;
    ResidueClass operator*(const ResidueClass& o) const;
    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
    }

private:
    void check_same_modulus(const ResidueClass& o) const;

    Poly modulus_;
    Poly rep_;
};

/// v_p(n): the largest i with p^i | n.
unsigned p_adic_valuation(std::uint64_t p, std::uint64_t n);
unsigned p_adic_valuation(std::uint64_t p, const BigInt& n);

/// One prime-power factor P^k of b with the exponent of (F_q[T]/P^k)^*.
struct LocalExponent {
    PrimeElem prime;
    unsigned multiplicity;
    BigInt exponent;
};

/// epsilon(b): exponent of the unit group (F_q[T]/b)^*, with its provenance.
struct ExponentData {
    BigInt value;
    std::vector<LocalExponent> factors;
};

/// Exponent of (F_q[T]/P^k)^* for a prime of degree d: (q^d - 1) * p^ceil(log_p k).
BigInt local_unit_exponent(std::uint32_t q, std::size_t degree, unsigned multiplicity);

/// Computed from factor(b); value 1 for constant b. Throws on b == 0.
ExponentData unit_exponent(const Poly& b);

/// An m-th root of unity of F_q returned by the power residue symbol.
struct SymbolValue {
    FieldElem root;

    bool is_trivial() const noexcept { return root.value == 1; }
    friend bool operator==(SymbolValue, SymbolValue) = default;
};

/// (a / P)_m = a^((q^d - 1)/m) mod P, an element of F_q. Requires m | q-1 and P not dividing a.
SymbolValue power_residue_symbol(const Poly& a, const PrimeElem& p, std::uint32_t m);

/// (r / B)_m for a prime r and a polynomial B coprime to r, from deg B, lc(B) and (B / r)_m:
/// (r/B) = (-1)^(d e k) sgn(r)^e sgn(B)^(-d) (B/r) with d = deg r, e = deg B, k = (q-1)/m and
/// sgn(x) = lc(x)^k. For a constant r = u the value is u^(e k).
SymbolValue symbol_by_reciprocity(const Poly& r, std::size_t deg_b, FieldElem lead_b, SymbolValue b_over_r,
                                  std::uint32_t m);

/// r with r^m = a mod P and deg r < deg P. Throws PreconditionError when a is not an m-th power.
Poly mth_root_mod_prime(const Poly& a, const PrimeElem& p, std::uint32_t m);

/// a^{-1} mod g; for a constant modulus the quotient ring is zero and the result is 0.
/// Throws NonCoprimeInput when gcd(a, g) != 1.
Poly inverse_mod(const Poly& a, const Poly& g);

}  // namespace sldecomp

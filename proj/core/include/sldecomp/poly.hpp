#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sldecomp/bigint.hpp"
#include "sldecomp/field.hpp"

namespace sldecomp {

/// Polynomial degree with a distinguished negative infinity for the zero polynomial.
class Degree {
public:
    static constexpr Degree neg_infinity() { return Degree(); }
    static constexpr Degree of(std::size_t d) { return Degree(d); }

    constexpr bool is_neg_infinity() const noexcept { return !finite_; }
    /// Finite value; precondition: !is_neg_infinity().
    constexpr std::size_t value() const {
        if (!finite_) throw PreconditionError("degree of the zero polynomial has no finite value");
        return value_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() = default;
    constexpr explicit Degree(std::size_t v) : finite_(true), value_(v) {}

    bool finite_ = false;
    std::size_t value_ = 0;
};

struct DivMod;

/// Element of F_q[T] in canonical form: constant term first, no trailing zeros.
class Poly {
public:
    /// The zero polynomial over F_q.
    explicit Poly(std::uint32_t q);
    /// Coefficients constant term first; reduced mod q and trimmed.
    Poly(std::uint32_t q, std::span<const std::int64_t> coeffs);
    Poly(std::uint32_t q, std::initializer_list<std::int64_t> coeffs);

    static Poly constant(std::uint32_t q, std::int64_t c);
    static Poly constant(std::uint32_t q, FieldElem c) { return constant(q, static_cast<std::int64_t>(c.value)); }
    /// c * T^k
    static Poly monomial(std::uint32_t q, std::int64_t c, std::size_t k);
    static Poly t(std::uint32_t q) { return monomial(q, 1, 1); }

    std::uint32_t q() const noexcept { return q_; }
    PrimeField field() const { return PrimeField(q_); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    /// Nonzero constant, i.e. a unit of F_q[T].
    bool is_unit() const noexcept { return c_.size() == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_infinity() : Degree::of(c_.size() - 1);
    }
    /// Number of stored coefficients (0 for the zero polynomial).
    std::size_t length() const noexcept { return c_.size(); }

    FieldElem coeff(std::size_t k) const noexcept { return {k < c_.size() ? c_[k] : 0u}; }
    /// Leading coefficient; zero for the zero polynomial.
    FieldElem lead() const noexcept { return {c_.empty() ? 0u : c_.back()}; }
    std::span<const std::uint8_t> coeffs() const noexcept { return c_; }
    std::vector<std::int64_t> coeff_vector() const { return {c_.begin(), c_.end()}; }

    /// Scale to leading coefficient 1; zero stays zero.
    Poly monic() const;
    Poly scaled(FieldElem s) const;
    FieldElem eval(FieldElem x) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend DivMod divmod(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    friend Poly gcd(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }
    /// Total order: by degree, then coefficients from the constant term upward.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim();
    void check_same_field(const Poly& o) const;

    std::uint32_t q_;
    std::vector<std::uint8_t> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b. Throws DivisionByZero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// a / b, throwing PipelineError unless the division is exact.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; throws PreconditionError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g;  ///< monic gcd
    Poly s;
    Poly t;  ///< s*a + t*b == g
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// Monic gcd of a list together with Bezout coefficients: sum coeffs[i]*v[i] == g.
struct XgcdMany {
    Poly g;
    std::vector<Poly> coeffs;
};
XgcdMany xgcd_many(std::span<const Poly> v);

/// True iff the entries generate the unit ideal.
bool is_unimodular(std::span<const Poly> v);

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& modulus);
Poly powmod(const Poly& a, const BigInt& e, const Poly& modulus);
Poly pow(const Poly& a, std::uint64_t e);

/// Enumerates F_q[T] by degree, then lexicographically on the coefficient
/// tuple read constant term first: 0, 1, ..., q-1, then degree 1, and so on.
class PolyEnumerator {
public:
    PolyEnumerator(std::uint32_t q, std::size_t max_degree, bool include_zero = true);

    /// Next polynomial, or nullopt once all polynomials of degree <= max_degree are listed.
    std::optional<Poly> next();

private:
    std::uint32_t q_;
    std::size_t max_degree_;
    bool started_ = false;
    bool done_ = false;
    bool zero_pending_;
    std::vector<std::int64_t> digits_;  // constant term first, last entry nonzero
};

/// Number of polynomials of degree exactly d over F_q (as BigInt), used for cap arithmetic.
BigInt count_of_degree(std::uint32_t q, std::size_t d);

}  // namespace sldecomp

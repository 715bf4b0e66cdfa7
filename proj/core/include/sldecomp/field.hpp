#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "sldecomp/errors.hpp"

namespace sldecomp {

/// Largest characteristic the engine accepts.
inline constexpr std::uint32_t kMaxCharacteristic = 13;

/// True for the primes 2, 3, 5, 7, 11, 13.
constexpr bool is_supported_characteristic(std::uint32_t q) {
    return q == 2 || q == 3 || q == 5 || q == 7 || q == 11 || q == 13;
}

inline void require_supported_characteristic(std::uint32_t q) {
    if (!is_supported_characteristic(q))
        throw PreconditionError("field size must be a prime in {2,3,5,7,11,13}, got " +
                                std::to_string(q));
}

/// Element of F_q, always stored reduced into [0, q).
struct FieldElem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {

struct InverseTable {
    std::array<std::array<std::uint8_t, kMaxCharacteristic>, kMaxCharacteristic + 1> inv{};

    constexpr InverseTable() {
        for (std::uint32_t q = 2; q <= kMaxCharacteristic; ++q)
            for (std::uint32_t a = 1; a < q; ++a)
                for (std::uint32_t b = 1; b < q; ++b)
                    if ((a * b) % q == 1) inv[q][a] = static_cast<std::uint8_t>(b);
    }
};

inline constexpr InverseTable kInverses{};

}  // namespace detail

/// Arithmetic in the prime field F_q. Cheap to copy; carries only q.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q) : q_(q) { require_supported_characteristic(q); }

    std::uint32_t size() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return q_; }
    /// Order of the multiplicative group, m = q - 1.
    std::uint32_t unit_order() const noexcept { return q_ - 1; }

    FieldElem elem(std::int64_t v) const {
        auto r = v % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return FieldElem{static_cast<std::uint32_t>(r)};
    }
    FieldElem add(FieldElem a, FieldElem b) const { return {(a.value + b.value) % q_}; }
    FieldElem sub(FieldElem a, FieldElem b) const { return {(a.value + q_ - b.value) % q_}; }
    FieldElem neg(FieldElem a) const { return {(q_ - a.value) % q_}; }
    FieldElem mul(FieldElem a, FieldElem b) const { return {(a.value * b.value) % q_}; }
    FieldElem inv(FieldElem a) const {
        if (a.value == 0) throw PreconditionError("inverse of zero in F_q");
        return {detail::kInverses.inv[q_][a.value]};
    }
    FieldElem pow(FieldElem a, std::uint64_t e) const {
        std::uint32_t r = 1, b = a.value;
        while (e) {
            if (e & 1) r = r * b % q_;
            b = b * b % q_;
            e >>= 1;
        }
        return {r};
    }
    /// Multiplicative order of a nonzero element.
    std::uint32_t order(FieldElem a) const {
        if (a.value == 0) throw PreconditionError("order of zero in F_q");
        std::uint32_t k = 1, x = a.value;
        while (x != 1) {
            x = x * a.value % q_;
            ++k;
        }
        return k;
    }

private:
    std::uint32_t q_;
};

}  // namespace sldecomp

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sldecomp/poly.hpp"

namespace sldecomp {

/// Dense n x n matrix over F_q[T], row-major, 0-based indices.
class PolyMatrix {
public:
    PolyMatrix(std::uint32_t q, std::size_t n);
    static PolyMatrix identity(std::uint32_t q, std::size_t n);

    std::uint32_t q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }

    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    /// row i += f * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Poly& f);
    /// column j += f * column i (right multiplication by E_ij(f))
    void add_col_multiple(std::size_t j, std::size_t i, const Poly& f);

    bool is_identity() const;
    Poly determinant() const;
    /// Largest entry degree, 0 for the zero matrix.
    std::size_t max_degree() const;

    /// Top-left block embedding: diag(*this, I).
    PolyMatrix embedded(std::size_t n) const;
    PolyMatrix block(std::size_t k) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    std::string to_string() const;

private:
    std::uint32_t q_;
    std::size_t n_;
    std::vector<Poly> e_;
};

/// Inverse of a 2 x 2 matrix with determinant 1: [[d, -b], [-c, a]].
PolyMatrix sl2_inverse(const PolyMatrix& m);

/// A matrix whose determinant is exactly the constant 1.
class SLMatrix {
public:
    /// Throws PreconditionError unless det == 1.
    explicit SLMatrix(PolyMatrix m);

    const PolyMatrix& matrix() const noexcept { return m_; }
    std::size_t n() const noexcept { return m_.n(); }
    std::uint32_t q() const noexcept { return m_.q(); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const SLMatrix&, const SLMatrix&) = default;

private:
    PolyMatrix m_;
};

/// E_ij(f): identity plus f at (row, col), row != col.
struct ElemFactor {
    std::size_t row;
    std::size_t col;
    Poly f;

    ElemFactor inverse() const { return {row, col, -f}; }
    friend bool operator==(const ElemFactor&, const ElemFactor&) = default;
};

enum class Side { Left, Right };

/// A factor applied during a pipeline: left means X <- E*X, right means X <- X*E.
struct SidedFactor {
    Side side;
    ElemFactor factor;

    friend bool operator==(const SidedFactor&, const SidedFactor&) = default;
};

/// Ordered product of elementary matrices; the word represents factors[0] * factors[1] * ...
using Word = std::vector<ElemFactor>;

PolyMatrix elem_to_matrix(const ElemFactor& e, std::uint32_t q, std::size_t n);
PolyMatrix word_product(std::span<const ElemFactor> w, std::uint32_t q, std::size_t n);

/// Applies a sided factor in place.
void apply(PolyMatrix& x, const SidedFactor& s);
/// Replays sided factors on a copy of `start`.
PolyMatrix replay(const PolyMatrix& start, std::span<const SidedFactor> applied);

/// Given (prod of applied factors around a) = final and final = prod(final_word), returns
/// a word whose product is a. Throws PipelineError if either relation fails.
Word flatten(const SLMatrix& a, std::span<const SidedFactor> applied, const PolyMatrix& final_matrix,
             std::span<const ElemFactor> final_word);

/// True iff word_product(w) == a entrywise.
bool verify(std::span<const ElemFactor> w, const SLMatrix& a);

/// Throws PreconditionError unless row != col and both are below n.
void check_indices(const ElemFactor& e, std::size_t n);

}  // namespace sldecomp

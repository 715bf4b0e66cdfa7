#include "sldecomp/matrix.hpp"

#include <sstream>
#include <utility>

namespace sldecomp {

PolyMatrix::PolyMatrix(std::uint32_t q, std::size_t n) : q_(q), n_(n), e_(n * n, Poly(q)) {}

PolyMatrix PolyMatrix::identity(std::uint32_t q, std::size_t n) {
    PolyMatrix m(q, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(q, 1);
    return m;
}

void PolyMatrix::add_row_multiple(std::size_t i, std::size_t j, const Poly& f) {
    if (f.is_zero()) return;
    for (std::size_t c = 0; c < n_; ++c) {
        const Poly& src = (*this)(j, c);
        if (!src.is_zero()) (*this)(i, c) += f * src;
    }
}

void PolyMatrix::add_col_multiple(std::size_t j, std::size_t i, const Poly& f) {
    if (f.is_zero()) return;
    for (std::size_t r = 0; r < n_; ++r) {
        const Poly& src = (*this)(r, i);
        if (!src.is_zero()) (*this)(r, j) += f * src;
    }
}

bool PolyMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Poly& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

Poly PolyMatrix::determinant() const {
    // Fraction-free Bareiss elimination; every division is exact.
    PolyMatrix m = *this;
    Poly prev = Poly::constant(q_, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n_ && m(p, k).is_zero()) ++p;
            if (p == n_) return Poly(q_);
            for (std::size_t c = 0; c < n_; ++c) std::swap(m(k, c), m(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = Poly(q_);
        }
        prev = m(k, k);
    }
    Poly det = n_ == 0 ? Poly::constant(q_, 1) : m(n_ - 1, n_ - 1);
    return negate ? -det : det;
}

std::size_t PolyMatrix::max_degree() const {
    std::size_t d = 0;
    for (const auto& x : e_)
        if (!x.is_zero()) d = std::max(d, x.degree().value());
    return d;
}

PolyMatrix PolyMatrix::embedded(std::size_t n) const {
    if (n < n_) throw PreconditionError("cannot embed into a smaller dimension");
    PolyMatrix out = identity(q_, n);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

PolyMatrix PolyMatrix::block(std::size_t k) const {
    if (k > n_) throw PreconditionError("block larger than matrix");
    PolyMatrix out(q_, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_ || a.q_ != b.q_) throw PreconditionError("matrix shapes differ");
    PolyMatrix out(a.q_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix sl2_inverse(const PolyMatrix& m) {
    if (m.n() != 2) throw PreconditionError("sl2_inverse needs a 2 x 2 matrix");
    PolyMatrix out(m.q(), 2);
    out(0, 0) = m(1, 1);
    out(0, 1) = -m(0, 1);
    out(1, 0) = -m(1, 0);
    out(1, 1) = m(0, 0);
    return out;
}

SLMatrix::SLMatrix(PolyMatrix m) : m_(std::move(m)) {
    if (!m_.determinant().is_one()) throw PreconditionError("determinant is not 1");
}

void check_indices(const ElemFactor& e, std::size_t n) {
    if (e.row >= n || e.col >= n || e.row == e.col)
        throw PreconditionError("bad elementary factor indices (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ") for n = " + std::to_string(n));
}

PolyMatrix elem_to_matrix(const ElemFactor& e, std::uint32_t q, std::size_t n) {
    check_indices(e, n);
    PolyMatrix m = PolyMatrix::identity(q, n);
    m(e.row, e.col) = e.f;
    return m;
}

PolyMatrix word_product(std::span<const ElemFactor> w, std::uint32_t q, std::size_t n) {
    PolyMatrix m = PolyMatrix::identity(q, n);
    for (const auto& e : w) {
        check_indices(e, n);
        m.add_col_multiple(e.col, e.row, e.f);
    }
    return m;
}

void apply(PolyMatrix& x, const SidedFactor& s) {
    check_indices(s.factor, x.n());
    if (s.side == Side::Left)
        x.add_row_multiple(s.factor.row, s.factor.col, s.factor.f);
    else
        x.add_col_multiple(s.factor.col, s.factor.row, s.factor.f);
}

PolyMatrix replay(const PolyMatrix& start, std::span<const SidedFactor> applied) {
    PolyMatrix x = start;
    for (const auto& s : applied) apply(x, s);
    return x;
}

Word flatten(const SLMatrix& a, std::span<const SidedFactor> applied, const PolyMatrix& final_matrix,
             std::span<const ElemFactor> final_word) {
    if (replay(a.matrix(), applied) != final_matrix)
        throw PipelineError("flatten: recorded factors do not transform the input into the final matrix");
    if (word_product(final_word, a.q(), a.n()) != final_matrix)
        throw PipelineError("flatten: final word does not multiply to the final matrix");

    // final = L_k ... L_1 * a * R_1 ... R_k, so a = L_1^-1 ... L_k^-1 * final * R_k^-1 ... R_1^-1.
    Word out;
    for (const auto& s : applied)
        if (s.side == Side::Left) out.push_back(s.factor.inverse());
    out.insert(out.end(), final_word.begin(), final_word.end());
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        if (it->side == Side::Right) out.push_back(it->factor.inverse());

    if (!verify(out, a)) throw PipelineError("flatten: flattened word does not reproduce the input");
    return out;
}

bool verify(std::span<const ElemFactor> w, const SLMatrix& a) {
    for (const auto& e : w)
        if (e.row >= a.n() || e.col >= a.n() || e.row == e.col) return false;
    return word_product(w, a.q(), a.n()) == a.matrix();
}

}  // namespace sldecomp

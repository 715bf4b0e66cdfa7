#include "sldecomp/constant_ext.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <vector>

#include "sldecomp/residue.hpp"

namespace sldecomp {

namespace {

void require_positive(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw PreconditionError("extension degrees must be positive");
}

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Elements of F_q[Z]/(f) indexed by their coefficient vector read in base q.
class ExplicitField {
public:
    ExplicitField(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
        PolyEnumerator it(q, n, false);
        while (auto f = it.next())
            if (f->degree().value() == n && f->is_monic() && is_irreducible(*f)) {
                modulus_ = *f;
                break;
            }
        size_ = 1;
        for (std::size_t i = 0; i < n; ++i) size_ *= q;
    }

    std::uint64_t size() const { return size_; }

    Poly element(std::uint64_t index) const {
        std::vector<std::int64_t> c;
        for (std::size_t i = 0; i < n_; ++i, index /= q_) c.push_back(static_cast<std::int64_t>(index % q_));
        return Poly(q_, c);
    }

    std::uint64_t index(const Poly& x) const {
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * q_ + x.coeff(i).value;
        return idx;
    }

    /// Indices fixed by x -> x^(q^a).
    std::vector<std::uint64_t> fixed_set(std::uint64_t a) const {
        std::uint64_t e = 1;
        for (std::uint64_t i = 0; i < a; ++i) e *= q_;
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 0; i < size_; ++i) {
            Poly x = element(i);
            if (powmod(x, e, *modulus_) == x) out.push_back(i);
        }
        return out;
    }

    Poly mul(const Poly& a, const Poly& b) const { return mulmod(a, b, *modulus_); }

    /// Dimension over F_q of the span of the given elements.
    std::size_t rank(const std::vector<Poly>& vs) const {
        const PrimeField fq(q_);
        std::vector<std::vector<std::uint32_t>> rows;
        for (const auto& v : vs) {
            std::vector<std::uint32_t> r(n_);
            for (std::size_t i = 0; i < n_; ++i) r[i] = v.coeff(i).value;
            rows.push_back(std::move(r));
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < rows.size(); ++col) {
            auto piv = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
            if (piv == rows.end()) continue;
            std::iter_swap(rows.begin() + rank, piv);
            auto& p = rows[rank];
            const auto inv = fq.inv({p[col]});
            for (auto& x : p) x = fq.mul({x}, inv).value;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == rank || rows[i][col] == 0) continue;
                const FieldElem f{rows[i][col]};
                for (std::size_t j = 0; j < n_; ++j) rows[i][j] = fq.sub({rows[i][j]}, fq.mul(f, {p[j]})).value;
            }
            ++rank;
        }
        return rank;
    }

private:
    std::uint32_t q_;
    std::size_t n_;
    std::optional<Poly> modulus_;
    std::uint64_t size_;
};

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

std::uint64_t compositum_degree(std::uint64_t a1, std::uint64_t a2) {
    require_positive(a1, a2);
    return std::lcm(a1, a2);
}

std::uint64_t intersection_degree(std::uint64_t a1, std::uint64_t a2) {
    require_positive(a1, a2);
    return std::gcd(a1, a2);
}

bool verify_subfield_lattice(std::uint32_t q, std::uint64_t a1, std::uint64_t a2, std::uint64_t n,
                             std::uint64_t cap) {
    require_supported_characteristic(q);
    require_positive(a1, a2);
    const std::uint64_t l = std::lcm(a1, a2), g = std::gcd(a1, a2);
    if (n == 0 || n % l != 0) throw PreconditionError("lcm(a1, a2) must divide N");
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        size *= q;
        if (size > cap) throw SizeCapExceeded("q^N exceeds the field size cap");
    }

    const ExplicitField field(q, n);
    const auto e1 = field.fixed_set(a1), e2 = field.fixed_set(a2);
    if (e1.size() != ipow(q, a1) || e2.size() != ipow(q, a2)) return false;

    std::vector<std::uint64_t> meet;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(meet));
    if (meet.size() != ipow(q, g) || meet != field.fixed_set(g)) return false;

    std::vector<Poly> products;
    for (auto i : e1)
        for (auto j : e2) products.push_back(field.mul(field.element(i), field.element(j)));
    if (field.rank(products) != l) return false;
    // The span of products must sit inside the fixed field of the lcm power.
    const auto el = field.fixed_set(l);
    for (const auto& x : products)
        if (!std::binary_search(el.begin(), el.end(), field.index(x))) return false;
    return el.size() == ipow(q, l);
}

SplittingData splitting_data(std::uint64_t d, std::uint64_t r) {
    require_positive(d, r);
    const std::uint64_t g = std::gcd(d, r);
    return {g, r / g};
}

bool split_complete_test(const PrimeElem& prime, std::uint64_t p, unsigned e_p) {
    const std::uint32_t q = prime.q();
    if (!is_small_prime(p)) throw PreconditionError("p must be prime");
    if (p == q) throw PreconditionError("no p-power roots of unity in characteristic p");
    if (e_p != p_adic_valuation(p, std::uint64_t{q} - 1)) throw PreconditionError("e_p must equal v_p(q - 1)");
    const BigInt norm_minus_one = big_pow(q, prime.degree()) - 1;
    return p_adic_valuation(p, norm_minus_one) >= e_p + 1;
}

}  // namespace sldecomp

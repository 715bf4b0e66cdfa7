#include "sldecomp/factor.hpp"

#include <algorithm>
#include <random>

namespace sldecomp {

bool is_irreducible(const Poly& f) {
    if (f.is_constant()) throw PreconditionError("irreducibility of a constant polynomial");
    const Poly g = f.monic();
    const std::size_t d = g.degree().value();
    if (d == 1) return true;
    // Linear factors are found by evaluation; this rejects most inputs cheaply.
    for (std::uint32_t v = 0; v < f.q(); ++v)
        if (g.eval({v}).value == 0) return false;
    const Poly x = Poly::t(f.q()) % g;
    Poly h = powmod(x, f.q(), g);
    // g is irreducible iff it has no factor of degree <= d/2, i.e. iff
    // gcd(T^{q^i} - T, g) = 1 for all i <= d/2.
    for (std::size_t i = 2; 2 * i <= d; ++i) {
        h = powmod(h, f.q(), g);
        if (!gcd(h - x, g).is_one()) return false;
    }
    return true;
}

PrimeElem::PrimeElem(const Poly& element) : monic_(element.monic()), unit_(element.lead()) {
    if (element.is_constant() || !is_irreducible(element))
        throw PreconditionError("not a prime element: " + element.to_string());
}

PrimeElem::PrimeElem(const Poly& monic, FieldElem unit) : monic_(monic), unit_(unit) {
    if (!monic.is_monic() || unit.value == 0 || monic.is_constant() || !is_irreducible(monic))
        throw PreconditionError("not a prime element: " + monic.to_string());
}

Poly Factorization::product(std::uint32_t q) const {
    Poly r = Poly::constant(q, unit);
    for (const auto& pp : factors) r *= pow(pp.monic, pp.multiplicity);
    return r;
}

namespace {

/// p-th root of a polynomial whose derivative vanishes; coefficients are fixed by Frobenius over F_p.
Poly pth_root(const Poly& f) {
    const auto q = f.q();
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < f.length(); i += q) c.push_back(f.coeff(i).value);
    return Poly(q, c);
}

void equal_degree_split(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t n = g.degree().value();
    if (n == d) {
        out.push_back(g);
        return;
    }
    const auto q = g.q();
    std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
    const BigInt half = (big_pow(q, d) - 1) / 2;
    for (;;) {
        std::vector<std::int64_t> c(n);
        for (auto& v : c) v = coeff(rng);
        const Poly a(q, c);
        if (a.is_constant()) continue;
        Poly b(q);
        if (q == 2) {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 on every factor.
            Poly term = a;
            b = a;
            for (std::size_t i = 1; i < d; ++i) {
                term = mulmod(term, term, g);
                b += term;
            }
        } else {
            b = powmod(a, half, g) - Poly::constant(q, 1);
        }
        const Poly h = gcd(b.is_zero() ? g : b, g);
        const std::size_t dh = h.is_zero() ? 0 : h.degree().value();
        if (dh == 0 || dh == n) continue;
        equal_degree_split(h, d, rng, out);
        equal_degree_split(g / h, d, rng, out);
        return;
    }
}

}  // namespace

std::vector<PrimePower> squarefree_decomposition(const Poly& f) {
    if (!f.is_monic()) throw PreconditionError("square-free decomposition needs a monic polynomial");
    std::vector<PrimePower> out;
    if (f.is_one()) return out;
    const Poly df = f.derivative();
    Poly c = df.is_zero() ? f : gcd(f, df);
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) {
        for (auto& pp : squarefree_decomposition(pth_root(c).monic()))
            out.push_back({pp.monic, pp.multiplicity * f.q()});
    }
    return out;
}

std::vector<DegreeBlock> distinct_degree_factorization(const Poly& f) {
    std::vector<DegreeBlock> out;
    Poly rest = f;
    const auto q = f.q();
    Poly h = Poly::t(q) % rest;
    std::size_t i = 1;
    while (rest.length() > 2 * i) {
        h = powmod(h, q, rest);
        Poly g = gcd(h - Poly::t(q), rest);
        if (!g.is_one()) {
            out.push_back({g, i});
            rest = rest / g;
            h = h % rest;
        }
        ++i;
    }
    if (!rest.is_constant()) out.push_back({rest, rest.degree().value()});
    return out;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw PreconditionError("factorization of the zero polynomial");
    Factorization out{f.lead(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& sq : squarefree_decomposition(f.monic())) {
        for (const auto& block : distinct_degree_factorization(sq.monic)) {
            std::vector<Poly> irreducibles;
            equal_degree_split(block.product, block.degree, rng, irreducibles);
            for (auto& p : irreducibles) out.factors.push_back({p.monic(), sq.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.monic < b.monic; });
    // A prime of multiplicity k*p + j (0 < j < p) is reported once for j and once for k*p.
    std::vector<PrimePower> merged;
    for (auto& pp : out.factors) {
        if (!merged.empty() && merged.back().monic == pp.monic)
            merged.back().multiplicity += pp.multiplicity;
        else
            merged.push_back(pp);
    }
    out.factors = std::move(merged);
    return out;
}

}  // namespace sldecomp

#include "sldecomp/residue.hpp"

#include <utility>

namespace sldecomp {

ResidueClass::ResidueClass(Poly modulus, const Poly& value)
    : modulus_(std::move(modulus)), rep_(value % modulus_) {
    if (modulus_.is_zero()) throw DivisionByZero();
}

void ResidueClass::check_same_modulus(const ResidueClass& o) const {
    if (modulus_ != o.modulus_) throw PreconditionError("residue classes with different moduli");
}

bool ResidueClass::is_one() const { return (Poly::constant(rep_.q(), 1) % modulus_) == rep_; }

bool ResidueClass::is_unit() const {
    if (modulus_.is_unit()) return true;
    return !rep_.is_zero() && gcd(rep_, modulus_).is_one();
}

ResidueClass ResidueClass::inverse() const { return {modulus_, inverse_mod(rep_, modulus_)}; }

ResidueClass ResidueClass::pow(const BigInt& e) const { return {modulus_, powmod(rep_, e, modulus_)}; }
ResidueClass ResidueClass::pow(std::uint64_t e) const { return {modulus_, powmod(rep_, e, modulus_)}; }

ResidueClass ResidueClass::operator+(const ResidueClass& o) const {
    check_same_modulus(o);
    return {modulus_, rep_ + o.rep_};
}
ResidueClass ResidueClass::operator-(const ResidueClass& o) const {
    check_same_modulus(o);
    return {modulus_, rep_ - o.rep_};
}
ResidueClass ResidueClass::operator*(const ResidueClass& o) const {
    check_same_modulus(o);
    return {modulus_, rep_ * o.rep_};
}

unsigned p_adic_valuation(std::uint64_t p, std::uint64_t n) {
    if (p < 2 || n == 0) throw PreconditionError("p_adic_valuation needs p >= 2 and n >= 1");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

unsigned p_adic_valuation(std::uint64_t p, const BigInt& n) {
    if (p < 2 || n <= 0) throw PreconditionError("p_adic_valuation needs p >= 2 and n >= 1");
    unsigned v = 0;
    BigInt x = n;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

BigInt local_unit_exponent(std::uint32_t q, std::size_t degree, unsigned multiplicity) {
    if (multiplicity == 0) throw PreconditionError("local exponent of multiplicity 0");
    // 1 + P^k has exponent p^j for the least j with p^j >= k, since (1+x)^(p^j) = 1 + x^(p^j).
    BigInt unipotent = 1;
    while (unipotent < multiplicity) unipotent *= q;
    return (big_pow(q, degree) - 1) * unipotent;
}

ExponentData unit_exponent(const Poly& b) {
    if (b.is_zero()) throw PreconditionError("unit exponent of zero");
    ExponentData out{1, {}};
    if (b.is_constant()) return out;
    const auto q = b.q();
    for (const auto& pp : factor(b).factors) {
        BigInt local = local_unit_exponent(q, pp.monic.degree().value(), pp.multiplicity);
        out.value = big_lcm(out.value, local);
        out.factors.push_back({PrimeElem(pp.monic, FieldElem{1}), pp.multiplicity, std::move(local)});
    }
    return out;
}

namespace {

void check_symbol_args(const Poly& a, const PrimeElem& p, std::uint32_t m) {
    const auto q = p.q();
    if (a.q() != q) throw PreconditionError("residue symbol over mismatched fields");
    if (m == 0 || (q - 1) % m != 0) throw PreconditionError("residue symbol needs m | q-1");
    if ((a % p.monic()).is_zero()) throw PreconditionError("residue symbol with P | a");
}

/// r-th root in the cyclic group (F_q[T]/P)^* of order `order`, for a prime r | order and an r-th power x.
Poly rth_root(const Poly& x, const Poly& modulus, const BigInt& order, std::uint32_t r) {
    const auto q = modulus.q();
    const Poly one = Poly::constant(q, 1);

    // order = r^s * t with r coprime to t
    unsigned s = 0;
    BigInt t = order;
    while (t % r == 0) {
        t /= r;
        ++s;
    }
    const BigInt r_s = order / t;

    // k with r*k = 1 mod t
    BigInt k = 0;
    for (std::uint32_t j = 0; j < r; ++j) {
        if ((t * j + 1) % r == 0) {
            k = (t * j + 1) / r;
            break;
        }
    }
    const Poly x0 = powmod(x, k, modulus);
    // x0^r = x * err with err in the r-Sylow subgroup.
    const Poly err = mulmod(powmod(x0, r, modulus), inverse_mod(x, modulus), modulus);
    if (err == one) return x0;

    // A generator of the r-Sylow subgroup from any r-th power non-residue.
    const BigInt cofactor = order / r;
    Poly gen(q);
    PolyEnumerator candidates(q, modulus.degree().value() - 1, false);
    while (auto z = candidates.next()) {
        if (powmod(*z, cofactor, modulus) != one) {
            gen = powmod(*z, t, modulus);
            break;
        }
    }
    if (gen.is_zero()) throw PipelineError("no r-th power non-residue found");

    // Discrete log of err to base gen, one base-r digit at a time.
    const Poly gen_inv = inverse_mod(gen, modulus);
    const Poly digit_base = powmod(gen, r_s / r, modulus);  // order r
    BigInt log = 0, place = 1;
    for (unsigned i = 0; i < s; ++i) {
        const Poly reduced = mulmod(err, powmod(gen_inv, log, modulus), modulus);
        const Poly h = powmod(reduced, r_s / (place * r), modulus);
        std::uint32_t digit = 0;
        Poly acc = one;
        while (acc != h) {
            acc = mulmod(acc, digit_base, modulus);
            if (++digit >= r) throw PipelineError("discrete log digit not found");
        }
        log += place * digit;
        place *= r;
    }
    if (log % r != 0) throw PreconditionError("element is not an r-th power");
    // y = gen^(-log/r) so that (x0*y)^r = x * err * err^{-1}.
    const Poly y = powmod(gen_inv, BigInt(log / r), modulus);
    return mulmod(x0, y, modulus);
}

}  // namespace

SymbolValue power_residue_symbol(const Poly& a, const PrimeElem& p, std::uint32_t m) {
    check_symbol_args(a, p, m);
    const auto q = p.q();
    const BigInt e = (big_pow(q, p.degree()) - 1) / m;
    const Poly v = powmod(a, e, p.monic());
    if (!v.is_unit()) throw PipelineError("residue symbol value is not a constant");
    return SymbolValue{v.lead()};
}

SymbolValue symbol_by_reciprocity(const Poly& r, std::size_t deg_b, FieldElem lead_b, SymbolValue b_over_r,
                                  std::uint32_t m) {
    const auto q = r.q();
    if (r.is_zero() || lead_b.value == 0) throw PreconditionError("symbol_by_reciprocity needs nonzero inputs");
    if (m == 0 || (q - 1) % m != 0) throw PreconditionError("symbol needs m | q-1");
    const PrimeField fq(q);
    const std::uint64_t k = (q - 1) / m;
    if (r.is_constant()) return {fq.pow(r.lead(), deg_b * k)};
    const std::uint64_t d = r.degree().value();
    FieldElem v = fq.pow(fq.neg(fq.elem(1)), (d * deg_b * k) % 2);
    v = fq.mul(v, fq.pow(fq.pow(r.lead(), k), deg_b));
    v = fq.mul(v, fq.inv(fq.pow(fq.pow(lead_b, k), d)));
    return {fq.mul(v, b_over_r.root)};
}

Poly mth_root_mod_prime(const Poly& a, const PrimeElem& p, std::uint32_t m) {
    if (!power_residue_symbol(a, p, m).is_trivial())
        throw PreconditionError("not an m-th power residue: " + a.to_string());
    const Poly& modulus = p.monic();
    const BigInt order = big_pow(p.q(), p.degree()) - 1;
    Poly x = a % modulus;
    std::uint32_t rest = m;
    // An r-th root of an m-th power is an (m/r)-th power, so roots can be taken prime by prime.
    for (std::uint32_t r = 2; rest > 1; ++r) {
        while (rest % r == 0) {
            x = rth_root(x, modulus, order, r);
            rest /= r;
        }
    }
    if (powmod(x, m, modulus) != a % modulus) throw PipelineError("m-th root failed verification");
    return x;
}

Poly inverse_mod(const Poly& a, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (g.is_unit()) return Poly(g.q());
    if (a.is_zero()) throw NonCoprimeInput("zero has no inverse modulo " + g.to_string());
    auto [d, s, t] = xgcd(a, g);
    if (!d.is_one()) throw NonCoprimeInput("gcd(" + a.to_string() + ", " + g.to_string() + ") != 1");
    return s % g;
}

}  // namespace sldecomp

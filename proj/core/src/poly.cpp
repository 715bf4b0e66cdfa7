#include "sldecomp/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sldecomp {

namespace {

/// mod_table[q][v] = v mod q for v < 256; sums in the reduction loop stay below 182.
constexpr auto kModTable = [] {
    std::array<std::array<std::uint8_t, 256>, 14> t{};
    for (std::uint32_t q = 1; q < 14; ++q)
        for (std::uint32_t v = 0; v < 256; ++v) t[q][v] = static_cast<std::uint8_t>(v % q);
    return t;
}();

/// rem <- rem mod b (trimmed); optionally records quotient coefficients.
void reduce_in_place(std::vector<std::uint8_t>& rem, const std::vector<std::uint8_t>& b, std::uint32_t q,
                     std::vector<std::uint8_t>* quo) {
    const auto& mod = kModTable[q];
    const std::size_t db = b.size() - 1;
    const std::uint32_t inv_lead = PrimeField(q).inv({b.back()}).value;
    for (std::size_t k = rem.size(); k-- > db;) {
        const std::uint32_t c = rem[k];
        if (c == 0) continue;
        const std::uint32_t f = mod[c * inv_lead];
        if (quo) (*quo)[k - db] = static_cast<std::uint8_t>(f);
        const std::uint32_t neg = q - f;
        std::uint8_t* r = rem.data() + (k - db);
        for (std::size_t j = 0; j < db; ++j) r[j] = mod[r[j] + neg * b[j]];
        rem[k] = 0;
    }
    rem.resize(std::min(rem.size(), db));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

}  // namespace

Poly::Poly(std::uint32_t q) : q_(q) { require_supported_characteristic(q); }

Poly::Poly(std::uint32_t q, std::span<const std::int64_t> coeffs) : Poly(q) {
    c_.reserve(coeffs.size());
    const auto qq = static_cast<std::int64_t>(q);
    for (auto v : coeffs) {
        auto r = v % qq;
        if (r < 0) r += qq;
        c_.push_back(static_cast<std::uint8_t>(r));
    }
    trim();
}

Poly::Poly(std::uint32_t q, std::initializer_list<std::int64_t> coeffs)
    : Poly(q, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

Poly Poly::constant(std::uint32_t q, std::int64_t c) { return Poly(q, {c}); }

Poly Poly::monomial(std::uint32_t q, std::int64_t c, std::size_t k) {
    std::vector<std::int64_t> v(k + 1, 0);
    v[k] = c;
    return Poly(q, v);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
    if (q_ != o.q_) throw PreconditionError("polynomials over different fields");
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead()));
}

Poly Poly::scaled(FieldElem s) const {
    Poly r(q_);
    if (s.value % q_ == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = static_cast<std::uint8_t>(c_[i] * s.value % q_);
    return r;
}

FieldElem Poly::eval(FieldElem x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x.value + c_[i]) % q_;
    return {acc};
}

Poly Poly::derivative() const {
    Poly r(q_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = static_cast<std::uint8_t>(c_[i] * (i % q_) % q_);
    r.trim();
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        std::uint32_t s = c_[i] + o.c_[i];
        c_[i] = static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto s = c_[i] + q_ - o.c_[i];
        c_[i] = static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    Poly r(a.q_);
    if (a.is_zero() || b.is_zero()) return r;
    // Products are < 169 so a 32-bit accumulator holds millions of terms.
    std::vector<std::uint32_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const std::uint32_t ai = a.c_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint8_t>(acc[k] % a.q_);
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
    Poly r(q_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = static_cast<std::uint8_t>((q_ - c_[i]) % q_);
    return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << int(c_[i]);
        if (i >= 1) os << "T";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    a.check_same_field(b);
    const auto q = a.q_;
    if (a.c_.size() < b.c_.size()) return {Poly(q), a};
    Poly quo(q), rem(a);
    quo.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
    reduce_in_place(rem.c_, b.c_, q, &quo.c_);
    quo.trim();
    return {std::move(quo), std::move(rem)};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly operator%(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    a.check_same_field(b);
    if (a.c_.size() < b.c_.size()) return a;
    Poly rem(a);
    reduce_in_place(rem.c_, b.c_, a.q_, nullptr);
    return rem;
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) throw PipelineError("inexact polynomial division: " + a.to_string() + " / " + b.to_string());
    return quo;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    a.check_same_field(b);
    Poly x = a, y = b;
    while (!y.c_.empty()) {
        if (x.c_.size() >= y.c_.size()) reduce_in_place(x.c_, y.c_, a.q_, nullptr);
        std::swap(x.c_, y.c_);
    }
    return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionError("xgcd of two zero polynomials");
    const auto q = a.q();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(q, 1), s1(q);
    Poly t0(q), t1 = Poly::constant(q, 1);
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    const FieldElem inv = PrimeField(q).inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

XgcdMany xgcd_many(std::span<const Poly> v) {
    if (v.empty()) throw PreconditionError("xgcd of an empty list");
    const auto q = v.front().q();
    XgcdMany out{Poly(q), std::vector<Poly>(v.size(), Poly(q))};
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!any) {
            const FieldElem inv = PrimeField(q).inv(v[i].lead());
            out.g = v[i].scaled(inv);
            out.coeffs[i] = Poly::constant(q, inv);
            any = true;
            continue;
        }
        auto [g, s, t] = xgcd(out.g, v[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (!out.coeffs[j].is_zero()) out.coeffs[j] = out.coeffs[j] * s;
        out.coeffs[i] = std::move(t);
        out.g = std::move(g);
    }
    if (!any) throw PreconditionError("xgcd of an all-zero list");
    return out;
}

bool is_unimodular(std::span<const Poly> v) {
    std::optional<Poly> g;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = g ? gcd(*g, x) : x.monic();
        if (g->is_one()) return true;
    }
    return false;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& modulus) {
    Poly base = a % modulus;
    Poly r = Poly::constant(a.q(), 1) % modulus;
    while (e) {
        if (e & 1) r = mulmod(r, base, modulus);
        e >>= 1;
        if (e) base = mulmod(base, base, modulus);
    }
    return r;
}

Poly powmod(const Poly& a, const BigInt& e, const Poly& modulus) {
    if (e < 0) throw PreconditionError("negative exponent");
    Poly base = a % modulus;
    Poly r = Poly::constant(a.q(), 1) % modulus;
    if (e == 0) return r;
    const auto top = boost::multiprecision::msb(e);
    for (std::size_t i = top + 1; i-- > 0;) {
        r = mulmod(r, r, modulus);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mulmod(r, base, modulus);
    }
    return r;
}

Poly pow(const Poly& a, std::uint64_t e) {
    Poly r = Poly::constant(a.q(), 1), base = a;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

PolyEnumerator::PolyEnumerator(std::uint32_t q, std::size_t max_degree, bool include_zero)
    : q_(q), max_degree_(max_degree), zero_pending_(include_zero) {
    require_supported_characteristic(q);
}

std::optional<Poly> PolyEnumerator::next() {
    if (done_) return std::nullopt;
    if (zero_pending_) {
        zero_pending_ = false;
        return Poly(q_);
    }
    if (!started_) {
        started_ = true;
        digits_ = {1};
        return Poly(q_, digits_);
    }
    // The leading digit runs over 1..q-1 and is least significant; the
    // constant term is most significant.
    const std::size_t d = digits_.size() - 1;
    if (digits_[d] + 1 < static_cast<std::int64_t>(q_)) {
        ++digits_[d];
        return Poly(q_, digits_);
    }
    digits_[d] = 1;
    for (std::size_t k = d; k-- > 0;) {
        if (digits_[k] + 1 < static_cast<std::int64_t>(q_)) {
            ++digits_[k];
            return Poly(q_, digits_);
        }
        digits_[k] = 0;
    }
    if (d + 1 > max_degree_) {
        done_ = true;
        return std::nullopt;
    }
    digits_.assign(d + 2, 0);
    digits_.back() = 1;
    return Poly(q_, digits_);
}

BigInt count_of_degree(std::uint32_t q, std::size_t d) { return big_pow(q, d) * (q - 1); }

}  // namespace sldecomp

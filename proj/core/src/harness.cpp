#include "sldecomp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "sldecomp/constant_ext.hpp"
#include "sldecomp/factor.hpp"
#include "sldecomp/residue.hpp"
#include "sldecomp/search.hpp"

namespace sldecomp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Poly random_nonzero_poly(std::uint32_t q, std::size_t max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
    std::vector<std::int64_t> c(max_degree + 1);
    for (;;) {
        for (auto& x : c) x = coeff(rng);
        Poly f(q, c);
        if (!f.is_zero()) return f;
    }
}

PolyMatrix random_elementary_product(std::uint32_t q, std::size_t n, std::size_t length, std::size_t max_degree,
                                     std::mt19937_64& rng) {
    PolyMatrix m = PolyMatrix::identity(q, n);
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    for (std::size_t k = 0; k < length; ++k) {
        const std::size_t i = index(rng);
        std::size_t j = index(rng);
        while (j == i) j = index(rng);
        m.add_col_multiple(j, i, random_nonzero_poly(q, max_degree, rng));
    }
    return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Exponent of (F_q[T]/b)^* by computing the order of every unit.
BigInt brute_force_exponent(const Poly& b) {
    const auto q = b.q();
    BigInt e = 1;
    if (b.is_constant()) return e;
    PolyEnumerator it(q, b.degree().value() - 1, false);
    while (auto x = it.next()) {
        if (!gcd(*x, b).is_one()) continue;
        std::uint64_t order = 1;
        Poly y = *x % b;
        const Poly x0 = y;
        while (!y.is_one()) {
            y = mulmod(y, x0, b);
            ++order;
        }
        e = big_lcm(e, BigInt(order));
    }
    return e;
}

CheckResult check(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, ok ? std::string() : std::move(detail)};
}

}  // namespace

void RunConfig::validate() const {
    require_supported_characteristic(q);
    if (n < 3) throw PreconditionError("n must be at least 3");
    if (trials < 1) throw PreconditionError("trials must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ trial);
}

SLMatrix generate_random_sl(const RunConfig& config, std::uint64_t seed) {
    require_supported_characteristic(config.q);
    std::mt19937_64 rng(seed);
    return SLMatrix(random_elementary_product(config.q, config.n, config.word_length, config.degree_bound, rng));
}

DecompositionReport decompose(const SLMatrix& a, const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = a.n();
    if (n < 3) throw PreconditionError("decompose needs n >= 3");

    DecompositionReport r;
    r.q = a.q();
    r.n = n;
    r.mode = config.mode == Mode::Strict ? "strict" : "fallback";
    r.input = a.matrix();
    r.bound = total_bound(n);

    ReductionTrace trace = reduce_to_sl2(a, config.caps);
    r.reduction_length = trace.length();
    r.stages = trace.stages;

    Sl2Decomposition s = [&] {
        if (config.mode == Mode::Fallback) return decompose_sl2_block(trace.block, Mode::Fallback, config.caps);
        try {
            return decompose_sl2_block(trace.block, Mode::Strict, config.caps);
        } catch (const StrictUnavailable&) {
            return decompose_sl2_block(trace.block, Mode::Fallback, config.caps);
        }
    }();

    std::vector<SidedFactor> applied = trace.factors;
    applied.insert(applied.end(), s.normalize_factors.begin(), s.normalize_factors.end());
    r.word = flatten(a, applied, s.normalized.embedded(n), s.final_word);

    r.length = r.word.size();
    r.normalize = s.normalize;
    r.bridge = s.bridge;
    r.collapse = s.collapse;
    r.strict_complete = s.strict_complete();
    r.bound_satisfied = r.length <= r.bound;
    r.verified = verify(r.word, a);
    r.prime_search = s.prime_search;
    r.residue_search = s.residue_search;
    r.companion_search = s.companion_search;
    r.eps_b = to_string(s.eps_b);
    r.eps_c = to_string(s.eps_c);
    r.seconds = seconds_since(t0);
    return r;
}

BenchSummary run_bench(const RunConfig& config, const std::function<void(const TrialOutcome&)>& emit) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(config.trials);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < config.trials;) {
            TrialOutcome& o = outcomes[t];
            o.trial = t;
            o.seed = trial_seed(config.seed, t);
            try {
                o.report = decompose(generate_random_sl(config, o.seed), config);
                o.report->seed = o.seed;
            } catch (const CapExceeded& e) {
                o.error = std::string("cap_exceeded: ") + e.what();
            } catch (const std::exception& e) {
                o.error = std::string("error: ") + e.what();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, config.trials));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    BenchSummary sum;
    sum.trials = config.trials;
    for (const auto& o : outcomes) {
        if (emit) emit(o);
        if (!o.report) {
            (o.error.rfind("cap_exceeded", 0) == 0 ? sum.cap_exceeded : sum.failures)++;
            continue;
        }
        const auto& r = *o.report;
        if (r.verified)
            ++sum.verified;
        else
            ++sum.failures;
        if (r.strict_complete) {
            ++sum.strict_complete;
            sum.max_strict_length = std::max(sum.max_strict_length, r.length);
            if (r.length > r.bound) ++sum.strict_over_bound;
        }
        if (r.reduction_length > reduction_budget(r.n)) ++sum.reduction_over_budget;
        sum.max_length = std::max(sum.max_length, r.length);
        sum.max_reduction_length = std::max(sum.max_reduction_length, r.reduction_length);
    }
    sum.seconds = seconds_since(t0);
    return sum;
}

bool SelftestReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SelftestReport selftest(const SelftestOptions& options) {
    SelftestReport rep;
    std::mt19937_64 rng(options.seed);

    {
        bool ok = true;
        for (std::uint32_t q : {2u, 3u, 5u, 13u})
            for (int k = 0; k < 50 && ok; ++k) {
                Poly a = random_nonzero_poly(q, 6, rng), b = random_nonzero_poly(q, 4, rng),
                     c = random_nonzero_poly(q, 3, rng);
                auto [quo, rem] = divmod(a, b);
                auto x = xgcd(a, b);
                ok = (a + b) * c == a * c + b * c && quo * b + rem == a && rem.degree() < b.degree() &&
                     x.s * a + x.t * b == x.g && (a % x.g).is_zero() && (b % x.g).is_zero();
            }
        rep.checks.push_back(check("poly_ring_laws", ok, "ring or division identity failed"));
    }
    {
        bool ok = true;
        for (std::uint32_t q : {2u, 3u, 5u})
            for (int k = 0; k < 30 && ok; ++k) {
                Poly f = random_nonzero_poly(q, 8, rng);
                Factorization fac = factor(f);
                ok = fac.product(q) == f;
                for (const auto& pp : fac.factors) ok = ok && is_irreducible(pp.monic);
            }
        rep.checks.push_back(check("factorization_roundtrip", ok, "factor product or irreducibility mismatch"));
    }
    {
        bool ok = true;
        for (std::uint32_t q : {2u, 3u}) {
            PolyEnumerator it(q, 3, false);
            while (auto b = it.next())
                if (unit_exponent(*b).value != brute_force_exponent(*b)) ok = false;
        }
        rep.checks.push_back(check("unit_exponent_bruteforce", ok, "epsilon differs from brute force"));
    }
    {
        bool ok = true;
        for (std::uint32_t q : {3u, 5u}) {
            const std::uint32_t m = q - 1;
            PolyEnumerator ps(q, 2, false);
            while (auto p = ps.next()) {
                if (p->is_constant() || !p->is_monic() || !is_irreducible(*p)) continue;
                const PrimeElem prime(*p);
                std::vector<Poly> powers;
                PolyEnumerator xs(q, p->degree().value() - 1, false);
                while (auto x = xs.next()) powers.push_back(powmod(*x, m, *p));
                PolyEnumerator as(q, p->degree().value() - 1, false);
                while (auto a = as.next()) {
                    const bool is_power = std::find(powers.begin(), powers.end(), *a) != powers.end();
                    if (power_residue_symbol(*a, prime, m).is_trivial() != is_power) ok = false;
                }
            }
        }
        rep.checks.push_back(check("residue_symbol_bruteforce", ok, "symbol disagrees with m-th power test"));
    }
    {
        bool ok = true;
        std::string detail;
        const std::uint32_t q = 3;
        PolyEnumerator bs(q, 2, false);
        while (auto b = bs.next()) {
            if (b->is_constant() || !is_irreducible(*b)) continue;
            PolyEnumerator gs(q, 1, false);
            while (auto g = gs.next()) {
                if (!gcd(*b, *g).is_one()) continue;
                try {
                    auto hit = find_companion(PrimeElem(*b), *g, FieldElem{2}, {});
                    const bool good = ((*b * hit.c - Poly::constant(q, 2)) % *g).is_zero() &&
                                      big_gcd(brute_force_exponent(*b), brute_force_exponent(hit.c)) == 2;
                    if (!good) ok = false, detail = "bad companion for b = " + b->to_string();
                } catch (const CapExceeded& e) {
                    ok = false, detail = e.what();
                }
            }
        }
        rep.checks.push_back(check("companion_certificates", ok, detail));
    }
    rep.checks.push_back(check("subfield_lattice",
                               verify_subfield_lattice(2, 2, 3, 6) && verify_subfield_lattice(3, 2, 2, 2) &&
                                   verify_subfield_lattice(3, 1, 2, 4),
                               "subfield degrees disagree with gcd/lcm"));
    {
        bool ok = true;
        for (std::uint32_t q : {3u, 5u, 7u, 13u})
            for (std::uint64_t p = 2; p < q; ++p) {
                if ((q - 1) % p != 0) continue;
                bool prime = true;
                for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
                if (!prime) continue;
                const unsigned e = p_adic_valuation(p, std::uint64_t{q} - 1);
                PolyEnumerator ps(q, 3, false);
                while (auto f = ps.next()) {
                    if (f->is_constant() || !f->is_monic() || !is_irreducible(*f)) continue;
                    const unsigned v = p_adic_valuation(p, big_pow(q, f->degree().value()) - 1);
                    if (v < e || (v == e) == split_complete_test(PrimeElem(*f), p, e)) ok = false;
                }
            }
        rep.checks.push_back(check("split_dichotomy", ok, "valuation dichotomy violated"));
    }
    {
        bool ok = true;
        std::string detail;
        for (std::uint32_t q : {2u, 3u, 5u})
            for (int k = 0; k < 10 && ok; ++k) {
                PolyMatrix b = random_elementary_product(q, 2, 8, 2, rng);
                try {
                    auto s = decompose_sl2_block(b, Mode::Fallback, {});
                    ok = s.normalize.length <= kNormalizeBudget && word_product(s.word, q, 2) == b;
                    if (!ok) detail = "sl2 word mismatch over F_" + std::to_string(q);
                } catch (const std::exception& e) {
                    ok = false, detail = e.what();
                }
            }
        rep.checks.push_back(check("sl2_pipeline", ok, detail));
    }
    for (std::uint32_t q : {2u, 3u, 5u}) {
        bool ok = true;
        std::string detail;
        RunConfig cfg;
        cfg.q = q;
        cfg.word_length = 20;
        cfg.degree_bound = 2;
        for (std::size_t t = 0; t < options.trials && ok; ++t) {
            try {
                SLMatrix a = generate_random_sl(cfg, trial_seed(options.seed, t));
                DecompositionReport r = decompose(a, cfg);
                Word w = r.word;
                if (options.corrupt_word && !w.empty()) w.front().f += Poly::constant(q, 1);
                ok = verify(w, a) && r.reduction_length <= reduction_budget(cfg.n);
                if (!ok) detail = "trial " + std::to_string(t) + " failed verification";
            } catch (const std::exception& e) {
                ok = false, detail = e.what();
            }
        }
        rep.checks.push_back(check("end_to_end_q" + std::to_string(q), ok, detail));
    }
    return rep;
}

}  // namespace sldecomp

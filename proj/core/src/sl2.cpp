#include "sldecomp/sl2.hpp"

#include <optional>
#include <utility>

namespace sldecomp {

namespace {

Poly one(std::uint32_t q) { return Poly::constant(q, 1); }

void require_sl2(const PolyMatrix& a, const char* who) {
    if (a.n() != 2) throw PreconditionError(std::string(who) + " needs a 2 x 2 matrix");
    if (!a.determinant().is_one()) throw PreconditionError(std::string(who) + ": determinant is not 1");
}

struct SidedRecorder {
    PolyMatrix x;
    std::vector<SidedFactor> factors;

    void push(Side side, std::size_t row, std::size_t col, Poly f) {
        if (f.is_zero()) return;
        SidedFactor s{side, {row, col, std::move(f)}};
        apply(x, s);
        factors.push_back(std::move(s));
    }
};

bool is_nonconstant_prime(const Poly& f) { return !f.is_constant() && is_irreducible(f); }

/// Single elementary factor equal to p, if p has that shape.
std::optional<ElemFactor> as_elementary(const PolyMatrix& p) {
    if (!p(0, 0).is_one() || !p(1, 1).is_one()) return std::nullopt;
    if (p(1, 0).is_zero()) return ElemFactor{0, 1, p(0, 1)};
    if (p(0, 1).is_zero()) return ElemFactor{1, 0, p(1, 0)};
    return std::nullopt;
}

/// Identity, one factor, or a Euclidean word within `budget`.
Word short_word(const PolyMatrix& p, std::size_t budget, const char* phase) {
    if (p.is_identity()) return {};
    if (auto e = as_elementary(p)) return {*e};
    Word w = euclidean_decompose(p);
    if (w.size() > budget)
        throw StrictUnavailable(std::string(phase) + ": no word within " + std::to_string(budget) +
                                " factors (Euclidean word has " + std::to_string(w.size()) + ")");
    return w;
}

std::string method_of(const PolyMatrix& p) {
    if (p.is_identity()) return "identity";
    if (as_elementary(p)) return "structured";
    return "euclidean_within_budget";
}

}  // namespace

PolyMatrix CompanionBlock::power() const {
    PolyMatrix r = PolyMatrix::identity(d.q(), 2);
    for (std::uint32_t i = 0; i < m; ++i) r = r * d;
    return r;
}

bool residue_reachable(const PrimeElem& a2, const Poly& b1, std::uint32_t m) {
    const auto q = a2.q();
    const SymbolValue t = power_residue_symbol(b1, a2, m);
    for (std::size_t e = 0; e < 2 * (q - 1); ++e)
        for (std::uint32_t beta = 1; beta < q; ++beta)
            if (symbol_by_reciprocity(a2.element(), e, {beta}, t, m).is_trivial()) return true;
    return false;
}

PowerRowForm normalize_first_row(const PolyMatrix& a, const SearchCaps& caps) {
    require_sl2(a, "normalize_first_row");
    const auto q = a.q();
    const PrimeField fq(q);
    const std::uint32_t m = q - 1;
    SidedRecorder rec{a, {}};
    SearchStats prime_stats, residue_stats;
    const Poly a1 = a(0, 0), b1 = a(0, 1);

    Poly root(q);
    if (a1.is_zero()) {
        // b1 and c1 are units; a left move puts 1 in the corner.
        rec.push(Side::Left, 0, 1, Poly::constant(q, fq.inv(a(1, 0).coeff(0))));
        rec.push(Side::Right, 0, 1, Poly::t(q) - rec.x(0, 1));
        root = one(q);
    } else if (b1.is_zero()) {
        const FieldElem u = a1.coeff(0);
        if (u.value == 1) {
            rec.push(Side::Right, 0, 1, Poly::t(q));
            root = one(q);
        } else {
            // A constant u is an m-th power mod b only when ord(u) | deg b, so go through (u, u) and (1, u).
            rec.push(Side::Right, 0, 1, one(q));
            rec.push(Side::Right, 1, 0, Poly::constant(q, fq.sub(fq.inv(u), {1})));
            rec.push(Side::Right, 0, 1, Poly::t(q) - rec.x(0, 1));
            root = one(q);
        }
    } else {
        // For m > 1 the a2 search also demands that the later b2 search is not blocked by reciprocity.
        auto reachable = [&](const Poly& a2) { return m == 1 || residue_reachable(PrimeElem(a2), b1, m); };
        Poly a2 = a1;
        if (!is_nonconstant_prime(a1) || !reachable(a1)) {
            auto [quo, rem] = divmod(a1, b1);
            PrimeHit hit = find_prime_in_class(rem, b1, caps, reachable);
            prime_stats = hit.stats;
            rec.push(Side::Right, 1, 0, hit.offset - quo);
            a2 = rec.x(0, 0);
        }
        if (m == 1) {
            if (!is_nonconstant_prime(b1)) {
                auto [quo, rem] = divmod(b1, a2);
                PrimeHit hit = find_prime_in_class(rem, a2, caps);
                residue_stats = hit.stats;
                rec.push(Side::Right, 0, 1, hit.offset - quo);
            }
            root = a2;
        } else if (!b1.is_constant() && accepts_residue_candidate(b1, a2, m)) {
            root = mth_root_mod_prime(a2, PrimeElem(b1), m);
        } else {
            auto [quo, rem] = divmod(b1, a2);
            ResidueHit hit = find_prime_in_class_with_residue(rem, a2, a2, m, caps);
            residue_stats = hit.stats;
            rec.push(Side::Right, 0, 1, hit.offset - quo);
            root = hit.root;
        }
        const Poly b2 = rec.x(0, 1);
        rec.push(Side::Right, 1, 0, exact_div(pow(root, m) - a2, b2));
    }

    PowerRowForm form{root, PrimeElem(rec.x(0, 1)), m, rec.x, std::move(rec.factors), prime_stats, residue_stats};
    if (form.factors.size() > kNormalizeBudget) throw PipelineError("normalize_first_row used more than 3 factors");
    if (form.a_power() != form.matrix(0, 0)) throw PipelineError("normalized corner is not a^m");
    return form;
}

CompanionBlock build_companion(const PowerRowForm& form, const SearchCaps& caps) {
    const auto q = form.a.q();
    const Poly& a = form.a;
    const Poly b = form.b.element();
    if (a.is_zero() || !gcd(a, b).is_one()) throw NonCoprimeInput("build_companion needs gcd(a, b) = 1");
    const FieldElem minus_one{q - 1};
    CompanionHit hit = find_companion(form.b, a, minus_one, caps);
    const Poly d3 = exact_div(one(q) + b * hit.c, a);

    PolyMatrix d(q, 2);
    d(0, 0) = a;
    d(0, 1) = b;
    d(1, 0) = hit.c;
    d(1, 1) = d3;
    if (!d.determinant().is_one()) throw PipelineError("companion block has determinant != 1");
    return {std::move(d), form.m, a, b, std::move(hit.c), d3, std::move(hit.eps_b), std::move(hit.eps_c), hit.stats};
}

Word bridge_word(const PolyMatrix& a2, const CompanionBlock& d) {
    require_sl2(a2, "bridge_word");
    if (d.m == 1) {
        // Same first row, so A2 * D^-1 is lower unitriangular.
        if (a2(0, 0) != d.a || a2(0, 1) != d.b) throw PreconditionError("bridge_word: first rows differ");
        const PolyMatrix p = a2 * sl2_inverse(d.d);
        if (!p(0, 0).is_one() || !p(0, 1).is_zero()) throw PipelineError("bridge quotient is not unitriangular");
        if (p(1, 0).is_zero()) return {};
        return {ElemFactor{1, 0, p(1, 0)}};
    }
    if (a2(0, 0) != pow(d.a, d.m) || a2(0, 1) != d.b)
        throw PreconditionError("bridge_word: first row is not (a^m, b)");
    return short_word(a2 * sl2_inverse(d.power()), kBridgeBudget, "bridge");
}

Word collapse_word(const CompanionBlock& d) {
    return short_word(d.power(), kCollapseBudget, "collapse");
}

Word euclidean_decompose(const PolyMatrix& m) {
    require_sl2(m, "euclidean_decompose");
    const auto q = m.q();
    SidedRecorder rec{m, {}};
    auto& x = rec.x;

    while (!x(0, 0).is_zero() && !x(1, 0).is_zero()) {
        if (x(0, 0).degree() >= x(1, 0).degree())
            rec.push(Side::Left, 0, 1, -(x(0, 0) / x(1, 0)));
        else
            rec.push(Side::Left, 1, 0, -(x(1, 0) / x(0, 0)));
    }
    if (x(0, 0).is_zero()) rec.push(Side::Left, 0, 1, Poly::constant(q, PrimeField(q).inv(x(1, 0).coeff(0))));
    rec.push(Side::Left, 1, 0, -x(1, 0) * Poly::constant(q, PrimeField(q).inv(x(0, 0).coeff(0))));
    // Now upper triangular [[u, b], [0, u^-1]].
    if (!x(0, 0).is_one()) {
        const PrimeField fq(q);
        const FieldElem u = x(0, 0).coeff(0);
        rec.push(Side::Left, 1, 0, Poly::constant(q, fq.mul(fq.sub(fq.elem(1), u), fq.inv(u))));
        rec.push(Side::Left, 0, 1, one(q));
        rec.push(Side::Left, 1, 0, -x(1, 0));
    }
    rec.push(Side::Left, 0, 1, -x(0, 1));
    if (!x.is_identity()) throw PipelineError("euclidean_decompose did not reach the identity");

    Word w;
    for (const auto& s : rec.factors) w.push_back(s.factor.inverse());
    return w;
}

Sl2Decomposition decompose_sl2_block(const PolyMatrix& b, Mode mode, const SearchCaps& caps) {
    require_sl2(b, "decompose_sl2_block");
    Sl2Decomposition out{{}, b, {}, {}, {0, true, "identity"}, {0, true, "identity"}, {0, true, "identity"}, {}, {}, {}};
    if (b.is_identity()) return out;

    PowerRowForm form = normalize_first_row(b, caps);
    out.normalize_factors = form.factors;
    out.normalized = form.matrix;
    out.normalize.length = form.factors.size();
    out.normalize.method = form.factors.empty() ? "identity" : "structured";
    out.prime_search = form.prime_search;
    out.residue_search = form.residue_search;

    CompanionBlock d = build_companion(form, caps);
    out.companion_search = d.stats;
    out.eps_b = d.eps_b.value;
    out.eps_c = d.eps_c.value;

    auto run_phase = [&](PhaseReport& rep, auto&& strict_word, auto&& target) -> Word {
        try {
            Word w = strict_word();
            rep.length = w.size();
            rep.strict = true;
            rep.method = method_of(target());
            return w;
        } catch (const StrictUnavailable&) {
            if (mode == Mode::Strict) throw;
            Word w = euclidean_decompose(target());
            rep.length = w.size();
            rep.strict = false;
            rep.method = "fallback_euclidean";
            return w;
        }
    };

    const PolyMatrix dm = d.power();
    Word bridge = run_phase(
        out.bridge, [&] { return bridge_word(form.matrix, d); },
        [&] { return form.matrix * sl2_inverse(dm); });
    Word collapse = run_phase(
        out.collapse, [&] { return collapse_word(d); }, [&] { return dm; });

    out.final_word = std::move(bridge);
    out.final_word.insert(out.final_word.end(), collapse.begin(), collapse.end());
    out.word = flatten(SLMatrix(b), out.normalize_factors, out.normalized, out.final_word);
    return out;
}

}  // namespace sldecomp

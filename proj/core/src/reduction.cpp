#include "sldecomp/reduction.hpp"

#include <optional>

namespace sldecomp {

namespace {

struct Reducer {
    PolyMatrix x;
    const SearchCaps& caps;
    ReductionTrace& trace;

    void push(Side side, std::size_t row, std::size_t col, Poly f) {
        if (f.is_zero()) return;
        SidedFactor s{side, {row, col, std::move(f)}};
        apply(x, s);
        trace.factors.push_back(std::move(s));
    }

    std::vector<Poly> leading_part(std::size_t last) const {
        std::vector<Poly> v;
        for (std::size_t j = 0; j < last; ++j) v.push_back(x(last, j));
        return v;
    }

    /// Step (i): one column operation col j += t * col last making the leading part unimodular.
    std::size_t make_leading_unimodular(std::size_t last) {
        // A unit corner of 1 needs no pivot: step (iii) clears around it directly.
        if (x(last, last).is_one()) return 0;
        auto lead = leading_part(last);
        if (is_unimodular(lead)) return 0;
        if (caps.max_offset_degree == 0 || caps.max_candidates == 0)
            throw CapExceeded("reduction pivot search caps are zero", 0);
        const Poly& corner = x(last, last);
        PolyEnumerator multipliers(x.q(), caps.max_offset_degree, false);
        std::size_t tried = 0;
        while (auto t = multipliers.next()) {
            for (std::size_t j = 0; j < last; ++j) {
                if (tried >= caps.max_candidates) break;
                ++tried;
                const Poly saved = lead[j];
                lead[j] = saved + *t * corner;
                if (is_unimodular(lead)) {
                    push(Side::Right, last, j, *t);
                    return tried;
                }
                lead[j] = saved;
            }
            if (tried >= caps.max_candidates) break;
        }
        throw CapExceeded("no unimodular pivot multiplier found", tried);
    }

    /// Step (ii): col last += s_j col j so that the corner entry becomes 1.
    void set_corner_to_one(std::size_t last) {
        const Poly target = Poly::constant(x.q(), 1) - x(last, last);
        if (target.is_zero()) return;
        const auto lead = leading_part(last);
        auto [g, u] = xgcd_many(lead);
        if (!g.is_one()) throw PipelineError("leading part lost unimodularity");

        std::vector<Poly> s;
        for (std::size_t j = 0; j < last; ++j) s.push_back(lead[j].is_zero() ? Poly(x.q()) : target * u[j]);
        // Reduce all coefficients modulo the lowest-degree nonzero entry.
        std::optional<std::size_t> pivot;
        for (std::size_t j = 0; j < last; ++j)
            if (!lead[j].is_zero() && (!pivot || lead[j].degree() < lead[*pivot].degree())) pivot = j;
        for (std::size_t j = 0; j < last; ++j) {
            if (j == *pivot || s[j].is_zero()) continue;
            auto [quo, rem] = divmod(s[j], lead[*pivot]);
            s[*pivot] += quo * lead[j];
            s[j] = std::move(rem);
        }
        for (std::size_t j = 0; j < last; ++j) push(Side::Right, j, last, s[j]);
        if (!x(last, last).is_one()) throw PipelineError("Bezout step did not produce a unit corner");
    }

    /// Step (iii): clear the rest of the last row, then the last column.
    void clear_row_and_column(std::size_t last) {
        for (std::size_t j = 0; j < last; ++j) push(Side::Right, last, j, -x(last, j));
        for (std::size_t i = 0; i < last; ++i) push(Side::Left, i, last, -x(i, last));
    }

    void stage(std::size_t k) {
        const std::size_t before = trace.factors.size();
        const std::size_t last = k - 1;
        StageRecord rec;
        rec.k = k;
        rec.pivot_candidates = make_leading_unimodular(last);
        set_corner_to_one(last);
        clear_row_and_column(last);
        rec.length = trace.factors.size() - before;
        trace.stages.push_back(rec);
    }
};

}  // namespace

ReductionTrace reduce_to_sl2(const SLMatrix& a, const SearchCaps& caps) {
    const std::size_t n = a.n();
    if (n < 3) throw PreconditionError("reduce_to_sl2 needs n >= 3");
    ReductionTrace trace{{}, {}, PolyMatrix(a.q(), 2)};
    Reducer r{a.matrix(), caps, trace};
    for (std::size_t k = n; k >= 3; --k) r.stage(k);

    if (r.x.embedded(n) != r.x || r.x.block(2).embedded(n) != r.x)
        throw PipelineError("reduction did not reach block form");
    trace.block = r.x.block(2);
    return trace;
}

}  // namespace sldecomp

#include "sldecomp/io.hpp"

#include <json.hpp>

namespace sldecomp {

namespace {

using nlohmann::json;

json poly_json(const Poly& p) { return p.coeff_vector(); }

Poly poly_from(const json& j, std::uint32_t q) {
    if (!j.is_array()) throw FormatError("polynomial must be a coefficient array");
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw FormatError("coefficients must be integers");
        c.push_back(x.get<std::int64_t>());
    }
    return Poly(q, c);
}

json entries_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(poly_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("entries"))
        throw FormatError("matrix needs q, n and entries");
    const auto q = j.at("q").get<std::int64_t>();
    const auto n = j.at("n").get<std::int64_t>();
    if (q < 2 || q > 13 || !is_supported_characteristic(static_cast<std::uint32_t>(q)))
        throw FormatError("unsupported q = " + std::to_string(q));
    if (n < 1 || n > 64) throw FormatError("unsupported n = " + std::to_string(n));
    const auto& e = j.at("entries");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(n)) throw FormatError("entries must have n rows");
    PolyMatrix m(static_cast<std::uint32_t>(q), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < m.n(); ++r) {
        if (!e[r].is_array() || e[r].size() != m.n()) throw FormatError("each row must have n entries");
        for (std::size_t c = 0; c < m.n(); ++c) m(r, c) = poly_from(e[r][c], m.q());
    }
    return m;
}

json word_json(const Word& w) {
    json out = json::array();
    for (const auto& e : w) out.push_back({{"i", e.row + 1}, {"j", e.col + 1}, {"f", poly_json(e.f)}});
    return out;
}

Word word_from(const json& j, std::uint32_t q) {
    const json& arr = j.is_object() && j.contains("word") ? j.at("word") : j;
    if (!arr.is_array()) throw FormatError("word must be an array");
    Word w;
    for (const auto& e : arr) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("f"))
            throw FormatError("word entries need i, j and f");
        const auto i = e.at("i").get<std::int64_t>(), jj = e.at("j").get<std::int64_t>();
        if (i < 1 || jj < 1) throw FormatError("word indices are 1-based");
        w.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), poly_from(e.at("f"), q)});
    }
    return w;
}

json stats_json(const SearchStats& s) { return {{"candidates", s.candidates}, {"offset_degree", s.offset_degree}}; }

SearchStats stats_from(const json& j) {
    return {j.at("candidates").get<std::size_t>(), j.at("offset_degree").get<std::size_t>()};
}

json phase_json(const PhaseReport& p) { return {{"length", p.length}, {"strict", p.strict}, {"method", p.method}}; }

PhaseReport phase_from(const json& j) {
    return {j.at("length").get<std::size_t>(), j.at("strict").get<bool>(), j.at("method").get<std::string>()};
}

template <typename F>
auto parse(const std::string& text, F&& f) {
    try {
        return f(json::parse(text));
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string matrix_to_json(const PolyMatrix& m) {
    return json{{"q", m.q()}, {"n", m.n()}, {"entries", entries_json(m)}}.dump();
}

PolyMatrix matrix_from_json(const std::string& text) {
    return parse(text, [](const json& j) { return matrix_from(j); });
}

std::string word_to_json(const Word& w) { return word_json(w).dump(); }

Word word_from_json(const std::string& text, std::uint32_t q) {
    return parse(text, [q](const json& j) { return word_from(j, q); });
}

std::string report_to_json(const DecompositionReport& r) {
    json stages = json::array();
    for (const auto& s : r.stages)
        stages.push_back({{"k", s.k}, {"length", s.length}, {"pivot_candidates", s.pivot_candidates}});
    json j = {
        {"schema", kReportSchema},
        {"q", r.q},
        {"n", r.n},
        {"seed", r.seed},
        {"mode", r.mode},
        {"input", entries_json(r.input)},
        {"word", word_json(r.word)},
        {"length", r.length},
        {"reduction_length", r.reduction_length},
        {"stages", stages},
        {"phases", {{"normalize", phase_json(r.normalize)}, {"bridge", phase_json(r.bridge)},
                    {"collapse", phase_json(r.collapse)}}},
        {"strict_complete", r.strict_complete},
        {"bound", r.bound},
        {"bound_satisfied", r.bound_satisfied},
        {"verified", r.verified},
        {"search", {{"prime", stats_json(r.prime_search)}, {"residue", stats_json(r.residue_search)},
                    {"companion", stats_json(r.companion_search)}}},
        {"eps_b", r.eps_b},
        {"eps_c", r.eps_c},
        {"seconds", r.seconds},
    };
    return j.dump();
}

DecompositionReport report_from_json(const std::string& line) {
    DecompositionReport r = parse(line, [](const json& j) {
        if (!j.is_object() || j.value("schema", "") != kReportSchema) throw FormatError("not a report line");
        DecompositionReport r;
        r.q = j.at("q").get<std::uint32_t>();
        r.n = j.at("n").get<std::size_t>();
        r.input = matrix_from({{"q", r.q}, {"n", r.n}, {"entries", j.at("input")}});
        r.seed = j.at("seed").get<std::uint64_t>();
        r.mode = j.at("mode").get<std::string>();
        r.word = word_from(j.at("word"), r.q);
        r.length = j.at("length").get<std::size_t>();
        r.reduction_length = j.at("reduction_length").get<std::size_t>();
        for (const auto& s : j.at("stages"))
            r.stages.push_back({s.at("k").get<std::size_t>(), s.at("length").get<std::size_t>(),
                                s.at("pivot_candidates").get<std::size_t>()});
        const auto& ph = j.at("phases");
        r.normalize = phase_from(ph.at("normalize"));
        r.bridge = phase_from(ph.at("bridge"));
        r.collapse = phase_from(ph.at("collapse"));
        r.strict_complete = j.at("strict_complete").get<bool>();
        r.bound = j.at("bound").get<std::size_t>();
        r.bound_satisfied = j.at("bound_satisfied").get<bool>();
        r.verified = j.at("verified").get<bool>();
        const auto& se = j.at("search");
        r.prime_search = stats_from(se.at("prime"));
        r.residue_search = stats_from(se.at("residue"));
        r.companion_search = stats_from(se.at("companion"));
        r.eps_b = j.at("eps_b").get<std::string>();
        r.eps_c = j.at("eps_c").get<std::string>();
        r.seconds = j.at("seconds").get<double>();
        return r;
    });
    if (r.word.size() != r.length) throw FormatError("report length does not match its word");
    for (const auto& e : r.word)
        if (e.row >= r.n || e.col >= r.n || e.row == e.col) throw FormatError("word index out of range");
    if (word_product(r.word, r.q, r.n) != r.input) throw PipelineError("report word does not reproduce its input");
    return r;
}

std::string outcome_to_json(const TrialOutcome& o) {
    if (o.report) return report_to_json(*o.report);
    return json{{"schema", kReportSchema}, {"trial", o.trial}, {"seed", o.seed}, {"error", o.error}}.dump();
}

std::string summary_to_json(const BenchSummary& s, const RunConfig& c) {
    return json{
        {"summary", true},
        {"q", c.q},
        {"n", c.n},
        {"word_length", c.word_length},
        {"degree_bound", c.degree_bound},
        {"seed", c.seed},
        {"mode", c.mode == Mode::Strict ? "strict" : "fallback"},
        {"trials", s.trials},
        {"verified", s.verified},
        {"failures", s.failures},
        {"cap_exceeded", s.cap_exceeded},
        {"strict_complete", s.strict_complete},
        {"strict_fraction", s.trials ? double(s.strict_complete) / double(s.trials) : 0.0},
        {"strict_over_bound", s.strict_over_bound},
        {"reduction_over_budget", s.reduction_over_budget},
        {"max_length", s.max_length},
        {"max_strict_length", s.max_strict_length},
        {"max_reduction_length", s.max_reduction_length},
        {"bound", total_bound(c.n)},
        {"seconds", s.seconds},
    }.dump();
}

std::string selftest_to_json(const SelftestReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return json{{"passed", r.passed()}, {"checks", checks}}.dump();
}

}  // namespace sldecomp

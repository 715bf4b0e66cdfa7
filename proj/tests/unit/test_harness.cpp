#include <doctest.h>

#include <vector>

#include "sldecomp/harness.hpp"
#include "sldecomp/io.hpp"

using namespace sldecomp;

namespace {

RunConfig config(std::uint32_t q, std::size_t n, std::size_t trials = 1) {
    RunConfig c;
    c.q = q;
    c.n = n;
    c.trials = trials;
    return c;
}

}  // namespace

TEST_CASE("total bound") {
    CHECK(total_bound(3) == 62);
    CHECK(total_bound(4) == 72);
    CHECK(total_bound(5) == 85);
}

TEST_CASE("config validation") {
    CHECK_NOTHROW(config(13, 3).validate());
    CHECK_THROWS_AS(config(4, 3).validate(), PreconditionError);
    CHECK_THROWS_AS(config(3, 2).validate(), PreconditionError);
    CHECK_THROWS_AS(config(3, 3, 0).validate(), PreconditionError);
}

TEST_CASE("generation is deterministic") {
    const RunConfig c = config(5, 4);
    CHECK(generate_random_sl(c, 11) == generate_random_sl(c, 11));
    CHECK_FALSE(generate_random_sl(c, 11) == generate_random_sl(c, 12));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
    RunConfig empty = c;
    empty.word_length = 0;
    CHECK(generate_random_sl(empty, 5).matrix().is_identity());
}

TEST_CASE("decomposing the identity costs nothing") {
    for (std::uint32_t q : {2u, 3u, 13u}) {
        const DecompositionReport r = decompose(SLMatrix(PolyMatrix::identity(q, 3)), config(q, 3));
        CHECK(r.length == 0);
        CHECK(r.verified);
        CHECK(r.strict_complete);
        CHECK(r.bound_satisfied);
    }
}

TEST_CASE("reports verify and survive a JSON round trip") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        RunConfig c = config(q, 3);
        const SLMatrix a = generate_random_sl(c, 9);
        const DecompositionReport r = decompose(a, c);
        CHECK(r.verified);
        CHECK(verify(r.word, a));
        CHECK(r.length == r.word.size());
        CHECK(r.bound == 62);
        CHECK(r.bound_satisfied == (r.length <= 62));
        CHECK(r.reduction_length <= 7);

        const std::string line = report_to_json(r);
        const DecompositionReport back = report_from_json(line);
        CHECK(back.word == r.word);
        CHECK(back.input == r.input);
        CHECK(back.eps_b == r.eps_b);
        CHECK(back.collapse.method == r.collapse.method);
        CHECK(report_to_json(back) == line);

        DecompositionReport bad = r;
        bad.word.front().f += Poly::constant(q, 1);
        CHECK_THROWS_AS(report_from_json(report_to_json(bad)), PipelineError);
    }
    CHECK_THROWS_AS(report_from_json("{\"q\": 3}"), FormatError);
    CHECK_THROWS_AS(report_from_json("not json"), FormatError);
}

TEST_CASE("matrix and word JSON") {
    const SLMatrix a = generate_random_sl(config(5, 3), 4);
    CHECK(matrix_from_json(matrix_to_json(a.matrix())) == a.matrix());
    const Word w{{0, 2, Poly(5, {1, 2})}, {2, 1, Poly::t(5)}};
    CHECK(word_from_json(word_to_json(w), 5) == w);
    CHECK(word_from_json(R"({"word": [{"i": 1, "j": 3, "f": [1, 2]}]})", 5) == Word{w.front()});
    CHECK_THROWS_AS(word_from_json(R"([{"i": 0, "j": 1, "f": []}])", 5), FormatError);
    CHECK_THROWS_AS(matrix_from_json(R"({"q": 4, "n": 1, "entries": [[[1]]]})"), FormatError);
    CHECK_THROWS_AS(matrix_from_json(R"({"q": 3, "n": 2, "entries": [[[1]]]})"), FormatError);
}

TEST_CASE("bench is deterministic and independent of the thread count") {
    RunConfig c = config(3, 3, 6);
    c.seed = 17;
    std::vector<std::string> one, three;
    auto strip = [](const TrialOutcome& o) {
        REQUIRE(o.report);
        DecompositionReport r = *o.report;
        r.seconds = 0;
        return report_to_json(r);
    };
    const BenchSummary s1 = run_bench(c, [&](const TrialOutcome& o) { one.push_back(strip(o)); });
    c.threads = 3;
    std::vector<std::size_t> order;
    const BenchSummary s3 = run_bench(c, [&](const TrialOutcome& o) {
        three.push_back(strip(o));
        order.push_back(o.trial);
    });
    CHECK(one == three);
    CHECK(order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(s1.trials == 6);
    CHECK(s1.verified == 6);
    CHECK(s1.failures == 0);
    CHECK(s1.max_length == s3.max_length);
    CHECK(s1.strict_complete == s3.strict_complete);
}

TEST_CASE("strict mode falls back and flags incomplete runs") {
    RunConfig c = config(3, 3, 4);
    c.mode = Mode::Strict;
    const BenchSummary s = run_bench(c, [](const TrialOutcome& o) {
        REQUIRE(o.report);
        CHECK(o.report->verified);
        CHECK(o.report->mode == "strict");
        if (o.report->strict_complete) CHECK(o.report->length <= o.report->bound);
    });
    CHECK(s.verified == 4);
}

TEST_CASE("selftest") {
    CHECK(selftest({2, false, 7}).passed());
    CHECK(selftest({0, false, 7}).passed());
    const SelftestReport bad = selftest({2, true, 7});
    CHECK_FALSE(bad.passed());
    bool some_end_to_end_failed = false;
    for (const auto& ch : bad.checks)
        if (!ch.passed) some_end_to_end_failed |= ch.name.rfind("end_to_end", 0) == 0;
    CHECK(some_end_to_end_failed);
}

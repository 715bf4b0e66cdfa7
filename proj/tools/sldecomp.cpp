// Command-line front end: decompose, bench, selftest, verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sldecomp/errors.hpp"
#include "sldecomp/harness.hpp"
#include "sldecomp/io.hpp"

namespace {

using namespace sldecomp;

enum Exit { kOk = 0, kVerifyFailed = 1, kCapOrBudget = 2, kBadInput = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw FormatError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Mode parse_mode(const std::string& s) { return s == "strict" ? Mode::Strict : Mode::Fallback; }

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& mode) {
    cmd->add_option("--q", cfg.q, "field size, a prime up to 13");
    cmd->add_option("--n", cfg.n, "matrix dimension (>= 3)");
    cmd->add_option("--seed", cfg.seed, "generator seed");
    cmd->add_option("--length", cfg.word_length, "elementary factors in a generated matrix");
    cmd->add_option("--degree", cfg.degree_bound, "degree bound of generated factors");
    cmd->add_option("--mode", mode, "strict or fallback")->check(CLI::IsMember({"strict", "fallback"}));
    cmd->add_option("--max-offset-degree", cfg.caps.max_offset_degree, "search cap on offset degree");
    cmd->add_option("--max-candidates", cfg.caps.max_candidates, "search cap on candidates");
    cmd->add_option("--out", cfg.output, "write reports here instead of stdout");
}

int run_decompose(const std::string& input, RunConfig cfg, const std::string& mode) {
    cfg.mode = parse_mode(mode);
    std::optional<SLMatrix> a;
    if (input.empty()) {
        cfg.validate();
        a = generate_random_sl(cfg, cfg.seed);
    } else {
        a = SLMatrix(matrix_from_json(read_file(input)));
        cfg.q = a->q();
        cfg.n = a->n();
        cfg.validate();
    }
    DecompositionReport r;
    try {
        r = decompose(*a, cfg);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapOrBudget;
    }
    if (input.empty()) r.seed = cfg.seed;
    Output out(cfg.output);
    out.stream() << report_to_json(r) << "\n";
    if (!r.verified) return kVerifyFailed;
    if (cfg.mode == Mode::Strict && (!r.strict_complete || !r.bound_satisfied)) return kCapOrBudget;
    return kOk;
}

int run_bench(RunConfig cfg, const std::string& mode) {
    cfg.mode = parse_mode(mode);
    cfg.validate();
    Output out(cfg.output);
    BenchSummary s = sldecomp::run_bench(cfg, [&](const TrialOutcome& o) { out.stream() << outcome_to_json(o) << "\n"; });
    out.stream() << summary_to_json(s, cfg) << "\n";
    std::cerr << "trials " << s.trials << ", verified " << s.verified << ", strict " << s.strict_complete
              << ", max length " << s.max_length << ", " << s.seconds << " s\n";
    if (s.failures) return kVerifyFailed;
    if (s.cap_exceeded || (cfg.mode == Mode::Strict && s.strict_over_bound)) return kCapOrBudget;
    return kOk;
}

int run_selftest(const SelftestOptions& opts) {
    SelftestReport r = selftest(opts);
    for (const auto& c : r.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return r.passed() ? kOk : kVerifyFailed;
}

int run_verify(const std::string& matrix_path, const std::string& word_path) {
    SLMatrix a(matrix_from_json(read_file(matrix_path)));
    Word w = word_from_json(read_file(word_path), a.q());
    const bool ok = verify(w, a);
    std::cout << (ok ? "verified" : "mismatch") << " (" << w.size() << " factors)\n";
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elementary-matrix decompositions over F_q[T]"};
    app.require_subcommand(1);

    RunConfig dcfg;
    std::string dmode = "fallback", input;
    auto* dec = app.add_subcommand("decompose", "decompose one matrix (from --input or generated)");
    add_common(dec, dcfg, dmode);
    dec->add_option("--input", input, "matrix JSON file");

    RunConfig bcfg;
    bcfg.trials = 100;
    std::string bmode = "fallback";
    auto* bench = app.add_subcommand("bench", "decompose generated matrices and report statistics");
    add_common(bench, bcfg, bmode);
    bench->add_option("--trials", bcfg.trials, "number of trials");
    bench->add_option("--threads", bcfg.threads, "worker threads");

    SelftestOptions sopts;
    auto* st = app.add_subcommand("selftest", "run the built-in check suite");
    st->add_option("--trials", sopts.trials, "end-to-end trials per field");
    st->add_option("--seed", sopts.seed, "seed");
    st->add_flag("--corrupt", sopts.corrupt_word, "corrupt each end-to-end word (the suite must fail)");

    std::string matrix_path, word_path;
    auto* ver = app.add_subcommand("verify", "check that a word multiplies to a matrix");
    ver->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    ver->add_option("--word", word_path, "word JSON file (array or report line)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*dec) return run_decompose(input, dcfg, dmode);
        if (*bench) return run_bench(bcfg, bmode);
        if (*st) return run_selftest(sopts);
        if (*ver) return run_verify(matrix_path, word_path);
    } catch (const FormatError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapOrBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

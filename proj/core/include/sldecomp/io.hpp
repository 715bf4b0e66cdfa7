#pragma once

#include <string>

#include "sldecomp/harness.hpp"
#include "sldecomp/matrix.hpp"

namespace sldecomp {

/// Schema tag carried by every report line.
inline constexpr const char* kReportSchema = "sldecomp.report/1";

/// {"q": .., "n": .., "entries": [[coeffs, ...], ...]}, coefficients constant term first.
std::string matrix_to_json(const PolyMatrix& m);
/// Throws FormatError on malformed input or unsupported q.
PolyMatrix matrix_from_json(const std::string& text);

/// [{"i": .., "j": .., "f": [..]}, ...] with 1-based indices.
std::string word_to_json(const Word& w);
/// Accepts a bare array or an object with a "word" member. Throws FormatError.
Word word_from_json(const std::string& text, std::uint32_t q);

/// One self-contained JSON object, no trailing newline.
std::string report_to_json(const DecompositionReport& r);
/// Parses a report line and re-verifies its word against its input; throws FormatError if
/// the line is malformed and PipelineError if the word does not reproduce the input.
DecompositionReport report_from_json(const std::string& line);

std::string outcome_to_json(const TrialOutcome& o);
std::string summary_to_json(const BenchSummary& s, const RunConfig& config);
std::string selftest_to_json(const SelftestReport& r);

}  // namespace sldecomp

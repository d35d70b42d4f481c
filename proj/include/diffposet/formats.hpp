#pragma once

#include <stdexcept>
#include <string>

#include "diffposet/poset.hpp"

namespace diffposet {

/// Malformed poset text document; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A parsed poset that failed validate(); the report is embedded.
class PosetValidationError : public std::runtime_error {
public:
    explicit PosetValidationError(ValidationReport report)
        : std::runtime_error(describe(report)), report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    static std::string describe(const ValidationReport& report);
    ValidationReport report_;
};

/// Line-oriented poset text format:
///   # comment (to end of line)
///   ranks k0 k1 ... kR          one header line, sizes per rank
///   edge n i j                  rank-n element i covered by rank-(n+1) element j
///   edge n i m j                same with the upper rank spelled out; m must be n+1
///   label n i <text>            optional display label
/// Parses without validating; import_poset() adds the validation gate.
GradedPoset parse_poset_text(const std::string& text);

/// Inverse of parse_poset_text; emits ranks, labels, then edges, all sorted.
std::string serialize_poset_text(const GradedPoset& poset);

enum class DotHighlight { None, Threads };

/// Graphviz document for the Hasse diagram: one node per element grouped
/// rank=same per rank, one edge per cover, thread elements drawn unfilled
/// when highlighting is on (matching the usual diagram convention).
std::string export_dot(const GradedPoset& poset, DotHighlight highlight);

}  // namespace diffposet

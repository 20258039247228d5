#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/artifact.hpp"
#include "reposim/report.hpp"
#include "reposim/similarity.hpp"
#include "reposim/vsm.hpp"

namespace reposim::repro {

inline constexpr double kTolerance = 1e-9;
inline constexpr std::string_view kExpectedFile = "expected.json";
inline constexpr std::string_view kCorporaDir = "corpora";

/// One frozen aggregate, keyed like a report row.
struct ExpectedRow {
    std::string repo_a;
    std::string repo_b;
    vsm::VectorizerMode vectorizer = vsm::VectorizerMode::TfIdf;
    ArtifactKind kind_a = ArtifactKind::SourceCode;
    ArtifactKind kind_b = ArtifactKind::SourceCode;
    double aggregate = 0.0;
    friend bool operator==(const ExpectedRow&, const ExpectedRow&) = default;
};

std::string emit_expected(const std::vector<ExpectedRow>& rows);
std::vector<ExpectedRow> parse_expected(std::string_view bytes);  // throws ReportFormatError

/// Repository pairs in order of first appearance in the expected rows.
std::vector<std::pair<std::string, std::string>> repo_pairs(const std::vector<ExpectedRow>& rows);

struct RowCheck {
    std::string repo_a;
    std::string repo_b;
    vsm::VectorizerMode vectorizer = vsm::VectorizerMode::TfIdf;
    ArtifactKind kind_a = ArtifactKind::SourceCode;
    ArtifactKind kind_b = ArtifactKind::SourceCode;
    std::optional<double> expected;  // absent: row produced but not frozen
    std::optional<double> actual;    // absent: row frozen but not produced
    bool pass = false;
};

struct Outcome {
    report::SimilarityReport report;
    std::vector<RowCheck> checks;
    bool all_pass() const;
};

/// Compares report rows against frozen values; rows are matched by key and
/// unmatched rows on either side fail.
std::vector<RowCheck> check_rows(const report::SimilarityReport& report,
                                 const std::vector<ExpectedRow>& expected,
                                 double tolerance = kTolerance);

/// Loads `<dir>/corpora/<repo>.jsonl` for a repository named in the expected file.
CorpusSet load_fixture_corpus(const std::filesystem::path& dir, const std::string& repo);

/// Runs the default experiment for every frozen repository pair.
/// Throws FixtureError naming the offending path.
Outcome run(const std::filesystem::path& dir, const similarity::ExecutionOptions& exec = {});

/// One line per check plus a trailing summary.
std::string render_checks(const std::vector<RowCheck>& checks);

}  // namespace reposim::repro

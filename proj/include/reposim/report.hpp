#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reposim/artifact.hpp"
#include "reposim/vsm.hpp"

namespace reposim::report {

inline constexpr int kReportFormatVersion = 1;

/// Version string recorded in report metadata.
std::string_view tool_version();

struct ReportRow {
    std::string repo_a;
    std::string repo_b;
    vsm::VectorizerMode vectorizer = vsm::VectorizerMode::TfIdf;
    ArtifactKind kind_a = ArtifactKind::SourceCode;
    ArtifactKind kind_b = ArtifactKind::SourceCode;
    double aggregate = 0.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t zero_pairs = 0;

    bool is_cross_artifact() const noexcept { return kind_a != kind_b; }
    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Orders artifact pairs: same-artifact before cross-artifact, then by kind.
bool artifact_pair_order(ArtifactKind lhs_a, ArtifactKind lhs_b, ArtifactKind rhs_a, ArtifactKind rhs_b);

/// Sort key: repository pair, then vectorizer, then artifact pair.
bool row_order(const ReportRow& lhs, const ReportRow& rhs);

struct CorpusFingerprint {
    std::string repo_name;
    std::string digest;
    friend bool operator==(const CorpusFingerprint&, const CorpusFingerprint&) = default;
};

struct Metadata {
    std::string tool_version;
    std::string timestamp;  // empty unless the caller supplies one
    std::string pipeline_config_digest;
    std::string fit_scope;    // "pairwise", "corpus" or "mixed"
    std::string aggregation;  // "max", "mean", "topk:<k>" or "mixed"
    std::vector<CorpusFingerprint> corpora;  // sorted by repo_name, unique
    friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct SimilarityReport {
    std::vector<ReportRow> rows;
    Metadata metadata;

    void sort_rows();
    friend bool operator==(const SimilarityReport&, const SimilarityReport&) = default;
};

/// Concatenates rows (re-sorted) and fingerprints; metadata fields other than
/// fingerprints must agree, otherwise they become "mixed".
SimilarityReport merge(const SimilarityReport& lhs, const SimilarityReport& rhs);

/// Fixed-width table grouped by repository pair and vectorizer. Scores use
/// three decimals; cross-artifact rows carry a '*' marker.
std::string render_table(const SimilarityReport& report);

std::string emit_json(const SimilarityReport& report);
std::string emit_csv(const SimilarityReport& report);

/// Inverse of emit_json; throws ReportFormatError.
SimilarityReport parse_json(std::string_view bytes);

inline constexpr std::string_view kCsvHeader =
    "repo_a,repo_b,vectorizer,kind_a,kind_b,aggregate,rows,cols,zero_pairs";

}  // namespace reposim::report

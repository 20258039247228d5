#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/artifact.hpp"
#include "reposim/error.hpp"
#include "reposim/report.hpp"
#include "reposim/text.hpp"
#include "reposim/vsm.hpp"

namespace reposim::similarity {

enum class FitScope { Pairwise, Corpus };

std::string_view fit_scope_name(FitScope scope);
std::optional<FitScope> parse_fit_scope(std::string_view name);

struct Aggregation {
    enum class Kind { Max, Mean, TopKMean };
    Kind kind = Kind::Max;
    std::size_t k = 1;  // TopKMean only; must be >= 1

    static Aggregation max() { return {Kind::Max, 1}; }
    static Aggregation mean() { return {Kind::Mean, 1}; }
    static Aggregation top_k_mean(std::size_t k);

    std::string name() const;  // "max", "mean", "topk:<k>"
    friend bool operator==(const Aggregation&, const Aggregation&) = default;
};

/// Parses "max", "mean" or "topk:<k>".
std::optional<Aggregation> parse_aggregation(std::string_view text);

struct ComparisonPlan {
    ArtifactKind kind_a = ArtifactKind::SourceCode;
    ArtifactKind kind_b = ArtifactKind::SourceCode;
    vsm::VectorizerMode mode = vsm::VectorizerMode::TfIdf;
    FitScope fit_scope = FitScope::Pairwise;
    Aggregation aggregation = Aggregation::max();
};

/// Source/source, commits/commits, commits/source and readme/source, each
/// under both vectorizers.
std::vector<ComparisonPlan> default_plans(FitScope fit = FitScope::Pairwise,
                                          Aggregation agg = Aggregation::max());

struct SimilarityMatrix {
    std::vector<std::string> row_ids;
    std::vector<std::string> col_ids;
    std::vector<double> scores;  // row-major, rows() x cols()
    std::size_t zero_pair_count = 0;

    std::size_t rows() const noexcept { return row_ids.size(); }
    std::size_t cols() const noexcept { return col_ids.size(); }
    std::size_t cells() const noexcept { return scores.size(); }
    double at(std::size_t r, std::size_t c) const { return scores[r * cols() + c]; }
};

struct ExecutionOptions {
    unsigned threads = 1;  // 0 = hardware concurrency
};

/// dot(u, v) / (|u| |v|) clamped to [0, 1]; zero when either vector is zero.
/// Throws DimensionMismatch.
double cosine(const vsm::WeightedVector& u, const vsm::WeightedVector& v);

/// Full cross product of already preprocessed documents.
SimilarityMatrix compare_tokens(const std::vector<text::TokenDocument>& docs_a,
                                const std::vector<text::TokenDocument>& docs_b,
                                vsm::VectorizerMode mode, FitScope fit,
                                const ExecutionOptions& exec = {});

/// Preprocesses both corpora and compares every document of A with every
/// document of B. Throws std::invalid_argument if corpus kinds do not match
/// the plan.
SimilarityMatrix compare_pair(const ArtifactCorpus& corpus_a, const ArtifactCorpus& corpus_b,
                              const ComparisonPlan& plan, const text::PipelineConfig& cfg,
                              const ExecutionOptions& exec = {});

/// Throws EmptyMatrix for a matrix without cells.
double aggregate(const SimilarityMatrix& matrix, const Aggregation& aggregation);

struct ExperimentResult {
    report::SimilarityReport report;
    std::vector<SimilarityMatrix> matrices;  // aligned with report.rows
    std::vector<MissingArtifact> missing;    // plans that could not run
};

/// One report row per runnable plan; plans whose artifact kind is absent are
/// recorded in `missing` and skipped.
ExperimentResult run_experiment(const CorpusSet& repo_a, const CorpusSet& repo_b,
                                const std::vector<ComparisonPlan>& plans,
                                const text::PipelineConfig& cfg, const ExecutionOptions& exec = {});

/// JSON listing every matrix of an experiment next to its report row key.
std::string emit_matrix_dump(const ExperimentResult& result);

/// Stable hex digest of a corpus set's serialized form.
std::string corpus_fingerprint(const CorpusSet& set);

}  // namespace reposim::similarity

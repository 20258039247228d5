#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reposim/artifact.hpp"
#include "reposim/report.hpp"

namespace reposim::similarity {

/// Exact two-sided Wilcoxon signed-rank test.
struct SignedRankResult {
    std::size_t n = 0;         // nonzero differences used
    double w_plus = 0.0;       // rank sum of positive differences
    double w_minus = 0.0;      // rank sum of negative differences
    double statistic = 0.0;    // min(w_plus, w_minus)
    double p_value = 1.0;      // P(min(W+, W-) <= statistic) under H0
    std::uint64_t extreme_count = 0;  // sign assignments at least as extreme
};

inline constexpr std::size_t kMaxExactPairs = 25;
inline constexpr double kZeroDifference = 1e-12;

/// Differences with |d| <= kZeroDifference are dropped; |d| within
/// kZeroDifference of each other share their average rank. Throws
/// std::invalid_argument when more than kMaxExactPairs differences remain.
SignedRankResult wilcoxon_signed_rank(std::span<const double> differences);

struct PairedDelta {
    std::string repo_a;
    std::string repo_b;
    ArtifactKind kind_a = ArtifactKind::SourceCode;
    ArtifactKind kind_b = ArtifactKind::SourceCode;
    double tfidf = 0.0;
    double count = 0.0;
    double delta = 0.0;  // count - tfidf
};

struct VectorizerDelta {
    std::vector<PairedDelta> pairs;  // ordered by (repo pair, artifact pair)
    double mean_delta = 0.0;
    SignedRankResult test;
};

/// Pairs rows by (repo pair, artifact pair). Throws PairingMismatch if the
/// two row sets do not correspond one-to-one.
VectorizerDelta vectorizer_delta(std::span<const report::ReportRow> tfidf_rows,
                                 std::span<const report::ReportRow> count_rows);

/// Splits a mixed report by vectorizer and pairs the halves.
VectorizerDelta vectorizer_delta(const report::SimilarityReport& report);

}  // namespace reposim::similarity

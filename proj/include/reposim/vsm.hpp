#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/text.hpp"

namespace reposim::vsm {

enum class VectorizerMode { TfIdf = 0, Count = 1 };

std::string_view mode_name(VectorizerMode mode);   // "tfidf" / "count"
std::string_view mode_label(VectorizerMode mode);  // "Tf-idf Vectorizer" / "CountVectorizer"
std::optional<VectorizerMode> parse_mode(std::string_view name);

/// Sorted term list with document frequencies, fitted on a set of documents.
class Vocabulary {
public:
    Vocabulary() = default;

    std::size_t size() const noexcept { return terms_.size(); }
    std::size_t n_docs() const noexcept { return n_docs_; }
    const std::vector<std::string>& terms() const noexcept { return terms_; }
    const std::vector<std::uint32_t>& doc_freq() const noexcept { return doc_freq_; }

    std::optional<std::uint32_t> index_of(std::string_view term) const;
    std::uint32_t doc_freq(std::string_view term) const;  // 0 if absent

    friend Vocabulary fit_vocabulary(std::span<const text::TokenDocument> docs);
    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

private:
    std::vector<std::string> terms_;
    std::vector<std::uint32_t> doc_freq_;
    std::size_t n_docs_ = 0;
};

/// Sparse nonnegative vector: strictly increasing indices, positive weights.
struct WeightedVector {
    std::size_t dim = 0;
    std::vector<std::uint32_t> indices;
    std::vector<double> weights;
    double norm = 0.0;
    double norm_sq = 0.0;

    bool is_zero() const noexcept { return weights.empty(); }
    std::size_t nnz() const noexcept { return weights.size(); }

    /// Builds from (index, weight) entries sorted by index; zeros dropped.
    static WeightedVector from_entries(std::size_t dim, std::vector<std::uint32_t> indices,
                                       std::vector<double> weights);
    void refresh_norm();
};

/// Terms are the union of all tokens. Throws EmptyVocabulary if that union
/// is empty.
Vocabulary fit_vocabulary(std::span<const text::TokenDocument> docs);

WeightedVector count_vector(const text::TokenDocument& doc, const Vocabulary& vocab);

/// Smoothed inverse document frequency: ln((1 + n) / (1 + df)) + 1.
double idf(std::size_t n_docs, std::size_t doc_freq);
std::vector<double> idf_weights(const Vocabulary& vocab);

/// Raw counts times idf, scaled to unit Euclidean norm.
WeightedVector tfidf_vector(const text::TokenDocument& doc, const Vocabulary& vocab);
WeightedVector tfidf_vector(const text::TokenDocument& doc, const Vocabulary& vocab,
                            std::span<const double> idf_table);

WeightedVector vectorize(const text::TokenDocument& doc, const Vocabulary& vocab, VectorizerMode mode);

}  // namespace reposim::vsm

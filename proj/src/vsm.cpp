#include "reposim/vsm.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "reposim/error.hpp"
#include "reposim/kernels.hpp"

namespace reposim::vsm {

std::string_view mode_name(VectorizerMode mode) {
    return mode == VectorizerMode::TfIdf ? "tfidf" : "count";
}

std::string_view mode_label(VectorizerMode mode) {
    return mode == VectorizerMode::TfIdf ? "Tf-idf Vectorizer" : "CountVectorizer";
}

std::optional<VectorizerMode> parse_mode(std::string_view name) {
    if (name == "tfidf") return VectorizerMode::TfIdf;
    if (name == "count") return VectorizerMode::Count;
    return std::nullopt;
}

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view term) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
    if (it == terms_.end() || *it != term) return std::nullopt;
    return static_cast<std::uint32_t>(it - terms_.begin());
}

std::uint32_t Vocabulary::doc_freq(std::string_view term) const {
    auto idx = index_of(term);
    return idx ? doc_freq_[*idx] : 0;
}

Vocabulary fit_vocabulary(std::span<const text::TokenDocument> docs) {
    std::map<std::string, std::uint32_t, std::less<>> df;
    std::vector<std::string_view> unique;
    for (const text::TokenDocument& doc : docs) {
        unique.assign(doc.tokens.begin(), doc.tokens.end());
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        for (std::string_view t : unique) {
            auto it = df.find(t);
            if (it == df.end()) df.emplace(std::string(t), 1);
            else ++it->second;
        }
    }
    if (df.empty()) throw EmptyVocabulary();

    Vocabulary vocab;
    vocab.n_docs_ = docs.size();
    vocab.terms_.reserve(df.size());
    vocab.doc_freq_.reserve(df.size());
    for (auto& [term, freq] : df) {
        vocab.terms_.push_back(term);
        vocab.doc_freq_.push_back(freq);
    }
    return vocab;
}

WeightedVector WeightedVector::from_entries(std::size_t dim, std::vector<std::uint32_t> indices,
                                            std::vector<double> weights) {
    WeightedVector v;
    v.dim = dim;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (weights[i] == 0.0) continue;
        v.indices.push_back(indices[i]);
        v.weights.push_back(weights[i]);
    }
    v.refresh_norm();
    return v;
}

void WeightedVector::refresh_norm() {
    norm_sq = kernels::sum_squares(weights);
    norm = std::sqrt(norm_sq);
}

namespace {

// (index, occurrence count) for in-vocabulary tokens, sorted by index.
WeightedVector raw_counts(const text::TokenDocument& doc, const Vocabulary& vocab) {
    std::vector<std::uint32_t> hits;
    hits.reserve(doc.tokens.size());
    for (const std::string& t : doc.tokens)
        if (auto idx = vocab.index_of(t)) hits.push_back(*idx);
    std::sort(hits.begin(), hits.end());

    WeightedVector v;
    v.dim = vocab.size();
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i]) ++j;
        v.indices.push_back(hits[i]);
        v.weights.push_back(static_cast<double>(j - i));
        i = j;
    }
    return v;
}

}  // namespace

WeightedVector count_vector(const text::TokenDocument& doc, const Vocabulary& vocab) {
    WeightedVector v = raw_counts(doc, vocab);
    v.refresh_norm();
    return v;
}

double idf(std::size_t n_docs, std::size_t doc_freq) {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(doc_freq))) + 1.0;
}

std::vector<double> idf_weights(const Vocabulary& vocab) {
    std::vector<double> out;
    out.reserve(vocab.size());
    for (std::uint32_t df : vocab.doc_freq()) out.push_back(idf(vocab.n_docs(), df));
    return out;
}

WeightedVector tfidf_vector(const text::TokenDocument& doc, const Vocabulary& vocab,
                            std::span<const double> idf_table) {
    WeightedVector v = raw_counts(doc, vocab);
    for (std::size_t i = 0; i < v.weights.size(); ++i) v.weights[i] *= idf_table[v.indices[i]];
    v.refresh_norm();
    if (v.norm > 0.0) {
        kernels::scale(v.weights, 1.0 / v.norm);
        v.refresh_norm();
    }
    return v;
}

WeightedVector tfidf_vector(const text::TokenDocument& doc, const Vocabulary& vocab) {
    const std::vector<double> table = idf_weights(vocab);
    return tfidf_vector(doc, vocab, table);
}

WeightedVector vectorize(const text::TokenDocument& doc, const Vocabulary& vocab, VectorizerMode mode) {
    return mode == VectorizerMode::TfIdf ? tfidf_vector(doc, vocab) : count_vector(doc, vocab);
}

}  // namespace reposim::vsm

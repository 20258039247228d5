#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/artifact.hpp"

namespace reposim::text {

/// The embedded 174-word English stopword list (resources/stopwords_en.txt).
const std::set<std::string>& default_stopwords();

/// One lowercase word per line; blank lines ignored.
std::set<std::string> load_stopwords(const std::filesystem::path& path);
std::set<std::string> parse_stopwords(std::string_view text);

struct PipelineConfig {
    std::set<std::string> stopwords = default_stopwords();
    bool split_identifiers = true;
    bool stem = true;
    std::size_t min_token_len = 2;

    /// Throws std::invalid_argument if a stopword has uppercase letters or
    /// min_token_len is zero.
    void validate() const;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Stable hex digest of every field that affects preprocessing output.
std::string config_digest(const PipelineConfig& cfg);

struct TokenDocument {
    std::string doc_id;
    ArtifactKind kind = ArtifactKind::SourceCode;
    std::vector<std::string> tokens;

    bool is_empty() const noexcept { return tokens.empty(); }
};

/// Maximal runs of [A-Za-z0-9] that contain at least one letter.
std::vector<std::string> tokenize(std::string_view text);

/// Splits camelCase, acronym runs and letter/digit boundaries, lowercasing
/// the pieces: "XMLParser2" -> {"xml", "parser", "2"}.
std::vector<std::string> split_identifier(std::string_view token);

/// Porter's suffix-stripping stemmer (1980 rule set) for lowercase ASCII
/// words. Input containing anything but [a-z] is returned unchanged.
std::string stem(std::string_view word);

TokenDocument preprocess(const RawDocument& doc, const PipelineConfig& cfg);

}  // namespace reposim::text

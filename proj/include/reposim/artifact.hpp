#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reposim {

// Enumerator order is the report row order: source-vs-source sorts before
// commits-vs-commits, which sorts before commits-vs-source and readme-vs-source.
enum class ArtifactKind { SourceCode = 0, Commits = 1, Readme = 2 };

inline constexpr ArtifactKind kAllKinds[] = {ArtifactKind::SourceCode, ArtifactKind::Commits,
                                             ArtifactKind::Readme};

/// Short wire name: "source", "commits", "readme".
std::string_view kind_name(ArtifactKind kind);
/// Human label used by the text table, e.g. "Source Code".
std::string_view kind_label(ArtifactKind kind);
std::optional<ArtifactKind> parse_kind(std::string_view name);

struct RawDocument {
    std::string doc_id;
    ArtifactKind kind = ArtifactKind::SourceCode;
    std::string origin;  // relative, '/'-separated; "commits" for the commit log
    std::string text;    // valid UTF-8

    friend bool operator==(const RawDocument&, const RawDocument&) = default;
};

struct ArtifactCorpus {
    std::string repo_name;
    ArtifactKind kind = ArtifactKind::SourceCode;
    std::vector<RawDocument> documents;

    friend bool operator==(const ArtifactCorpus&, const ArtifactCorpus&) = default;
};

/// All corpora extracted from one repository, keyed by kind.
struct CorpusSet {
    std::string repo_name;
    std::map<ArtifactKind, ArtifactCorpus> corpora;

    const ArtifactCorpus* find(ArtifactKind kind) const {
        auto it = corpora.find(kind);
        return it == corpora.end() ? nullptr : &it->second;
    }

    friend bool operator==(const CorpusSet&, const CorpusSet&) = default;
};

/// Throws CorpusFormatError naming the first violated corpus invariant.
void validate_corpus(const ArtifactCorpus& corpus);

}  // namespace reposim

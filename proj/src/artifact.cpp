#include "reposim/artifact.hpp"

#include <set>

#include "reposim/error.hpp"

namespace reposim {

std::string_view kind_name(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::SourceCode: return "source";
        case ArtifactKind::Commits: return "commits";
        case ArtifactKind::Readme: return "readme";
    }
    return "unknown";
}

std::string_view kind_label(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::SourceCode: return "Source Code";
        case ArtifactKind::Commits: return "Commits";
        case ArtifactKind::Readme: return "Readme";
    }
    return "Unknown";
}

std::optional<ArtifactKind> parse_kind(std::string_view name) {
    for (ArtifactKind k : kAllKinds)
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

void validate_corpus(const ArtifactCorpus& corpus) {
    const std::string where = std::string(kind_name(corpus.kind)) + " corpus of '" + corpus.repo_name + "'";
    if (corpus.documents.empty()) throw CorpusFormatError(where + " has no documents");
    if (corpus.kind != ArtifactKind::SourceCode && corpus.documents.size() != 1)
        throw CorpusFormatError(where + " must hold exactly one document");

    std::set<std::string_view> ids;
    const std::string* prev_origin = nullptr;
    for (const RawDocument& doc : corpus.documents) {
        if (doc.kind != corpus.kind) throw CorpusFormatError(where + " holds a document of another kind");
        if (!ids.insert(doc.doc_id).second) throw CorpusFormatError(where + ": duplicate doc_id " + doc.doc_id);
        if (doc.origin.empty() || doc.origin.front() == '/' || doc.origin.find('\\') != std::string::npos ||
            (doc.origin.size() > 1 && doc.origin[1] == ':'))
            throw CorpusFormatError(where + ": origin is not a normalized relative path: " + doc.origin);
        if (corpus.kind == ArtifactKind::SourceCode) {
            if (prev_origin && !(*prev_origin < doc.origin))
                throw CorpusFormatError(where + ": source documents not strictly sorted at " + doc.origin);
            prev_origin = &doc.origin;
        }
    }
}

}  // namespace reposim

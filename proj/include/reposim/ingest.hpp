#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/artifact.hpp"

namespace reposim::ingest {

struct RepoSnapshot {
    std::string repo_name;
    std::filesystem::path root;
    std::optional<std::filesystem::path> commit_log_path;
    std::set<std::string> source_extensions = {"java", "xml"};  // lowercase, no dot
};

/// Non-fatal problem encountered while building a corpus set.
struct Warning {
    std::optional<ArtifactKind> kind;
    std::string message;
};

struct IngestResult {
    CorpusSet corpora;
    std::vector<Warning> warnings;
};

/// Root-level README with the lowest-priority extension: none, then ".md",
/// then ".txt", then any other extension in lexicographic order.
RawDocument discover_readme(const RepoSnapshot& snapshot);

/// Regular files under root with a selected extension, skipping anything
/// below a `.git` component. Sorted by origin; doc_id == origin.
std::vector<RawDocument> collect_source_files(const RepoSnapshot& snapshot);

/// Parses a log produced by `git log --pretty=format:'commit %H%n%B%x1e'`.
RawDocument parse_commit_log(const std::filesystem::path& path);
RawDocument parse_commit_log_text(std::string_view text, const std::string& source_name = "<memory>");

/// Runs the three extractors. Missing artifacts become warnings; only an
/// unreadable root throws.
IngestResult build_corpus(const RepoSnapshot& snapshot);

/// Parses "java,XML,.kt" into {"java","xml","kt"}.
std::set<std::string> parse_extensions(std::string_view list);

}  // namespace reposim::ingest

#pragma once

#include <string>
#include <string_view>

#include "reposim/artifact.hpp"

namespace reposim {

inline constexpr int kCorpusFormatVersion = 1;

/// JSON-lines: a header object {repo_name, kinds, counts, format_version}
/// followed by one {doc_id, kind, origin, text} object per document.
/// Output is deterministic for equal inputs.
std::string save_corpus(const CorpusSet& set);

/// Inverse of save_corpus. Throws CorpusFormatError on malformed or
/// truncated input, or when a corpus invariant does not hold.
CorpusSet load_corpus(std::string_view bytes);

}  // namespace reposim

#pragma once

#include <string>
#include <string_view>

namespace reposim {

/// Copies `bytes`, replacing each maximal invalid UTF-8 subsequence with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

}  // namespace reposim

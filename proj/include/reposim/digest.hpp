#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace reposim {

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace reposim

#include "reposim/utf8.hpp"

#include <cstdint>

namespace reposim {

namespace {

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";

bool is_cont(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::string sanitize_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        std::size_t len = 0;
        unsigned char lo = 0x80, hi = 0xBF;  // valid range of the second byte
        if (c >= 0xC2 && c <= 0xDF) {
            len = 2;
        } else if (c >= 0xE0 && c <= 0xEF) {
            len = 3;
            if (c == 0xE0) lo = 0xA0;
            if (c == 0xED) hi = 0x9F;  // no surrogates
        } else if (c >= 0xF0 && c <= 0xF4) {
            len = 4;
            if (c == 0xF0) lo = 0x90;
            if (c == 0xF4) hi = 0x8F;
        }
        if (len == 0) {
            out.append(kReplacement);
            ++i;
            continue;
        }
        // Consume the maximal valid prefix; an incomplete one becomes one U+FFFD.
        std::size_t j = i + 1;
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k, ++j) {
            if (j >= n) { ok = false; break; }
            const auto b = static_cast<unsigned char>(bytes[j]);
            const bool valid = k == 1 ? (b >= lo && b <= hi) : is_cont(b);
            if (!valid) { ok = false; break; }
        }
        if (ok) {
            out.append(bytes.substr(i, len));
        } else {
            out.append(kReplacement);
        }
        i = j;
    }
    return out;
}

}  // namespace reposim

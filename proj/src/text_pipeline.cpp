#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "reposim/digest.hpp"
#include "reposim/error.hpp"
#include "reposim/text.hpp"

namespace reposim::text {

namespace {

#include "stopwords_en.inc"  // defines kEmbeddedStopwords

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// [a-z][a-z0-9]*
bool well_formed(std::string_view token) {
    if (token.empty() || !is_lower(token.front())) return false;
    return std::all_of(token.begin(), token.end(), [](char c) { return is_lower(c) || is_digit(c); });
}

}  // namespace

std::set<std::string> parse_stopwords(std::string_view text) {
    std::set<std::string> words;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
        if (start < line.size()) words.insert(line.substr(start));
    }
    return words;
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = parse_stopwords(kEmbeddedStopwords);
    return words;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open stopword file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stopwords(buf.str());
}

void PipelineConfig::validate() const {
    if (min_token_len < 1) throw std::invalid_argument("min_token_len must be at least 1");
    for (const std::string& w : stopwords)
        if (std::any_of(w.begin(), w.end(), is_upper))
            throw std::invalid_argument("stopword is not lowercase: " + w);
}

std::string config_digest(const PipelineConfig& cfg) {
    std::string canon = "split_identifiers=" + std::to_string(cfg.split_identifiers) +
                        ";stem=porter1980:" + std::to_string(cfg.stem) +
                        ";min_token_len=" + std::to_string(cfg.min_token_len) + ";stopwords=";
    for (const std::string& w : cfg.stopwords) {
        canon += w;
        canon.push_back('\n');
    }
    return fnv1a64_hex(canon);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && !is_alpha(text[i]) && !is_digit(text[i])) ++i;
        const std::size_t start = i;
        bool letter = false;
        while (i < n && (is_alpha(text[i]) || is_digit(text[i]))) letter |= is_alpha(text[i++]);
        if (i > start && letter) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> split_identifier(std::string_view token) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        const char prev = token[i - 1], cur = token[i];
        const bool boundary =
            (is_lower(prev) && is_upper(cur)) ||
            (is_alpha(prev) && is_digit(cur)) || (is_digit(prev) && is_alpha(cur)) ||
            (is_upper(prev) && is_upper(cur) && i + 1 < token.size() && is_lower(token[i + 1]));
        if (boundary) {
            pieces.push_back(to_lower(token.substr(start, i - start)));
            start = i;
        }
    }
    if (start < token.size()) pieces.push_back(to_lower(token.substr(start)));
    return pieces;
}

TokenDocument preprocess(const RawDocument& doc, const PipelineConfig& cfg) {
    TokenDocument out{doc.doc_id, doc.kind, {}};
    auto keep = [&](const std::string& t) { return t.size() >= cfg.min_token_len && !cfg.stopwords.contains(t); };
    auto emit = [&](std::string piece) {
        if (!well_formed(piece) || !keep(piece)) return;
        if (cfg.stem) {
            piece = stem(piece);
            if (!keep(piece)) return;
        }
        out.tokens.push_back(std::move(piece));
    };
    for (const std::string& raw : tokenize(doc.text)) {
        if (cfg.split_identifiers) {
            for (std::string& piece : split_identifier(raw)) emit(std::move(piece));
        } else {
            emit(to_lower(raw));
        }
    }
    return out;
}

}  // namespace reposim::text

#include "reposim/corpus_io.hpp"

#include <json.hpp>

#include "reposim/error.hpp"

namespace reposim {

using ojson = nlohmann::ordered_json;

std::string save_corpus(const CorpusSet& set) {
    ojson header;
    header["repo_name"] = set.repo_name;
    header["kinds"] = ojson::array();
    header["counts"] = ojson::object();
    for (const auto& [kind, corpus] : set.corpora) {
        header["kinds"].push_back(kind_name(kind));
        header["counts"][std::string(kind_name(kind))] = corpus.documents.size();
    }
    header["format_version"] = kCorpusFormatVersion;

    std::string out = header.dump();
    out.push_back('\n');
    for (const auto& [kind, corpus] : set.corpora) {
        for (const RawDocument& doc : corpus.documents) {
            ojson line;
            line["doc_id"] = doc.doc_id;
            line["kind"] = kind_name(doc.kind);
            line["origin"] = doc.origin;
            line["text"] = doc.text;
            out += line.dump();
            out.push_back('\n');
        }
    }
    return out;
}

namespace {

const ojson& member(const ojson& obj, const char* key, ojson::value_t type, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) throw CorpusFormatError("line " + std::to_string(line_no) + ": missing key '" + key + "'");
    const bool ok = it->type() == type ||
                    (type == ojson::value_t::number_unsigned && it->type() == ojson::value_t::number_integer &&
                     it->get<long long>() >= 0);
    if (!ok) throw CorpusFormatError("line " + std::to_string(line_no) + ": key '" + key + "' has the wrong type");
    return *it;
}

void expect_keys(const ojson& obj, std::initializer_list<const char*> keys, std::size_t line_no) {
    if (!obj.is_object()) throw CorpusFormatError("line " + std::to_string(line_no) + ": expected a JSON object");
    if (obj.size() != keys.size())
        throw CorpusFormatError("line " + std::to_string(line_no) + ": unexpected set of keys");
    auto it = obj.begin();
    for (const char* key : keys) {
        if (it.key() != key)
            throw CorpusFormatError("line " + std::to_string(line_no) + ": expected key '" + key + "' in order");
        ++it;
    }
}

ArtifactKind kind_from(const ojson& value, std::size_t line_no) {
    auto kind = parse_kind(value.get<std::string>());
    if (!kind) throw CorpusFormatError("line " + std::to_string(line_no) + ": unknown kind '" + value.get<std::string>() + "'");
    return *kind;
}

}  // namespace

CorpusSet load_corpus(std::string_view bytes) {
    std::vector<std::string_view> lines;
    while (!bytes.empty()) {
        const std::size_t nl = bytes.find('\n');
        if (nl == std::string_view::npos) throw CorpusFormatError("truncated input: last line has no newline");
        lines.push_back(bytes.substr(0, nl));
        bytes.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw CorpusFormatError("empty input");

    auto parse_line = [](std::string_view line, std::size_t line_no) {
        try {
            return ojson::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw CorpusFormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    };

    const ojson header = parse_line(lines[0], 1);
    expect_keys(header, {"repo_name", "kinds", "counts", "format_version"}, 1);
    CorpusSet set;
    set.repo_name = member(header, "repo_name", ojson::value_t::string, 1).get<std::string>();
    const ojson& version = header["format_version"];
    if (!version.is_number_integer() || version.get<long long>() != kCorpusFormatVersion)
        throw CorpusFormatError("unsupported format_version");

    const ojson& kinds = member(header, "kinds", ojson::value_t::array, 1);
    const ojson& counts = member(header, "counts", ojson::value_t::object, 1);
    if (counts.size() != kinds.size()) throw CorpusFormatError("header kinds and counts disagree");

    std::vector<std::pair<ArtifactKind, std::size_t>> expected;
    std::size_t total = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (!kinds[i].is_string()) throw CorpusFormatError("header kinds must be strings");
        const ArtifactKind kind = kind_from(kinds[i], 1);
        if (!expected.empty() && !(expected.back().first < kind))
            throw CorpusFormatError("header kinds must be unique and in canonical order");
        auto c = counts.find(kinds[i].get<std::string>());
        if (c == counts.end() || std::next(counts.begin(), static_cast<long>(i)).key() != kinds[i].get<std::string>())
            throw CorpusFormatError("header counts must follow kinds order");
        if (!c->is_number_unsigned() && !(c->is_number_integer() && c->get<long long>() >= 0))
            throw CorpusFormatError("header counts must be nonnegative integers");
        const auto n = c->get<std::size_t>();
        expected.emplace_back(kind, n);
        total += n;
    }
    if (lines.size() - 1 != total)
        throw CorpusFormatError("expected " + std::to_string(total) + " documents, found " +
                                std::to_string(lines.size() - 1));

    std::size_t line_no = 1;
    for (const auto& [kind, n] : expected) {
        ArtifactCorpus corpus{set.repo_name, kind, {}};
        corpus.documents.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            ++line_no;
            const ojson obj = parse_line(lines[line_no - 1], line_no);
            expect_keys(obj, {"doc_id", "kind", "origin", "text"}, line_no);
            RawDocument doc;
            doc.doc_id = member(obj, "doc_id", ojson::value_t::string, line_no).get<std::string>();
            doc.kind = kind_from(member(obj, "kind", ojson::value_t::string, line_no), line_no);
            doc.origin = member(obj, "origin", ojson::value_t::string, line_no).get<std::string>();
            doc.text = member(obj, "text", ojson::value_t::string, line_no).get<std::string>();
            if (doc.kind != kind)
                throw CorpusFormatError("line " + std::to_string(line_no) + ": document out of kind order");
            corpus.documents.push_back(std::move(doc));
        }
        validate_corpus(corpus);
        set.corpora.emplace(kind, std::move(corpus));
    }
    return set;
}

}  // namespace reposim

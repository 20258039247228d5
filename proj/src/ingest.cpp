#include "reposim/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "reposim/error.hpp"
#include "reposim/utf8.hpp"

namespace fs = std::filesystem;

namespace reposim::ingest {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("cannot read file: " + path.string());
    return buf.str();
}

void require_root(const RepoSnapshot& snapshot) {
    std::error_code ec;
    if (!fs::is_directory(snapshot.root, ec)) throw UnreadableRoot(snapshot.root.string());
    fs::directory_iterator probe(snapshot.root, ec);
    if (ec) throw UnreadableRoot(snapshot.root.string());
}

// Readme candidates rank: bare name, then .md, then .txt, then the rest.
int extension_rank(std::string_view ext) {
    if (ext.empty()) return 0;
    if (ext == "md") return 1;
    if (ext == "txt") return 2;
    return 3;
}

bool is_hex(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string repo_name_of(const RepoSnapshot& snapshot) {
    if (!snapshot.repo_name.empty()) return snapshot.repo_name;
    fs::path p = snapshot.root.lexically_normal();
    if (p.filename().empty()) p = p.parent_path();
    return p.filename().string();
}

}  // namespace

RawDocument discover_readme(const RepoSnapshot& snapshot) {
    require_root(snapshot);
    using Key = std::tuple<int, std::string, std::string>;
    std::optional<Key> best;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(snapshot.root, ec)) {
        std::error_code fec;
        if (!entry.is_regular_file(fec)) continue;
        const std::string name = entry.path().filename().string();
        const std::string lname = lower(name);
        std::string ext;
        if (lname == "readme") {
            ext = "";
        } else if (lname.starts_with("readme.") && lname.size() > 7) {
            ext = lname.substr(7);
        } else {
            continue;
        }
        Key key{extension_rank(ext), ext, name};
        if (!best || key < *best) best = std::move(key);
    }
    if (ec) throw UnreadableRoot(snapshot.root.string());
    if (!best) throw NoReadmeFound(snapshot.root.string());

    const std::string& name = std::get<2>(*best);
    RawDocument doc;
    doc.doc_id = name;
    doc.kind = ArtifactKind::Readme;
    doc.origin = name;
    doc.text = sanitize_utf8(read_file(snapshot.root / name));
    return doc;
}

std::vector<RawDocument> collect_source_files(const RepoSnapshot& snapshot) {
    require_root(snapshot);
    if (snapshot.source_extensions.empty()) throw std::invalid_argument("source_extensions must not be empty");

    std::vector<fs::path> selected;
    std::error_code ec;
    fs::recursive_directory_iterator it(snapshot.root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw UnreadableRoot(snapshot.root.string());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw Error("error walking " + snapshot.root.string() + ": " + ec.message());
        const fs::directory_entry& entry = *it;
        if (entry.path().filename() == ".git") {
            if (entry.is_directory()) it.disable_recursion_pending();
            continue;
        }
        std::error_code fec;
        if (!entry.is_regular_file(fec)) continue;
        std::string ext = entry.path().extension().string();
        if (ext.size() < 2) continue;
        if (!snapshot.source_extensions.contains(lower(std::string_view(ext).substr(1)))) continue;
        selected.push_back(entry.path().lexically_relative(snapshot.root));
    }

    std::vector<RawDocument> docs;
    docs.reserve(selected.size());
    for (const fs::path& rel : selected) {
        RawDocument doc;
        doc.origin = rel.generic_string();
        doc.doc_id = doc.origin;
        doc.kind = ArtifactKind::SourceCode;
        docs.push_back(std::move(doc));
    }
    std::sort(docs.begin(), docs.end(), [](const RawDocument& a, const RawDocument& b) { return a.origin < b.origin; });
    if (docs.empty()) throw EmptySourceSet(snapshot.root.string());
    for (RawDocument& doc : docs) doc.text = sanitize_utf8(read_file(snapshot.root / doc.origin));
    return docs;
}

RawDocument parse_commit_log_text(std::string_view text, const std::string& source_name) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    const std::string clean = sanitize_utf8(text);

    std::vector<std::string> messages;
    std::vector<std::string_view> current;
    bool in_record = false;
    std::size_t records = 0;

    auto finish_record = [&] {
        auto first = std::find_if(current.begin(), current.end(), [](std::string_view l) { return !is_blank(l); });
        auto last = std::find_if(current.rbegin(), current.rend(), [](std::string_view l) { return !is_blank(l); }).base();
        if (first < last) {
            std::string msg;
            for (auto line = first; line != last; ++line) {
                if (line != first) msg.push_back('\n');
                msg.append(*line);
            }
            messages.push_back(std::move(msg));
        }
        current.clear();
        in_record = false;
        ++records;
    };

    std::string_view rest = clean;
    std::size_t line_no = 0;
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;
        if (line.ends_with('\r')) line.remove_suffix(1);

        if (!in_record) {
            if (is_blank(line) || line == "\x1e") continue;
            constexpr std::string_view kHeader = "commit ";
            if (!line.starts_with(kHeader)) throw MalformedCommitLog(line_no, "expected 'commit <40-hex-hash>'");
            const std::string_view hash = line.substr(kHeader.size());
            if (hash.size() != 40 || !is_hex(hash)) throw MalformedCommitLog(line_no, "invalid commit hash");
            in_record = true;
            continue;
        }
        if (line == "\x1e") {
            finish_record();
        } else if (line.ends_with('\x1e')) {
            line.remove_suffix(1);
            current.push_back(line);
            finish_record();
        } else {
            current.push_back(line);
        }
    }
    if (in_record) finish_record();
    if (records == 0) throw EmptyCommitLog(source_name);

    RawDocument doc;
    doc.doc_id = "commits";
    doc.kind = ArtifactKind::Commits;
    doc.origin = "commits";
    for (std::size_t i = 0; i < messages.size(); ++i) {
        if (i) doc.text.push_back('\n');
        doc.text.append(messages[i]);
    }
    return doc;
}

RawDocument parse_commit_log(const fs::path& path) {
    return parse_commit_log_text(read_file(path), path.string());
}

IngestResult build_corpus(const RepoSnapshot& snapshot) {
    require_root(snapshot);
    IngestResult result;
    result.corpora.repo_name = repo_name_of(snapshot);
    const std::string& repo = result.corpora.repo_name;

    auto add = [&](ArtifactKind kind, std::vector<RawDocument> docs) {
        ArtifactCorpus corpus{repo, kind, std::move(docs)};
        validate_corpus(corpus);
        result.corpora.corpora.emplace(kind, std::move(corpus));
    };
    auto warn = [&](ArtifactKind kind, std::string message) {
        result.warnings.push_back({kind, std::move(message)});
    };

    try {
        add(ArtifactKind::Readme, {discover_readme(snapshot)});
    } catch (const UnreadableRoot&) {
        throw;
    } catch (const Error& e) {
        warn(ArtifactKind::Readme, e.what());
    }

    if (snapshot.commit_log_path) {
        try {
            add(ArtifactKind::Commits, {parse_commit_log(*snapshot.commit_log_path)});
        } catch (const Error& e) {
            warn(ArtifactKind::Commits, e.what());
        }
    } else {
        warn(ArtifactKind::Commits, "no commit log given; commits artifact omitted");
    }

    try {
        add(ArtifactKind::SourceCode, collect_source_files(snapshot));
    } catch (const UnreadableRoot&) {
        throw;
    } catch (const Error& e) {
        warn(ArtifactKind::SourceCode, e.what());
    }
    return result;
}

std::set<std::string> parse_extensions(std::string_view list) {
    std::set<std::string> out;
    while (!list.empty()) {
        const std::size_t comma = list.find(',');
        std::string_view item = list.substr(0, comma);
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.starts_with('.')) item.remove_prefix(1);
        if (!item.empty()) out.insert(lower(item));
    }
    return out;
}

}  // namespace reposim::ingest

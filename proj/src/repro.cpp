#include "reposim/repro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <tuple>

#include "reposim/corpus_io.hpp"
#include "reposim/error.hpp"
#include "reposim/text.hpp"

namespace reposim::repro {

namespace {

using ojson = nlohmann::ordered_json;
using Key = std::tuple<std::string, std::string, vsm::VectorizerMode, ArtifactKind, ArtifactKind>;

constexpr int kExpectedFormatVersion = 1;

template <typename T>
T field(const ojson& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ReportFormatError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ReportFormatError(std::string("field '") + name + "' has the wrong type");
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FixtureError(path.string(), "cannot read fixture file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::string emit_expected(const std::vector<ExpectedRow>& rows) {
    ojson j;
    j["format_version"] = kExpectedFormatVersion;
    j["tolerance"] = kTolerance;
    ojson arr = ojson::array();
    for (const ExpectedRow& r : rows) {
        ojson e;
        e["repo_a"] = r.repo_a;
        e["repo_b"] = r.repo_b;
        e["vectorizer"] = std::string(vsm::mode_name(r.vectorizer));
        e["kind_a"] = std::string(kind_name(r.kind_a));
        e["kind_b"] = std::string(kind_name(r.kind_b));
        e["aggregate"] = r.aggregate;
        arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<ExpectedRow> parse_expected(std::string_view bytes) {
    ojson j;
    try {
        j = ojson::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ReportFormatError(e.what());
    }
    if (field<int>(j, "format_version") != kExpectedFormatVersion)
        throw ReportFormatError("unsupported expected-values format_version");
    const ojson rows = field<ojson>(j, "rows");
    if (!rows.is_array()) throw ReportFormatError("rows is not an array");
    std::vector<ExpectedRow> out;
    for (const ojson& e : rows) {
        ExpectedRow r;
        r.repo_a = field<std::string>(e, "repo_a");
        r.repo_b = field<std::string>(e, "repo_b");
        auto mode = vsm::parse_mode(field<std::string>(e, "vectorizer"));
        auto ka = parse_kind(field<std::string>(e, "kind_a"));
        auto kb = parse_kind(field<std::string>(e, "kind_b"));
        if (!mode || !ka || !kb) throw ReportFormatError("unknown vectorizer or artifact kind");
        r.vectorizer = *mode;
        r.kind_a = *ka;
        r.kind_b = *kb;
        r.aggregate = field<double>(e, "aggregate");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> repo_pairs(const std::vector<ExpectedRow>& rows) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const ExpectedRow& r : rows) {
        std::pair<std::string, std::string> p{r.repo_a, r.repo_b};
        if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(std::move(p));
    }
    return pairs;
}

bool Outcome::all_pass() const {
    if (checks.empty()) return false;
    for (const RowCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<RowCheck> check_rows(const report::SimilarityReport& report, const std::vector<ExpectedRow>& expected,
                                 double tolerance) {
    std::map<Key, double> frozen;
    for (const ExpectedRow& e : expected) frozen[{e.repo_a, e.repo_b, e.vectorizer, e.kind_a, e.kind_b}] = e.aggregate;

    std::vector<RowCheck> checks;
    for (const report::ReportRow& r : report.rows) {
        RowCheck c{r.repo_a, r.repo_b, r.vectorizer, r.kind_a, r.kind_b, std::nullopt, r.aggregate, false};
        auto it = frozen.find({r.repo_a, r.repo_b, r.vectorizer, r.kind_a, r.kind_b});
        if (it != frozen.end()) {
            c.expected = it->second;
            c.pass = std::abs(r.aggregate - it->second) <= tolerance;
            frozen.erase(it);
        }
        checks.push_back(std::move(c));
    }
    for (const auto& [key, value] : frozen) {
        const auto& [ra, rb, mode, ka, kb] = key;
        checks.push_back({ra, rb, mode, ka, kb, value, std::nullopt, false});
    }
    return checks;
}

CorpusSet load_fixture_corpus(const std::filesystem::path& dir, const std::string& repo) {
    const auto path = dir / kCorporaDir / (repo + ".jsonl");
    try {
        return load_corpus(read_file(path));
    } catch (const CorpusFormatError& e) {
        throw FixtureError(path.string(), e.what());
    }
}

Outcome run(const std::filesystem::path& dir, const similarity::ExecutionOptions& exec) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw FixtureError(dir.string(), "fixtures directory not found");
    const auto expected_path = dir / kExpectedFile;
    std::vector<ExpectedRow> expected;
    try {
        expected = parse_expected(read_file(expected_path));
    } catch (const ReportFormatError& e) {
        throw FixtureError(expected_path.string(), e.what());
    }

    std::map<std::string, CorpusSet> loaded;
    auto corpus = [&](const std::string& name) -> const CorpusSet& {
        auto it = loaded.find(name);
        if (it == loaded.end()) it = loaded.emplace(name, load_fixture_corpus(dir, name)).first;
        return it->second;
    };

    const text::PipelineConfig cfg;
    const auto plans = similarity::default_plans();
    Outcome out;
    bool first = true;
    for (const auto& [a, b] : repo_pairs(expected)) {
        const CorpusSet& ca = corpus(a);
        const CorpusSet& cb = corpus(b);
        auto result = similarity::run_experiment(ca, cb, plans, cfg, exec);
        out.report = first ? std::move(result.report) : report::merge(out.report, result.report);
        first = false;
    }
    out.checks = check_rows(out.report, expected);
    return out;
}

std::string render_checks(const std::vector<RowCheck>& checks) {
    std::string out;
    std::size_t passed = 0;
    auto num = [](const std::optional<double>& v) {
        if (!v) return std::string("-");
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12f", *v);
        return std::string(buf);
    };
    for (const RowCheck& c : checks) {
        passed += c.pass ? 1 : 0;
        char line[512];
        std::snprintf(line, sizeof line, "%s  %s vs %s  %-6s %s:%s  expected=%s actual=%s", c.pass ? "PASS" : "FAIL",
                      c.repo_a.c_str(), c.repo_b.c_str(), std::string(vsm::mode_name(c.vectorizer)).c_str(),
                      std::string(kind_name(c.kind_a)).c_str(), std::string(kind_name(c.kind_b)).c_str(),
                      num(c.expected).c_str(), num(c.actual).c_str());
        out += line;
        if (!c.pass && c.expected && c.actual) {
            std::snprintf(line, sizeof line, "  diff=%.3e", std::abs(*c.actual - *c.expected));
            out += line;
        } else if (!c.expected) {
            out += "  (not in expected file)";
        } else if (!c.actual) {
            out += "  (not produced)";
        }
        out += '\n';
    }
    out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " rows within tolerance\n";
    return out;
}

}  // namespace reposim::repro

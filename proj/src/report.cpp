#include "reposim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <tuple>

#include "reposim/error.hpp"
#include "reposim/stats.hpp"

namespace reposim::report {

using ojson = nlohmann::ordered_json;

#ifndef REPOSIM_VERSION
#define REPOSIM_VERSION "0.0.0"
#endif

std::string_view tool_version() { return REPOSIM_VERSION; }

bool artifact_pair_order(ArtifactKind la, ArtifactKind lb, ArtifactKind ra, ArtifactKind rb) {
    // Same-artifact pairs first, then cross-artifact pairs.
    const bool lc = la != lb, rc = ra != rb;
    return std::tie(lc, la, lb) < std::tie(rc, ra, rb);
}

bool row_order(const ReportRow& l, const ReportRow& r) {
    if (std::tie(l.repo_a, l.repo_b, l.vectorizer) != std::tie(r.repo_a, r.repo_b, r.vectorizer))
        return std::tie(l.repo_a, l.repo_b, l.vectorizer) < std::tie(r.repo_a, r.repo_b, r.vectorizer);
    return artifact_pair_order(l.kind_a, l.kind_b, r.kind_a, r.kind_b);
}

void SimilarityReport::sort_rows() { std::stable_sort(rows.begin(), rows.end(), row_order); }

SimilarityReport merge(const SimilarityReport& lhs, const SimilarityReport& rhs) {
    SimilarityReport out = lhs;
    out.rows.insert(out.rows.end(), rhs.rows.begin(), rhs.rows.end());
    out.sort_rows();
    auto pick = [](const std::string& a, const std::string& b) { return a == b ? a : std::string("mixed"); };
    out.metadata.tool_version = pick(lhs.metadata.tool_version, rhs.metadata.tool_version);
    out.metadata.timestamp = pick(lhs.metadata.timestamp, rhs.metadata.timestamp);
    out.metadata.pipeline_config_digest =
        pick(lhs.metadata.pipeline_config_digest, rhs.metadata.pipeline_config_digest);
    out.metadata.fit_scope = pick(lhs.metadata.fit_scope, rhs.metadata.fit_scope);
    out.metadata.aggregation = pick(lhs.metadata.aggregation, rhs.metadata.aggregation);
    auto& fp = out.metadata.corpora;
    fp.insert(fp.end(), rhs.metadata.corpora.begin(), rhs.metadata.corpora.end());
    std::sort(fp.begin(), fp.end(), [](const auto& l, const auto& r) {
        return std::tie(l.repo_name, l.digest) < std::tie(r.repo_name, r.digest);
    });
    fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
    return out;
}

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string score_header(std::string_view aggregation) {
    if (aggregation == "max") return "Highest Cosine Similarity";
    if (aggregation == "mean") return "Mean Cosine Similarity";
    if (aggregation.starts_with("topk:")) return "Top-" + std::string(aggregation.substr(5)) + " Mean Cosine Similarity";
    return "Cosine Similarity";
}

std::string artifact_label(const ReportRow& r) {
    return std::string(kind_label(r.kind_a)) + " (a) Vs " + std::string(kind_label(r.kind_b)) + " (b)";
}

}  // namespace

std::string render_table(const SimilarityReport& report) {
    constexpr std::size_t kArtifactWidth = 40;
    const std::string score = score_header(report.metadata.aggregation);
    const std::size_t score_width = std::max<std::size_t>(score.size(), 5) + 2;

    std::ostringstream out;
    const std::string header = "  " + pad("Artifacts", kArtifactWidth) + pad(score, score_width) +
                               pad("Matrix", 12) + "Zero pairs";
    out << header << '\n' << std::string(header.size(), '-') << '\n';

    const ReportRow* prev = nullptr;
    bool any_cross = false;
    for (const ReportRow& r : report.rows) {
        if (!prev || prev->repo_a != r.repo_a || prev->repo_b != r.repo_b || prev->vectorizer != r.vectorizer)
            out << '[' << vsm::mode_label(r.vectorizer) << "] " << r.repo_a << " (a) vs " << r.repo_b << " (b)\n";
        prev = &r;
        any_cross |= r.is_cross_artifact();
        const std::string shape = std::to_string(r.rows) + "x" + std::to_string(r.cols);
        out << (r.is_cross_artifact() ? "* " : "  ") << pad(artifact_label(r), kArtifactWidth)
            << pad(fixed(r.aggregate, 3), score_width) << pad(shape, 12) << r.zero_pairs << '\n';
    }

    if (any_cross) out << "\n(*) dissimilar-artifact comparison\n";
    try {
        const auto delta = similarity::vectorizer_delta(report);
        if (!delta.pairs.empty()) {
            out << "Count - Tf-idf: pairs=" << delta.pairs.size() << " mean delta=" << fixed(delta.mean_delta, 3)
                << " W=" << fixed(delta.test.statistic, 1) << " exact p=" << fixed(delta.test.p_value, 4) << '\n';
        }
    } catch (const Error&) {
        // rows do not pair up by vectorizer; no comparison line
    } catch (const std::invalid_argument&) {
        // too many pairs for the exact test
    }
    return out.str();
}

namespace {

ojson to_json(const SimilarityReport& report) {
    ojson j;
    j["format_version"] = kReportFormatVersion;
    ojson meta;
    meta["tool_version"] = report.metadata.tool_version;
    meta["timestamp"] = report.metadata.timestamp;
    meta["pipeline_config_digest"] = report.metadata.pipeline_config_digest;
    meta["fit_scope"] = report.metadata.fit_scope;
    meta["aggregation"] = report.metadata.aggregation;
    meta["corpora"] = ojson::array();
    for (const auto& c : report.metadata.corpora) {
        ojson e;
        e["repo_name"] = c.repo_name;
        e["digest"] = c.digest;
        meta["corpora"].push_back(std::move(e));
    }
    j["metadata"] = std::move(meta);
    j["rows"] = ojson::array();
    for (const ReportRow& r : report.rows) {
        ojson e;
        e["repo_a"] = r.repo_a;
        e["repo_b"] = r.repo_b;
        e["vectorizer"] = vsm::mode_name(r.vectorizer);
        e["kind_a"] = kind_name(r.kind_a);
        e["kind_b"] = kind_name(r.kind_b);
        e["aggregate"] = r.aggregate;
        e["rows"] = r.rows;
        e["cols"] = r.cols;
        e["zero_pairs"] = r.zero_pairs;
        j["rows"].push_back(std::move(e));
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

template <class T>
T field(const ojson& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ReportFormatError(std::string("missing key '") + key + "'");
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ReportFormatError(std::string("key '") + key + "' has the wrong type");
    }
}

}  // namespace

std::string emit_json(const SimilarityReport& report) { return to_json(report).dump(2) + "\n"; }

std::string emit_csv(const SimilarityReport& report) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const ReportRow& r : report.rows) {
        out += csv_field(r.repo_a) + ',' + csv_field(r.repo_b) + ',' + std::string(vsm::mode_name(r.vectorizer)) +
               ',' + std::string(kind_name(r.kind_a)) + ',' + std::string(kind_name(r.kind_b)) + ',' +
               fixed(r.aggregate, 6) + ',' + std::to_string(r.rows) + ',' + std::to_string(r.cols) + ',' +
               std::to_string(r.zero_pairs) + '\n';
    }
    return out;
}

SimilarityReport parse_json(std::string_view bytes) {
    ojson j;
    try {
        j = ojson::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ReportFormatError(e.what());
    }
    if (!j.is_object()) throw ReportFormatError("top level is not an object");
    if (field<int>(j, "format_version") != kReportFormatVersion) throw ReportFormatError("unsupported format_version");

    SimilarityReport report;
    const ojson meta = field<ojson>(j, "metadata");
    if (!meta.is_object()) throw ReportFormatError("metadata is not an object");
    report.metadata.tool_version = field<std::string>(meta, "tool_version");
    report.metadata.timestamp = field<std::string>(meta, "timestamp");
    report.metadata.pipeline_config_digest = field<std::string>(meta, "pipeline_config_digest");
    report.metadata.fit_scope = field<std::string>(meta, "fit_scope");
    report.metadata.aggregation = field<std::string>(meta, "aggregation");
    const ojson corpora = field<ojson>(meta, "corpora");
    if (!corpora.is_array()) throw ReportFormatError("metadata.corpora is not an array");
    for (const ojson& c : corpora)
        report.metadata.corpora.push_back({field<std::string>(c, "repo_name"), field<std::string>(c, "digest")});

    const ojson rows = field<ojson>(j, "rows");
    if (!rows.is_array()) throw ReportFormatError("rows is not an array");
    for (const ojson& e : rows) {
        ReportRow r;
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
        if (!(r.aggregate >= 0.0 && r.aggregate <= 1.0)) throw ReportFormatError("aggregate outside [0, 1]");
        r.rows = field<std::size_t>(e, "rows");
        r.cols = field<std::size_t>(e, "cols");
        r.zero_pairs = field<std::size_t>(e, "zero_pairs");
        report.rows.push_back(std::move(r));
    }
    return report;
}

}  // namespace reposim::report

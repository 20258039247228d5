// reposim: extract repository artifacts into corpora, compare corpora, and
// re-check the bundled fixtures.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "reposim/corpus_io.hpp"
#include "reposim/error.hpp"
#include "reposim/ingest.hpp"
#include "reposim/report.hpp"
#include "reposim/repro.hpp"
#include "reposim/similarity.hpp"

namespace fs = std::filesystem;
using namespace reposim;

namespace {

enum Exit : int { kOk = 0, kIoOrFormat = 1, kPlan = 2 };

struct ExtractArgs {
    std::string repo_path;
    std::string name;
    std::string commit_log;
    std::string extensions = "java,xml";
    std::string out;
};

struct CompareArgs {
    std::string a;
    std::string b;
    std::string pairs = "source:source,commits:commits,commits:source,readme:source";
    std::string vectorizer = "both";
    std::string fit = "pairwise";
    std::string agg = "max";
    std::string format = "table";
    std::string out;
    std::string dump_matrices;
    bool skip_missing = false;
    unsigned threads = 1;
};

struct ReproArgs {
    std::string fixtures = "fixtures";
    unsigned threads = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << bytes) || !out.flush()) throw std::ios_base::failure("cannot write " + path);
}

std::vector<std::pair<ArtifactKind, ArtifactKind>> parse_pairs(const std::string& text) {
    std::vector<std::pair<ArtifactKind, ArtifactKind>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, comma - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("bad --pairs entry '" + item + "': expected kindA:kindB");
        auto ka = parse_kind(item.substr(0, colon));
        auto kb = parse_kind(item.substr(colon + 1));
        if (!ka || !kb) throw UsageError("bad --pairs entry '" + item + "': kinds are readme, commits, source");
        std::pair<ArtifactKind, ArtifactKind> p{*ka, *kb};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        start = comma + 1;
    }
    return out;
}

std::vector<vsm::VectorizerMode> parse_vectorizers(const std::string& text) {
    if (text == "both") return {vsm::VectorizerMode::TfIdf, vsm::VectorizerMode::Count};
    if (auto m = vsm::parse_mode(text)) return {*m};
    throw UsageError("bad --vectorizer '" + text + "': expected tfidf, count or both");
}

int cmd_extract(const ExtractArgs& args) {
    ingest::RepoSnapshot snap;
    snap.root = args.repo_path;
    snap.repo_name = args.name;
    if (snap.repo_name.empty()) {
        fs::path p = fs::absolute(args.repo_path).lexically_normal();
        if (!p.has_filename()) p = p.parent_path();
        snap.repo_name = p.filename().string();
    }
    if (!args.commit_log.empty()) snap.commit_log_path = args.commit_log;
    snap.source_extensions = ingest::parse_extensions(args.extensions);

    ingest::IngestResult result;
    try {
        result = ingest::build_corpus(snap);
    } catch (const UnreadableRoot& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoOrFormat;
    }
    for (const auto& w : result.warnings) {
        std::cerr << "warning: ";
        if (w.kind) std::cerr << kind_name(*w.kind) << ": ";
        std::cerr << w.message << '\n';
    }
    write_output(args.out, save_corpus(result.corpora));

    std::ostream& info = (args.out.empty() || args.out == "-") ? std::cerr : std::cout;
    info << "repository: " << result.corpora.repo_name << '\n';
    for (ArtifactKind k : {ArtifactKind::SourceCode, ArtifactKind::Commits, ArtifactKind::Readme}) {
        const ArtifactCorpus* c = result.corpora.find(k);
        info << "  " << kind_name(k) << ": ";
        if (c) info << c->documents.size() << " document(s)\n";
        else info << "absent\n";
    }
    return kOk;
}

int cmd_compare(const CompareArgs& args) {
    const auto fit = similarity::parse_fit_scope(args.fit);
    if (!fit) throw UsageError("bad --fit '" + args.fit + "': expected pairwise or corpus");
    const auto agg = similarity::parse_aggregation(args.agg);
    if (!agg) throw UsageError("bad --agg '" + args.agg + "': expected max, mean or topk:<k>");
    if (args.format != "table" && args.format != "json" && args.format != "csv")
        throw UsageError("bad --format '" + args.format + "': expected table, json or csv");
    const auto pairs = parse_pairs(args.pairs);
    const auto modes = parse_vectorizers(args.vectorizer);

    CorpusSet a, b;
    try {
        a = load_corpus(read_file(args.a));
        b = load_corpus(read_file(args.b));
    } catch (const CorpusFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoOrFormat;
    }

    std::vector<similarity::ComparisonPlan> plans;
    for (auto mode : modes) {
        for (const auto& [ka, kb] : pairs) {
            const char* missing_repo = !a.find(ka) ? a.repo_name.c_str() : !b.find(kb) ? b.repo_name.c_str() : nullptr;
            if (missing_repo) {
                const ArtifactKind k = !a.find(ka) ? ka : kb;
                const MissingArtifact err(std::string(kind_name(k)), missing_repo);
                if (!args.skip_missing) {
                    std::cerr << "error: " << err.what() << " (use --skip-missing to skip this pair)\n";
                    return kPlan;
                }
                std::cerr << "warning: " << err.what() << "; skipping " << vsm::mode_name(mode) << ' '
                          << kind_name(ka) << ':' << kind_name(kb) << '\n';
                continue;
            }
            plans.push_back({ka, kb, mode, *fit, *agg});
        }
    }

    const auto result = similarity::run_experiment(a, b, plans, text::PipelineConfig{}, {args.threads});
    std::string bytes;
    if (args.format == "json") bytes = report::emit_json(result.report);
    else if (args.format == "csv") bytes = report::emit_csv(result.report);
    else bytes = report::render_table(result.report);
    write_output(args.out, bytes);
    if (!args.dump_matrices.empty()) write_output(args.dump_matrices, similarity::emit_matrix_dump(result));
    return kOk;
}

int cmd_repro(const ReproArgs& args) {
    repro::Outcome outcome;
    try {
        outcome = repro::run(args.fixtures, {args.threads});
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoOrFormat;
    }
    std::cout << report::render_table(outcome.report) << '\n' << repro::render_checks(outcome.checks);
    if (!outcome.all_pass()) {
        std::cerr << "error: fixture results differ from " << (fs::path(args.fixtures) / repro::kExpectedFile).string()
                  << '\n';
        return kIoOrFormat;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repository similarity from source code, commit messages and READMEs"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(report::tool_version()));

    ExtractArgs ex;
    auto* extract = app.add_subcommand("extract", "Build a corpus file from a repository checkout");
    extract->add_option("repo_path", ex.repo_path, "Repository root")->required();
    extract->add_option("--name", ex.name, "Repository name (default: directory name)");
    extract->add_option("--commit-log", ex.commit_log, "Commit log exported with git log");
    extract->add_option("--extensions", ex.extensions, "Comma-separated source extensions")->capture_default_str();
    extract->add_option("--out", ex.out, "Corpus file to write (default: stdout)");

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Compare two corpus files");
    compare->add_option("--a", cmp.a, "Corpus file of repository A")->required();
    compare->add_option("--b", cmp.b, "Corpus file of repository B")->required();
    compare->add_option("--pairs", cmp.pairs, "Artifact pairs kindA:kindB,...")->capture_default_str();
    compare->add_option("--vectorizer", cmp.vectorizer, "tfidf, count or both")->capture_default_str();
    compare->add_option("--fit", cmp.fit, "pairwise or corpus")->capture_default_str();
    compare->add_option("--agg", cmp.agg, "max, mean or topk:<k>")->capture_default_str();
    compare->add_option("--format", cmp.format, "table, json or csv")->capture_default_str();
    compare->add_option("--out", cmp.out, "Report file to write (default: stdout)");
    compare->add_option("--dump-matrices", cmp.dump_matrices, "Also write every similarity matrix as JSON");
    compare->add_flag("--skip-missing", cmp.skip_missing, "Skip pairs whose artifact kind is absent");
    compare->add_option("--threads", cmp.threads, "Worker threads, 0 = all cores")->capture_default_str();

    ReproArgs rep;
    auto* repro_cmd = app.add_subcommand("repro", "Re-run the bundled fixture experiment");
    repro_cmd->add_option("--fixtures", rep.fixtures, "Fixture directory")->capture_default_str();
    repro_cmd->add_option("--threads", rep.threads, "Worker threads, 0 = all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kPlan;
    }

    try {
        if (*extract) return cmd_extract(ex);
        if (*compare) return cmd_compare(cmp);
        return cmd_repro(rep);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPlan;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoOrFormat;
    }
}

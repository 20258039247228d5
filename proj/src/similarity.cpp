#include "reposim/similarity.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "reposim/corpus_io.hpp"
#include "reposim/digest.hpp"
#include "reposim/error.hpp"
#include "reposim/kernels.hpp"


namespace reposim::similarity {

std::string_view fit_scope_name(FitScope scope) {
    return scope == FitScope::Pairwise ? "pairwise" : "corpus";
}

std::optional<FitScope> parse_fit_scope(std::string_view name) {
    if (name == "pairwise") return FitScope::Pairwise;
    if (name == "corpus") return FitScope::Corpus;
    return std::nullopt;
}

Aggregation Aggregation::top_k_mean(std::size_t k) {
    if (k < 1) throw std::invalid_argument("TopKMean requires k >= 1");
    return {Kind::TopKMean, k};
}

std::string Aggregation::name() const {
    switch (kind) {
        case Kind::Max: return "max";
        case Kind::Mean: return "mean";
        case Kind::TopKMean: return "topk:" + std::to_string(k);
    }
    return "unknown";
}

std::optional<Aggregation> parse_aggregation(std::string_view text) {
    if (text == "max") return Aggregation::max();
    if (text == "mean") return Aggregation::mean();
    constexpr std::string_view kTopK = "topk:";
    if (!text.starts_with(kTopK)) return std::nullopt;
    const std::string_view digits = text.substr(kTopK.size());
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < 1) return std::nullopt;
    return Aggregation::top_k_mean(k);
}

std::vector<ComparisonPlan> default_plans(FitScope fit, Aggregation agg) {
    using K = ArtifactKind;
    constexpr std::array<std::pair<K, K>, 4> pairs{{{K::SourceCode, K::SourceCode},
                                                    {K::Commits, K::Commits},
                                                    {K::Commits, K::SourceCode},
                                                    {K::Readme, K::SourceCode}}};
    std::vector<ComparisonPlan> plans;
    for (vsm::VectorizerMode mode : {vsm::VectorizerMode::TfIdf, vsm::VectorizerMode::Count})
        for (auto [a, b] : pairs) plans.push_back({a, b, mode, fit, agg});
    return plans;
}

double cosine(const vsm::WeightedVector& lhs, const vsm::WeightedVector& rhs) {
    if (lhs.dim != rhs.dim) throw DimensionMismatch(lhs.dim, rhs.dim);
    if (lhs.norm_sq == 0.0 || rhs.norm_sq == 0.0) return 0.0;

    // Products are accumulated by position in u with the kernels' lane order,
    // so cosine(u, u) reproduces u.norm_sq exactly. u is the lexicographically
    // smaller operand, which makes the result bitwise symmetric.
    const bool swap = std::tie(rhs.indices, rhs.weights) < std::tie(lhs.indices, lhs.weights);
    const vsm::WeightedVector& u = swap ? rhs : lhs;
    const vsm::WeightedVector& v = swap ? lhs : rhs;
    const std::size_t n = u.nnz();
    const std::size_t body = n - n % kernels::kLanes;
    std::array<double, kernels::kLanes> acc{};
    std::array<double, kernels::kLanes> tail{};
    std::size_t tail_len = 0;
    for (std::size_t i = 0, j = 0; i < n && j < v.nnz();) {
        if (u.indices[i] < v.indices[j]) {
            ++i;
        } else if (v.indices[j] < u.indices[i]) {
            ++j;
        } else {
            const double p = u.weights[i] * v.weights[j];
            if (i < body) acc[i % kernels::kLanes] += p;
            else tail[tail_len++] = p;
            ++i;
            ++j;
        }
    }
    double dot = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t t = 0; t < tail_len; ++t) dot += tail[t];

    const double c = dot / std::sqrt(u.norm_sq * v.norm_sq);
    return std::clamp(c, 0.0, 1.0);
}

namespace {

// Documents as sorted (term id, weight) lists over a shared, lexicographically
// ordered term table.
struct SparseDoc {
    std::vector<std::uint32_t> idx;
    std::vector<double> val;
    double norm_sq = 0.0;
    bool empty() const { return idx.empty(); }
};

struct Interned {
    std::size_t n_terms = 0;
    std::vector<SparseDoc> a;
    std::vector<SparseDoc> b;
};

Interned intern(const std::vector<text::TokenDocument>& docs_a, const std::vector<text::TokenDocument>& docs_b) {
    std::vector<std::string_view> terms;
    for (const auto* docs : {&docs_a, &docs_b})
        for (const auto& d : *docs) terms.insert(terms.end(), d.tokens.begin(), d.tokens.end());
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

    std::unordered_map<std::string_view, std::uint32_t> id;
    id.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) id.emplace(terms[i], static_cast<std::uint32_t>(i));

    auto convert = [&](const text::TokenDocument& d) {
        std::vector<std::uint32_t> hits;
        hits.reserve(d.tokens.size());
        for (const auto& t : d.tokens) hits.push_back(id.at(t));
        std::sort(hits.begin(), hits.end());
        SparseDoc s;
        for (std::size_t i = 0; i < hits.size();) {
            std::size_t j = i;
            while (j < hits.size() && hits[j] == hits[i]) ++j;
            s.idx.push_back(hits[i]);
            s.val.push_back(static_cast<double>(j - i));
            i = j;
        }
        s.norm_sq = kernels::sum_squares(s.val);
        return s;
    };

    Interned out;
    out.n_terms = terms.size();
    for (const auto& d : docs_a) out.a.push_back(convert(d));
    for (const auto& d : docs_b) out.b.push_back(convert(d));
    return out;
}

// Replaces counts with unit-norm tf-idf weights fitted on all documents of both sides.
void apply_corpus_tfidf(Interned& in) {
    std::vector<std::uint32_t> df(in.n_terms, 0);
    for (const auto* side : {&in.a, &in.b})
        for (const SparseDoc& d : *side)
            for (std::uint32_t t : d.idx) ++df[t];
    const std::size_t n_docs = in.a.size() + in.b.size();
    std::vector<double> idf(in.n_terms);
    for (std::size_t t = 0; t < in.n_terms; ++t) idf[t] = vsm::idf(n_docs, df[t]);

    for (auto* side : {&in.a, &in.b}) {
        for (SparseDoc& d : *side) {
            for (std::size_t i = 0; i < d.idx.size(); ++i) d.val[i] *= idf[d.idx[i]];
            const double norm = std::sqrt(kernels::sum_squares(d.val));
            if (norm > 0.0) kernels::scale(d.val, 1.0 / norm);
            d.norm_sq = kernels::sum_squares(d.val);
        }
    }
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
    unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Calls fn(begin, end) on contiguous chunks of [0, n), one per thread.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn fn) {
    threads = resolve_threads(threads, n);
    if (threads <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t begin = 0; begin < n; begin += chunk)
        pool.emplace_back([=, &fn] { fn(begin, std::min(n, begin + chunk)); });
}

}  // namespace

SimilarityMatrix compare_tokens(const std::vector<text::TokenDocument>& docs_a,
                                const std::vector<text::TokenDocument>& docs_b, vsm::VectorizerMode mode,
                                FitScope fit, const ExecutionOptions& exec) {
    SimilarityMatrix m;
    for (const auto& d : docs_a) m.row_ids.push_back(d.doc_id);
    for (const auto& d : docs_b) m.col_ids.push_back(d.doc_id);
    m.scores.assign(docs_a.size() * docs_b.size(), 0.0);
    if (m.scores.empty()) return m;

    Interned in = intern(docs_a, docs_b);
    const bool corpus_tfidf = mode == vsm::VectorizerMode::TfIdf && fit == FitScope::Corpus;
    const bool pairwise_tfidf = mode == vsm::VectorizerMode::TfIdf && fit == FitScope::Pairwise;
    if (corpus_tfidf) apply_corpus_tfidf(in);

    // A term present in only one of the two pair documents: df = 1 of n = 2.
    const double lone = vsm::idf(2, 1);
    const double lone_sq = lone * lone;
    const std::size_t cols = docs_b.size();

    parallel_chunks(docs_a.size(), exec.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> dense(in.n_terms, 0.0);
        for (std::size_t r = begin; r < end; ++r) {
            const SparseDoc& a = in.a[r];
            if (a.empty()) continue;
            for (std::size_t i = 0; i < a.idx.size(); ++i) dense[a.idx[i]] = a.val[i];
            for (std::size_t c = 0; c < cols; ++c) {
                const SparseDoc& b = in.b[c];
                if (b.empty()) continue;
                double score = 0.0;
                if (pairwise_tfidf) {
                    // Shared terms have idf 1; the rest carry idf(2, 1).
                    const kernels::SharedMoments mo = kernels::gather_shared_moments(b.idx, b.val, dense);
                    if (mo.dot > 0.0) {
                        const double na = mo.dense_sq + lone_sq * (a.norm_sq - mo.dense_sq);
                        const double nb = mo.shared_vals_sq + lone_sq * (b.norm_sq - mo.shared_vals_sq);
                        score = mo.dot / std::sqrt(na * nb);
                    }
                } else {
                    const double dot = kernels::gather_dot(b.idx, b.val, dense);
                    if (dot > 0.0) score = dot / std::sqrt(a.norm_sq * b.norm_sq);
                }
                m.scores[r * cols + c] = std::clamp(score, 0.0, 1.0);
            }
            for (std::uint32_t t : a.idx) dense[t] = 0.0;
        }
    });

    m.zero_pair_count = static_cast<std::size_t>(std::count(m.scores.begin(), m.scores.end(), 0.0));
    return m;
}

namespace {

std::vector<text::TokenDocument> preprocess_all(const ArtifactCorpus& corpus, const text::PipelineConfig& cfg,
                                                unsigned threads) {
    std::vector<text::TokenDocument> out(corpus.documents.size());
    parallel_chunks(out.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = text::preprocess(corpus.documents[i], cfg);
    });
    return out;
}

}  // namespace

SimilarityMatrix compare_pair(const ArtifactCorpus& corpus_a, const ArtifactCorpus& corpus_b,
                              const ComparisonPlan& plan, const text::PipelineConfig& cfg,
                              const ExecutionOptions& exec) {
    if (corpus_a.kind != plan.kind_a || corpus_b.kind != plan.kind_b)
        throw std::invalid_argument("corpus kinds do not match the comparison plan");
    cfg.validate();
    return compare_tokens(preprocess_all(corpus_a, cfg, exec.threads), preprocess_all(corpus_b, cfg, exec.threads),
                          plan.mode, plan.fit_scope, exec);
}

double aggregate(const SimilarityMatrix& matrix, const Aggregation& aggregation) {
    if (matrix.scores.empty()) throw EmptyMatrix();
    const auto& s = matrix.scores;
    switch (aggregation.kind) {
        case Aggregation::Kind::Max:
            return *std::max_element(s.begin(), s.end());
        case Aggregation::Kind::Mean:
            return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
        case Aggregation::Kind::TopKMean: {
            if (aggregation.k < 1) throw std::invalid_argument("TopKMean requires k >= 1");
            const std::size_t k = std::min(aggregation.k, s.size());
            std::vector<double> sorted(s);
            std::partial_sort(sorted.begin(), sorted.begin() + static_cast<long>(k), sorted.end(),
                              std::greater<>());
            return std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(k), 0.0) /
                   static_cast<double>(k);
        }
    }
    throw std::logic_error("unknown aggregation");
}

std::string corpus_fingerprint(const CorpusSet& set) { return fnv1a64_hex(save_corpus(set)); }

ExperimentResult run_experiment(const CorpusSet& repo_a, const CorpusSet& repo_b,
                                const std::vector<ComparisonPlan>& plans, const text::PipelineConfig& cfg,
                                const ExecutionOptions& exec) {
    cfg.validate();
    ExperimentResult result;

    std::map<std::pair<int, ArtifactKind>, std::vector<text::TokenDocument>> cache;
    auto tokens = [&](int side, const ArtifactCorpus& corpus) -> const std::vector<text::TokenDocument>& {
        auto key = std::make_pair(side, corpus.kind);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, preprocess_all(corpus, cfg, exec.threads)).first;
        return it->second;
    };

    std::vector<std::pair<report::ReportRow, SimilarityMatrix>> rows;
    for (const ComparisonPlan& plan : plans) {
        const ArtifactCorpus* a = repo_a.find(plan.kind_a);
        const ArtifactCorpus* b = repo_b.find(plan.kind_b);
        if (!a) {
            result.missing.emplace_back(std::string(kind_name(plan.kind_a)), repo_a.repo_name);
            continue;
        }
        if (!b) {
            result.missing.emplace_back(std::string(kind_name(plan.kind_b)), repo_b.repo_name);
            continue;
        }
        SimilarityMatrix matrix = compare_tokens(tokens(0, *a), tokens(1, *b), plan.mode, plan.fit_scope, exec);
        report::ReportRow row;
        row.repo_a = repo_a.repo_name;
        row.repo_b = repo_b.repo_name;
        row.vectorizer = plan.mode;
        row.kind_a = plan.kind_a;
        row.kind_b = plan.kind_b;
        row.aggregate = aggregate(matrix, plan.aggregation);
        row.rows = matrix.rows();
        row.cols = matrix.cols();
        row.zero_pairs = matrix.zero_pair_count;
        rows.emplace_back(std::move(row), std::move(matrix));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& l, const auto& r) { return report::row_order(l.first, r.first); });
    for (auto& [row, matrix] : rows) {
        result.report.rows.push_back(std::move(row));
        result.matrices.push_back(std::move(matrix));
    }

    report::Metadata& meta = result.report.metadata;
    meta.tool_version = std::string(report::tool_version());
    meta.pipeline_config_digest = text::config_digest(cfg);
    auto uniform = [&](auto get) -> std::string {
        if (plans.empty()) return "";
        const std::string first = get(plans.front());
        for (const auto& p : plans)
            if (get(p) != first) return "mixed";
        return first;
    };
    meta.fit_scope = uniform([](const ComparisonPlan& p) { return std::string(fit_scope_name(p.fit_scope)); });
    meta.aggregation = uniform([](const ComparisonPlan& p) { return p.aggregation.name(); });
    meta.corpora.push_back({repo_a.repo_name, corpus_fingerprint(repo_a)});
    meta.corpora.push_back({repo_b.repo_name, corpus_fingerprint(repo_b)});
    std::sort(meta.corpora.begin(), meta.corpora.end(),
              [](const auto& l, const auto& r) { return std::tie(l.repo_name, l.digest) < std::tie(r.repo_name, r.digest); });
    meta.corpora.erase(std::unique(meta.corpora.begin(), meta.corpora.end()), meta.corpora.end());
    return result;
}

}  // namespace reposim::similarity

#include "reposim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "reposim/error.hpp"

namespace reposim::similarity {

SignedRankResult wilcoxon_signed_rank(std::span<const double> differences) {
    std::vector<double> d;
    for (double x : differences)
        if (std::abs(x) > kZeroDifference) d.push_back(x);
    if (d.size() > kMaxExactPairs)
        throw std::invalid_argument("exact signed-rank test supports at most 25 nonzero differences");

    SignedRankResult res;
    res.n = d.size();
    if (d.empty()) return res;  // degenerate: W = 0, p = 1

    std::sort(d.begin(), d.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });

    // Ranks are doubled so that tied (averaged) ranks stay integral.
    std::vector<std::uint32_t> rank2(d.size());
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i + 1;
        while (j < d.size() && std::abs(d[j]) - std::abs(d[i]) <= kZeroDifference) ++j;
        const auto r = static_cast<std::uint32_t>(i + j + 1);  // 2 * mean of ranks i+1 .. j
        for (std::size_t k = i; k < j; ++k) rank2[k] = r;
        i = j;
    }

    std::uint64_t plus2 = 0;
    std::uint64_t total2 = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        total2 += rank2[i];
        if (d[i] > 0) plus2 += rank2[i];
    }

    // ways[s]: sign assignments whose doubled positive rank sum is s.
    std::vector<std::uint64_t> ways(total2 + 1, 0);
    ways[0] = 1;
    std::uint64_t reach = 0;
    for (std::uint32_t r : rank2) {
        for (std::uint64_t s = reach + 1; s-- > 0;)
            if (ways[s]) ways[s + r] += ways[s];
        reach += r;
    }

    const std::uint64_t stat2 = std::min(plus2, total2 - plus2);
    std::uint64_t extreme = 0;
    for (std::uint64_t s = 0; s <= total2; ++s)
        if (std::min(s, total2 - s) <= stat2) extreme += ways[s];

    res.w_plus = static_cast<double>(plus2) / 2.0;
    res.w_minus = static_cast<double>(total2 - plus2) / 2.0;
    res.statistic = static_cast<double>(stat2) / 2.0;
    res.extreme_count = extreme;
    res.p_value = static_cast<double>(extreme) / std::ldexp(1.0, static_cast<int>(d.size()));
    return res;
}

namespace {

using PairKey = std::tuple<std::string, std::string, ArtifactKind, ArtifactKind>;

struct PairKeyLess {
    bool operator()(const PairKey& l, const PairKey& r) const {
        if (std::tie(std::get<0>(l), std::get<1>(l)) != std::tie(std::get<0>(r), std::get<1>(r)))
            return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
        return report::artifact_pair_order(std::get<2>(l), std::get<3>(l), std::get<2>(r), std::get<3>(r));
    }
};

std::map<PairKey, double, PairKeyLess> index_rows(std::span<const report::ReportRow> rows, vsm::VectorizerMode mode) {
    std::map<PairKey, double, PairKeyLess> out;
    for (const report::ReportRow& r : rows) {
        if (r.vectorizer != mode)
            throw PairingMismatch("row for " + r.repo_a + "/" + r.repo_b + " has vectorizer " +
                                  std::string(vsm::mode_name(r.vectorizer)) + ", expected " +
                                  std::string(vsm::mode_name(mode)));
        if (!out.emplace(PairKey{r.repo_a, r.repo_b, r.kind_a, r.kind_b}, r.aggregate).second)
            throw PairingMismatch("duplicate row for " + r.repo_a + "/" + r.repo_b + " " +
                                  std::string(kind_name(r.kind_a)) + ":" + std::string(kind_name(r.kind_b)));
    }
    return out;
}

}  // namespace

VectorizerDelta vectorizer_delta(std::span<const report::ReportRow> tfidf_rows,
                                 std::span<const report::ReportRow> count_rows) {
    const auto tfidf = index_rows(tfidf_rows, vsm::VectorizerMode::TfIdf);
    const auto count = index_rows(count_rows, vsm::VectorizerMode::Count);
    if (tfidf.size() != count.size())
        throw PairingMismatch(std::to_string(tfidf.size()) + " tf-idf rows vs " + std::to_string(count.size()) +
                              " count rows");

    VectorizerDelta out;
    std::vector<double> deltas;
    for (const auto& [key, t] : tfidf) {
        auto it = count.find(key);
        if (it == count.end())
            throw PairingMismatch("no count row for " + std::get<0>(key) + "/" + std::get<1>(key) + " " +
                                  std::string(kind_name(std::get<2>(key))) + ":" +
                                  std::string(kind_name(std::get<3>(key))));
        PairedDelta p{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), t, it->second,
                      it->second - t};
        deltas.push_back(p.delta);
        out.pairs.push_back(std::move(p));
    }
    if (!deltas.empty())
        out.mean_delta = std::accumulate(deltas.begin(), deltas.end(), 0.0) / static_cast<double>(deltas.size());
    out.test = wilcoxon_signed_rank(deltas);
    return out;
}

VectorizerDelta vectorizer_delta(const report::SimilarityReport& report) {
    std::vector<report::ReportRow> tfidf, count;
    for (const auto& r : report.rows) (r.vectorizer == vsm::VectorizerMode::TfIdf ? tfidf : count).push_back(r);
    return vectorizer_delta(tfidf, count);
}

}  // namespace reposim::similarity

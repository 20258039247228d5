#pragma once

// Dense, naive reference implementations used only by tests.
// Nothing here calls into the library's vsm, similarity or kernels code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Doc = std::vector<std::string>;

struct DenseVocab {
    std::vector<std::string> terms;  // sorted
    std::vector<int> df;
    int n_docs = 0;
};

inline DenseVocab fit(const std::vector<Doc>& docs) {
    std::set<std::string> all;
    for (const Doc& d : docs) all.insert(d.begin(), d.end());
    DenseVocab v;
    v.terms.assign(all.begin(), all.end());
    v.n_docs = static_cast<int>(docs.size());
    for (const std::string& t : v.terms) {
        int df = 0;
        for (const Doc& d : docs)
            if (std::find(d.begin(), d.end(), t) != d.end()) ++df;
        v.df.push_back(df);
    }
    return v;
}

inline std::vector<double> counts(const Doc& doc, const DenseVocab& v) {
    std::vector<double> out(v.terms.size(), 0.0);
    for (std::size_t i = 0; i < v.terms.size(); ++i)
        out[i] = static_cast<double>(std::count(doc.begin(), doc.end(), v.terms[i]));
    return out;
}

inline double smoothed_idf(int n, int df) { return 1.0 + std::log(double(n + 1) / double(df + 1)); }

inline std::vector<double> tfidf(const Doc& doc, const DenseVocab& v) {
    std::vector<double> out = counts(doc, v);
    double ss = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= smoothed_idf(v.n_docs, v.df[i]);
        ss += out[i] * out[i];
    }
    if (ss > 0.0) {
        const double norm = std::sqrt(ss);
        for (double& x : out) x /= norm;
    }
    return out;
}

inline double cosine(const std::vector<double>& u, const std::vector<double>& v) {
    double dot = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) return 0.0;
    return dot / (std::sqrt(uu) * std::sqrt(vv));
}

/// mode: 0 = tf-idf, 1 = count. corpus_fit: fit once on all docs of A and B.
inline std::vector<double> compare(const std::vector<Doc>& a, const std::vector<Doc>& b, int mode, bool corpus_fit) {
    std::vector<double> scores;
    std::vector<Doc> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const DenseVocab global = fit(all);
    for (const Doc& x : a) {
        for (const Doc& y : b) {
            const DenseVocab v = corpus_fit ? global : fit({x, y});
            if (v.terms.empty()) {
                scores.push_back(0.0);
                continue;
            }
            auto vx = mode == 0 ? tfidf(x, v) : counts(x, v);
            auto vy = mode == 0 ? tfidf(y, v) : counts(y, v);
            scores.push_back(cosine(vx, vy));
        }
    }
    return scores;
}

inline double max_of(const std::vector<double>& s) { return *std::max_element(s.begin(), s.end()); }

inline double mean_of(const std::vector<double>& s) {
    double sum = 0.0;
    for (double x : s) sum += x;
    return sum / double(s.size());
}

/// Exact two-sided signed-rank p-value by enumerating all 2^n sign flips of
/// |d|. Zero differences are dropped; ties share their average rank.
struct Enumerated {
    double statistic = 0.0;
    std::uint64_t extreme = 0;
    double p = 1.0;
};

inline Enumerated signed_rank_enumerate(const std::vector<double>& diffs) {
    std::vector<double> d;
    for (double x : diffs)
        if (std::abs(x) > 1e-12) d.push_back(x);
    const std::size_t n = d.size();
    if (n == 0) return {};
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        int less = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double diff = std::abs(d[j]) - std::abs(d[i]);
            if (std::abs(diff) <= 1e-12) ++equal;
            else if (diff < 0) ++less;
        }
        rank[i] = less + (equal + 1) / 2.0;
    }
    auto min_w = [&](std::uint64_t positive_mask) {
        double wp = 0.0, wm = 0.0;
        for (std::size_t i = 0; i < n; ++i) ((positive_mask >> i) & 1u ? wp : wm) += rank[i];
        return std::min(wp, wm);
    };
    std::uint64_t observed = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] > 0) observed |= std::uint64_t{1} << i;
    Enumerated e;
    e.statistic = min_w(observed);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (min_w(m) <= e.statistic) ++e.extreme;
    e.p = double(e.extreme) / double(std::uint64_t{1} << n);
    return e;
}

}  // namespace oracle

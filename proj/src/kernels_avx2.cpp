// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <array>
#include <cassert>

#include "reposim/kernels.hpp"

namespace reposim::kernels::avx2 {

namespace {

inline double combine(__m256d acc) {
    alignas(32) std::array<double, 4> lanes;
    _mm256_store_pd(lanes.data(), acc);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

inline __m256d gather4(const double* base, const std::uint32_t* idx) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
    return _mm256_i32gather_pd(base, vi, 8);
}

}  // namespace

double sum_squares(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d v = _mm256_loadu_pd(x.data() + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double sum = combine(acc);
    for (std::size_t i = body; i < n; ++i) sum += x[i] * x[i];
    return sum;
}

void scale(std::span<double> x, double factor) {
    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    const __m256d f = _mm256_set1_pd(factor);
    for (std::size_t i = 0; i < body; i += kLanes)
        _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i), f));
    for (std::size_t i = body; i < n; ++i) x[i] *= factor;
}

double gather_dot(std::span<const std::uint32_t> idx, std::span<const double> vals,
                  std::span<const double> dense) {
    assert(idx.size() == vals.size());
    const std::size_t n = idx.size();
    const std::size_t body = n - n % kLanes;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d d = gather4(dense.data(), idx.data() + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(vals.data() + i), d));
    }
    double sum = combine(acc);
    for (std::size_t i = body; i < n; ++i) sum += vals[i] * dense[idx[i]];
    return sum;
}

SharedMoments gather_shared_moments(std::span<const std::uint32_t> idx,
                                    std::span<const double> vals, std::span<const double> dense) {
    assert(idx.size() == vals.size());
    const std::size_t n = idx.size();
    const std::size_t body = n - n % kLanes;
    const __m256d zero = _mm256_setzero_pd();
    __m256d dot = zero, dsq = zero, vsq = zero;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d d = gather4(dense.data(), idx.data() + i);
        const __m256d v = _mm256_loadu_pd(vals.data() + i);
        const __m256d shared = _mm256_cmp_pd(d, zero, _CMP_NEQ_OQ);
        dot = _mm256_add_pd(dot, _mm256_mul_pd(v, d));
        dsq = _mm256_add_pd(dsq, _mm256_mul_pd(d, d));
        vsq = _mm256_add_pd(vsq, _mm256_and_pd(shared, _mm256_mul_pd(v, v)));
    }
    SharedMoments m{combine(dot), combine(dsq), combine(vsq)};
    for (std::size_t i = body; i < n; ++i) {
        const double d = dense[idx[i]];
        const double v = vals[i];
        m.dot += v * d;
        m.dense_sq += d * d;
        m.shared_vals_sq += d != 0.0 ? v * v : 0.0;
    }
    return m;
}

}  // namespace reposim::kernels::avx2

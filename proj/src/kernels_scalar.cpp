#include <array>
#include <cassert>

#include "reposim/kernels.hpp"

namespace reposim::kernels::scalar {

namespace {

double combine(const std::array<double, kLanes>& acc) { return (acc[0] + acc[1]) + (acc[2] + acc[3]); }

}  // namespace

double sum_squares(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    std::array<double, kLanes> acc{};
    for (std::size_t i = 0; i < body; i += kLanes)
        for (std::size_t l = 0; l < kLanes; ++l) acc[l] += x[i + l] * x[i + l];
    double sum = combine(acc);
    for (std::size_t i = body; i < n; ++i) sum += x[i] * x[i];
    return sum;
}

void scale(std::span<double> x, double factor) {
    for (double& v : x) v *= factor;
}

double gather_dot(std::span<const std::uint32_t> idx, std::span<const double> vals,
                  std::span<const double> dense) {
    assert(idx.size() == vals.size());
    const std::size_t n = idx.size();
    const std::size_t body = n - n % kLanes;
    std::array<double, kLanes> acc{};
    for (std::size_t i = 0; i < body; i += kLanes)
        for (std::size_t l = 0; l < kLanes; ++l) acc[l] += vals[i + l] * dense[idx[i + l]];
    double sum = combine(acc);
    for (std::size_t i = body; i < n; ++i) sum += vals[i] * dense[idx[i]];
    return sum;
}

SharedMoments gather_shared_moments(std::span<const std::uint32_t> idx,
                                    std::span<const double> vals, std::span<const double> dense) {
    assert(idx.size() == vals.size());
    const std::size_t n = idx.size();
    const std::size_t body = n - n % kLanes;
    std::array<double, kLanes> dot{}, dsq{}, vsq{};
    for (std::size_t i = 0; i < body; i += kLanes) {
        for (std::size_t l = 0; l < kLanes; ++l) {
            const double d = dense[idx[i + l]];
            const double v = vals[i + l];
            dot[l] += v * d;
            dsq[l] += d * d;
            vsq[l] += d != 0.0 ? v * v : 0.0;
        }
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

}  // namespace reposim::kernels::scalar

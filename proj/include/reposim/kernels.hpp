#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops of the vector space model.
//
// Every reduction uses the same summation order regardless of ISA: four
// lanes accumulate elements i with i % 4 == lane over the largest multiple of
// four, the lanes combine as (l0 + l1) + (l2 + l3), and the remaining tail
// elements are added in index order. Scalar and SIMD variants therefore agree
// bit for bit, so results never depend on the host CPU.

namespace reposim::kernels {

inline constexpr std::size_t kLanes = 4;

/// Sums over the entries of a sparse vector `(idx, vals)` gathered against a
/// dense vector `dense` (dense[idx[i]]).
struct SharedMoments {
    double dot = 0.0;             // sum vals[i] * dense[idx[i]]
    double dense_sq = 0.0;        // sum dense[idx[i]]^2
    double shared_vals_sq = 0.0;  // sum vals[i]^2 where dense[idx[i]] != 0
};

struct KernelTable {
    double (*sum_squares)(std::span<const double> x);
    void (*scale)(std::span<double> x, double factor);
    double (*gather_dot)(std::span<const std::uint32_t> idx, std::span<const double> vals,
                         std::span<const double> dense);
    SharedMoments (*gather_shared_moments)(std::span<const std::uint32_t> idx,
                                           std::span<const double> vals,
                                           std::span<const double> dense);
};

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// The table for a specific ISA; throws std::runtime_error if unavailable.
const KernelTable& table(Isa isa);

/// The table selected at startup (best available ISA), or the override.
const KernelTable& active();
Isa active_isa();

/// Forces an ISA for the whole process (tests and benchmarking).
void set_active_isa(Isa isa);

inline double sum_squares(std::span<const double> x) { return active().sum_squares(x); }
inline void scale(std::span<double> x, double factor) { active().scale(x, factor); }
inline double gather_dot(std::span<const std::uint32_t> idx, std::span<const double> vals,
                         std::span<const double> dense) {
    return active().gather_dot(idx, vals, dense);
}
inline SharedMoments gather_shared_moments(std::span<const std::uint32_t> idx,
                                           std::span<const double> vals,
                                           std::span<const double> dense) {
    return active().gather_shared_moments(idx, vals, dense);
}

namespace scalar {
double sum_squares(std::span<const double> x);
void scale(std::span<double> x, double factor);
double gather_dot(std::span<const std::uint32_t> idx, std::span<const double> vals,
                  std::span<const double> dense);
SharedMoments gather_shared_moments(std::span<const std::uint32_t> idx,
                                    std::span<const double> vals, std::span<const double> dense);
}  // namespace scalar

#if defined(REPOSIM_HAVE_AVX2)
namespace avx2 {
double sum_squares(std::span<const double> x);
void scale(std::span<double> x, double factor);
double gather_dot(std::span<const std::uint32_t> idx, std::span<const double> vals,
                  std::span<const double> dense);
SharedMoments gather_shared_moments(std::span<const std::uint32_t> idx,
                                    std::span<const double> vals, std::span<const double> dense);
}  // namespace avx2
#endif

}  // namespace reposim::kernels

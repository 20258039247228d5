#include <atomic>
#include <stdexcept>
#include <string>

#include "reposim/kernels.hpp"

namespace reposim::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::sum_squares, &scalar::scale, &scalar::gather_dot,
                              &scalar::gather_shared_moments};
#if defined(REPOSIM_HAVE_AVX2)
constexpr KernelTable kAvx2{&avx2::sum_squares, &avx2::scale, &avx2::gather_dot,
                            &avx2::gather_shared_moments};
#endif

Isa detect() {
#if defined(REPOSIM_HAVE_AVX2)
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

struct Selection {
    std::atomic<Isa> isa;
    std::atomic<const KernelTable*> table;
};

Selection& current() {
    static Selection sel{detect(), &table(detect())};
    return sel;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(REPOSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!isa_available(isa))
        throw std::runtime_error("kernel ISA not available on this host: " + std::string(isa_name(isa)));
#if defined(REPOSIM_HAVE_AVX2)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelTable& active() { return *current().table.load(std::memory_order_acquire); }

Isa active_isa() { return current().isa.load(std::memory_order_acquire); }

void set_active_isa(Isa isa) {
    const KernelTable& t = table(isa);
    current().isa.store(isa, std::memory_order_release);
    current().table.store(&t, std::memory_order_release);
}

}  // namespace reposim::kernels

#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace mpimpe::kernels {

namespace {

const KernelTable kScalar{
    "scalar",           scalar::split_net, scalar::subtract,     scalar::scale,
    scalar::block_mean, scalar::sum,       scalar::sum_excess,   scalar::max,
    scalar::max_combined, scalar::eliminate, scalar::eliminate_indexed, scalar::divide,
};

#if defined(MPIMPE_HAVE_AVX2_KERNELS)
const KernelTable kAvx2{
    "avx2",           avx2::split_net, avx2::subtract,     avx2::scale,
    avx2::block_mean, avx2::sum,       avx2::sum_excess,   avx2::max,
    avx2::max_combined, avx2::eliminate, avx2::eliminate_indexed, avx2::divide,
};
#endif

const KernelTable& select() noexcept {
    if (const char* env = std::getenv("MPIMPE_SIMD"); env && std::string_view(env) == "scalar") {
        return kScalar;
    }
    if (const KernelTable* t = avx2_table()) return *t;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(MPIMPE_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& table = select();
    return table;
}

}  // namespace mpimpe::kernels

#pragma once
// Data-parallel inner loops shared by the profile, metric, dispatch and LP
// code. Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant. The variant is picked once at first use from CPUID; setting
// MPIMPE_SIMD=scalar in the environment forces the reference path.
//
// Element-wise kernels are bit-identical across variants. Reductions that sum
// (sum, sum_excess) may differ in the last bits because lanes are
// accumulated separately.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mpimpe::kernels {

struct MaxResult {
    double value;
    std::size_t index;  // first occurrence
};

struct KernelTable {
    std::string_view name;

    // rl = max(load - pv, 0), sg = max(pv - load, 0)
    void (*split_net)(std::span<const double> load, std::span<const double> pv,
                      std::span<double> rl, std::span<double> sg);
    // out = a - b
    void (*subtract)(std::span<const double> a, std::span<const double> b, std::span<double> out);
    // out = v * factor
    void (*scale)(std::span<const double> v, double factor, std::span<double> out);
    // out[k] = mean(v[k*block .. k*block+block)), summed left to right
    void (*block_mean)(std::span<const double> v, std::size_t block, std::span<double> out);
    double (*sum)(std::span<const double> v);
    // Σ max(v - cap, 0)
    double (*sum_excess)(std::span<const double> v, double cap);
    // max over non-empty v
    MaxResult (*max)(std::span<const double> v);
    // max_t ((a_t - b_t) + c_t); c may be empty, meaning zero
    MaxResult (*max_combined)(std::span<const double> a, std::span<const double> b,
                              std::span<const double> c);
    // row -= factor * pivot_row (no fused multiply-add)
    void (*eliminate)(std::span<double> row, std::span<const double> pivot_row, double factor);
    // row[index[k]] -= factor * values[k]
    void (*eliminate_indexed)(std::span<double> row, std::span<const std::uint32_t> index,
                              std::span<const double> values, double factor);
    // row /= divisor
    void (*divide)(std::span<double> row, double divisor);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

// The table selected for this process.
const KernelTable& active() noexcept;

}  // namespace mpimpe::kernels

#pragma once

#include "mpimpe/kernels.hpp"

namespace mpimpe::kernels {

namespace scalar {
void split_net(std::span<const double>, std::span<const double>, std::span<double>,
               std::span<double>);
void subtract(std::span<const double>, std::span<const double>, std::span<double>);
void scale(std::span<const double>, double, std::span<double>);
void block_mean(std::span<const double>, std::size_t, std::span<double>);
double sum(std::span<const double>);
double sum_excess(std::span<const double>, double);
MaxResult max(std::span<const double>);
MaxResult max_combined(std::span<const double>, std::span<const double>,
                       std::span<const double>);
void eliminate(std::span<double>, std::span<const double>, double);
void eliminate_indexed(std::span<double>, std::span<const std::uint32_t>, std::span<const double>,
                       double);
void divide(std::span<double>, double);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MPIMPE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void split_net(std::span<const double>, std::span<const double>, std::span<double>,
               std::span<double>);
void subtract(std::span<const double>, std::span<const double>, std::span<double>);
void scale(std::span<const double>, double, std::span<double>);
void block_mean(std::span<const double>, std::size_t, std::span<double>);
double sum(std::span<const double>);
double sum_excess(std::span<const double>, double);
MaxResult max(std::span<const double>);
MaxResult max_combined(std::span<const double>, std::span<const double>,
                       std::span<const double>);
void eliminate(std::span<double>, std::span<const double>, double);
void eliminate_indexed(std::span<double>, std::span<const std::uint32_t>, std::span<const double>,
                       double);
void divide(std::span<double>, double);
}  // namespace avx2
#endif

}  // namespace mpimpe::kernels

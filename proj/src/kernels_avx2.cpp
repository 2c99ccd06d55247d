#include "kernels_impl.hpp"

#if defined(MPIMPE_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <algorithm>

#define MPIMPE_AVX2 __attribute__((target("avx2")))

namespace mpimpe::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

MPIMPE_AVX2 inline double horizontal_max(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_max_pd(lo, hi);
    return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

MPIMPE_AVX2 inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

MPIMPE_AVX2 void split_net(std::span<const double> load, std::span<const double> pv,
                           std::span<double> rl, std::span<double> sg) {
    const std::size_t n = load.size();
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d l = _mm256_loadu_pd(load.data() + i);
        const __m256d p = _mm256_loadu_pd(pv.data() + i);
        _mm256_storeu_pd(rl.data() + i, _mm256_max_pd(_mm256_sub_pd(l, p), zero));
        _mm256_storeu_pd(sg.data() + i, _mm256_max_pd(_mm256_sub_pd(p, l), zero));
    }
    scalar::split_net(load.subspan(i), pv.subspan(i), rl.subspan(i), sg.subspan(i));
}

MPIMPE_AVX2 void subtract(std::span<const double> a, std::span<const double> b,
                          std::span<double> out) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        _mm256_storeu_pd(out.data() + i,
                         _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
    }
    scalar::subtract(a.subspan(i), b.subspan(i), out.subspan(i));
}

MPIMPE_AVX2 void scale(std::span<const double> v, double factor, std::span<double> out) {
    const std::size_t n = v.size();
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(_mm256_loadu_pd(v.data() + i), f));
    }
    scalar::scale(v.subspan(i), factor, out.subspan(i));
}

MPIMPE_AVX2 void block_mean(std::span<const double> v, std::size_t block, std::span<double> out) {
    if (block != kLanes) {
        scalar::block_mean(v, block, out);
        return;
    }
    // Four blocks of four at a time: transpose so lane j holds block j, then
    // add the columns in the same left-to-right order as the scalar loop.
    const __m256d n = _mm256_set1_pd(static_cast<double>(block));
    std::size_t k = 0;
    for (; k + kLanes <= out.size(); k += kLanes) {
        const double* base = v.data() + k * block;
        const __m256d r0 = _mm256_loadu_pd(base);
        const __m256d r1 = _mm256_loadu_pd(base + 4);
        const __m256d r2 = _mm256_loadu_pd(base + 8);
        const __m256d r3 = _mm256_loadu_pd(base + 12);
        const __m256d t0 = _mm256_unpacklo_pd(r0, r1);
        const __m256d t1 = _mm256_unpackhi_pd(r0, r1);
        const __m256d t2 = _mm256_unpacklo_pd(r2, r3);
        const __m256d t3 = _mm256_unpackhi_pd(r2, r3);
        const __m256d c0 = _mm256_permute2f128_pd(t0, t2, 0x20);
        const __m256d c1 = _mm256_permute2f128_pd(t1, t3, 0x20);
        const __m256d c2 = _mm256_permute2f128_pd(t0, t2, 0x31);
        const __m256d c3 = _mm256_permute2f128_pd(t1, t3, 0x31);
        const __m256d s = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(c0, c1), c2), c3);
        _mm256_storeu_pd(out.data() + k, _mm256_div_pd(s, n));
    }
    scalar::block_mean(v.subspan(k * block), block, out.subspan(k));
}

MPIMPE_AVX2 double sum(std::span<const double> v) {
    const std::size_t n = v.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v.data() + i));
    return horizontal_sum(acc) + scalar::sum(v.subspan(i));
}

MPIMPE_AVX2 double sum_excess(std::span<const double> v, double cap) {
    const std::size_t n = v.size();
    const __m256d c = _mm256_set1_pd(cap);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(v.data() + i), c);
        acc = _mm256_add_pd(acc, _mm256_max_pd(x, zero));
    }
    return horizontal_sum(acc) + scalar::sum_excess(v.subspan(i), cap);
}

MPIMPE_AVX2 MaxResult max(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n < kLanes) return scalar::max(v);
    __m256d best = _mm256_loadu_pd(v.data());
    std::size_t i = kLanes;
    for (; i + kLanes <= n; i += kLanes) best = _mm256_max_pd(best, _mm256_loadu_pd(v.data() + i));
    double m = horizontal_max(best);
    for (; i < n; ++i) m = v[i] > m ? v[i] : m;
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == m) return {v[j], j};
    }
    return scalar::max(v);
}

namespace {

MPIMPE_AVX2 inline __m256d combined_lanes(const double* a, const double* b, const double* c) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(a), _mm256_loadu_pd(b));
    return c ? _mm256_add_pd(x, _mm256_loadu_pd(c)) : x;
}

inline double combined_at(std::span<const double> a, std::span<const double> b,
                          std::span<const double> c, std::size_t i) {
    return c.empty() ? a[i] - b[i] : (a[i] - b[i]) + c[i];
}

}  // namespace

MPIMPE_AVX2 MaxResult max_combined(std::span<const double> a, std::span<const double> b,
                                   std::span<const double> c) {
    const std::size_t n = a.size();
    if (n < kLanes) return scalar::max_combined(a, b, c);
    const double* cp = c.empty() ? nullptr : c.data();
    __m256d best = combined_lanes(a.data(), b.data(), cp);
    std::size_t i = kLanes;
    for (; i + kLanes <= n; i += kLanes) {
        best = _mm256_max_pd(best, combined_lanes(a.data() + i, b.data() + i, cp ? cp + i : nullptr));
    }
    double m = horizontal_max(best);
    for (; i < n; ++i) {
        const double x = combined_at(a, b, c, i);
        m = x > m ? x : m;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double x = combined_at(a, b, c, j);
        if (x == m) return {x, j};
    }
    return scalar::max_combined(a, b, c);
}

MPIMPE_AVX2 void eliminate(std::span<double> row, std::span<const double> pivot_row, double factor) {
    const std::size_t n = row.size();
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d p = _mm256_mul_pd(f, _mm256_loadu_pd(pivot_row.data() + i));
        _mm256_storeu_pd(row.data() + i, _mm256_sub_pd(_mm256_loadu_pd(row.data() + i), p));
    }
    scalar::eliminate(row.subspan(i), pivot_row.subspan(i), factor);
}

MPIMPE_AVX2 void eliminate_indexed(std::span<double> row, std::span<const std::uint32_t> index,
                                   std::span<const double> values, double factor) {
    // Gathered loads, scalar stores (no scatter in AVX2). Indices are unique.
    const std::size_t n = index.size();
    const __m256d f = _mm256_set1_pd(factor);
    alignas(32) double out[kLanes];
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(index.data() + k));
        const __m256d cur = _mm256_i32gather_pd(row.data(), idx, 8);
        const __m256d p = _mm256_mul_pd(f, _mm256_loadu_pd(values.data() + k));
        _mm256_store_pd(out, _mm256_sub_pd(cur, p));
        row[index[k]] = out[0];
        row[index[k + 1]] = out[1];
        row[index[k + 2]] = out[2];
        row[index[k + 3]] = out[3];
    }
    scalar::eliminate_indexed(row, index.subspan(k), values.subspan(k), factor);
}

MPIMPE_AVX2 void divide(std::span<double> row, double divisor) {
    const std::size_t n = row.size();
    const __m256d d = _mm256_set1_pd(divisor);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        _mm256_storeu_pd(row.data() + i, _mm256_div_pd(_mm256_loadu_pd(row.data() + i), d));
    }
    scalar::divide(row.subspan(i), divisor);
}

}  // namespace mpimpe::kernels::avx2

#endif

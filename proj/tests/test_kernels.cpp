#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "mpimpe/kernels.hpp"

using mpimpe::kernels::KernelTable;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
    }
    return true;
}

class KernelEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        simd_ = mpimpe::kernels::avx2_table();
        if (!simd_) GTEST_SKIP() << "no SIMD variant on this machine";
    }
    const KernelTable& ref_ = mpimpe::kernels::scalar_table();
    const KernelTable* simd_ = nullptr;
    std::mt19937_64 rng_{20190101};
};

}  // namespace

TEST(Kernels, ActiveTableIsOneOfTheVariants) {
    const auto& active = mpimpe::kernels::active();
    EXPECT_TRUE(active.name == "scalar" || active.name == "avx2");
}

TEST(Kernels, ScalarSplitNetMatchesDefinition) {
    const auto& k = mpimpe::kernels::scalar_table();
    const std::vector<double> load{5, 2, 10, 0, 3};
    const std::vector<double> pv{2, 5, 0, 10, 3};
    std::vector<double> rl(5), sg(5);
    k.split_net(load, pv, rl, sg);
    EXPECT_EQ(rl, (std::vector<double>{3, 0, 10, 0, 0}));
    EXPECT_EQ(sg, (std::vector<double>{0, 3, 0, 10, 0}));
}

TEST(Kernels, MaxReturnsFirstOccurrence) {
    const auto& k = mpimpe::kernels::active();
    const std::vector<double> v{1, 7, 3, 7, 7, 2, 0, 7, 1};
    const auto r = k.max(v);
    EXPECT_EQ(r.value, 7.0);
    EXPECT_EQ(r.index, 1u);
}

TEST_F(KernelEquivalence, ElementWiseKernelsAreBitIdentical) {
    for (std::size_t n = 1; n < 70; ++n) {
        const auto a = random_vector(rng_, n, -50, 50);
        const auto b = random_vector(rng_, n, -50, 50);
        std::vector<double> r1(n), s1(n), r2(n), s2(n);
        ref_.split_net(a, b, r1, s1);
        simd_->split_net(a, b, r2, s2);
        EXPECT_TRUE(same_bits(r1, r2)) << n;
        EXPECT_TRUE(same_bits(s1, s2)) << n;

        ref_.subtract(a, b, r1);
        simd_->subtract(a, b, r2);
        EXPECT_TRUE(same_bits(r1, r2)) << n;

        ref_.scale(a, 1.37, r1);
        simd_->scale(a, 1.37, r2);
        EXPECT_TRUE(same_bits(r1, r2)) << n;

        auto e1 = a, e2 = a;
        ref_.eliminate(e1, b, -0.731);
        simd_->eliminate(e2, b, -0.731);
        EXPECT_TRUE(same_bits(e1, e2)) << n;

        ref_.divide(e1, 3.3);
        simd_->divide(e2, 3.3);
        EXPECT_TRUE(same_bits(e1, e2)) << n;
    }
}

TEST_F(KernelEquivalence, IndexedEliminationIsBitIdentical) {
    for (std::size_t n = 1; n < 70; ++n) {
        const auto row = random_vector(rng_, 3 * n, -5, 5);
        std::vector<std::uint32_t> index;
        for (std::uint32_t j = 0; j < 3 * n; j += 1 + static_cast<std::uint32_t>(rng_() % 4)) index.push_back(j);
        const auto values = random_vector(rng_, index.size(), -2, 2);
        auto r1 = row, r2 = row;
        ref_.eliminate_indexed(r1, index, values, 1.37);
        simd_->eliminate_indexed(r2, index, values, 1.37);
        EXPECT_TRUE(same_bits(r1, r2)) << n;
        // Same result as the dense update with zeros elsewhere.
        std::vector<double> dense(3 * n, 0.0);
        for (std::size_t k = 0; k < index.size(); ++k) dense[index[k]] = values[k];
        auto r3 = row;
        ref_.eliminate(r3, dense, 1.37);
        EXPECT_TRUE(same_bits(r1, r3)) << n;
    }
}

TEST_F(KernelEquivalence, BlockMeanIsBitIdentical) {
    for (std::size_t blocks = 1; blocks < 40; ++blocks) {
        for (std::size_t block : {2u, 4u}) {
            const auto v = random_vector(rng_, blocks * block, 0, 40);
            std::vector<double> o1(blocks), o2(blocks);
            ref_.block_mean(v, block, o1);
            simd_->block_mean(v, block, o2);
            EXPECT_TRUE(same_bits(o1, o2)) << blocks << "x" << block;
        }
    }
}

TEST_F(KernelEquivalence, MaximaAgreeExactly) {
    for (std::size_t n = 1; n < 70; ++n) {
        const auto a = random_vector(rng_, n, -50, 50);
        const auto b = random_vector(rng_, n, -50, 50);
        const auto c = random_vector(rng_, n, 0, 10);
        const auto m1 = ref_.max(a);
        const auto m2 = simd_->max(a);
        EXPECT_EQ(m1.value, m2.value);
        EXPECT_EQ(m1.index, m2.index);
        for (const auto& cc : {c, std::vector<double>{}}) {
            const auto x1 = ref_.max_combined(a, b, cc);
            const auto x2 = simd_->max_combined(a, b, cc);
            EXPECT_EQ(x1.value, x2.value);
            EXPECT_EQ(x1.index, x2.index);
        }
    }
}

TEST_F(KernelEquivalence, MaxWithTiesAndSignedZeros) {
    const std::vector<double> v{-0.0, -1.0, 0.0, -2.0, 0.0, -0.0, -3.0};
    const auto m1 = ref_.max(v);
    const auto m2 = simd_->max(v);
    EXPECT_EQ(m1.index, 0u);
    EXPECT_EQ(m2.index, 0u);
    EXPECT_EQ(std::signbit(m1.value), std::signbit(m2.value));
}

TEST_F(KernelEquivalence, ReductionsAgreeWithinRounding) {
    for (std::size_t n = 0; n < 200; n += 7) {
        const auto v = random_vector(rng_, n, 0, 100);
        const double s1 = ref_.sum(v);
        const double s2 = simd_->sum(v);
        EXPECT_NEAR(s1, s2, 1e-12 * std::max(1.0, std::abs(s1)));
        for (double cap : {0.0, 25.0, 50.0, 99.0, 200.0}) {
            const double e1 = ref_.sum_excess(v, cap);
            const double e2 = simd_->sum_excess(v, cap);
            EXPECT_NEAR(e1, e2, 1e-12 * std::max(1.0, e1));
        }
    }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mpimpe/error.hpp"
#include "mpimpe/lp.hpp"
#include "oracles/random_lp.hpp"
#include "oracles/vertex_enumeration.hpp"

using namespace mpimpe::lp;

TEST(Lp, SingleLowerBoundRow) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0);
    lp.add_constraint({{x, 1.0}}, Relation::GreaterEqual, 3.0);
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, Status::Optimal);
    EXPECT_NEAR(sol.x[x], 3.0, 1e-12);
    EXPECT_NEAR(sol.objective_value, 3.0, 1e-12);
}

TEST(Lp, MaximiseUnderUpperRow) {
    LinearProgram lp;
    const auto x = lp.add_variable(-1.0);
    lp.add_constraint({{x, 1.0}}, Relation::LessEqual, 5.0);
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, Status::Optimal);
    EXPECT_NEAR(sol.x[x], 5.0, 1e-12);
    EXPECT_NEAR(sol.objective_value, -5.0, 1e-12);
}

TEST(Lp, TiedVerticesGiveOracleObjective) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, {0.0, 1.0});
    const auto y = lp.add_variable(1.0, {0.0, 1.0});
    lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::Equal, 1.0);
    const auto oracle = oracle::enumerate_vertices(lp);
    ASSERT_TRUE(oracle.feasible);
    EXPECT_NEAR(oracle.objective, 1.0, 1e-12);

    const auto a = solve(lp);
    const auto b = solve(lp);
    ASSERT_EQ(a.status, Status::Optimal);
    EXPECT_NEAR(a.objective_value, oracle.objective, 1e-9);
    EXPECT_EQ(a.x, b.x);  // fixed pivot rule
}

TEST(Lp, DetectsInfeasibility) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0);
    const auto y = lp.add_variable(1.0);
    lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::LessEqual, 1.0);
    lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::GreaterEqual, 2.0);
    EXPECT_EQ(solve(lp).status, Status::Infeasible);
}

TEST(Lp, DetectsInfeasibleBounds) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, {0.0, 1.0});
    lp.add_constraint({{x, 2.0}}, Relation::GreaterEqual, 4.0);
    EXPECT_EQ(solve(lp).status, Status::Infeasible);
}

TEST(Lp, DetectsUnboundedness) {
    LinearProgram lp;
    const auto x = lp.add_variable(-1.0);
    const auto y = lp.add_variable(0.0);
    lp.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::LessEqual, 1.0);
    EXPECT_EQ(solve(lp).status, Status::Unbounded);
}

TEST(Lp, FreeAndUpperOnlyVariables) {
    // min x - y, x free, y <= 2, x + y >= 1, x >= -4 as a row
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, {-kInfinity, kInfinity});
    const auto y = lp.add_variable(-1.0, {-kInfinity, 2.0});
    lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::GreaterEqual, 1.0);
    lp.add_constraint({{x, 1.0}, {y, 0.0}}, Relation::GreaterEqual, -4.0);
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, Status::Optimal);
    EXPECT_NEAR(sol.x[x], -1.0, 1e-9);
    EXPECT_NEAR(sol.x[y], 2.0, 1e-9);
    EXPECT_NEAR(sol.objective_value, -3.0, 1e-9);
}

TEST(Lp, RedundantEqualityRows) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, {0.0, 10.0});
    const auto y = lp.add_variable(2.0, {0.0, 10.0});
    lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::Equal, 4.0);
    lp.add_constraint({{x, 2.0}, {y, 2.0}}, Relation::Equal, 8.0);
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, Status::Optimal);
    EXPECT_NEAR(sol.objective_value, 4.0, 1e-9);
}

TEST(Lp, BealeCyclingExampleTerminates) {
    LinearProgram lp;
    const auto x4 = lp.add_variable(-0.75);
    const auto x5 = lp.add_variable(20.0);
    const auto x6 = lp.add_variable(-0.5);
    const auto x7 = lp.add_variable(6.0);
    lp.add_constraint({{x4, 0.25}, {x5, -8.0}, {x6, -1.0}, {x7, 9.0}}, Relation::LessEqual, 0.0);
    lp.add_constraint({{x4, 0.5}, {x5, -12.0}, {x6, -0.5}, {x7, 3.0}}, Relation::LessEqual, 0.0);
    lp.add_constraint({{x6, 1.0}}, Relation::LessEqual, 1.0);
    SolveOptions opts;
    opts.degenerate_switch = 1;
    for (const auto& o : {SolveOptions{}, opts}) {
        const auto sol = solve(lp, o);
        ASSERT_EQ(sol.status, Status::Optimal);
        EXPECT_NEAR(sol.objective_value, -1.25, 1e-9);
    }
}

TEST(Lp, IterationLimitIsReported) {
    std::mt19937_64 rng(7);
    const auto lp = oracle::random_bounded_lp(rng, 10, 6);
    SolveOptions opts;
    opts.max_iterations = 1;
    EXPECT_EQ(solve(lp, opts).status, Status::IterationLimit);
}

TEST(Lp, RejectsMalformedPrograms) {
    LinearProgram lp;
    lp.add_variable(1.0, {2.0, 1.0});
    EXPECT_THROW(solve(lp), mpimpe::Error);
    LinearProgram lp2;
    lp2.add_variable(1.0);
    lp2.add_constraint({{3, 1.0}}, Relation::LessEqual, 1.0);
    EXPECT_THROW(solve(lp2), mpimpe::Error);
}

TEST(LpVerify, FeasiblePointHasNoViolations) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, {0.0, 4.0});
    lp.add_constraint({{x, 1.0}}, Relation::LessEqual, 3.0);
    const auto r = verify(lp, {2.0});
    EXPECT_EQ(r.max_constraint_violation, 0.0);
    EXPECT_EQ(r.max_bound_violation, 0.0);
    EXPECT_FALSE(r.worst_constraint.has_value());
}

TEST(LpVerify, NamesViolatedRow) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0);
    lp.add_constraint({{x, 1.0}}, Relation::GreaterEqual, 0.0);
    lp.add_constraint({{x, 1.0}}, Relation::LessEqual, 1.5);
    const auto r = verify(lp, {2.0});
    ASSERT_TRUE(r.worst_constraint.has_value());
    EXPECT_EQ(r.worst_constraint->index, 1u);
    EXPECT_NEAR(r.worst_constraint->magnitude, 0.5, 1e-15);
    EXPECT_FALSE(r.feasible(1e-9));
}

TEST(LpVerify, DimensionMismatch) {
    LinearProgram lp;
    lp.add_variable(1.0);
    try {
        verify(lp, {1.0, 2.0});
        FAIL();
    } catch (const mpimpe::Error& e) {
        EXPECT_EQ(e.code(), mpimpe::ErrorCode::DimensionMismatch);
    }
}

TEST(LpProperty, RandomSmallProgramsMatchVertexEnumeration) {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const std::size_t m = 1 + trial % 4;
        const auto lp = oracle::random_bounded_lp(rng, n, m);
        const auto expected = oracle::enumerate_vertices(lp);
        ASSERT_TRUE(expected.feasible);
        const auto sol = solve(lp);
        ASSERT_EQ(sol.status, Status::Optimal) << trial;
        EXPECT_NEAR(sol.objective_value, expected.objective,
                    1e-6 * std::max(1.0, std::abs(expected.objective)))
            << trial;
        EXPECT_LE(verify(lp, sol.x).max_relative_violation, 1e-7);
    }
}

TEST(LpProperty, StrongDualityUpToFortyVariables) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 5 + trial % 36;
        const std::size_t m = 2 + trial % 25;
        const auto lp = oracle::random_bounded_lp(rng, n, m);
        const auto primal = solve(lp);
        ASSERT_EQ(primal.status, Status::Optimal) << trial;
        EXPECT_LE(verify(lp, primal.x).max_relative_violation, 1e-7);
        const auto dual_lp = oracle::dual_of(lp);
        const auto dual = solve(dual_lp);
        ASSERT_EQ(dual.status, Status::Optimal) << trial;
        EXPECT_LE(verify(dual_lp, dual.x).max_relative_violation, 1e-7);
        EXPECT_NEAR(primal.objective_value, -dual.objective_value,
                    1e-6 * std::max(1.0, std::abs(primal.objective_value)))
            << trial;
    }
}

TEST(LpProperty, ObjectiveScalingKeepsActiveSet) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto lp = oracle::random_bounded_lp(rng, 8, 4);
        const auto base = solve(lp);
        ASSERT_EQ(base.status, Status::Optimal);
        const double lambda = 0.25 + trial * 0.3;
        auto scaled = lp;
        scaled.scale_objective(lambda);
        const auto s = solve(scaled);
        ASSERT_EQ(s.status, Status::Optimal);
        EXPECT_NEAR(s.objective_value, lambda * base.objective_value,
                    1e-7 * std::max(1.0, std::abs(s.objective_value)));
        EXPECT_LE(verify(lp, s.x).max_relative_violation, 1e-7);
        for (std::size_t j = 0; j < lp.num_vars(); ++j) {
            const auto& b = lp.bounds()[j];
            EXPECT_EQ(std::abs(base.x[j] - b.lower) < 1e-9, std::abs(s.x[j] - b.lower) < 1e-9);
            EXPECT_EQ(std::abs(base.x[j] - b.upper) < 1e-9, std::abs(s.x[j] - b.upper) < 1e-9);
        }
    }
}

TEST(LpFormat, FixedPointTwelveSignificantDigits) {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0 / 3.0, {0.0, 2.5e-7}, "ch_0");
    const auto y = lp.add_variable(-2.0, {-kInfinity, kInfinity}, "p_max");
    lp.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::LessEqual, 1234567.891, "export_0");
    const auto text = to_lp_format(lp);
    EXPECT_NE(text.find("obj: + 0.333333333333 ch_0 - 2 p_max"), std::string::npos) << text;
    EXPECT_NE(text.find("export_0: + 1 ch_0 - 1 p_max <= 1234567.891"), std::string::npos) << text;
    EXPECT_NE(text.find("0 <= ch_0 <= 0.00000025"), std::string::npos) << text;
    EXPECT_NE(text.find("p_max free"), std::string::npos) << text;
    EXPECT_EQ(text.find("e-"), std::string::npos);
    EXPECT_EQ(text.find("e+"), std::string::npos);
}

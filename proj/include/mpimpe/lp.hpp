#pragma once
// Linear programs of the form
//
//   minimize c·x  subject to  a_i·x (<=, =, >=) b_i,  l <= x <= u
//
// with sparse rows, and a bundled bounded-variable primal simplex solver.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace mpimpe::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Term {
    std::size_t var;
    double coef;
};

struct Constraint {
    std::vector<Term> terms;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
    std::string name;
};

struct Bounds {
    double lower = 0.0;
    double upper = kInfinity;
};

class LinearProgram {
public:
    // Returns the new variable's index.
    std::size_t add_variable(double cost, Bounds bounds = {}, std::string name = {});
    std::size_t add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                               std::string name = {});

    std::size_t num_vars() const { return objective_.size(); }
    std::size_t num_constraints() const { return constraints_.size(); }
    const std::vector<double>& objective() const { return objective_; }
    const std::vector<Bounds>& bounds() const { return bounds_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::string& var_name(std::size_t j) const { return names_[j]; }

    void set_cost(std::size_t var, double cost);
    void scale_objective(double factor);

    // Throws Error(InvalidArgument) on out-of-range indices, non-finite
    // coefficients or lower > upper.
    void validate() const;

private:
    std::vector<double> objective_;
    std::vector<Bounds> bounds_;
    std::vector<std::string> names_;
    std::vector<Constraint> constraints_;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(Status status) noexcept;

struct SolveOptions {
    double primal_tolerance = 1e-9;
    double dual_tolerance = 1e-9;
    double pivot_tolerance = 1e-9;
    // 0 selects 50 * (rows + columns).
    std::size_t max_iterations = 0;
    // Consecutive degenerate pivots before switching to Bland's rule.
    std::size_t degenerate_switch = 64;
};

struct LpSolution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
    std::size_t iterations = 0;
};

LpSolution solve(const LinearProgram& lp, const SolveOptions& opts = {});

struct Violation {
    std::size_t index = 0;
    double magnitude = 0.0;
};

struct FeasibilityReport {
    double max_constraint_violation = 0.0;
    double max_bound_violation = 0.0;
    // Largest violation relative to max(1, |rhs|, Σ|a_ij x_j|).
    double max_relative_violation = 0.0;
    std::optional<Violation> worst_constraint;
    std::optional<Violation> worst_bound;

    bool feasible(double tolerance) const {
        return max_constraint_violation <= tolerance && max_bound_violation <= tolerance;
    }
};

FeasibilityReport verify(const LinearProgram& lp, const std::vector<double>& x);

double evaluate_objective(const LinearProgram& lp, const std::vector<double>& x);

// CPLEX LP text, numbers in fixed-point notation with 12 significant digits.
std::string to_lp_format(const LinearProgram& lp);

}  // namespace mpimpe::lp

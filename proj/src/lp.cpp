#include "mpimpe/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

#include "mpimpe/error.hpp"
#include "mpimpe/kernels.hpp"

namespace mpimpe::lp {

// --- model -------------------------------------------------------------------

std::size_t LinearProgram::add_variable(double cost, Bounds bounds, std::string name) {
    if (name.empty()) name = "x" + std::to_string(objective_.size());
    objective_.push_back(cost);
    bounds_.push_back(bounds);
    names_.push_back(std::move(name));
    return objective_.size() - 1;
}

std::size_t LinearProgram::add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                                          std::string name) {
    if (name.empty()) name = "c" + std::to_string(constraints_.size());
    constraints_.push_back({std::move(terms), relation, rhs, std::move(name)});
    return constraints_.size() - 1;
}

void LinearProgram::set_cost(std::size_t var, double cost) { objective_.at(var) = cost; }

void LinearProgram::scale_objective(double factor) {
    for (double& c : objective_) c *= factor;
}

void LinearProgram::validate() const {
    for (std::size_t j = 0; j < num_vars(); ++j) {
        const auto& b = bounds_[j];
        if (!std::isfinite(objective_[j])) {
            throw Error(ErrorCode::InvalidArgument, "non-finite cost for " + names_[j]);
        }
        if (std::isnan(b.lower) || std::isnan(b.upper) || b.lower > b.upper ||
            b.lower == kInfinity || b.upper == -kInfinity) {
            throw Error(ErrorCode::InvalidArgument, "invalid bounds for " + names_[j]);
        }
    }
    for (const auto& c : constraints_) {
        if (!std::isfinite(c.rhs)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite right-hand side in " + c.name);
        }
        for (const auto& t : c.terms) {
            if (t.var >= num_vars()) {
                throw Error(ErrorCode::InvalidArgument, "variable index out of range in " + c.name);
            }
            if (!std::isfinite(t.coef)) {
                throw Error(ErrorCode::InvalidArgument, "non-finite coefficient in " + c.name);
            }
        }
    }
}

const char* to_string(Status status) noexcept {
    switch (status) {
    case Status::Optimal: return "Optimal";
    case Status::Infeasible: return "Infeasible";
    case Status::Unbounded: return "Unbounded";
    case Status::IterationLimit: return "IterationLimit";
    }
    return "Unknown";
}

// --- solver ------------------------------------------------------------------

namespace {

enum class ColState : unsigned char { Basic, AtLower, AtUpper, Blocked };

// How an original variable is recovered from internal columns:
// x = offset + sign * y[col] (- y[col2] when split).
struct VarMap {
    double offset = 0.0;
    double sign = 1.0;
    std::ptrdiff_t col = -1;
    std::ptrdiff_t col2 = -1;
};

struct Row {
    std::vector<Term> terms;  // merged, nonzero
    Relation relation;
    double rhs;
};

class Simplex {
public:
    Simplex(std::size_t rows, std::size_t cols, const SolveOptions& opts)
        : m_(rows), stride_(cols), opts_(opts), k_(kernels::active()),
          tableau_(rows * cols, 0.0), beta_(rows, 0.0), basis_(rows, 0),
          upper_(cols, kInfinity), state_(cols, ColState::AtLower), d_(cols, 0.0) {}

    double* row(std::size_t i) { return tableau_.data() + i * stride_; }
    double& at(std::size_t i, std::size_t j) { return tableau_[i * stride_ + j]; }

    std::size_t m_;
    std::size_t stride_;
    std::size_t width_ = 0;  // columns currently eligible
    std::size_t first_artificial_ = 0;
    const SolveOptions& opts_;
    const kernels::KernelTable& k_;
    std::vector<double> tableau_;
    std::vector<double> beta_;
    std::vector<std::size_t> basis_;
    std::vector<double> upper_;
    std::vector<ColState> state_;
    std::vector<double> d_;
    std::size_t iterations_ = 0;
    std::size_t max_iterations_ = 0;
    std::vector<std::uint32_t> nz_index_;
    std::vector<double> nz_value_;

    enum class Outcome { Optimal, Unbounded, IterationLimit };

    Outcome run() {
        std::size_t degenerate = 0;
        bool bland = false;
        while (true) {
            const std::ptrdiff_t q = price(bland);
            if (q < 0) return Outcome::Optimal;
            if (iterations_ >= max_iterations_) return Outcome::IterationLimit;
            ++iterations_;
            const auto col = static_cast<std::size_t>(q);
            const double dir = state_[col] == ColState::AtLower ? 1.0 : -1.0;
            const auto [r, theta] = ratio_test(col, dir, bland);
            const bool flip = upper_[col] < kInfinity && (r < 0 || upper_[col] <= theta);
            if (r < 0 && !flip) return Outcome::Unbounded;
            const double step = flip ? upper_[col] : theta;
            if (step <= 1e-12) {
                if (++degenerate >= opts_.degenerate_switch) bland = true;
            } else {
                degenerate = 0;
                bland = false;
            }
            move(col, dir, step);
            if (flip) {
                state_[col] = dir > 0 ? ColState::AtUpper : ColState::AtLower;
            } else {
                pivot(static_cast<std::size_t>(r), col, dir, step);
            }
        }
    }

    std::ptrdiff_t price(bool bland) const {
        std::ptrdiff_t best = -1;
        double best_score = 0.0;
        const double tol = opts_.dual_tolerance;
        for (std::size_t j = 0; j < width_; ++j) {
            double score;
            if (state_[j] == ColState::AtLower) {
                score = -d_[j];
            } else if (state_[j] == ColState::AtUpper) {
                score = d_[j];
            } else {
                continue;
            }
            if (score <= tol) continue;
            if (bland) return static_cast<std::ptrdiff_t>(j);
            if (score > best_score) {
                best_score = score;
                best = static_cast<std::ptrdiff_t>(j);
            }
        }
        return best;
    }

    struct Ratio {
        std::ptrdiff_t row;
        double theta;
    };

    // Harris two-pass ratio test; Bland mode uses the plain minimum ratio with
    // ties broken by the smallest basic column.
    Ratio ratio_test(std::size_t q, double dir, bool bland) {
        const double ptol = opts_.pivot_tolerance;
        const double ftol = opts_.primal_tolerance;
        double theta_max = kInfinity;
        for (std::size_t i = 0; i < m_; ++i) {
            const double alpha = dir * at(i, q);
            if (alpha > ptol) {
                theta_max = std::min(theta_max, (std::max(beta_[i], 0.0) + (bland ? 0.0 : ftol)) / alpha);
            } else if (alpha < -ptol) {
                const double u = upper_[basis_[i]];
                if (u < kInfinity) {
                    theta_max = std::min(theta_max, (std::max(u - beta_[i], 0.0) + (bland ? 0.0 : ftol)) / -alpha);
                }
            }
        }
        if (theta_max == kInfinity) return {-1, kInfinity};
        std::ptrdiff_t best = -1;
        double best_alpha = 0.0;
        double best_theta = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            const double alpha = dir * at(i, q);
            double ratio;
            if (alpha > ptol) {
                ratio = std::max(beta_[i], 0.0) / alpha;
            } else if (alpha < -ptol && upper_[basis_[i]] < kInfinity) {
                ratio = std::max(upper_[basis_[i]] - beta_[i], 0.0) / -alpha;
            } else {
                continue;
            }
            if (bland) {
                if (ratio > theta_max * (1.0 + 1e-12) + 1e-15) continue;
                if (best < 0 || basis_[i] < basis_[static_cast<std::size_t>(best)]) {
                    best = static_cast<std::ptrdiff_t>(i);
                    best_theta = ratio;
                }
            } else if (ratio <= theta_max && std::abs(alpha) > best_alpha) {
                best_alpha = std::abs(alpha);
                best = static_cast<std::ptrdiff_t>(i);
                best_theta = ratio;
            }
        }
        return {best, best_theta};
    }

    void move(std::size_t q, double dir, double step) {
        if (step == 0.0) return;
        for (std::size_t i = 0; i < m_; ++i) {
            const double a = at(i, q);
            if (a != 0.0) beta_[i] -= dir * step * a;
        }
    }

    void pivot(std::size_t r, std::size_t q, double dir, double step) {
        const std::size_t leaving = basis_[r];
        const double alpha = dir * at(r, q);
        const double entering_value = (state_[q] == ColState::AtUpper ? upper_[q] : 0.0) + dir * step;
        state_[leaving] = alpha > 0 ? ColState::AtLower : ColState::AtUpper;
        if (leaving >= first_artificial_) state_[leaving] = ColState::Blocked;
        basis_[r] = q;
        state_[q] = ColState::Basic;
        beta_[r] = entering_value;
        eliminate_column(r, q);
    }

    // Gauss-Jordan step on column q with pivot row r. Sparse pivot rows are
    // applied through their nonzero index list, dense ones over the span of
    // nonzeros.
    void eliminate_column(std::size_t r, std::size_t q) {
        double* pr = row(r);
        const double piv = pr[q];
        std::size_t lo = 0;
        while (lo < width_ && pr[lo] == 0.0) ++lo;
        std::size_t hi = width_;
        while (hi > lo && pr[hi - 1] == 0.0) --hi;
        const std::span<double> pivot_span(pr + lo, hi - lo);
        k_.divide(pivot_span, piv);
        pr[q] = 1.0;

        nz_index_.clear();
        nz_value_.clear();
        for (std::size_t j = lo; j < hi; ++j) {
            if (pr[j] != 0.0 && j != q) {
                nz_index_.push_back(static_cast<std::uint32_t>(j));
                nz_value_.push_back(pr[j]);
            }
        }
        const bool sparse = nz_index_.size() * 4 < hi - lo;
        const auto update = [&](double* target) {
            const double f = target[q];
            if (f == 0.0) return;
            if (sparse) {
                k_.eliminate_indexed(std::span<double>(target, width_), nz_index_, nz_value_, f);
            } else {
                k_.eliminate(std::span<double>(target + lo, hi - lo), pivot_span, f);
            }
            target[q] = 0.0;
        };
        for (std::size_t i = 0; i < m_; ++i) {
            if (i != r) update(row(i));
        }
        update(d_.data());
    }

    void remove_row(std::size_t r) {
        const std::size_t last = m_ - 1;
        if (r != last) {
            std::copy_n(row(last), stride_, row(r));
            beta_[r] = beta_[last];
            basis_[r] = basis_[last];
        }
        --m_;
    }

    double column_value(std::size_t j) const {
        switch (state_[j]) {
        case ColState::AtUpper: return upper_[j];
        case ColState::Basic: break;
        default: return 0.0;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] == j) return std::clamp(beta_[i], 0.0, upper_[j]);
        }
        return 0.0;
    }
};

std::vector<Term> merge_terms(const std::vector<Term>& terms) {
    std::vector<Term> out(terms);
    std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    for (const auto& t : out) {
        if (!merged.empty() && merged.back().var == t.var) {
            merged.back().coef += t.coef;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
    return merged;
}

bool relation_holds(double lhs, Relation rel, double rhs, double tol) {
    switch (rel) {
    case Relation::LessEqual: return lhs <= rhs + tol;
    case Relation::GreaterEqual: return lhs >= rhs - tol;
    case Relation::Equal: return std::abs(lhs - rhs) <= tol;
    }
    return false;
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& opts) {
    lp.validate();
    const std::size_t n = lp.num_vars();
    const double ftol = opts.primal_tolerance;

    LpSolution infeasible{Status::Infeasible, {}, 0.0, 0};

    // Presolve: merge duplicate terms, then repeatedly turn rows with a single
    // non-fixed variable into bounds and drop rows with none.
    std::vector<Bounds> bounds = lp.bounds();
    std::vector<Row> all_rows;
    all_rows.reserve(lp.num_constraints());
    for (const auto& c : lp.constraints()) all_rows.push_back({merge_terms(c.terms), c.relation, c.rhs});
    std::vector<bool> active(all_rows.size(), true);
    const auto is_fixed = [&](std::size_t j) { return bounds[j].lower == bounds[j].upper; };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < all_rows.size(); ++i) {
            if (!active[i]) continue;
            const auto& r = all_rows[i];
            double residual = r.rhs;
            std::ptrdiff_t single = -1;
            std::size_t open = 0;
            for (std::size_t k = 0; k < r.terms.size(); ++k) {
                if (is_fixed(r.terms[k].var)) {
                    residual -= r.terms[k].coef * bounds[r.terms[k].var].lower;
                } else {
                    ++open;
                    single = static_cast<std::ptrdiff_t>(k);
                }
            }
            if (open > 1) continue;
            active[i] = false;
            changed = true;
            if (open == 0) {
                const double scale = std::max(1.0, std::abs(r.rhs));
                if (!relation_holds(r.rhs - residual, r.relation, r.rhs, ftol * scale)) return infeasible;
                continue;
            }
            const auto& t = r.terms[static_cast<std::size_t>(single)];
            const double v = residual / t.coef;
            auto& b = bounds[t.var];
            const bool upper = (r.relation == Relation::LessEqual) == (t.coef > 0);
            if (r.relation == Relation::Equal || upper) b.upper = std::min(b.upper, v);
            if (r.relation == Relation::Equal || !upper) b.lower = std::max(b.lower, v);
            if (b.lower > b.upper) {
                if (b.lower > b.upper + ftol * std::max(1.0, std::abs(b.upper))) return infeasible;
                b.upper = b.lower;
            }
        }
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < all_rows.size(); ++i) {
        if (active[i]) rows.push_back(std::move(all_rows[i]));
    }

    // Column layout: [structural | slack | artificial].
    std::vector<VarMap> map(n);
    std::vector<double> col_upper;
    std::vector<double> col_cost;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& b = bounds[j];
        const double c = lp.objective()[j];
        auto& vm = map[j];
        if (b.lower == b.upper) {
            vm.offset = b.lower;
        } else if (b.lower > -kInfinity) {
            vm = {b.lower, 1.0, static_cast<std::ptrdiff_t>(col_upper.size()), -1};
            col_upper.push_back(b.upper - b.lower);
            col_cost.push_back(c);
        } else if (b.upper < kInfinity) {
            vm = {b.upper, -1.0, static_cast<std::ptrdiff_t>(col_upper.size()), -1};
            col_upper.push_back(kInfinity);
            col_cost.push_back(-c);
        } else {
            vm = {0.0, 1.0, static_cast<std::ptrdiff_t>(col_upper.size()),
                  static_cast<std::ptrdiff_t>(col_upper.size() + 1)};
            col_upper.insert(col_upper.end(), {kInfinity, kInfinity});
            col_cost.insert(col_cost.end(), {c, -c});
        }
    }
    const std::size_t n_struct = col_upper.size();
    std::size_t n_slack = 0;
    for (const auto& r : rows) n_slack += r.relation != Relation::Equal;

    // Right-hand sides after substitution decide row signs and artificials.
    const std::size_t m = rows.size();
    std::vector<double> rhs(m);
    std::vector<double> sign(m, 1.0);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double b = rows[i].rhs;
        for (const auto& t : rows[i].terms) b -= t.coef * map[t.var].offset;
        if (b < 0.0 || (b == 0.0 && rows[i].relation == Relation::GreaterEqual)) sign[i] = -1.0;
        rhs[i] = sign[i] * b;
        const double slack = rows[i].relation == Relation::LessEqual ? 1.0
                             : rows[i].relation == Relation::GreaterEqual ? -1.0
                                                                          : 0.0;
        if (sign[i] * slack != 1.0) ++n_art;
    }

    // Physical order of structural and slack columns: by the first row they
    // appear in, slacks right after their row. Keeps nonzeros banded when
    // rows follow a natural order such as time.
    const std::size_t n_real = n_struct + n_slack;
    std::vector<std::size_t> place(n_real);
    {
        std::vector<std::size_t> first_row(n_real, m);
        std::size_t k = n_struct;
        for (std::size_t i = 0; i < m; ++i) {
            for (const auto& t : rows[i].terms) {
                const auto& vm = map[t.var];
                if (vm.col >= 0) first_row[vm.col] = std::min(first_row[vm.col], i);
                if (vm.col2 >= 0) first_row[vm.col2] = std::min(first_row[vm.col2], i);
            }
            if (rows[i].relation != Relation::Equal) first_row[k++] = i;
        }
        std::vector<std::size_t> order(n_real);
        for (std::size_t j = 0; j < n_real; ++j) order[j] = j;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (first_row[a] != first_row[b]) return first_row[a] < first_row[b];
            return (a >= n_struct) < (b >= n_struct);
        });
        for (std::size_t p = 0; p < n_real; ++p) place[order[p]] = p;
    }
    std::vector<double> phys_cost(n_real, 0.0);
    for (std::size_t j = 0; j < n_struct; ++j) phys_cost[place[j]] = col_cost[j];

    const std::size_t cols = n_real + n_art;
    Simplex s(m, cols, opts);
    s.first_artificial_ = n_real;
    s.max_iterations_ = opts.max_iterations ? opts.max_iterations : 50 * (m + cols) + 1000;
    for (std::size_t j = 0; j < n_struct; ++j) s.upper_[place[j]] = col_upper[j];
    std::vector<bool> art_row(m, false);
    {
        std::size_t slack_col = n_struct;
        std::size_t art_col = n_struct + n_slack;
        for (std::size_t i = 0; i < m; ++i) {
            double* ri = s.row(i);
            for (const auto& t : rows[i].terms) {
                const auto& vm = map[t.var];
                if (vm.col < 0) continue;
                ri[place[vm.col]] += sign[i] * vm.sign * t.coef;
                if (vm.col2 >= 0) ri[place[vm.col2]] -= sign[i] * t.coef;
            }
            s.beta_[i] = rhs[i];
            std::ptrdiff_t basic = -1;
            if (rows[i].relation != Relation::Equal) {
                const double coef = sign[i] * (rows[i].relation == Relation::LessEqual ? 1.0 : -1.0);
                ri[place[slack_col]] = coef;
                if (coef == 1.0) basic = static_cast<std::ptrdiff_t>(place[slack_col]);
                ++slack_col;
            }
            if (basic < 0) {
                ri[art_col] = 1.0;
                basic = static_cast<std::ptrdiff_t>(art_col++);
                art_row[i] = true;
            }
            s.basis_[i] = static_cast<std::size_t>(basic);
            s.state_[s.basis_[i]] = ColState::Basic;
        }
    }

    // Phase 1: minimise the sum of artificials.
    if (n_art > 0) {
        s.width_ = cols;
        for (std::size_t i = 0; i < m; ++i) {
            if (!art_row[i]) continue;
            const double* ri = s.row(i);
            for (std::size_t j = 0; j < n_real; ++j) s.d_[j] -= ri[j];
        }
        const auto outcome = s.run();
        if (outcome == Simplex::Outcome::IterationLimit) {
            return {Status::IterationLimit, {}, 0.0, s.iterations_};
        }
        double infeasibility = 0.0;
        double scale = 1.0;
        for (double b : rhs) scale = std::max(scale, std::abs(b));
        for (std::size_t i = 0; i < s.m_; ++i) {
            if (s.basis_[i] >= n_real) infeasibility += std::max(s.beta_[i], 0.0);
        }
        if (infeasibility > 1e-7 * scale) return {Status::Infeasible, {}, 0.0, s.iterations_};

        // Drive remaining artificials out of the basis; rows without an
        // eligible pivot are linearly dependent and dropped.
        s.width_ = n_real;
        for (std::size_t i = 0; i < s.m_;) {
            if (s.basis_[i] < s.width_) {
                ++i;
                continue;
            }
            std::ptrdiff_t best = -1;
            double best_abs = 1e-7;
            for (std::size_t j = 0; j < s.width_; ++j) {
                if (s.state_[j] == ColState::Basic) continue;
                const double a = std::abs(s.at(i, j));
                if (a > best_abs) {
                    best_abs = a;
                    best = static_cast<std::ptrdiff_t>(j);
                }
            }
            if (best < 0) {
                s.remove_row(i);
                continue;
            }
            const auto q = static_cast<std::size_t>(best);
            const double value = s.state_[q] == ColState::AtUpper ? s.upper_[q] : 0.0;
            s.beta_[i] = 0.0;
            s.state_[s.basis_[i]] = ColState::Blocked;
            s.basis_[i] = q;
            s.state_[q] = ColState::Basic;
            s.beta_[i] = value;
            s.eliminate_column(i, q);
            ++i;
        }
    }

    // Phase 2.
    s.width_ = n_real;
    std::fill(s.d_.begin(), s.d_.end(), 0.0);
    std::copy(phys_cost.begin(), phys_cost.end(), s.d_.begin());
    for (std::size_t i = 0; i < s.m_; ++i) {
        const std::size_t b = s.basis_[i];
        const double cb = b < n_real ? phys_cost[b] : 0.0;
        if (cb == 0.0) continue;
        s.k_.eliminate(std::span<double>(s.d_.data(), s.width_),
                       std::span<const double>(s.row(i), s.width_), cb);
    }
    for (std::size_t i = 0; i < s.m_; ++i) s.d_[s.basis_[i]] = 0.0;
    const auto outcome = s.run();
    LpSolution sol;
    sol.iterations = s.iterations_;
    if (outcome == Simplex::Outcome::IterationLimit) {
        sol.status = Status::IterationLimit;
        return sol;
    }
    if (outcome == Simplex::Outcome::Unbounded) {
        sol.status = Status::Unbounded;
        return sol;
    }

    std::vector<double> col_value(n_struct);
    for (std::size_t j = 0; j < n_struct; ++j) col_value[j] = s.column_value(place[j]);
    sol.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& vm = map[j];
        double x = vm.offset;
        if (vm.col >= 0) x += vm.sign * col_value[static_cast<std::size_t>(vm.col)];
        if (vm.col2 >= 0) x -= col_value[static_cast<std::size_t>(vm.col2)];
        sol.x[j] = std::clamp(x, bounds[j].lower, bounds[j].upper);
    }
    sol.status = Status::Optimal;
    sol.objective_value = evaluate_objective(lp, sol.x);
    return sol;
}

// --- checks ------------------------------------------------------------------

double evaluate_objective(const LinearProgram& lp, const std::vector<double>& x) {
    double z = 0.0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) z += lp.objective()[j] * x[j];
    return z;
}

FeasibilityReport verify(const LinearProgram& lp, const std::vector<double>& x) {
    if (x.size() != lp.num_vars()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "point has " + std::to_string(x.size()) + " entries, program has " +
                        std::to_string(lp.num_vars()) + " variables");
    }
    FeasibilityReport report;
    for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
        const auto& c = lp.constraints()[i];
        double lhs = 0.0;
        double magnitude = std::max(1.0, std::abs(c.rhs));
        for (const auto& t : c.terms) {
            lhs += t.coef * x[t.var];
            magnitude += std::abs(t.coef * x[t.var]);
        }
        double v = 0.0;
        switch (c.relation) {
        case Relation::LessEqual: v = std::max(0.0, lhs - c.rhs); break;
        case Relation::GreaterEqual: v = std::max(0.0, c.rhs - lhs); break;
        case Relation::Equal: v = std::abs(lhs - c.rhs); break;
        }
        if (v > report.max_constraint_violation) {
            report.max_constraint_violation = v;
            report.worst_constraint = Violation{i, v};
        }
        report.max_relative_violation = std::max(report.max_relative_violation, v / magnitude);
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const auto& b = lp.bounds()[j];
        const double v = std::max({0.0, b.lower - x[j], x[j] - b.upper});
        if (v > report.max_bound_violation) {
            report.max_bound_violation = v;
            report.worst_bound = Violation{j, v};
        }
    }
    return report;
}

}  // namespace mpimpe::lp

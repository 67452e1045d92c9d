#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pipeclimb/types.hpp"

namespace pipeclimb {

/// General-form linear program
///     min c'x   s.t.   Aeq x = beq,  G x <= h,  lo <= x <= hi.
/// Infinite bounds are allowed.
struct LpProblem {
    Eigen::MatrixXd Aeq;
    Eigen::VectorXd beq;
    Eigen::MatrixXd G;
    Eigen::VectorXd h;
    Eigen::VectorXd c;
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
    /// Optional |x_j| cost, applied through the plus/minus split of free
    /// variables (empty means none). Only meaningful for unbounded variables.
    Eigen::VectorXd abs_cost;

    int nvars() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double objective = 0;
};

/// Dense two-phase simplex with Bland's anti-cycling rule.
///
/// Deterministic: identical inputs give bitwise-identical outputs. Entering
/// variable: lowest-index negative reduced cost; leaving: lowest ratio, ties
/// to the lowest basis index, which makes the returned basis the
/// lexicographically smallest among the reachable optimal ones.
/// Pivot threshold 1e-11, feasibility tolerance 1e-9.
LpResult lp_solve(const LpProblem& p);

/// Feasibility probe: phase one only.
bool lp_feasible(const LpProblem& p);

inline constexpr double kLpPivotTol = 1e-11;
inline constexpr double kLpFeasTol = 1e-9;

}  // namespace pipeclimb

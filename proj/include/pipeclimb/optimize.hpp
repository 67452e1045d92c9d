#pragma once

#include <array>
#include <vector>

#include "pipeclimb/simplex.hpp"
#include "pipeclimb/statics.hpp"

namespace pipeclimb {

/// Equality-system sample with its recomputed residual.
struct EquilibriumSolution {
    Eigen::VectorXd values;
    double residual_norm = 0;  // ||A*values - b||_inf
};

/// Result of the spring-torque minimization.
struct SpringDesign {
    std::array<double, 4> joint_torques{};  // tau1..tau4 at the optimum, N*m
    double objective = 0;                   // sum |tau_j|
    EquilibriumSolution solution;
    std::array<double, 4> stiffness{};      // |tau_j| / |deflection_j|, N*m/rad
    std::array<double, 4> deflections{};    // pose angle minus preload, rad
};

/// Result of the limiting-friction estimation.
struct FrictionResult {
    std::vector<double> ratios;  // per-module F/N at the critical equilibrium
    double mu_lim = 0;           // max(ratios)
    EquilibriumSolution solution;
};

/// Minimize sum |tau_j| over {A x = b, |F| <= mu N, N >= 0, per-module
/// |sum F| <= traction limit}. The |tau| objective is linearized by the
/// tau+ / tau- split. Stiffness is converted with the joint deflections
/// implied by `springs` preloads (reference preloads by default).
SpringDesign solve_spring_lp(const StaticSystem& system, double mu);
SpringDesign solve_spring_lp(const StaticSystem& system, double mu,
                             const SpringSet& springs);

/// Limiting friction coefficient for climbing with installed springs.
///
/// The springs bound each passive torque by its deliverable magnitude
/// |tau_j| <= |k_j (theta_j - theta_init_j)|; mu_lim is the smallest mu for
/// which the bounded equilibrium system stays feasible (60-step bisection),
/// and the reported equilibrium is the sum-N^2-maximizing vertex at that
/// threshold. Throws InfeasibleError when even mu = 1 cannot hold the pose.
FrictionResult solve_friction_limit(const StaticSystem& system, const SpringSet& springs,
                                    const std::array<double, 4>& pose_angles);

/// Build the LP shared by both solvers (exposed for tests and the CLI dump).
LpProblem equilibrium_lp(const StaticSystem& system, double mu);

}  // namespace pipeclimb

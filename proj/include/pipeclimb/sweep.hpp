#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pipeclimb/config.hpp"
#include "pipeclimb/optimize.hpp"

namespace pipeclimb {

/// One infeasible station and why it failed.
struct StationFailure {
    double phi = 0;  // rad
    std::string reason;
};

/// Full bend-trajectory sweep output. Curves are aligned index-for-index
/// with `stations`; infeasible stations carry NaN curve entries.
struct SweepResult {
    std::vector<double> stations;                         // rad, ascending
    std::vector<std::array<double, 4>> stiffness_curves;  // N*m/rad
    std::vector<std::array<double, 4>> torque_curves;     // N*m
    std::vector<StationFailure> infeasible_stations;
    SpringSet selected_stiffness;                          // window-max rule
    std::pair<double, double> selection_window{0, 0};      // rad
    bool selection_partial = false;  // an in-window station was infeasible
};

/// Sweep the discretized bend trajectory: per station bend_pose ->
/// assemble_bend -> solve_spring_lp -> stiffness via deflection. Stations
/// may be evaluated in parallel; results are gathered in station order.
/// Throws Error when every station is infeasible.
SweepResult run_sweep(const RobotParams& robot, const PipeSpec& pipe, double mu, int n,
                      std::pair<double, double> window, const SpringSet& springs,
                      int threads = 0);
SweepResult run_sweep(const RobotParams& robot, const PipeSpec& pipe, double mu, int n,
                      std::pair<double, double> window);

/// One row of the mu vs mu_lim table.
struct MuRow {
    double mu = 0;
    std::optional<double> mu_lim;            // absent when the row failed
    std::array<double, 4> stiffness{};       // design springs at this mu, N*m/rad
    std::string failure;                     // empty when the row succeeded
};

/// For each mu: design springs on the straight vertical pose, then estimate
/// the limiting friction coefficient with those springs installed.
std::vector<MuRow> mu_vs_mu_lim(const RobotParams& robot, const PipeSpec& pipe,
                                const std::vector<double>& mu_grid);

}  // namespace pipeclimb

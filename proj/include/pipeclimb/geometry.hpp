#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "pipeclimb/types.hpp"

namespace pipeclimb {

using Vec2 = Eigen::Vector2d;

/// In-line pose in a straight vertical pipe: modules alternate walls, links
/// tilt across the bore.
struct StraightPose {
    double theta1 = 0;  // link-1 angle vs horizontal, rad
    double theta2 = 0;  // link-2 angle vs horizontal, rad
    std::array<int, 3> contact_sides = {+1, -1, +1};  // wall side per module
    std::array<double, 4> joint_angles = {0, 0, 0, 0};  // signed relative angle at J1..J4, rad
};

/// Pose at one station of a circular bend. The chain is laid out tail-first
/// from azimuth `phi`, advancing counterclockwise; submodule centers of
/// modules 1 and 3 ride the inner-wall circle, module 2 the outer one.
struct BendPose {
    double phi = 0;
    std::array<std::array<double, 3>, 3> submodule_angles{};   // rad, vs global x
    std::array<double, 2> link_angles{};                       // rad, vs global x
    std::array<std::array<Vec2, 3>, 3> submodule_centers{};
    std::array<Vec2, 2> link_centers{};
    Vec2 bend_center = Vec2::Zero();
    double inner_radius = 0;   // R_cin
    double outer_radius = 0;   // R_cout

    // Layout details consumed by the statics assembly.
    std::array<std::array<double, 3>, 3> submodule_azimuth{};  // rad
    std::array<Vec2, 4> passive_joint_pos{};                   // J1..J4
    std::array<std::array<Vec2, 2>, 3> hinge_joint_pos{};      // [module][hinge]
    std::array<double, 4> joint_angles{};                      // signed relative angle, rad
};

/// Solve the straight-pipe pose. Throws InfeasibleGeometryError when a link
/// cannot span the bore and ValidationError when D <= d.
StraightPose straight_pose(const PipeSpec& pipe, const RobotParams& robot);

/// Solve the bend pose at station angle phi (rad). Centers are placed by
/// chord stepping on the wall circles; the module-to-module transition is the
/// half-submodule + link + half-submodule chord placed by circle-circle
/// intersection.
BendPose bend_pose(const PipeSpec& pipe, const RobotParams& robot, double phi);

/// n uniformly spaced station angles covering [0, bend_extent).
std::vector<double> sweep_stations(const PipeSpec& pipe, int n);

}  // namespace pipeclimb

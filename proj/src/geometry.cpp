#include "pipeclimb/geometry.hpp"

#include <cmath>
#include <string>

namespace pipeclimb {

StraightPose straight_pose(const PipeSpec& pipe, const RobotParams& robot) {
    const double D = pipe.diameter;
    const double d = robot.module_diameter;
    if (!(D > d))
        throw ValidationError("diameter", "pipe bore must exceed the module diameter");
    const double span = D - d;
    for (int k = 0; k < 2; ++k) {
        if (span > robot.link_lengths[k])
            throw InfeasibleGeometryError("link " + std::to_string(k + 1) +
                                          " too short to span the bore: D-d=" +
                                          std::to_string(span));
    }
    StraightPose p;
    p.theta1 = kPi - std::acos(span / robot.link_lengths[0]);
    p.theta2 = std::acos(span / robot.link_lengths[1]);
    p.contact_sides = {+1, -1, +1};
    // Signed relative angles (tailward-direction differences) at J1..J4.
    p.joint_angles = {p.theta1 - kPi / 2, kPi / 2 - p.theta1,
                      p.theta2 - kPi / 2, kPi / 2 - p.theta2};
    return p;
}

namespace {

double chord_step(double chord, double radius, const char* what) {
    const double s = chord / (2.0 * radius);
    if (s > 1.0)
        throw InfeasibleGeometryError(std::string(what) +
                                      ": chord exceeds the wall-circle diameter");
    return 2.0 * std::asin(s);
}

double transition_step(double chord, double ra, double rb) {
    const double c = (ra * ra + rb * rb - chord * chord) / (2.0 * ra * rb);
    if (c < -1.0 || c > 1.0)
        throw InfeasibleGeometryError("robot too long for bend radius: transition chord " +
                                      std::to_string(chord) + " cannot bridge the wall circles");
    return std::acos(c);
}

}  // namespace

BendPose bend_pose(const PipeSpec& pipe, const RobotParams& robot, double phi) {
    if (!pipe.has_bend())
        throw ValidationError("bend_radius", "pipe has no bend geometry");
    if (robot.submodules_per_module != 3)
        throw ValidationError("submodules_per_module",
                              "bend pose requires the three-segment module fold");
    const double d = robot.module_diameter;
    const double D = pipe.diameter;
    if (!(D > d))
        throw ValidationError("diameter", "pipe bore must exceed the module diameter");
    const double rc = *pipe.bend_radius;

    BendPose p;
    p.phi = phi;
    p.bend_center = Vec2::Zero();
    p.inner_radius = rc + d / 2.0;
    p.outer_radius = rc + D - d / 2.0;

    const std::array<double, 3> radius_of = {p.inner_radius, p.outer_radius, p.inner_radius};
    std::array<double, 3> sub_len{};
    for (int m = 0; m < 3; ++m) sub_len[m] = robot.module_lengths[m] / 3.0;

    // Lay the chain tail-first (module 3 segment 3 at azimuth phi), advancing
    // counterclockwise. Within a module, consecutive centers step by the
    // submodule chord; between modules by the half-sub + link + half-sub chord.
    std::array<std::array<double, 3>, 3> az{};  // [module-1][sub-1]
    double a = phi;
    const int order[3] = {2, 1, 0};  // module indices tail->head (m3, m2, m1)
    for (int oi = 0; oi < 3; ++oi) {
        const int m = order[oi];
        const double R = radius_of[m];
        if (oi > 0) {
            const int prev = order[oi - 1];
            const double chord = sub_len[prev] / 2.0 + robot.link_lengths[m == 0 ? 0 : 1] +
                                 sub_len[m] / 2.0;
            a += transition_step(chord, radius_of[prev], R);
        }
        const double step = chord_step(sub_len[m], R, "submodule");
        for (int j = 2; j >= 0; --j) {  // segment 3 first (lowest azimuth)
            az[m][j] = a;
            if (j > 0) a += step;
        }
    }

    auto center = [&](int m, int j) {
        return Vec2(radius_of[m] * std::cos(az[m][j]), radius_of[m] * std::sin(az[m][j]));
    };
    auto ccw_tangent = [&](int m, int j) {
        return Vec2(-std::sin(az[m][j]), std::cos(az[m][j]));
    };

    for (int m = 0; m < 3; ++m) {
        for (int j = 0; j < 3; ++j) {
            p.submodule_azimuth[m][j] = az[m][j];
            p.submodule_centers[m][j] = center(m, j);
            p.submodule_angles[m][j] = wrap_angle(az[m][j] - kPi / 2);
        }
        p.hinge_joint_pos[m][0] = (center(m, 0) + center(m, 1)) / 2.0;
        p.hinge_joint_pos[m][1] = (center(m, 1) + center(m, 2)) / 2.0;
    }

    // Passive joints sit half a segment beyond the terminal submodule center,
    // along the wall-circle tangent toward the link.
    p.passive_joint_pos[0] = center(0, 2) - (sub_len[0] / 2.0) * ccw_tangent(0, 2);  // J1
    p.passive_joint_pos[1] = center(1, 0) + (sub_len[1] / 2.0) * ccw_tangent(1, 0);  // J2
    p.passive_joint_pos[2] = center(1, 2) - (sub_len[1] / 2.0) * ccw_tangent(1, 2);  // J3
    p.passive_joint_pos[3] = center(2, 0) + (sub_len[2] / 2.0) * ccw_tangent(2, 0);  // J4

    p.link_centers[0] = (p.passive_joint_pos[0] + p.passive_joint_pos[1]) / 2.0;
    p.link_centers[1] = (p.passive_joint_pos[2] + p.passive_joint_pos[3]) / 2.0;
    for (int k = 0; k < 2; ++k) {
        const Vec2 c = p.link_centers[k] - p.bend_center;
        p.link_angles[k] = wrap_angle(std::atan2(c.y(), c.x()) - kPi / 2);
    }

    // Relative joint angles: tailward direction of each body, differenced
    // across the joint (head-side body first).
    auto tailward_sub = [&](int m, int j) { return az[m][j] - kPi / 2; };
    auto dir = [](const Vec2& from, const Vec2& to) {
        const Vec2 v = to - from;
        return std::atan2(v.y(), v.x());
    };
    const double link1 = dir(p.passive_joint_pos[0], p.passive_joint_pos[1]);
    const double link2 = dir(p.passive_joint_pos[2], p.passive_joint_pos[3]);
    p.joint_angles[0] = wrap_angle(link1 - tailward_sub(0, 2));
    p.joint_angles[1] = wrap_angle(tailward_sub(1, 0) - link1);
    p.joint_angles[2] = wrap_angle(link2 - tailward_sub(1, 2));
    p.joint_angles[3] = wrap_angle(tailward_sub(2, 0) - link2);
    return p;
}

std::vector<double> sweep_stations(const PipeSpec& pipe, int n) {
    if (n < 2) throw ValidationError("steps", "need at least 2 stations");
    const double extent = pipe.bend_extent.value_or(2 * kPi);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = extent * i / n;
    return out;
}

}  // namespace pipeclimb

#pragma once

#include <string>
#include <tuple>

#include "pipeclimb/types.hpp"

namespace pipeclimb {

struct Config {
    RobotParams robot;
    PipeSpec pipe;
    std::optional<SpringSet> springs;
};

/// Reference spring installation: the stiffness set shipped with the
/// prototype, with preloads chosen so that the straight-pose joint torques in
/// a 75 mm bore reproduce the design torques of that installation.
SpringSet reference_springs();

/// Straight-pose deflections (rad) of the reference installation, i.e.
/// design torque / stiffness per joint.
std::array<double, 4> reference_deflections();

/// Parse a flat key-value document (one `key = value...` per line, `#`
/// comments). Unknown keys are an error; missing keys take defaults.
/// Angles in the document are degrees, stiffness N*m/deg; both are converted
/// to radians internally.
Config load_config(const std::string& text);

/// Inverse of load_config; load_config(save_config(c)) reproduces c exactly.
std::string save_config(const Config& c);

}  // namespace pipeclimb

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace pipeclimb {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegPerRad = 180.0 / kPi;
inline constexpr double kRadPerDeg = kPi / 180.0;

// Inverse pair through the same constant, so a document-first round trip
// (load, re-serialize, load) reproduces every field bit-exactly.
inline double deg2rad(double d) { return d / kDegPerRad; }
inline double rad2deg(double r) { return r * kDegPerRad; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a > kPi) a -= 2.0 * kPi;
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A domain invariant was violated; `field()` names the offending input.
class ValidationError : public Error {
  public:
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Config text could not be parsed; carries the 1-based line and the key.
class ParseError : public Error {
  public:
    ParseError(int line, std::string key, const std::string& what)
        : Error("line " + std::to_string(line) + " (" + key + "): " + what),
          line_(line), key_(std::move(key)) {}
    int line() const { return line_; }
    const std::string& key() const { return key_; }

  private:
    int line_;
    std::string key_;
};

/// The requested pose cannot exist (link too short, bend too tight, ...).
class InfeasibleGeometryError : public Error {
  public:
    using Error::Error;
};

/// A constrained program has an empty feasible set.
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Mechanical parameters of the three-module crawler chain.
///
/// Lengths in meters, masses in kilograms, torque in N*m; gravity in m/s^2.
struct RobotParams {
    double module_mass = 0.150;
    double link_mass = 0.020;
    std::array<double, 3> module_lengths = {0.14, 0.14, 0.14};
    double module_diameter = 0.050;
    std::array<double, 2> link_lengths = {0.060, 0.060};
    double motor_torque_max = 1.0;
    double gravity = 9.81;
    int submodules_per_module = 3;

    /// Per-module traction cap from the two drive motors: 2*tau_max/(d/2).
    double traction_limit() const {
        return 2.0 * motor_torque_max / (module_diameter / 2.0);
    }

    void validate() const;
};

/// Pipe geometry. `bend_radius` is the radius of the circle traced by the
/// inner wall; absent for a straight run. `bend_extent` is the swept angle.
struct PipeSpec {
    double diameter = 0.075;
    std::optional<double> bend_radius;
    std::optional<double> bend_extent;
    double friction_mu = 0.7;

    bool has_bend() const { return bend_radius.has_value(); }
    void validate() const;
};

/// Torsion-spring installation at the four passive joints.
///
/// `preload_angles` are the relaxed joint angles theta_initial in the signed
/// relative-angle convention used by the pose solvers; the spring torque at a
/// joint currently at angle theta is k*(theta - theta_initial).
struct SpringSet {
    std::array<double, 4> stiffness = {0, 0, 0, 0};       // N*m/rad
    std::array<double, 4> preload_angles = {0, 0, 0, 0};  // rad

    void validate() const;
};

/// Torque of a linear torsion spring, sign carries deflection direction.
inline double spring_torque(double k, double theta, double theta_initial) {
    return k * (theta - theta_initial);
}

}  // namespace pipeclimb

#include "pipeclimb/config.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "pipeclimb/geometry.hpp"

namespace pipeclimb {

namespace {

// Reference spring installation: design torques and stiffness (N*m/deg) at
// the four passive joints, calibrated for a 75 mm bore.
constexpr std::array<double, 4> kRefTorque = {0.2359, 0.3683, 0.2760, 0.1310};
constexpr std::array<double, 4> kRefStiffnessNmDeg = {0.0096, 0.0056, 0.0042, 0.0053};
constexpr double kRefBore = 0.075;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void RobotParams::validate() const {
    if (!(module_mass > 0)) throw ValidationError("module_mass", "must be > 0");
    if (!(link_mass > 0)) throw ValidationError("link_mass", "must be > 0");
    for (double l : module_lengths)
        if (!(l > 0)) throw ValidationError("module_lengths", "entries must be > 0");
    if (!(module_diameter > 0)) throw ValidationError("module_diameter", "must be > 0");
    for (double l : link_lengths)
        if (!(l > 0)) throw ValidationError("link_lengths", "entries must be > 0");
    if (!(motor_torque_max > 0)) throw ValidationError("motor_torque_max", "must be > 0");
    if (!(gravity > 0)) throw ValidationError("gravity", "must be > 0");
    if (submodules_per_module < 1)
        throw ValidationError("submodules_per_module", "must be >= 1");
}

void PipeSpec::validate() const {
    if (!(diameter > 0)) throw ValidationError("diameter", "must be > 0");
    if (!(friction_mu > 0 && friction_mu <= 1))
        throw ValidationError("friction_mu", "must be in (0, 1]");
    if (bend_radius && !(*bend_radius > 0))
        throw ValidationError("bend_radius", "must be > 0");
    if (bend_extent && !(*bend_extent > 0 && *bend_extent <= 2 * kPi + 1e-12))
        throw ValidationError("bend_extent", "must be in (0, 360] degrees");
}

void SpringSet::validate() const {
    for (double k : stiffness)
        if (k < 0) throw ValidationError("stiffness", "entries must be >= 0");
}

std::array<double, 4> reference_deflections() {
    std::array<double, 4> d{};
    for (int j = 0; j < 4; ++j)
        d[j] = deg2rad(kRefTorque[j] / kRefStiffnessNmDeg[j]);
    return d;
}

SpringSet reference_springs() {
    SpringSet s;
    for (int j = 0; j < 4; ++j) s.stiffness[j] = kRefStiffnessNmDeg[j] * kDegPerRad;
    // Preloads put the straight-pose torques in the reference bore at the
    // design values: theta_init = straight joint angle - design deflection.
    RobotParams robot;
    PipeSpec pipe;
    pipe.diameter = kRefBore;
    StraightPose pose = straight_pose(pipe, robot);
    std::array<double, 4> defl = reference_deflections();
    for (int j = 0; j < 4; ++j) s.preload_angles[j] = pose.joint_angles[j] - defl[j];
    return s;
}

namespace {

struct Line {
    int number;
    std::string key;
    std::vector<double> values;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto eq = raw.find('=');
        bool blank = raw.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        if (eq == std::string::npos) throw ParseError(lineno, raw, "expected 'key = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        Line l;
        l.number = lineno;
        l.key = trim(raw.substr(0, eq));
        if (l.key.empty()) throw ParseError(lineno, "", "missing key");
        std::istringstream vals(raw.substr(eq + 1));
        std::string tok;
        while (vals >> tok) {
            try {
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                l.values.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(lineno, l.key, "bad numeric value '" + tok + "'");
            }
        }
        if (l.values.empty()) throw ParseError(lineno, l.key, "missing value");
        out.push_back(std::move(l));
    }
    return out;
}

void expect_count(const Line& l, std::size_t n) {
    if (l.values.size() != n)
        throw ParseError(l.number, l.key,
                         "expected " + std::to_string(n) + " value(s), got " +
                             std::to_string(l.values.size()));
}

}  // namespace

Config load_config(const std::string& text) {
    Config c;
    bool springs_touched = false;
    SpringSet springs = reference_springs();
    for (const Line& l : tokenize(text)) {
        if (l.key == "module_mass") { expect_count(l, 1); c.robot.module_mass = l.values[0]; }
        else if (l.key == "link_mass") { expect_count(l, 1); c.robot.link_mass = l.values[0]; }
        else if (l.key == "module_lengths") {
            expect_count(l, 3);
            for (int i = 0; i < 3; ++i) c.robot.module_lengths[i] = l.values[i];
        }
        else if (l.key == "module_diameter") { expect_count(l, 1); c.robot.module_diameter = l.values[0]; }
        else if (l.key == "link_lengths") {
            expect_count(l, 2);
            for (int i = 0; i < 2; ++i) c.robot.link_lengths[i] = l.values[i];
        }
        else if (l.key == "motor_torque_max") { expect_count(l, 1); c.robot.motor_torque_max = l.values[0]; }
        else if (l.key == "gravity") { expect_count(l, 1); c.robot.gravity = l.values[0]; }
        else if (l.key == "submodules_per_module") {
            expect_count(l, 1);
            c.robot.submodules_per_module = static_cast<int>(l.values[0]);
        }
        else if (l.key == "diameter") { expect_count(l, 1); c.pipe.diameter = l.values[0]; }
        else if (l.key == "bend_radius") { expect_count(l, 1); c.pipe.bend_radius = l.values[0]; }
        else if (l.key == "bend_extent") { expect_count(l, 1); c.pipe.bend_extent = deg2rad(l.values[0]); }
        else if (l.key == "friction_mu") { expect_count(l, 1); c.pipe.friction_mu = l.values[0]; }
        else if (l.key == "stiffness") {
            expect_count(l, 4);
            for (int i = 0; i < 4; ++i) springs.stiffness[i] = l.values[i] * kDegPerRad;
            springs_touched = true;
        }
        else if (l.key == "preload_angles") {
            expect_count(l, 4);
            for (int i = 0; i < 4; ++i) springs.preload_angles[i] = deg2rad(l.values[i]);
            springs_touched = true;
        }
        else {
            throw ParseError(l.number, l.key, "unknown key");
        }
    }
    c.robot.validate();
    c.pipe.validate();
    if (springs_touched) {
        springs.validate();
        c.springs = springs;
    }
    return c;
}

std::string save_config(const Config& c) {
    std::ostringstream out;
    out << "module_mass = " << fmt17(c.robot.module_mass) << "\n";
    out << "link_mass = " << fmt17(c.robot.link_mass) << "\n";
    out << "module_lengths =";
    for (double v : c.robot.module_lengths) out << " " << fmt17(v);
    out << "\nmodule_diameter = " << fmt17(c.robot.module_diameter) << "\n";
    out << "link_lengths =";
    for (double v : c.robot.link_lengths) out << " " << fmt17(v);
    out << "\nmotor_torque_max = " << fmt17(c.robot.motor_torque_max) << "\n";
    out << "gravity = " << fmt17(c.robot.gravity) << "\n";
    out << "submodules_per_module = " << c.robot.submodules_per_module << "\n";
    out << "diameter = " << fmt17(c.pipe.diameter) << "\n";
    if (c.pipe.bend_radius) out << "bend_radius = " << fmt17(*c.pipe.bend_radius) << "\n";
    if (c.pipe.bend_extent) out << "bend_extent = " << fmt17(rad2deg(*c.pipe.bend_extent)) << "\n";
    out << "friction_mu = " << fmt17(c.pipe.friction_mu) << "\n";
    if (c.springs) {
        out << "stiffness =";
        for (double v : c.springs->stiffness) out << " " << fmt17(v / kDegPerRad);
        out << "\npreload_angles =";
        for (double v : c.springs->preload_angles) out << " " << fmt17(rad2deg(v));
        out << "\n";
    }
    return out.str();
}

}  // namespace pipeclimb

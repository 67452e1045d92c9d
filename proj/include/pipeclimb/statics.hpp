#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "pipeclimb/geometry.hpp"
#include "pipeclimb/types.hpp"

namespace pipeclimb {

/// Per-variable box bounds; +-inf when unbounded.
struct VarBound {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

/// Assembled quasi-static equality system A x = b over contact frictions F,
/// normals N and joint torques tau, with box bounds and the no-slip pairing.
///
/// Row convention: one x-force row, one y-force row, then one moment row per
/// body of the chain, each taken about that body's pivot joint and scaled so
/// the pivot torque column carries coefficient -1.
struct StaticSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    std::vector<std::string> col_names;
    std::vector<std::string> row_names;
    std::map<std::string, int> var_index;
    std::vector<VarBound> bounds;
    std::vector<std::pair<int, int>> friction_pairs;      // (F col, N col), F <= mu*N
    std::vector<std::vector<int>> module_friction_groups; // F columns per module
    double traction_limit = 0;                            // |sum F per module| cap
    std::array<int, 4> passive_tau_cols = {-1, -1, -1, -1};
    std::array<double, 4> joint_angles = {0, 0, 0, 0};    // pose angles at J1..J4, rad

    int cols() const { return static_cast<int>(A.cols()); }
    int rows() const { return static_cast<int>(A.rows()); }
};

/// Straight-pipe system: one contact per module, 10 columns
/// (F1..F3, N1..N3, tau1..tau4).
StaticSystem assemble_straight(const StraightPose& pose, const RobotParams& robot,
                               const PipeSpec& pipe);

/// Bend system: one contact per submodule, free hinge torques inside each
/// module plus the four passive joint torques.
StaticSystem assemble_bend(const BendPose& pose, const RobotParams& robot,
                           const PipeSpec& pipe);

/// A*x - b. Throws ValidationError on dimension mismatch.
Eigen::VectorXd residual(const StaticSystem& system, const Eigen::VectorXd& x);

/// Plain-text audit dump: one `row col coefficient` line per nonzero entry
/// plus the right-hand side, for checking against a hand derivation.
std::string dump_matrix(const StaticSystem& system);

}  // namespace pipeclimb

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pipeclimb/config.hpp"
#include "pipeclimb/csvio.hpp"
#include "pipeclimb/geometry.hpp"
#include "pipeclimb/optimize.hpp"
#include "pipeclimb/statics.hpp"
#include "pipeclimb/sweep.hpp"

namespace py = pybind11;
using namespace pipeclimb;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quasi-static pose solving, equilibrium assembly and spring/friction "
              "optimization for a three-module in-pipe climbing robot";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InfeasibleGeometryError>(m, "InfeasibleGeometryError",
                                                    PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<RobotParams>(m, "RobotParams")
        .def(py::init<>())
        .def_readwrite("module_mass", &RobotParams::module_mass)
        .def_readwrite("link_mass", &RobotParams::link_mass)
        .def_readwrite("module_lengths", &RobotParams::module_lengths)
        .def_readwrite("module_diameter", &RobotParams::module_diameter)
        .def_readwrite("link_lengths", &RobotParams::link_lengths)
        .def_readwrite("motor_torque_max", &RobotParams::motor_torque_max)
        .def_readwrite("gravity", &RobotParams::gravity)
        .def_readwrite("submodules_per_module", &RobotParams::submodules_per_module)
        .def("traction_limit", &RobotParams::traction_limit)
        .def("validate", &RobotParams::validate);

    py::class_<PipeSpec>(m, "PipeSpec")
        .def(py::init<>())
        .def_readwrite("diameter", &PipeSpec::diameter)
        .def_readwrite("bend_radius", &PipeSpec::bend_radius)
        .def_readwrite("bend_extent", &PipeSpec::bend_extent)
        .def_readwrite("friction_mu", &PipeSpec::friction_mu)
        .def("has_bend", &PipeSpec::has_bend)
        .def("validate", &PipeSpec::validate);

    py::class_<SpringSet>(m, "SpringSet")
        .def(py::init<>())
        .def_readwrite("stiffness", &SpringSet::stiffness)
        .def_readwrite("preload_angles", &SpringSet::preload_angles);

    py::class_<Config>(m, "Config")
        .def(py::init<>())
        .def_readwrite("robot", &Config::robot)
        .def_readwrite("pipe", &Config::pipe)
        .def_readwrite("springs", &Config::springs);

    py::class_<StraightPose>(m, "StraightPose")
        .def_readonly("theta1", &StraightPose::theta1)
        .def_readonly("theta2", &StraightPose::theta2)
        .def_readonly("contact_sides", &StraightPose::contact_sides)
        .def_readonly("joint_angles", &StraightPose::joint_angles);

    py::class_<BendPose>(m, "BendPose")
        .def_readonly("phi", &BendPose::phi)
        .def_readonly("submodule_angles", &BendPose::submodule_angles)
        .def_readonly("link_angles", &BendPose::link_angles)
        .def_readonly("submodule_centers", &BendPose::submodule_centers)
        .def_readonly("link_centers", &BendPose::link_centers)
        .def_readonly("bend_center", &BendPose::bend_center)
        .def_readonly("inner_radius", &BendPose::inner_radius)
        .def_readonly("outer_radius", &BendPose::outer_radius)
        .def_readonly("joint_angles", &BendPose::joint_angles);

    py::class_<StaticSystem>(m, "StaticSystem")
        .def_readonly("A", &StaticSystem::A)
        .def_readonly("b", &StaticSystem::b)
        .def_readonly("col_names", &StaticSystem::col_names)
        .def_readonly("row_names", &StaticSystem::row_names)
        .def_readonly("friction_pairs", &StaticSystem::friction_pairs)
        .def_readonly("traction_limit", &StaticSystem::traction_limit)
        .def_readonly("joint_angles", &StaticSystem::joint_angles)
        .def("cols", &StaticSystem::cols)
        .def("rows", &StaticSystem::rows);

    py::class_<EquilibriumSolution>(m, "EquilibriumSolution")
        .def_readonly("values", &EquilibriumSolution::values)
        .def_readonly("residual_norm", &EquilibriumSolution::residual_norm);

    py::class_<SpringDesign>(m, "SpringDesign")
        .def_readonly("joint_torques", &SpringDesign::joint_torques)
        .def_readonly("objective", &SpringDesign::objective)
        .def_readonly("solution", &SpringDesign::solution)
        .def_readonly("stiffness", &SpringDesign::stiffness)
        .def_readonly("deflections", &SpringDesign::deflections);

    py::class_<FrictionResult>(m, "FrictionResult")
        .def_readonly("ratios", &FrictionResult::ratios)
        .def_readonly("mu_lim", &FrictionResult::mu_lim)
        .def_readonly("solution", &FrictionResult::solution);

    py::class_<StationFailure>(m, "StationFailure")
        .def_readonly("phi", &StationFailure::phi)
        .def_readonly("reason", &StationFailure::reason);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("stations", &SweepResult::stations)
        .def_readonly("stiffness_curves", &SweepResult::stiffness_curves)
        .def_readonly("torque_curves", &SweepResult::torque_curves)
        .def_readonly("infeasible_stations", &SweepResult::infeasible_stations)
        .def_readonly("selected_stiffness", &SweepResult::selected_stiffness)
        .def_readonly("selection_window", &SweepResult::selection_window)
        .def_readonly("selection_partial", &SweepResult::selection_partial);

    py::class_<MuRow>(m, "MuRow")
        .def_readonly("mu", &MuRow::mu)
        .def_readonly("mu_lim", &MuRow::mu_lim)
        .def_readonly("stiffness", &MuRow::stiffness)
        .def_readonly("failure", &MuRow::failure);

    m.def("spring_torque", &spring_torque, py::arg("k"), py::arg("theta"),
          py::arg("theta_initial"));
    m.def("reference_springs", &reference_springs);
    m.def("reference_deflections", &reference_deflections);
    m.def("load_config", &load_config, py::arg("text"));
    m.def("save_config", &save_config, py::arg("config"));
    m.def("straight_pose", &straight_pose, py::arg("pipe"), py::arg("robot"));
    m.def("bend_pose", &bend_pose, py::arg("pipe"), py::arg("robot"), py::arg("phi"));
    m.def("sweep_stations", &sweep_stations, py::arg("pipe"), py::arg("n"));
    m.def("assemble_straight", &assemble_straight, py::arg("pose"), py::arg("robot"),
          py::arg("pipe"));
    m.def("assemble_bend", &assemble_bend, py::arg("pose"), py::arg("robot"),
          py::arg("pipe"));
    m.def("residual", &residual, py::arg("system"), py::arg("x"));
    m.def("dump_matrix", &dump_matrix, py::arg("system"));
    m.def("solve_spring_lp",
          py::overload_cast<const StaticSystem&, double>(&solve_spring_lp),
          py::arg("system"), py::arg("mu"));
    m.def("solve_spring_lp",
          py::overload_cast<const StaticSystem&, double, const SpringSet&>(&solve_spring_lp),
          py::arg("system"), py::arg("mu"), py::arg("springs"));
    m.def("solve_friction_limit", &solve_friction_limit, py::arg("system"),
          py::arg("springs"), py::arg("pose_angles"));
    m.def("run_sweep",
          py::overload_cast<const RobotParams&, const PipeSpec&, double, int,
                            std::pair<double, double>>(&run_sweep),
          py::arg("robot"), py::arg("pipe"), py::arg("mu"), py::arg("n"), py::arg("window"));
    m.def("run_sweep",
          py::overload_cast<const RobotParams&, const PipeSpec&, double, int,
                            std::pair<double, double>, const SpringSet&, int>(&run_sweep),
          py::arg("robot"), py::arg("pipe"), py::arg("mu"), py::arg("n"), py::arg("window"),
          py::arg("springs"), py::arg("threads") = 0);
    m.def("mu_vs_mu_lim", &mu_vs_mu_lim, py::arg("robot"), py::arg("pipe"),
          py::arg("mu_grid"));

    m.attr("__version__") = "0.1.0";
}

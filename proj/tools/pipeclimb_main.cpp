#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "pipeclimb/config.hpp"
#include "pipeclimb/csvio.hpp"
#include "pipeclimb/geometry.hpp"
#include "pipeclimb/optimize.hpp"
#include "pipeclimb/statics.hpp"
#include "pipeclimb/svg.hpp"
#include "pipeclimb/sweep.hpp"

namespace fs = std::filesystem;
using namespace pipeclimb;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kUsage = 2, kInfeasible = 3, kIo = 4 };

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "csv";
    double mu = -1;        // <0: take from config
    int steps = 360;
    std::pair<double, double> window_deg{0.0, 150.0};
    double phi_deg = 0.0;
    std::vector<double> mu_grid;
    bool dump_matrix_flag = false;
    unsigned seed = 0;  // reserved for sampling diagnostics in test harnesses
};

std::string num(double v) { return csv_num(v); }

Config load(const Options& opt) {
    if (opt.config_path.empty()) return Config{};
    std::ifstream in(opt.config_path);
    if (!in) throw IoError("cannot read config: " + opt.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

double pick_mu(const Options& opt, const Config& cfg) {
    return opt.mu > 0 ? opt.mu : cfg.pipe.friction_mu;
}

SpringSet springs_of(const Config& cfg) {
    return cfg.springs ? *cfg.springs : reference_springs();
}

PipeSpec with_default_bend(PipeSpec pipe) {
    if (!pipe.bend_radius) pipe.bend_radius = 1.5 * pipe.diameter;
    if (!pipe.bend_extent) pipe.bend_extent = 2 * kPi;
    return pipe;
}

void write_out(const Options& opt, const std::string& name, const std::string& text) {
    fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    write_file((dir / name).string(), text);
}

void maybe_dump(const Options& opt, const StaticSystem& sys, const std::string& name) {
    if (opt.dump_matrix_flag) write_out(opt, name, dump_matrix(sys));
}

int cmd_solve_straight(const Options& opt) {
    const Config cfg = load(opt);
    const double mu = pick_mu(opt, cfg);
    const StraightPose pose = straight_pose(cfg.pipe, cfg.robot);
    const StaticSystem sys = assemble_straight(pose, cfg.robot, cfg.pipe);
    maybe_dump(opt, sys, "matrix_dump.txt");
    const SpringSet springs = springs_of(cfg);
    const SpringDesign d = solve_spring_lp(sys, mu, springs);

    std::ostringstream rep;
    rep << "straight-pipe climbing design (version " << kVersion << ")\n";
    rep << "bore D = " << num(cfg.pipe.diameter) << " m, module d = "
        << num(cfg.robot.module_diameter) << " m, mu = " << num(mu) << "\n\n";
    rep << "pose angles:\n";
    rep << "  theta1 = " << num(rad2deg(pose.theta1)) << " deg\n";
    rep << "  theta2 = " << num(rad2deg(pose.theta2)) << " deg\n\n";
    rep << "optimal passive-joint torques (N*m):\n";
    for (int j = 0; j < 4; ++j)
        rep << "  tau" << j + 1 << " = " << num(d.joint_torques[j]) << "\n";
    rep << "objective sum|tau| = " << num(d.objective) << " N*m\n";
    rep << "equilibrium residual = " << num(d.solution.residual_norm) << "\n\n";
    rep << "spring stiffness from pose deflections (N*m/deg):\n";
    for (int j = 0; j < 4; ++j)
        rep << "  k" << j + 1 << " = " << num(d.stiffness[j] * kRadPerDeg)
            << "  (deflection " << num(rad2deg(d.deflections[j])) << " deg)\n";
    write_out(opt, "straight_report.txt", rep.str());

    CsvTable t;
    t.header = {"theta1_deg", "theta2_deg", "tau1", "tau2", "tau3", "tau4",
                "k1_nm_per_deg", "k2_nm_per_deg", "k3_nm_per_deg", "k4_nm_per_deg"};
    std::vector<std::string> row{num(rad2deg(pose.theta1)), num(rad2deg(pose.theta2))};
    for (int j = 0; j < 4; ++j) row.push_back(num(d.joint_torques[j]));
    for (int j = 0; j < 4; ++j) row.push_back(num(d.stiffness[j] * kRadPerDeg));
    t.rows.push_back(row);
    if (opt.format != "svg") write_out(opt, "straight.csv", to_csv(t));
    return kOk;
}

int cmd_solve_bend(const Options& opt) {
    const Config cfg = load(opt);
    const double mu = pick_mu(opt, cfg);
    const PipeSpec pipe = with_default_bend(cfg.pipe);
    const BendPose pose = bend_pose(pipe, cfg.robot, deg2rad(opt.phi_deg));
    const StaticSystem sys = assemble_bend(pose, cfg.robot, pipe);
    maybe_dump(opt, sys, "matrix_dump.txt");
    const SpringDesign d = solve_spring_lp(sys, mu, springs_of(cfg));

    std::ostringstream rep;
    rep << "bend station design at phi = " << num(opt.phi_deg) << " deg (version "
        << kVersion << ")\n";
    rep << "inner wall circle R = " << num(pose.inner_radius) << " m, outer R = "
        << num(pose.outer_radius) << " m, mu = " << num(mu) << "\n\n";
    rep << "optimal passive-joint torques (N*m) and stiffness (N*m/deg):\n";
    for (int j = 0; j < 4; ++j)
        rep << "  tau" << j + 1 << " = " << num(d.joint_torques[j]) << "   k" << j + 1
            << " = " << num(d.stiffness[j] * kRadPerDeg) << "\n";
    rep << "equilibrium residual = " << num(d.solution.residual_norm) << "\n";
    write_out(opt, "bend_report.txt", rep.str());

    CsvTable t;
    t.header = {"phi_deg", "tau1", "tau2", "tau3", "tau4",
                "k1", "k2", "k3", "k4"};
    std::vector<std::string> row{num(opt.phi_deg)};
    for (int j = 0; j < 4; ++j) row.push_back(num(d.joint_torques[j]));
    for (int j = 0; j < 4; ++j) row.push_back(num(d.stiffness[j] * kRadPerDeg));
    t.rows.push_back(row);
    if (opt.format != "svg") write_out(opt, "bend.csv", to_csv(t));
    return kOk;
}

CsvTable sweep_table(const SweepResult& res) {
    CsvTable t;
    t.header = {"phi_deg", "k1", "k2", "k3", "k4",
                "tau1", "tau2", "tau3", "tau4", "feasible"};
    std::set<long> bad;
    for (const auto& f : res.infeasible_stations)
        bad.insert(std::lround(f.phi * 1e12));
    for (std::size_t i = 0; i < res.stations.size(); ++i) {
        const bool ok = !bad.count(std::lround(res.stations[i] * 1e12));
        std::vector<std::string> row{num(rad2deg(res.stations[i]))};
        for (int j = 0; j < 4; ++j)
            row.push_back(ok ? num(res.stiffness_curves[i][j] * kRadPerDeg) : "");
        for (int j = 0; j < 4; ++j)
            row.push_back(ok ? num(res.torque_curves[i][j]) : "");
        row.push_back(ok ? "1" : "0");
        t.rows.push_back(row);
    }
    return t;
}

std::string sweep_svg(const SweepResult& res) {
    std::vector<SvgSeries> series(4);
    const char* names[4] = {"k1", "k2", "k3", "k4"};
    std::size_t feasible = 0;
    for (int j = 0; j < 4; ++j) {
        series[j].label = names[j];
        for (std::size_t i = 0; i < res.stations.size(); ++i) {
            series[j].x.push_back(rad2deg(res.stations[i]));
            series[j].y.push_back(res.stiffness_curves[i][j] * kRadPerDeg);
        }
    }
    for (std::size_t i = 0; i < res.stations.size(); ++i)
        if (std::isfinite(res.stiffness_curves[i][0])) ++feasible;
    std::optional<std::string> note;
    if (feasible == 0) note = "no feasible stations";
    return svg_line_plot("spring stiffness vs station angle", "phi (deg)",
                         "stiffness (N*m/deg)", series, note);
}

int cmd_sweep(const Options& opt) {
    const Config cfg = load(opt);
    const double mu = pick_mu(opt, cfg);
    const PipeSpec pipe = with_default_bend(cfg.pipe);
    const std::pair<double, double> window{deg2rad(opt.window_deg.first),
                                           deg2rad(opt.window_deg.second)};
    const SweepResult res =
        run_sweep(cfg.robot, pipe, mu, opt.steps, window, springs_of(cfg), 0);
    if (opt.dump_matrix_flag) {
        const BendPose pose = bend_pose(pipe, cfg.robot, res.stations.front());
        maybe_dump(opt, assemble_bend(pose, cfg.robot, pipe), "matrix_dump.txt");
    }

    if (opt.format != "svg") write_out(opt, "sweep.csv", to_csv(sweep_table(res)));
    if (opt.format != "csv") write_out(opt, "sweep.svg", sweep_svg(res));

    std::ostringstream rep;
    rep << "bend-trajectory sweep: " << opt.steps << " stations, mu = " << num(mu)
        << " (version " << kVersion << ")\n";
    rep << "selection window [" << num(opt.window_deg.first) << ", "
        << num(opt.window_deg.second) << "] deg"
        << (res.selection_partial ? " (partial: infeasible stations inside)" : "") << "\n";
    rep << "infeasible stations: " << res.infeasible_stations.size() << "\n\n";
    rep << "selected stiffness, window max (N*m/deg):\n";
    for (int j = 0; j < 4; ++j)
        rep << "  k" << j + 1 << " = "
            << num(res.selected_stiffness.stiffness[j] * kRadPerDeg) << "\n";
    write_out(opt, "sweep_report.txt", rep.str());
    return kOk;
}

int cmd_friction_limit(const Options& opt) {
    const Config cfg = load(opt);
    const StraightPose pose = straight_pose(cfg.pipe, cfg.robot);
    const StaticSystem sys = assemble_straight(pose, cfg.robot, cfg.pipe);
    maybe_dump(opt, sys, "matrix_dump.txt");
    const FrictionResult f = solve_friction_limit(sys, springs_of(cfg), pose.joint_angles);

    std::ostringstream rep;
    rep << "limiting friction coefficient, vertical climb (version " << kVersion << ")\n\n";
    rep << "mu_lim = " << num(f.mu_lim) << "\n";
    rep << "per-module F/N ratios at the critical equilibrium:\n";
    for (std::size_t i = 0; i < f.ratios.size(); ++i)
        rep << "  module " << i + 1 << ": " << num(f.ratios[i]) << "\n";
    rep << "equilibrium residual = " << num(f.solution.residual_norm) << "\n";
    write_out(opt, "friction_report.txt", rep.str());

    CsvTable t;
    t.header = {"module", "ratio", "mu_lim"};
    for (std::size_t i = 0; i < f.ratios.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), num(f.ratios[i]), num(f.mu_lim)});
    if (opt.format != "svg") write_out(opt, "friction_limit.csv", to_csv(t));
    return kOk;
}

int cmd_mu_curve(const Options& opt) {
    const Config cfg = load(opt);
    std::vector<double> grid = opt.mu_grid;
    if (grid.empty())
        for (double mu = 0.5; mu <= 1.0 + 1e-9; mu += 0.1) grid.push_back(mu);
    const auto rows = mu_vs_mu_lim(cfg.robot, cfg.pipe, grid);

    CsvTable t;
    t.header = {"mu", "mu_lim", "k1", "k2", "k3", "k4"};
    for (const auto& r : rows) {
        std::vector<std::string> row{num(r.mu),
                                     r.mu_lim ? num(*r.mu_lim) : std::string()};
        for (int j = 0; j < 4; ++j) row.push_back(num(r.stiffness[j] * kRadPerDeg));
        t.rows.push_back(row);
    }
    if (opt.format != "svg") write_out(opt, "mu_curve.csv", to_csv(t));
    if (opt.format != "csv") {
        SvgSeries s;
        s.label = "mu_lim";
        for (const auto& r : rows) {
            s.x.push_back(r.mu);
            s.y.push_back(r.mu_lim ? *r.mu_lim
                                   : std::numeric_limits<double>::quiet_NaN());
        }
        write_out(opt, "mu_curve.svg",
                  svg_line_plot("limiting friction vs design friction", "mu",
                                "mu_lim", {s}));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"design-optimization pipeline for a compliant three-module in-pipe "
                 "climbing robot"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "key-value config file");
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--format", opt.format, "csv|svg|both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    app.add_option("--mu", opt.mu, "friction coefficient override");
    app.add_option("--seed", opt.seed, "seed for sampling diagnostics");
    app.add_flag("--dump-matrix", opt.dump_matrix_flag,
                 "write the statics audit dump (matrix_dump.txt)");

    auto* straight = app.add_subcommand("solve-straight", "vertical straight-pipe design");
    straight->fallthrough();
    auto* bend = app.add_subcommand("solve-bend", "single bend-station design");
    bend->fallthrough();
    bend->add_option("--phi", opt.phi_deg, "station angle, degrees");
    auto* sweep = app.add_subcommand("sweep", "full bend-trajectory sweep");
    sweep->fallthrough();
    sweep->add_option("--steps", opt.steps, "number of stations (>= 2)");
    sweep->add_option("--window", opt.window_deg,
                      "selection window lo,hi in degrees")
        ->delimiter(',');
    auto* fric = app.add_subcommand("friction-limit",
                                    "limiting friction coefficient for vertical climb");
    fric->fallthrough();
    auto* curve = app.add_subcommand("mu-curve", "mu vs mu_lim table over a mu grid");
    curve->fallthrough();
    curve->add_option("--mu-grid", opt.mu_grid, "comma-separated mu values")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kUsage;
    }

    try {
        if (straight->parsed()) return cmd_solve_straight(opt);
        if (bend->parsed()) return cmd_solve_bend(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (fric->parsed()) return cmd_friction_limit(opt);
        if (curve->parsed()) return cmd_mu_curve(opt);
        std::cerr << "error: usage: unknown command\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kUsage;
    } catch (const InfeasibleGeometryError& e) {
        std::cerr << "error: infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        std::cerr << "error: infeasible: " << e.what() << "\n";
        return kInfeasible;
    }
}

#include "pipeclimb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pipeclimb/geometry.hpp"

namespace pipeclimb {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct StationOutcome {
    bool feasible = false;
    std::array<double, 4> k{kNan, kNan, kNan, kNan};
    std::array<double, 4> tau{kNan, kNan, kNan, kNan};
    std::string reason;
};

StationOutcome eval_station(const RobotParams& robot, const PipeSpec& pipe, double mu,
                            double phi, const SpringSet& springs) {
    StationOutcome out;
    try {
        const BendPose pose = bend_pose(pipe, robot, phi);
        const StaticSystem sys = assemble_bend(pose, robot, pipe);
        const SpringDesign d = solve_spring_lp(sys, mu, springs);
        out.feasible = true;
        out.k = d.stiffness;
        out.tau = d.joint_torques;
    } catch (const InfeasibleGeometryError& e) {
        out.reason = std::string("geometry: ") + e.what();
    } catch (const InfeasibleError& e) {
        out.reason = std::string("equilibrium: ") + e.what();
    }
    return out;
}

}  // namespace

SweepResult run_sweep(const RobotParams& robot, const PipeSpec& pipe, double mu, int n,
                      std::pair<double, double> window) {
    return run_sweep(robot, pipe, mu, n, window, reference_springs(), 0);
}

SweepResult run_sweep(const RobotParams& robot, const PipeSpec& pipe, double mu, int n,
                      std::pair<double, double> window, const SpringSet& springs,
                      int threads) {
    if (!pipe.has_bend()) throw ValidationError("bend_radius", "sweep needs bend geometry");
    if (window.first < 0 || window.second < window.first || window.second >= 2 * kPi + 1e-12)
        throw ValidationError("window", "need 0 <= lo <= hi < 360 degrees");

    SweepResult res;
    res.stations = sweep_stations(pipe, n);  // validates n >= 2
    res.selection_window = window;

    const std::size_t count = res.stations.size();
    std::vector<StationOutcome> slots(count);
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(std::min<unsigned>(hw ? hw : 1, 8));
    }
    if (threads <= 1 || count < 8) {
        for (std::size_t i = 0; i < count; ++i)
            slots[i] = eval_station(robot, pipe, mu, res.stations[i], springs);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    slots[i] = eval_station(robot, pipe, mu, res.stations[i], springs);
            });
        }
        for (auto& th : pool) th.join();
    }

    res.stiffness_curves.resize(count);
    res.torque_curves.resize(count);
    std::size_t feasible_count = 0;
    for (std::size_t i = 0; i < count; ++i) {
        res.stiffness_curves[i] = slots[i].k;
        res.torque_curves[i] = slots[i].tau;
        if (slots[i].feasible) ++feasible_count;
        else res.infeasible_stations.push_back({res.stations[i], slots[i].reason});
    }
    if (feasible_count == 0) throw Error("sweep failed: every station is infeasible");

    // Window-max selection over feasible stations.
    res.selected_stiffness = springs;
    std::array<double, 4> sel{0, 0, 0, 0};
    for (std::size_t i = 0; i < count; ++i) {
        const double phi = res.stations[i];
        if (phi < window.first || phi > window.second) continue;
        if (!slots[i].feasible) {
            res.selection_partial = true;
            continue;
        }
        for (int j = 0; j < 4; ++j)
            if (std::isfinite(slots[i].k[j])) sel[j] = std::max(sel[j], slots[i].k[j]);
    }
    res.selected_stiffness.stiffness = sel;
    return res;
}

std::vector<MuRow> mu_vs_mu_lim(const RobotParams& robot, const PipeSpec& pipe,
                                const std::vector<double>& mu_grid) {
    for (double mu : mu_grid)
        if (!(mu > 0 && mu <= 1)) throw ValidationError("mu", "grid entries must be in (0, 1]");

    const StraightPose pose = straight_pose(pipe, robot);
    const StaticSystem sys = assemble_straight(pose, robot, pipe);
    const SpringSet reference = reference_springs();

    std::vector<MuRow> rows;
    for (double mu : mu_grid) {
        MuRow row;
        row.mu = mu;
        try {
            const SpringDesign d = solve_spring_lp(sys, mu, reference);
            row.stiffness = d.stiffness;
            SpringSet installed = reference;
            installed.stiffness = d.stiffness;
            const FrictionResult f = solve_friction_limit(sys, installed, pose.joint_angles);
            row.mu_lim = f.mu_lim;
        } catch (const Error& e) {
            row.failure = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pipeclimb

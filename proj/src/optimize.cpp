#include "pipeclimb/optimize.hpp"

#include <cmath>

#include "pipeclimb/config.hpp"
#include "pipeclimb/vertexenum.hpp"

namespace pipeclimb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::VectorXd bounds_lo(const StaticSystem& s) {
    Eigen::VectorXd lo(s.cols());
    for (int i = 0; i < s.cols(); ++i) lo(i) = s.bounds[static_cast<std::size_t>(i)].lo;
    return lo;
}

Eigen::VectorXd bounds_hi(const StaticSystem& s) {
    Eigen::VectorXd hi(s.cols());
    for (int i = 0; i < s.cols(); ++i) hi(i) = s.bounds[static_cast<std::size_t>(i)].hi;
    return hi;
}

EquilibriumSolution make_solution(const StaticSystem& s, const Eigen::VectorXd& x) {
    EquilibriumSolution sol;
    sol.values = x;
    sol.residual_norm = (s.A * x - s.b).lpNorm<Eigen::Infinity>();
    return sol;
}

}  // namespace

LpProblem equilibrium_lp(const StaticSystem& system, double mu) {
    const int n = system.cols();
    const int ncones = static_cast<int>(system.friction_pairs.size());
    const int ngroups = static_cast<int>(system.module_friction_groups.size());

    LpProblem p;
    p.Aeq = system.A;
    p.beq = system.b;
    p.c = Eigen::VectorXd::Zero(n);
    p.lo = bounds_lo(system);
    p.hi = bounds_hi(system);

    // No-slip cone |F| <= mu N per contact plus the drive-motor traction cap
    // |sum F| <= 2 tau_max / (d/2) per module.
    const int mg = 2 * ncones + 2 * ngroups;
    p.G.setZero(mg, n);
    p.h.setZero(mg);
    int r = 0;
    for (const auto& [fc, nc] : system.friction_pairs) {
        p.G(r, fc) = 1.0;
        p.G(r, nc) = -mu;
        ++r;
        p.G(r, fc) = -1.0;
        p.G(r, nc) = -mu;
        ++r;
    }
    for (const auto& group : system.module_friction_groups) {
        for (int fc : group) p.G(r, fc) = 1.0;
        p.h(r) = system.traction_limit;
        ++r;
        for (int fc : group) p.G(r, fc) = -1.0;
        p.h(r) = system.traction_limit;
        ++r;
    }
    return p;
}

SpringDesign solve_spring_lp(const StaticSystem& system, double mu) {
    return solve_spring_lp(system, mu, reference_springs());
}

SpringDesign solve_spring_lp(const StaticSystem& system, double mu, const SpringSet& springs) {
    if (!(mu > 0 && mu <= 1)) throw ValidationError("mu", "must be in (0, 1]");
    LpProblem p = equilibrium_lp(system, mu);
    p.abs_cost = Eigen::VectorXd::Zero(system.cols());
    for (int j = 0; j < 4; ++j) p.abs_cost(system.passive_tau_cols[j]) = 1.0;

    const LpResult lp = lp_solve(p);
    if (lp.status == LpStatus::Infeasible)
        throw InfeasibleError("no equilibrium within the friction cone at mu=" +
                              std::to_string(mu));
    if (lp.status == LpStatus::Unbounded)
        throw Error("internal: spring objective unbounded despite torque split");

    SpringDesign d;
    d.solution = make_solution(system, lp.x);
    d.objective = lp.objective;
    for (int j = 0; j < 4; ++j) {
        if (system.passive_tau_cols[j] < 0) continue;
        d.joint_torques[j] = lp.x(system.passive_tau_cols[j]);
        d.deflections[j] = system.joint_angles[j] - springs.preload_angles[j];
        d.stiffness[j] = std::abs(d.joint_torques[j]) / std::abs(d.deflections[j]);
    }
    return d;
}

namespace {

/// Append the box bounds of the capped system to G/h so the vertex
/// enumerator sees every inequality.
void append_bounds_rows(const StaticSystem& s, const Eigen::VectorXd& lo,
                        const Eigen::VectorXd& hi, Eigen::MatrixXd& G, Eigen::VectorXd& h) {
    std::vector<std::pair<int, double>> rows;  // (+/-col, bound)
    for (int j = 0; j < s.cols(); ++j) {
        if (hi(j) != kInf) rows.emplace_back(j + 1, hi(j));
        if (lo(j) != -kInf) rows.emplace_back(-(j + 1), -lo(j));
    }
    const int base = static_cast<int>(G.rows());
    G.conservativeResize(base + static_cast<int>(rows.size()), s.cols());
    h.conservativeResize(base + static_cast<int>(rows.size()));
    G.bottomRows(static_cast<int>(rows.size())).setZero();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto [sc, bound] = rows[i];
        G(base + static_cast<int>(i), std::abs(sc) - 1) = sc > 0 ? 1.0 : -1.0;
        h(base + static_cast<int>(i)) = bound;
    }
}

}  // namespace

FrictionResult solve_friction_limit(const StaticSystem& system, const SpringSet& springs,
                                    const std::array<double, 4>& pose_angles) {
    // Installed springs bound each passive torque by what they deliver at
    // this pose; the limiting friction coefficient is the smallest mu that
    // keeps the bounded equilibrium feasible.
    StaticSystem capped = system;
    for (int j = 0; j < 4; ++j) {
        const int col = capped.passive_tau_cols[j];
        if (col < 0) continue;
        const double cap = std::abs(spring_torque(springs.stiffness[j], pose_angles[j],
                                                  springs.preload_angles[j]));
        capped.bounds[static_cast<std::size_t>(col)] = VarBound{-cap, cap};
    }

    auto feasible_at = [&](double mu) { return lp_feasible(equilibrium_lp(capped, mu)); };
    if (!feasible_at(1.0))
        throw InfeasibleError("springs cannot hold this pose even at mu=1");

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(mid)) hi = mid;
        else lo = mid;
    }
    const double mu_threshold = hi;

    // Critical equilibrium: the sum-N^2 maximizing vertex at the threshold.
    LpProblem p = equilibrium_lp(capped, mu_threshold);
    Eigen::MatrixXd G = p.G;
    Eigen::VectorXd h = p.h;
    append_bounds_rows(capped, p.lo, p.hi, G, h);

    std::vector<int> ncols_of;
    for (const auto& [fc, nc] : capped.friction_pairs) ncols_of.push_back(nc);

    Eigen::VectorXd best;
    if (nullspace_dim(capped.A) <= 8) {
        const auto verts = enumerate_vertices(capped.A, capped.b, G, h);
        double best_val = -1.0;
        for (const auto& v : verts) {
            double s2 = 0;
            for (int nc : ncols_of) s2 += v(nc) * v(nc);
            if (s2 > best_val + 1e-12) {
                best_val = s2;
                best = v;
            }
        }
    }
    if (best.size() == 0) {
        // Enumeration unavailable (large system or fully degenerate set):
        // fall back to the deterministic simplex point maximizing sum N.
        LpProblem q = p;
        q.c = Eigen::VectorXd::Zero(capped.cols());
        for (int nc : ncols_of) q.c(nc) = -1.0;
        const LpResult lr = lp_solve(q);
        if (lr.status != LpStatus::Optimal)
            throw InfeasibleError("no equilibrium at the limiting friction coefficient");
        best = lr.x;
    }

    FrictionResult out;
    out.solution = make_solution(system, best);
    for (const auto& group : capped.module_friction_groups) {
        double fsum = 0, nsum = 0;
        for (int fc : group) fsum += best(fc);
        for (std::size_t i = 0; i < capped.friction_pairs.size(); ++i)
            for (int fc : group)
                if (capped.friction_pairs[i].first == fc)
                    nsum += best(capped.friction_pairs[i].second);
        out.ratios.push_back(nsum > 1e-12 ? fsum / nsum : 0.0);
    }
    out.mu_lim = 0;
    for (double r : out.ratios) out.mu_lim = std::max(out.mu_lim, r);
    return out;
}

}  // namespace pipeclimb

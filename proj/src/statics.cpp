#include "pipeclimb/statics.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace pipeclimb {

namespace {

double cross2(const Vec2& r, const Vec2& f) { return r.x() * f.y() - r.y() * f.x(); }

struct Contact {
    Vec2 point;
    Vec2 tangent;
    Vec2 normal;
    int f_col;
    int n_col;
};

struct JointRef {
    int tau_col;
    Vec2 pos;
};

struct ChainBody {
    std::string row_name;
    Vec2 com;
    double weight;
    std::optional<JointRef> head;  // toward the chain head
    std::optional<JointRef> tail;  // toward the chain tail
    std::vector<Contact> contacts;
};

/// Emit A x = b for a serial chain: global x/y force rows, then one moment
/// row per body about its tail joint (head joint for the last body), with
/// the force transmitted from the head side accumulated body by body.
/// Each moment row is scaled so the pivot torque column reads -1.
void assemble_chain(const std::vector<ChainBody>& bodies, int ncols, Eigen::MatrixXd& A,
                    Eigen::VectorXd& b, std::vector<std::string>& row_names) {
    const int nrows = 2 + static_cast<int>(bodies.size());
    A.setZero(nrows, ncols);
    b.setZero(nrows);
    row_names.assign({"f_x", "f_y"});

    double total_weight = 0;
    for (const ChainBody& body : bodies) {
        for (const Contact& c : body.contacts) {
            A(0, c.f_col) += c.tangent.x();
            A(0, c.n_col) += c.normal.x();
            A(1, c.f_col) += c.tangent.y();
            A(1, c.n_col) += c.normal.y();
        }
        total_weight += body.weight;
    }
    b(1) = total_weight;

    // Transmitted force at the current head-side cut: linear form over the
    // contact columns plus a constant from the weights already passed.
    Eigen::VectorXd tx = Eigen::VectorXd::Zero(ncols);
    Eigen::VectorXd ty = Eigen::VectorXd::Zero(ncols);
    double tcy = 0;

    int row = 2;
    for (const ChainBody& body : bodies) {
        const JointRef& pivot = body.tail ? *body.tail : *body.head;
        Eigen::VectorXd r = Eigen::VectorXd::Zero(ncols);
        double rhs = 0;
        for (const Contact& c : body.contacts) {
            const Vec2 rel = c.point - pivot.pos;
            r(c.f_col) += cross2(rel, c.tangent);
            r(c.n_col) += cross2(rel, c.normal);
        }
        rhs += (body.com - pivot.pos).x() * body.weight;
        if (body.head) {
            const Vec2 rel = body.head->pos - pivot.pos;
            r += rel.x() * ty - rel.y() * tx;
            rhs -= rel.x() * tcy;
            r(body.head->tau_col) += -1.0;
        }
        if (body.tail) r(body.tail->tau_col) += 1.0;

        const double pc = r(pivot.tau_col);
        const double scale = -1.0 / pc;
        A.row(row) = scale * r;
        b(row) = scale * rhs;
        if (A.row(row).cwiseAbs().maxCoeff() == 0.0)
            throw Error("internal: degenerate balance row " + body.row_name);
        row_names.push_back(body.row_name);
        ++row;

        for (const Contact& c : body.contacts) {
            tx(c.f_col) += c.tangent.x();
            tx(c.n_col) += c.normal.x();
            ty(c.f_col) += c.tangent.y();
            ty(c.n_col) += c.normal.y();
        }
        tcy -= body.weight;
    }
}

void index_columns(StaticSystem& s) {
    for (int i = 0; i < static_cast<int>(s.col_names.size()); ++i)
        s.var_index[s.col_names[i]] = i;
}

}  // namespace

StaticSystem assemble_straight(const StraightPose& pose, const RobotParams& robot,
                               const PipeSpec& pipe) {
    const double D = pipe.diameter;
    const double d = robot.module_diameter;
    const double g = robot.gravity;
    const auto& l = robot.module_lengths;
    const auto& L = robot.link_lengths;

    StaticSystem s;
    s.col_names = {"F1", "F2", "F3", "N1", "N2", "N3",
                   "tau1", "tau2", "tau3", "tau4"};
    index_columns(s);
    const int ncols = 10;

    // Vertical pipe, module 1 on top. Modules 1 and 3 ride the wall at x=0
    // (normals point +x), module 2 the wall at x=D. Links tilt across the
    // bore at theta1/theta2 from the horizontal.
    const Vec2 j4(d / 2.0, l[2]);
    const Vec2 j3 = j4 + L[1] * Vec2(std::cos(pose.theta2), std::sin(pose.theta2));
    const Vec2 j2 = j3 + Vec2(0.0, l[1]);
    const Vec2 j1 = j2 + L[0] * Vec2(std::cos(pose.theta1), std::sin(pose.theta1));

    const double wm = robot.module_mass * g;
    const double wl = robot.link_mass * g;
    const Vec2 up(0, 1);

    auto F = [&](int i) { return s.var_index.at("F" + std::to_string(i)); };
    auto N = [&](int i) { return s.var_index.at("N" + std::to_string(i)); };
    auto T = [&](int j) { return s.var_index.at("tau" + std::to_string(j)); };

    std::vector<ChainBody> bodies;
    bodies.push_back({"M_J1", Vec2(d / 2, j1.y() + l[0] / 2), wm, std::nullopt,
                      JointRef{T(1), j1},
                      {Contact{Vec2(0, j1.y() + l[0] / 2), up, Vec2(1, 0), F(1), N(1)}}});
    bodies.push_back({"M_J2", (j1 + j2) / 2, wl, JointRef{T(1), j1}, JointRef{T(2), j2}, {}});
    bodies.push_back({"M_J3", (j2 + j3) / 2, wm, JointRef{T(2), j2}, JointRef{T(3), j3},
                      {Contact{Vec2(D, (j2.y() + j3.y()) / 2), up, Vec2(-1, 0), F(2), N(2)}}});
    bodies.push_back({"M_J4_link2", (j3 + j4) / 2, wl, JointRef{T(3), j3},
                      JointRef{T(4), j4}, {}});
    bodies.push_back({"M_J4_module3", Vec2(d / 2, l[2] / 2), wm, JointRef{T(4), j4},
                      std::nullopt,
                      {Contact{Vec2(0, l[2] / 2), up, Vec2(1, 0), F(3), N(3)}}});

    assemble_chain(bodies, ncols, s.A, s.b, s.row_names);

    s.bounds.assign(ncols, VarBound{});
    for (int i = 1; i <= 3; ++i) {
        s.bounds[N(i)].lo = 0.0;
        s.friction_pairs.emplace_back(F(i), N(i));
        s.module_friction_groups.push_back({F(i)});
    }
    s.traction_limit = robot.traction_limit();
    for (int j = 0; j < 4; ++j) s.passive_tau_cols[j] = T(j + 1);
    s.joint_angles = pose.joint_angles;
    return s;
}

StaticSystem assemble_bend(const BendPose& pose, const RobotParams& robot,
                           const PipeSpec& pipe) {
    (void)pipe;
    const double d = robot.module_diameter;
    const double g = robot.gravity;
    const double wsub = robot.module_mass * g / 3.0;
    const double wl = robot.link_mass * g;

    StaticSystem s;
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= 3; ++j)
            s.col_names.push_back("F" + std::to_string(m) + std::to_string(j));
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= 3; ++j)
            s.col_names.push_back("N" + std::to_string(m) + std::to_string(j));
    for (int m = 1; m <= 3; ++m)
        for (int h = 1; h <= 2; ++h)
            s.col_names.push_back("tau" + std::to_string(m) + std::to_string(h));
    for (int j = 1; j <= 4; ++j) s.col_names.push_back("tau" + std::to_string(j));
    index_columns(s);
    const int ncols = static_cast<int>(s.col_names.size());

    auto F = [&](int m, int j) { return s.var_index.at("F" + std::to_string(m) + std::to_string(j)); };
    auto N = [&](int m, int j) { return s.var_index.at("N" + std::to_string(m) + std::to_string(j)); };
    auto H = [&](int m, int h) { return s.var_index.at("tau" + std::to_string(m) + std::to_string(h)); };
    auto T = [&](int j) { return s.var_index.at("tau" + std::to_string(j)); };

    auto sub_contact = [&](int m, int j) {
        const Vec2 c = pose.submodule_centers[m - 1][j - 1];
        const Vec2 rhat = (c - pose.bend_center).normalized();
        const bool inner = (m != 2);
        const double th = pose.submodule_angles[m - 1][j - 1];
        Contact ct;
        ct.tangent = Vec2(std::cos(th), std::sin(th));
        ct.normal = inner ? rhat : Vec2(-rhat);
        ct.point = inner ? Vec2(c - (d / 2.0) * rhat) : Vec2(c + (d / 2.0) * rhat);
        ct.f_col = F(m, j);
        ct.n_col = N(m, j);
        return ct;
    };
    auto sub_body = [&](int m, int j, std::optional<JointRef> head,
                        std::optional<JointRef> tail) {
        return ChainBody{"M_J" + std::to_string(m) + std::to_string(j),
                         pose.submodule_centers[m - 1][j - 1], wsub, head, tail,
                         {sub_contact(m, j)}};
    };

    const auto& pj = pose.passive_joint_pos;
    const auto& hj = pose.hinge_joint_pos;

    std::vector<ChainBody> bodies;
    bodies.push_back(sub_body(1, 1, std::nullopt, JointRef{H(1, 1), hj[0][0]}));
    bodies.push_back(sub_body(1, 2, JointRef{H(1, 1), hj[0][0]}, JointRef{H(1, 2), hj[0][1]}));
    bodies.push_back(sub_body(1, 3, JointRef{H(1, 2), hj[0][1]}, JointRef{T(1), pj[0]}));
    bodies.push_back({"M_J2_link1", (pj[0] + pj[1]) / 2, wl, JointRef{T(1), pj[0]},
                      JointRef{T(2), pj[1]}, {}});
    bodies.push_back(sub_body(2, 1, JointRef{T(2), pj[1]}, JointRef{H(2, 1), hj[1][0]}));
    bodies.push_back(sub_body(2, 2, JointRef{H(2, 1), hj[1][0]}, JointRef{H(2, 2), hj[1][1]}));
    bodies.push_back(sub_body(2, 3, JointRef{H(2, 2), hj[1][1]}, JointRef{T(3), pj[2]}));
    bodies.push_back({"M_J4_link2", (pj[2] + pj[3]) / 2, wl, JointRef{T(3), pj[2]},
                      JointRef{T(4), pj[3]}, {}});
    bodies.push_back(sub_body(3, 1, JointRef{T(4), pj[3]}, JointRef{H(3, 1), hj[2][0]}));
    bodies.push_back(sub_body(3, 2, JointRef{H(3, 1), hj[2][0]}, JointRef{H(3, 2), hj[2][1]}));
    bodies.push_back(sub_body(3, 3, JointRef{H(3, 2), hj[2][1]}, std::nullopt));

    assemble_chain(bodies, ncols, s.A, s.b, s.row_names);

    s.bounds.assign(ncols, VarBound{});
    for (int m = 1; m <= 3; ++m) {
        std::vector<int> group;
        for (int j = 1; j <= 3; ++j) {
            s.bounds[N(m, j)].lo = 0.0;
            s.friction_pairs.emplace_back(F(m, j), N(m, j));
            group.push_back(F(m, j));
        }
        s.module_friction_groups.push_back(group);
    }
    s.traction_limit = robot.traction_limit();
    for (int j = 0; j < 4; ++j) s.passive_tau_cols[j] = T(j + 1);
    s.joint_angles = pose.joint_angles;
    return s;
}

Eigen::VectorXd residual(const StaticSystem& system, const Eigen::VectorXd& x) {
    if (x.size() != system.A.cols())
        throw ValidationError("x", "length " + std::to_string(x.size()) +
                                       " does not match " + std::to_string(system.A.cols()) +
                                       " variables");
    return system.A * x - system.b;
}

std::string dump_matrix(const StaticSystem& system) {
    std::ostringstream out;
    out << "# quasi-static equality system: one line per nonzero coefficient\n";
    out << "# moment rows are per-body balances about the body's pivot joint,\n";
    out << "# scaled so the pivot torque coefficient is -1. J4 carries two rows:\n";
    out << "# the link-2 balance and the end-module balance.\n";
    char buf[64];
    for (int r = 0; r < system.rows(); ++r) {
        for (int c = 0; c < system.cols(); ++c) {
            if (system.A(r, c) == 0.0) continue;
            std::snprintf(buf, sizeof(buf), "%.12g", system.A(r, c));
            out << system.row_names[r] << " " << system.col_names[c] << " " << buf << "\n";
        }
        std::snprintf(buf, sizeof(buf), "%.12g", system.b(r));
        out << system.row_names[r] << " rhs " << buf << "\n";
    }
    return out.str();
}

}  // namespace pipeclimb

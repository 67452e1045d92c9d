#include "pipeclimb/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace pipeclimb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Standard-form program min c'y, A y = b, y >= 0, plus the bookkeeping to
/// map the solution back to the original variables.
struct Standard {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    // original x_j = sign[j] * y[pos[j]] + offset[j] (+ optional -y[neg[j]])
    std::vector<int> pos, neg;
    std::vector<double> sign, offset;
    int nx = 0;
};

Standard to_standard(const LpProblem& p) {
    const int nx = p.nvars();
    const int me = static_cast<int>(p.beq.size());
    const int mg = static_cast<int>(p.h.size());
    const bool has_abs = p.abs_cost.size() == nx;

    Standard s;
    s.nx = nx;
    s.pos.assign(nx, -1);
    s.neg.assign(nx, -1);
    s.sign.assign(nx, 1.0);
    s.offset.assign(nx, 0.0);

    int ncols = 0;
    int extra_rows = 0;  // upper-bound rows for doubly bounded variables
    for (int j = 0; j < nx; ++j) {
        const double lo = p.lo.size() ? p.lo(j) : -kInf;
        const double hi = p.hi.size() ? p.hi(j) : kInf;
        if (lo == -kInf && hi == kInf) {
            s.pos[j] = ncols++;
            s.neg[j] = ncols++;
        } else if (lo != -kInf) {
            s.pos[j] = ncols++;
            s.offset[j] = lo;
            if (hi != kInf) ++extra_rows;
        } else {  // hi finite only: x = hi - y
            s.pos[j] = ncols++;
            s.sign[j] = -1.0;
            s.offset[j] = hi;
        }
    }
    const int slack0 = ncols;
    ncols += mg;  // one slack per inequality
    const int ub0 = ncols;
    ncols += extra_rows;  // one slack per upper-bound row

    const int mrows = me + mg + extra_rows;
    s.A.setZero(mrows, ncols);
    s.b.setZero(mrows);
    s.c.setZero(ncols);

    auto scatter = [&](int row, const Eigen::VectorXd& coeffs, double rhs) {
        double acc = rhs;
        for (int j = 0; j < nx; ++j) {
            const double a = coeffs(j);
            if (a == 0.0) continue;
            s.A(row, s.pos[j]) += a * s.sign[j];
            if (s.neg[j] >= 0) s.A(row, s.neg[j]) -= a;
            acc -= a * s.offset[j];
        }
        s.b(row) = acc;
    };

    for (int i = 0; i < me; ++i) scatter(i, p.Aeq.row(i), p.beq(i));
    for (int i = 0; i < mg; ++i) {
        scatter(me + i, p.G.row(i), p.h(i));
        s.A(me + i, slack0 + i) = 1.0;
    }
    int ur = 0;
    for (int j = 0; j < nx; ++j) {
        const double lo = p.lo.size() ? p.lo(j) : -kInf;
        const double hi = p.hi.size() ? p.hi(j) : kInf;
        if (lo != -kInf && hi != kInf) {
            const int row = me + mg + ur;
            s.A(row, s.pos[j]) = 1.0;
            s.A(row, ub0 + ur) = 1.0;
            s.b(row) = hi - lo;
            ++ur;
        }
    }

    for (int j = 0; j < nx; ++j) {
        const double cj = p.c.size() ? p.c(j) : 0.0;
        const double aj = has_abs ? p.abs_cost(j) : 0.0;
        s.c(s.pos[j]) += cj * s.sign[j] + aj;
        if (s.neg[j] >= 0) s.c(s.neg[j]) += -cj + aj;
    }

    // Row equilibration: unit max-abs rows condition the bases.
    for (int i = 0; i < mrows; ++i) {
        const double scale = s.A.row(i).cwiseAbs().maxCoeff();
        if (scale > 0) {
            s.A.row(i) /= scale;
            s.b(i) /= scale;
        }
    }
    return s;
}

/// Revised simplex with Bland's anti-cycling rule. The basis is
/// refactorized from scratch every iteration, so no round-off accumulates
/// across pivots; at the problem sizes here that costs nothing measurable.
class RevisedSimplex {
  public:
    RevisedSimplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
        : A_(A), b_(b), m_(static_cast<int>(A.rows())),
          nstruct_(static_cast<int>(A.cols())) {
        // Artificial start: flip rows to b >= 0, identity artificial basis.
        for (int i = 0; i < m_; ++i) {
            if (b_(i) < 0) {
                A_.row(i) = -A_.row(i);
                b_(i) = -b_(i);
            }
        }
        A_.conservativeResize(m_, nstruct_ + m_);
        A_.rightCols(m_) = Eigen::MatrixXd::Identity(m_, m_);
        n_ = nstruct_ + m_;
        banned_.assign(static_cast<std::size_t>(n_), false);
        in_basis_.assign(static_cast<std::size_t>(n_), false);
        basis_.resize(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            basis_[static_cast<std::size_t>(i)] = nstruct_ + i;
            in_basis_[static_cast<std::size_t>(nstruct_ + i)] = true;
        }
    }

    bool phase1() {
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(n_);
        for (int j = nstruct_; j < n_; ++j) cost(j) = 1.0;
        if (!iterate(cost)) throw Error("internal: phase-1 LP reported unbounded");
        refactor();
        const Eigen::VectorXd xb = lu_.solve(b_);
        double art = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[static_cast<std::size_t>(i)] >= nstruct_) art += std::abs(xb(i));
        if (art > kLpFeasTol) return false;
        // Swap leftover zero-level artificials for structural columns where
        // possible; redundant rows keep theirs at level 0.
        for (int i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] < nstruct_) continue;
            refactor();
            for (int j = 0; j < nstruct_; ++j) {
                if (in_basis_[static_cast<std::size_t>(j)]) continue;
                const Eigen::VectorXd w = lu_.solve(A_.col(j));
                if (std::abs(w(i)) > 1e-7) {
                    replace_basis(i, j);
                    break;
                }
            }
        }
        for (int j = nstruct_; j < n_; ++j) banned_[static_cast<std::size_t>(j)] = true;
        return true;
    }

    bool phase2(const Eigen::VectorXd& c) {
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(n_);
        cost.head(nstruct_) = c;
        return iterate(cost);
    }

    Eigen::VectorXd solution() {
        refactor();
        const Eigen::VectorXd xb = lu_.solve(b_);
        Eigen::VectorXd y = Eigen::VectorXd::Zero(nstruct_);
        for (int i = 0; i < m_; ++i)
            if (basis_[static_cast<std::size_t>(i)] < nstruct_)
                y(basis_[static_cast<std::size_t>(i)]) = std::max(xb(i), 0.0);
        return y;
    }

  private:
    void refactor() {
        Eigen::MatrixXd B(m_, m_);
        for (int i = 0; i < m_; ++i) B.col(i) = A_.col(basis_[static_cast<std::size_t>(i)]);
        lu_.compute(B);
    }

    void replace_basis(int row, int col) {
        in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(row)])] = false;
        basis_[static_cast<std::size_t>(row)] = col;
        in_basis_[static_cast<std::size_t>(col)] = true;
    }

    bool iterate(const Eigen::VectorXd& cost) {
        const long max_iters = 200L * (m_ + n_ + 10);
        for (long it = 0; it < max_iters; ++it) {
            refactor();
            Eigen::VectorXd cb(m_);
            for (int i = 0; i < m_; ++i) cb(i) = cost(basis_[static_cast<std::size_t>(i)]);
            const Eigen::VectorXd y = lu_.transpose().solve(cb);

            int enter = -1;  // Bland: lowest-index negative reduced cost
            for (int j = 0; j < n_; ++j) {
                if (banned_[static_cast<std::size_t>(j)] ||
                    in_basis_[static_cast<std::size_t>(j)])
                    continue;
                const double rc = cost(j) - y.dot(A_.col(j));
                if (rc < -kLpFeasTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            const Eigen::VectorXd w = lu_.solve(A_.col(enter));
            const Eigen::VectorXd xb = lu_.solve(b_);
            int leave = -1;
            double best = kInf;
            for (int i = 0; i < m_; ++i) {
                if (w(i) <= kLpPivotTol) continue;
                const double ratio = std::max(xb(i), 0.0) / w(i);
                if (ratio < best - 1e-12 ||
                    (ratio <= best + 1e-12 &&
                     (leave < 0 || basis_[static_cast<std::size_t>(i)] <
                                       basis_[static_cast<std::size_t>(leave)]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;  // unbounded
            replace_basis(leave, enter);
        }
        throw Error("simplex iteration cap exceeded");
    }

    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
    int m_, nstruct_, n_ = 0;
    std::vector<int> basis_;
    std::vector<bool> banned_;
    std::vector<bool> in_basis_;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace

LpResult lp_solve(const LpProblem& p) {
    Standard s = to_standard(p);
    RevisedSimplex simplex(s.A, s.b);
    LpResult res;
    if (!simplex.phase1()) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    if (!simplex.phase2(s.c)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    const Eigen::VectorXd y = simplex.solution();
    res.x.resize(s.nx);
    for (int j = 0; j < s.nx; ++j) {
        double v = s.sign[j] * y(s.pos[j]) + s.offset[j];
        if (s.neg[j] >= 0) v -= y(s.neg[j]);
        res.x(j) = v;
    }
    res.objective = p.c.size() ? p.c.dot(res.x) : 0.0;
    if (p.abs_cost.size() == s.nx)
        for (int j = 0; j < s.nx; ++j) res.objective += p.abs_cost(j) * std::abs(res.x(j));
    res.status = LpStatus::Optimal;
    return res;
}

bool lp_feasible(const LpProblem& p) {
    Standard s = to_standard(p);
    RevisedSimplex simplex(s.A, s.b);
    return simplex.phase1();
}

}  // namespace pipeclimb

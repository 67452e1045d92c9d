#include "pipeclimb/vertexenum.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "pipeclimb/types.hpp"

namespace pipeclimb {

int nullspace_dim(const Eigen::MatrixXd& A) {
    if (A.rows() == 0) return static_cast<int>(A.cols());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    return static_cast<int>(A.cols()) - static_cast<int>(lu.rank());
}

std::vector<Eigen::VectorXd> enumerate_vertices(const Eigen::MatrixXd& A,
                                                const Eigen::VectorXd& b,
                                                const Eigen::MatrixXd& G,
                                                const Eigen::VectorXd& h, double feas_tol,
                                                std::size_t max_subsets) {
    const int n = static_cast<int>(G.cols());
    std::vector<Eigen::VectorXd> verts;

    Eigen::VectorXd x0;
    Eigen::MatrixXd Z;
    if (A.rows() > 0) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
        cod.setThreshold(1e-10);
        x0 = cod.solve(b);
        if ((A * x0 - b).lpNorm<Eigen::Infinity>() > 1e-8 * (1.0 + b.lpNorm<Eigen::Infinity>()))
            return verts;  // inconsistent equalities: empty polytope
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-10);
        Z = lu.kernel();
        if (lu.rank() == A.cols()) Z.resize(n, 0);
    } else {
        x0 = Eigen::VectorXd::Zero(n);
        Z = Eigen::MatrixXd::Identity(n, n);
    }
    const int k = static_cast<int>(Z.cols());
    const int mg = static_cast<int>(G.rows());

    auto feasible = [&](const Eigen::VectorXd& x) {
        return ((G * x - h).array() <= feas_tol).all();
    };

    if (k == 0) {
        if (feasible(x0)) verts.push_back(x0);
        return verts;
    }
    if (mg < k) return verts;  // cannot pin down a vertex

    // Subset count guard: C(mg, k)
    double count = 1;
    for (int i = 0; i < k; ++i) count = count * (mg - i) / (i + 1);
    if (count > static_cast<double>(max_subsets))
        throw Error("vertex enumeration: too many active-set candidates (" +
                    std::to_string(static_cast<long long>(count)) + ")");

    const Eigen::MatrixXd Gy = G * Z;
    const Eigen::VectorXd hy = h - G * x0;

    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    Eigen::MatrixXd M(k, k);
    Eigen::VectorXd rhs(k);
    while (true) {
        for (int i = 0; i < k; ++i) {
            M.row(i) = Gy.row(idx[static_cast<std::size_t>(i)]);
            rhs(i) = hy(idx[static_cast<std::size_t>(i)]);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        lu.setThreshold(1e-11);
        if (lu.isInvertible()) {
            const Eigen::VectorXd y = lu.solve(rhs);
            if (((Gy * y - hy).array() <= feas_tol).all()) verts.push_back(x0 + Z * y);
        }
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == mg - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return verts;
}

}  // namespace pipeclimb

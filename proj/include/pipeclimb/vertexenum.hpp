#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace pipeclimb {

/// All vertices (basic feasible points) of {x : A x = b, G x <= h}.
///
/// Works through the nullspace of A: a vertex activates dim-null(A) rows of
/// G, so every row subset of that size is solved and filtered. Intended for
/// small systems (a few free dimensions); throws Error when the subset count
/// exceeds `max_subsets`.
std::vector<Eigen::VectorXd> enumerate_vertices(const Eigen::MatrixXd& A,
                                                const Eigen::VectorXd& b,
                                                const Eigen::MatrixXd& G,
                                                const Eigen::VectorXd& h,
                                                double feas_tol = 1e-7,
                                                std::size_t max_subsets = 4000000);

/// Number of free dimensions (columns minus rank of A).
int nullspace_dim(const Eigen::MatrixXd& A);

}  // namespace pipeclimb

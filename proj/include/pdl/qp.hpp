#pragma once

#include <vector>

#include <Eigen/Dense>

namespace pdl {

/// minimize 1/2 |u - u_d|^2  subject to  A u >= b
///
/// Every controller in the library (plain CBF, robust, learned and
/// stepping-stone variants) reduces to this projection problem with at most a
/// handful of rows.
struct ProjectionQP {
  Eigen::VectorXd u_d;
  Eigen::MatrixXd A;  // k x m
  Eigen::VectorXd b;  // k

  int dim() const { return static_cast<int>(u_d.size()); }
  int num_constraints() const { return static_cast<int>(b.size()); }
};

struct QPSolution {
  Eigen::VectorXd u_star;
  std::vector<int> active_set;
  Eigen::VectorXd multipliers;  // one per entry of active_set, all >= 0
  double objective = 0.0;
  int iterations = 0;
};

struct QPOptions {
  double tol = 1e-9;
  int max_iterations = 100;
};

/// Throws pdl::Error(InvalidArgument) when the problem is malformed,
/// Error(Infeasible) when {u : A u >= b} is empty and Error(NumericalFailure)
/// when the active constraint normals are too ill-conditioned to continue.
QPSolution solve_projection_qp(const ProjectionQP& qp, const QPOptions& opts = {});

/// Primal feasibility, dual feasibility, stationarity and complementary
/// slackness, each within `tol`. Multipliers are recomputed from the active
/// set so candidate points that did not come from the solver can be checked.
bool check_kkt(const ProjectionQP& qp, const QPSolution& sol, double tol);

}  // namespace pdl

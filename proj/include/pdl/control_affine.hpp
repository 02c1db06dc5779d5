#pragma once

#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace pdl {

/// Drift and actuation evaluated together; for mechanical systems both share
/// one mass-matrix factorisation.
struct AffineTerms {
  Eigen::VectorXd f;  // n
  Eigen::MatrixXd g;  // n x m
};

/// x_dot = f(x) + g(x) u
///
/// `dof` is nonzero for second-order (mechanical) systems whose state is
/// x = (q, q_dot) with f = (q_dot, .) and g = (0, .). Barrier terms for
/// position-only functions rely on that layout.
struct ControlAffineModel {
  int n = 0;
  int m = 0;
  int dof = 0;
  std::function<AffineTerms(const Eigen::VectorXd&)> terms;

  Eigen::VectorXd drift(const Eigen::VectorXd& x) const { return terms(x).f; }
  Eigen::MatrixXd actuation(const Eigen::VectorXd& x) const { return terms(x).g; }
  Eigen::VectorXd xdot(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const {
    AffineTerms t = terms(x);
    return t.f + t.g * u;
  }
  bool mechanical() const { return dof > 0 && n == 2 * dof; }
};

/// Inverted pendulum about the upright position, theta measured from vertical:
///   theta_ddot = (g0 / l) sin(theta) - c / (m l^2) theta_dot + u / (m l^2)
struct PendulumParameters {
  double mass = 1.0;
  double length = 1.0;
  double damping = 0.0;
  double gravity = 9.81;
};

ControlAffineModel inverted_pendulum_model(const PendulumParameters& p);

inline ControlAffineModel inverted_pendulum_model(double mass, double length, double damping, double gravity) {
  return inverted_pendulum_model(PendulumParameters{mass, length, damping, gravity});
}

}  // namespace pdl

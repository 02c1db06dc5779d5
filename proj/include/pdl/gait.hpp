#pragma once

#include <Eigen/Dense>

#include "pdl/biped.hpp"

namespace pdl {

/// Phase variable from the linearised hip position.
struct PhasingParams {
  double d_hip_plus = 0.0;   // linearised hip position at step start
  double d_hip_minus = 0.0;  // ... and at step end
  double l_t = 0.0;          // tibia length
  double l_f = 0.0;          // femur length

  void validate() const;
  static PhasingParams from(const BipedParameters& p, double d_hip_plus, double d_hip_minus);
};

/// delta_hip(q) = [-l_t - l_f, -l_f, 0, 0, 0] q
double linearized_hip(const PhasingParams& pp, const Vector5d& q);
Vector5d linearized_hip_gradient(const PhasingParams& pp);

/// tau(q) = (delta_hip(q) - d+) / (d- - d+), deliberately not clamped.
double phase(const PhasingParams& pp, const Vector5d& q);
double phase_rate(const PhasingParams& pp, const Vector5d& qdot);

/// Bezier curve with one row per output and degree + 1 control points per row.
/// Evaluation clamps s to [0, 1]; the derivative is zero outside that range.
class Bezier {
 public:
  Bezier() = default;
  explicit Bezier(Eigen::MatrixXd coeffs);

  int degree() const { return static_cast<int>(coeffs_.cols()) - 1; }
  int outputs() const { return static_cast<int>(coeffs_.rows()); }
  const Eigen::MatrixXd& coeffs() const { return coeffs_; }

  Eigen::VectorXd value(double s) const;
  Eigen::VectorXd derivative(double s) const;

 private:
  Eigen::MatrixXd coeffs_;
};

/// Desired outputs and PD gains for the actuated joints (q_sk .. q_nsk).
///
/// For the fully actuated test configuration the stance ankle additionally
/// regulates the phase rate: u_ankle = ankle_gain (tau_dot - phase_rate).
struct GaitOutputs {
  Bezier desired;          // 4 rows
  Eigen::Matrix4d kp = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d kd = Eigen::Matrix4d::Identity();
  double phase_rate = 0.0;  // desired tau_dot, 1/s
  double ankle_gain = 0.0;  // N m s

  void validate() const;
};

struct OutputsPD {
  Eigen::Vector4d y;
  Eigen::Vector4d ydot;
  Eigen::Vector4d u_pd;
};

/// y = q_{2:5} - Bezier(tau), ydot by the chain rule through tau, u = -Kp y - Kd ydot.
OutputsPD outputs_and_pd(const GaitOutputs& go, const PhasingParams& pp, const BipedState& x);

/// Nominal controller k_d(x) with one entry per actuator of `p`.
Eigen::VectorXd gait_controller(const GaitOutputs& go, const PhasingParams& pp, const BipedParameters& p,
                                const BipedState& x);

/// Configuration on the gait at phase tau, solving delta_hip for q_sf.
Vector5d gait_configuration(const GaitOutputs& go, const PhasingParams& pp, double tau);

}  // namespace pdl
